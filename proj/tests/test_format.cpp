#include <stdexcept>
#include <string>

#include "doctest.h"
#include "format.hpp"
#include "lehmer/lehmer.h"

using lehmer::cli::Format;

namespace {

lel_table* compute(const char* kind, long upto, long k = -1) {
  lel_params p;
  lel_params_init(&p);
  p.upto = upto;
  p.k = k;
  lel_table* t = nullptr;
  REQUIRE(lel_compute_table(kind, &p, &t) == LEL_OK);
  return t;
}

void check_round_trip(const lel_table* t) {
  std::string doc = lehmer::cli::emit_table(t, Format::kJson, "compute", {"table=x"});
  lehmer::cli::ParsedTable parsed = lehmer::cli::parse_table_json(doc);
  CHECK(parsed.command == "compute");
  CHECK(parsed.version == lel_version());
  CHECK(parsed.params.at("table") == "x");
  REQUIRE(parsed.columns.size() == lel_table_columns(t));
  for (std::size_t c = 0; c < parsed.columns.size(); ++c) {
    CHECK(parsed.columns[c] == lel_table_column_name(t, c));
  }
  REQUIRE(parsed.rows.size() == lel_table_rows(t));
  for (std::size_t r = 0; r < parsed.rows.size(); ++r) {
    for (std::size_t c = 0; c < parsed.columns.size(); ++c) {
      CHECK(parsed.rows[r][c] == lel_table_cell(t, r, c));
    }
  }
}

}  // namespace

TEST_CASE("JSON round trip keeps values beyond 64 bits") {
  for (const char* kind : {"w", "e", "t", "T", "delta", "w-le", "higher"}) {
    CAPTURE(kind);
    lel_table* t = compute(kind, 9);
    check_round_trip(t);
    lel_table_free(t);
  }
  lel_table* w = compute("w", 40);
  check_round_trip(w);
  CHECK(std::string(lel_table_cell(w, 39, 1)).size() > 100);
  lel_table_free(w);
}

TEST_CASE("CSV layout") {
  lel_table* t = compute("w", 3);
  std::string csv = lehmer::cli::emit_table(t, Format::kCsv, "compute", {});
  CHECK(csv == "n,W_3n\n0,1\n1,-1\n2,19\n");
  lel_table_free(t);
  lel_table* d = compute("delta", -1, 1);
  std::string dc = lehmer::cli::emit_table(d, Format::kCsv, "compute", {});
  CHECK(dc == "k,polynomial,coefficients\n1,x^2+3x+1,1 3 1\n");
  lel_table_free(d);
}

TEST_CASE("text layout pads columns") {
  lel_table* t = compute("w", 3);
  std::string text = lehmer::cli::emit_table(t, Format::kText, "compute", {});
  CHECK(text == "n  W_3n\n0  1\n1  -1\n2  19\n");
  lel_table_free(t);
}

TEST_CASE("report documents") {
  lel_params p;
  lel_params_init(&p);
  p.k = 3;
  p.upto = 5;
  p.jobs = 1;
  lel_report* r = nullptr;
  CHECK(lel_verify("cycles", &p, &r) == LEL_COUNTEREXAMPLE);
  REQUIRE(r != nullptr);
  std::string json = lehmer::cli::emit_report(r, Format::kJson, "verify", {}, false);
  CHECK(json.find("\"status\": \"failed\"") != std::string::npos);
  CHECK(json.find("\"seconds\"") == std::string::npos);
  CHECK(json == lehmer::cli::emit_report(r, Format::kJson, "verify", {}, false));
  std::string timed = lehmer::cli::emit_report(r, Format::kJson, "verify", {}, true);
  CHECK(timed.find("\"seconds\"") != std::string::npos);
  std::string csv = lehmer::cli::emit_report(r, Format::kCsv, "verify", {}, false);
  CHECK(csv.rfind("check,theorem_id,range_checked,status,counterexample_index,witness,note\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  lel_report_free(r);
}

TEST_CASE("format names and malformed documents") {
  CHECK(lehmer::cli::parse_format("json") == Format::kJson);
  CHECK_FALSE(lehmer::cli::parse_format("xml").has_value());
  CHECK_THROWS_AS(lehmer::cli::parse_table_json("[1, 2]"), std::runtime_error);
  CHECK_THROWS_AS(lehmer::cli::parse_table_json(
                      R"({"command":"c","params":{},"rows":[{"a":"1"},{"b":"2"}],"version":"1"})"),
                  std::runtime_error);
  CHECK_THROWS(lehmer::cli::parse_table_json("{not json"));
}
