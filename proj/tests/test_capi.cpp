#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "lehmer/lehmer.h"

namespace {

std::string tmp_path(const char* name) {
  const char* dir = std::getenv("LEHMER_TEST_TMP");
  return std::string(dir ? dir : ".") + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::string s;
  std::getline(f, s);
  return s;
}

lel_params params() {
  lel_params p;
  lel_params_init(&p);
  p.jobs = 1;
  return p;
}

std::string first_note(const lel_report* r) {
  lel_check_info info;
  if (lel_report_check(r, 0, &info) != LEL_OK) return "";
  return info.note;
}

}  // namespace

TEST_CASE("version and defaults") {
  CHECK(std::string(lel_version()) == "1.0.0");
  lel_params p;
  lel_params_init(&p);
  CHECK(p.upto < 0);
  CHECK(p.k < 0);
  CHECK(p.method == nullptr);
}

TEST_CASE("tables") {
  lel_params p = params();
  p.upto = 11;
  lel_table* t = nullptr;
  REQUIRE(lel_compute_table("w", &p, &t) == LEL_OK);
  CHECK(std::string(lel_table_kind(t)) == "w");
  CHECK(lel_table_rows(t) == 11);
  CHECK(lel_table_columns(t) == 2);
  CHECK(std::string(lel_table_column_name(t, 1)) == "W_3n");
  CHECK(std::string(lel_table_cell(t, 10, 1)) == "2716778010767155313771539");
  CHECK(std::string(lel_table_cell(t, 9, 1)) == "-705927677520644167681");
  CHECK(lel_table_cell(t, 11, 0) == nullptr);
  CHECK(lel_table_param_count(t) > 0);
  lel_table_free(t);

  p.upto = 6;
  p.method = "trudi";
  REQUIRE(lel_compute_table("w", &p, &t) == LEL_OK);
  CHECK(std::string(lel_table_cell(t, 4, 1)) == "315523");
  lel_table_free(t);

  lel_params d = params();
  d.k = 2;
  REQUIRE(lel_compute_table("delta", &d, &t) == LEL_OK);
  CHECK(lel_table_rows(t) == 1);
  CHECK(std::string(lel_table_cell(t, 0, 1)) == "x^4+10x^3+25x^2+20x+5");
  lel_table_free(t);

  lel_params ts = params();
  ts.upto = 4;
  REQUIRE(lel_compute_table("t", &ts, &t) == LEL_OK);
  bool found = false;
  for (std::size_t r = 0; r < lel_table_rows(t); ++r) {
    if (std::string(lel_table_cell(t, r, 0)) == "3" && std::string(lel_table_cell(t, r, 1)) == "1") {
      found = std::string(lel_table_cell(t, r, 2)) == "-1/4";
    }
  }
  CHECK(found);
  lel_table_free(t);
  lel_table_free(nullptr);
}

TEST_CASE("invalid input sets the last error") {
  lel_params p = params();
  lel_table* t = nullptr;
  CHECK(lel_compute_table("nope", &p, &t) == LEL_INVALID_INPUT);
  CHECK(t == nullptr);
  CHECK(std::string(lel_last_error()).find("nope") != std::string::npos);
  p.method = "bogus";
  CHECK(lel_compute_table("w", &p, &t) == LEL_INVALID_INPUT);
  CHECK(lel_compute_table(nullptr, &p, &t) == LEL_INVALID_INPUT);
  CHECK(lel_compute_table("w", nullptr, &t) == LEL_INVALID_INPUT);
  lel_report* r = nullptr;
  lel_params q = params();
  CHECK(lel_verify("nosuch", &q, &r) == LEL_INVALID_INPUT);
  CHECK(r == nullptr);
  CHECK(lel_scan(&q, nullptr, &r) == LEL_INVALID_INPUT);
  q.k = 0;
  CHECK(lel_scan(&q, nullptr, &r) == LEL_INVALID_INPUT);
}

TEST_CASE("verification reports") {
  lel_params p = params();
  p.upto = 50;
  lel_report* r = nullptr;
  REQUIRE(lel_verify("mod9", &p, &r) == LEL_OK);
  CHECK(lel_report_passed(r) == 1);
  REQUIRE(lel_report_checks(r) == 1);
  lel_check_info info;
  REQUIRE(lel_report_check(r, 0, &info) == LEL_OK);
  CHECK(std::string(info.status) == "verified");
  CHECK(info.has_index == 0);
  CHECK(lel_report_check(r, 5, &info) == LEL_INVALID_INPUT);
  lel_report_free(r);

  lel_params c = params();
  c.k = 3;
  c.upto = 5;
  CHECK(lel_verify("cycles", &c, &r) == LEL_COUNTEREXAMPLE);
  REQUIRE(r != nullptr);
  CHECK(lel_report_passed(r) == 0);
  lel_report_free(r);
}

TEST_CASE("scan checkpoints") {
  const std::string path = tmp_path("capi_scan.ckpt");
  std::remove(path.c_str());
  lel_params p = params();
  p.k = 3;
  p.upto = 300;
  lel_report* r = nullptr;
  REQUIRE(lel_scan(&p, path.c_str(), &r) == LEL_OK);
  CHECK(first_note(r).find("resumed") == std::string::npos);
  lel_report_free(r);
  std::string line = slurp(path);
  CHECK(line.rfind("3 300 ", 0) == 0);

  REQUIRE(lel_scan(&p, path.c_str(), &r) == LEL_OK);
  CHECK(first_note(r).find("resumed at n = 300") != std::string::npos);
  lel_report_free(r);

  // A checkpoint for another k is ignored, not trusted.
  lel_params other = params();
  other.k = 2;
  other.upto = 100;
  REQUIRE(lel_scan(&other, path.c_str(), &r) == LEL_OK);
  CHECK(first_note(r).find("ignored") != std::string::npos);
  lel_report_free(r);
  CHECK(slurp(path).rfind("2 100 ", 0) == 0);

  {
    std::ofstream f(path, std::ios::trunc);
    f << "2 100 deadbeefdeadbeef\n";
  }
  CHECK(lel_scan(&other, path.c_str(), &r) == LEL_CORRUPT_CHECKPOINT);
  CHECK(r == nullptr);
  CHECK(std::string(lel_last_error()).find("corrupt") != std::string::npos);
  {
    std::ofstream f(path, std::ios::trunc);
    f << "two hundred\n";
  }
  CHECK(lel_scan(&other, path.c_str(), &r) == LEL_CORRUPT_CHECKPOINT);
  std::remove(path.c_str());

  const std::string missing = tmp_path("no/such/dir/scan.ckpt");
  lel_status s = lel_scan(&other, missing.c_str(), &r);
  CHECK(s == LEL_IO_ERROR);
  lel_report_free(r);
}
