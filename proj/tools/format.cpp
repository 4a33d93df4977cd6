#include "format.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lehmer::cli {

using Json = nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  return std::nullopt;
}

namespace {

std::pair<std::string, std::string> split_pair(const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos) return {kv, ""};
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

template <typename Count, typename Get>
std::vector<std::string> collect(const std::vector<std::string>& extra, Count count, Get get) {
  std::vector<std::string> out = extra;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(get(i));
  return out;
}

Json params_object(const std::vector<std::string>& params) {
  Json o = Json::object();
  for (const std::string& p : params) {
    auto [k, v] = split_pair(p);
    o[k] = v;
  }
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
  return line + "\n";
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

struct CheckView {
  lel_check_info info;
  std::vector<std::string> witness;
};

std::vector<CheckView> checks_of(const lel_report* r) {
  std::vector<CheckView> out;
  for (std::size_t i = 0; i < lel_report_checks(r); ++i) {
    CheckView v{};
    lel_report_check(r, i, &v.info);
    for (std::size_t j = 0; j < v.info.witness_count; ++j) v.witness.emplace_back(lel_report_witness(r, i, j));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string emit_table(const lel_table* t, Format format, std::string_view command,
                       const std::vector<std::string>& extra_params) {
  const std::size_t ncols = lel_table_columns(t);
  const std::size_t nrows = lel_table_rows(t);
  std::vector<std::string> cols;
  for (std::size_t c = 0; c < ncols; ++c) cols.emplace_back(lel_table_column_name(t, c));
  auto params = collect(extra_params, lel_table_param_count(t),
                        [t](std::size_t i) { return lel_table_param(t, i); });

  if (format == Format::kJson) {
    Json doc;
    doc["command"] = command;
    doc["params"] = params_object(params);
    Json rows = Json::array();
    for (std::size_t r = 0; r < nrows; ++r) {
      Json row = Json::object();
      for (std::size_t c = 0; c < ncols; ++c) row[cols[c]] = lel_table_cell(t, r, c);
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["version"] = lel_version();
    return doc.dump(2) + "\n";
  }

  if (format == Format::kCsv) {
    std::string out = csv_line(cols);
    for (std::size_t r = 0; r < nrows; ++r) {
      std::vector<std::string> fields;
      for (std::size_t c = 0; c < ncols; ++c) fields.emplace_back(lel_table_cell(t, r, c));
      out += csv_line(fields);
    }
    return out;
  }

  // Text: columns padded to their widest entry, the last one unpadded.
  std::vector<std::size_t> width(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    width[c] = cols[c].size();
    for (std::size_t r = 0; r < nrows; ++r) width[c] = std::max(width[c], std::string(lel_table_cell(t, r, c)).size());
  }
  auto line = [&](auto cell) {
    std::string s;
    for (std::size_t c = 0; c < ncols; ++c) {
      std::string v = cell(c);
      s += v;
      if (c + 1 < ncols) s += std::string(width[c] - v.size() + 2, ' ');
    }
    return s + "\n";
  };
  std::string out = line([&](std::size_t c) { return cols[c]; });
  for (std::size_t r = 0; r < nrows; ++r) {
    out += line([&](std::size_t c) { return std::string(lel_table_cell(t, r, c)); });
  }
  return out;
}

std::string emit_report(const lel_report* r, Format format, std::string_view command,
                        const std::vector<std::string>& extra_params, bool timings) {
  auto params = collect(extra_params, lel_report_param_count(r),
                        [r](std::size_t i) { return lel_report_param(r, i); });
  std::vector<CheckView> checks = checks_of(r);
  const bool passed = lel_report_passed(r) != 0;

  if (format == Format::kJson) {
    Json doc;
    doc["command"] = command;
    doc["params"] = params_object(params);
    Json rep;
    rep["name"] = lel_report_name(r);
    rep["status"] = passed ? "verified" : "failed";
    Json arr = Json::array();
    for (const CheckView& c : checks) {
      Json j;
      j["name"] = c.info.name;
      j["theorem_id"] = c.info.theorem_id;
      j["range_checked"] = c.info.range_checked;
      j["status"] = c.info.status;
      if (c.info.has_index) j["counterexample_index"] = std::to_string(c.info.counterexample_index);
      Json w = Json::object();
      for (const std::string& kv : c.witness) {
        auto [k, v] = split_pair(kv);
        w[k] = v;
      }
      j["witness"] = std::move(w);
      j["note"] = c.info.note;
      if (timings) j["seconds"] = seconds_text(c.info.seconds);
      arr.push_back(std::move(j));
    }
    rep["checks"] = std::move(arr);
    doc["report"] = std::move(rep);
    doc["version"] = lel_version();
    return doc.dump(2) + "\n";
  }

  if (format == Format::kCsv) {
    std::vector<std::string> header{"check", "theorem_id", "range_checked", "status",
                                    "counterexample_index", "witness", "note"};
    if (timings) header.emplace_back("seconds");
    std::string out = csv_line(header);
    for (const CheckView& c : checks) {
      std::string w;
      for (std::size_t i = 0; i < c.witness.size(); ++i) w += (i ? " " : "") + c.witness[i];
      std::vector<std::string> f{c.info.name, c.info.theorem_id, c.info.range_checked, c.info.status,
                                 c.info.has_index ? std::to_string(c.info.counterexample_index) : "",
                                 w, c.info.note};
      if (timings) f.push_back(seconds_text(c.info.seconds));
      out += csv_line(f);
    }
    return out;
  }

  std::ostringstream os;
  os << lel_report_name(r) << ": " << (passed ? "verified" : "FAILED") << " (" << checks.size()
     << (checks.size() == 1 ? " check" : " checks") << ")\n";
  for (const CheckView& c : checks) {
    os << "  [" << c.info.status << "] " << c.info.name << ": " << c.info.theorem_id << "; "
       << c.info.range_checked;
    if (timings) os << " (" << seconds_text(c.info.seconds) << " s)";
    os << "\n";
    if (*c.info.note) os << "      " << c.info.note << "\n";
    if (c.info.has_index) os << "      counterexample at index " << c.info.counterexample_index << "\n";
    for (const std::string& w : c.witness) os << "      " << w << "\n";
  }
  return os.str();
}

ParsedTable parse_table_json(std::string_view text) {
  Json doc = Json::parse(text);
  if (!doc.is_object() || !doc.contains("command") || !doc.contains("params") ||
      !doc.contains("rows") || !doc.contains("version") || !doc["rows"].is_array()) {
    throw std::runtime_error("not a table document");
  }
  ParsedTable t;
  t.command = doc["command"].get<std::string>();
  t.version = doc["version"].get<std::string>();
  for (auto& [k, v] : doc["params"].items()) t.params[k] = v.get<std::string>();
  for (const Json& row : doc["rows"]) {
    if (!row.is_object()) throw std::runtime_error("row is not an object");
    if (t.columns.empty()) {
      for (auto& [k, v] : row.items()) t.columns.push_back(k);
    }
    std::vector<std::string> cells;
    for (const std::string& c : t.columns) {
      if (!row.contains(c)) throw std::runtime_error("row is missing column " + c);
      cells.push_back(row[c].get<std::string>());
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace lehmer::cli
