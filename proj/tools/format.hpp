#pragma once

// Serialization of C API tables and reports. JSON documents have the shape
// {command, params, rows | report, version}; every value is a string so
// integers of any size survive a round trip.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lehmer/lehmer.h"

namespace lehmer::cli {

enum class Format { kJson, kCsv, kText };

std::optional<Format> parse_format(std::string_view name);

// Extra "name=value" entries (e.g. the table or suite name) are emitted
// ahead of the object's own parameter echo.
std::string emit_table(const lel_table* table, Format format, std::string_view command,
                       const std::vector<std::string>& extra_params);
std::string emit_report(const lel_report* report, Format format, std::string_view command,
                        const std::vector<std::string>& extra_params, bool timings);

struct ParsedTable {
  std::string command;
  std::string version;
  std::map<std::string, std::string> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Inverse of emit_table(..., kJson, ...). Throws std::runtime_error on a
// document of the wrong shape.
ParsedTable parse_table_json(std::string_view text);

}  // namespace lehmer::cli
