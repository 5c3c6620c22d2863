#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace isonlcs::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// %.17g; non-finite values print as nan / inf / -inf.
std::string format_number(double v);

// Comment line "# config_hash=<hash>", header row, LF line endings.
void write_csv(std::ostream& out, const Table& table, const std::string& hash);

// {"config_hash": ..., "columns": [...], "rows": [[...], ...]}.
void write_table_json(std::ostream& out, const Table& table, const std::string& hash);

// Serializes JSON with every floating-point number at 17 significant digits
// (non-finite numbers become null). Object keys keep nlohmann's sorted order.
void write_json(std::ostream& out, const nlohmann::json& value);

}  // namespace isonlcs::cli
