#include "isonlcs/cli/output.hpp"

#include <cmath>
#include <cstdio>

namespace isonlcs::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& table, const std::string& hash) {
  out << "# config_hash=" << hash << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

namespace {

void emit(std::ostream& out, const nlohmann::json& v, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::number_float: {
      const double d = v.get<double>();
      out << (std::isfinite(d) ? format_number(d) : "null");
      break;
    }
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        break;
      }
      out << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad << nlohmann::json(it.key()).dump() << ": ";
        emit(out, it.value(), depth + 1);
      }
      out << '\n' << close_pad << '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out << '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out << ", ";
        first = false;
        emit(out, item, depth + 1);
      }
      out << ']';
      break;
    }
    default:
      out << v.dump();
  }
}

}  // namespace

void write_json(std::ostream& out, const nlohmann::json& value) {
  emit(out, value, 0);
  out << '\n';
}

void write_table_json(std::ostream& out, const Table& table, const std::string& hash) {
  nlohmann::json j;
  j["config_hash"] = hash;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  write_json(out, j);
}

}  // namespace isonlcs::cli
