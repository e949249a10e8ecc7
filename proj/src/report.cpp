#include "mlq/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "mlq/errors.hpp"

namespace mlq {

std::string fmt(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  std::ostringstream os;
  os << std::setprecision(12) << value;
  return os.str();
}

std::string fmt(std::size_t value) { return std::to_string(value); }

std::string fmt(bool value) { return value ? "true" : "false"; }

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw InvalidArgument("table " + name + ": row width differs from header");
  rows.push_back(std::move(row));
}

Table& Report::table(std::string name, std::vector<std::string> columns) {
  tables.push_back(Table{std::move(name), std::move(columns), {}});
  return tables.back();
}

void Report::check_close(std::string name, double value, double expected, double tolerance) {
  const bool passed = std::abs(value - expected) <= tolerance;
  checks.push_back({std::move(name), value, expected, passed, "|difference| <= " + fmt(tolerance)});
}

void Report::check_at_most(std::string name, double value, double bound, double tolerance) {
  checks.push_back({std::move(name), value, bound, value <= bound + tolerance, "value <= bound + " + fmt(tolerance)});
}

void Report::check_true(std::string name, bool condition, std::string detail) {
  checks.push_back({std::move(name), condition ? 1.0 : 0.0, 1.0, condition, std::move(detail)});
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void write_table(std::ostream& os, const Table& table) {
  os << "# " << table.name << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "\t" : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
    os << '\n';
  }
}

void write_report(std::ostream& os, const Report& report) {
  for (std::size_t i = 0; i < report.tables.size(); ++i) {
    if (i) os << '\n';
    write_table(os, report.tables[i]);
  }
  Table checks{"checks", {"check", "value", "expected", "passed", "rule"}, {}};
  for (const auto& c : report.checks) checks.add({c.name, fmt(c.value), fmt(c.expected), fmt(c.passed), c.detail});
  if (!report.checks.empty()) {
    if (!report.tables.empty()) os << '\n';
    write_table(os, checks);
  }
}

nlohmann::json checks_json(const Report& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : report.checks)
    out.push_back({{"name", c.name}, {"value", fmt(c.value)}, {"expected", fmt(c.expected)}, {"passed", c.passed}, {"rule", c.detail}});
  return out;
}

}  // namespace mlq
