#pragma once

#include <deque>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace mlq {

// Fixed formatting so repeated runs are byte-identical.
std::string fmt(double value);
std::string fmt(std::size_t value);
std::string fmt(bool value);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

// One verified invariant. `passed` decides the exit status.
struct Check {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string subcommand;
  std::deque<Table> tables;  // stable references for table()
  std::vector<Check> checks;

  Table& table(std::string name, std::vector<std::string> columns);
  // |value - expected| <= tolerance.
  void check_close(std::string name, double value, double expected, double tolerance);
  // value <= bound + tolerance.
  void check_at_most(std::string name, double value, double bound, double tolerance);
  void check_true(std::string name, bool condition, std::string detail = {});
  bool ok() const;
};

// "# <name>" followed by a tab-separated header and rows.
void write_table(std::ostream& os, const Table& table);
void write_report(std::ostream& os, const Report& report);

nlohmann::json checks_json(const Report& report);

}  // namespace mlq
