#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fdpa/config.hpp"
#include "fdpa/experiments.hpp"

namespace fdpa::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kUnwritable = 3 };

using Cell = std::variant<double, std::int64_t, std::string>;

struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;  // scenario echo

  void add_row(std::vector<Cell> row);  // throws if the width is wrong
};

/// Reals are printed with 12 significant digits.
std::string format_cell(const Cell &c);

void write_csv(std::ostream &out, const OutputTable &t);

/// Whitespace-separated blocks, one per strategy, separated by two blank
/// lines so gnuplot can address them with `index`.
void write_gnuplot(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRow> &rows);

OutputTable sweep_table(const SweepSpec &spec, const std::vector<SweepRow> &rows);

std::vector<std::pair<std::string, std::string>> scenario_metadata(const ScenarioConfig &cfg);

/// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace fdpa::cli
