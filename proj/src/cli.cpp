#include "fdpa/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fdpa/pa_optimizer.hpp"

namespace fdpa::cli {

namespace {

class UnwritablePath : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string split_stem(const std::string &path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
  return path.substr(0, dot);
}

std::ofstream open_for_write(const std::string &path) {
  std::ofstream f(path);
  if (!f) throw UnwritablePath("cannot write '" + path + "'");
  return f;
}

void finish(std::ofstream &f, const std::string &path) {
  f.flush();
  if (!f) throw UnwritablePath("error writing '" + path + "'");
}

void write_meta(const std::string &path, const ScenarioConfig &cfg) {
  auto f = open_for_write(path);
  write_scenario(f, cfg);
  finish(f, path);
}

// Options shared by every subcommand.
struct Common {
  std::string scenario;
  std::optional<std::string> policy;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> meta;

  void attach(CLI::App *sub) {
    sub->add_option("scenario", scenario, "Scenario file (key = value lines)")->required();
    sub->add_option("--policy", policy, "AN vector policy: rebuild or freeze")
        ->check(CLI::IsMember({"rebuild", "freeze"}));
    sub->add_option("--seed", seed, "Seed for the seeded-gaussian loop channel");
    sub->add_option("--meta", meta, "Write the effective scenario to this path");
  }

  ScenarioConfig load() const {
    ScenarioConfig cfg = load_scenario(scenario);
    if (policy) cfg.policy = parse_policy(*policy);
    if (seed) cfg.seed = *seed;
    return cfg;
  }
};

void require_distance(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("--r must be > 0 (got " + format_cell(r) + ")");
}

int cmd_optimize(const Common &common, double r, const std::string &mode, PAPoint fixed, bool trace,
                 std::ostream &out) {
  const ScenarioConfig cfg = common.load();
  require_distance(r);
  if (common.meta) write_meta(*common.meta, cfg);

  OutputTable table;
  table.header = {"beta1", "beta2", "secrecy_rate", "iterations", "converged"};
  table.metadata = scenario_metadata(cfg);
  std::optional<PAResult> fd;
  if (mode == "fd") {
    const NetworkInstance net(cfg, r);
    fd = alternate(net.builder(), cfg);
    table.add_row({fd->beta1_opt, fd->beta2_opt, fd->secrecy_rate, std::int64_t{fd->iterations},
                   std::int64_t{fd->converged ? 1 : 0}});
  } else {
    const auto s = run_strategy(cfg, r, mode == "hd" ? Strategy::kHd : Strategy::kFdFixed, fixed);
    table.add_row({s.beta1, s.beta2, s.secrecy_rate, std::int64_t{s.iterations}, std::int64_t{s.converged ? 1 : 0}});
  }
  write_csv(out, table);

  if (trace && fd) {
    OutputTable t;
    t.header = {"iteration", "beta1", "beta2", "objective"};
    for (std::size_t i = 0; i < fd->trace.size(); ++i) {
      const auto &rec = fd->trace[i];
      t.add_row({static_cast<std::int64_t>(i + 1), rec.beta1, rec.beta2, rec.objective});
    }
    out << '\n';
    write_csv(out, t);
  }
  return kOk;
}

int cmd_sweep(const Common &common, const std::string &variable, double from, double to, int steps,
              const std::vector<std::string> &strategies, const std::string &path, double r, bool log_spacing,
              std::optional<double> pb_ratio, PAPoint fixed, std::ostream &out) {
  SweepSpec spec;
  spec.base = common.load();
  spec.variable = parse_sweep_variable(variable);
  spec.values = sweep_values(from, to, steps, log_spacing);
  if (spec.variable == SweepVariable::kAntennas)
    for (auto &v : spec.values) v = std::round(v);
  spec.strategies.clear();
  for (const auto &s : strategies) spec.strategies.push_back(parse_strategy(s));
  spec.fixed_pa = fixed;
  spec.r = r;
  spec.bob_power_ratio = pb_ratio;
  if (spec.variable != SweepVariable::kDistance) require_distance(r);
  spec.validate();

  // fail on an unwritable destination before spending time on the sweep
  auto csv = open_for_write(path);
  const auto rows = run_sweep(spec);

  write_csv(csv, sweep_table(spec, rows));
  finish(csv, path);

  const std::string stem = split_stem(path);
  auto gp = open_for_write(stem + ".gp.dat");
  write_gnuplot(gp, spec, rows);
  finish(gp, stem + ".gp.dat");
  write_meta(common.meta.value_or(stem + ".meta"), spec.base);

  out << "wrote " << rows.size() * spec.strategies.size() << " rows to " << path << '\n';
  return kOk;
}

int cmd_oracle(const Common &common, double r, int grid, std::ostream &out) {
  const ScenarioConfig cfg = common.load();
  require_distance(r);
  if (grid < 2) throw std::invalid_argument("--grid must be >= 2");
  if (common.meta) write_meta(*common.meta, cfg);

  const NetworkInstance net(cfg, r);
  const auto build = net.builder();
  const auto alt = alternate(build, cfg);
  const auto ref = grid_oracle(build, cfg, grid);

  OutputTable table;
  table.header = {"alt_beta1", "alt_beta2", "alt_objective", "grid_beta1", "grid_beta2", "grid_objective", "gap",
                  "iterations"};
  table.metadata = scenario_metadata(cfg);
  table.add_row({alt.beta1_opt, alt.beta2_opt, alt.objective, ref.beta1, ref.beta2, ref.objective,
                 ref.objective - alt.objective, std::int64_t{alt.iterations}});
  write_csv(out, table);
  return kOk;
}

}  // namespace

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != header.size()) throw std::logic_error("OutputTable: row width does not match header");
  rows.push_back(std::move(row));
}

std::string format_cell(const Cell &c) {
  if (const auto *d = std::get_if<double>(&c)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", *d == 0.0 ? 0.0 : *d);  // no "-0"
    return buf;
  }
  if (const auto *i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

void write_csv(std::ostream &out, const OutputTable &t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto &row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

OutputTable sweep_table(const SweepSpec &spec, const std::vector<SweepRow> &rows) {
  OutputTable t;
  t.header = {"value", "strategy", "secrecy_rate", "beta1", "beta2", "iterations"};
  t.metadata = scenario_metadata(spec.base);
  for (const auto &row : rows) {
    for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
      const auto &o = row.outcomes[s];
      t.add_row({row.value, std::string(to_string(spec.strategies[s])), o.secrecy_rate, o.beta1, o.beta2,
                 std::int64_t{o.iterations}});
    }
  }
  return t;
}

void write_gnuplot(std::ostream &out, const SweepSpec &spec, const std::vector<SweepRow> &rows) {
  for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
    if (s) out << "\n\n";
    out << "# " << to_string(spec.strategies[s]) << '\n';
    out << "# " << to_string(spec.variable) << " secrecy_rate beta1 beta2 iterations\n";
    for (const auto &row : rows) {
      const auto &o = row.outcomes[s];
      out << format_cell(row.value) << ' ' << format_cell(o.secrecy_rate) << ' ' << format_cell(o.beta1) << ' '
          << format_cell(o.beta2) << ' ' << o.iterations << '\n';
    }
  }
}

std::vector<std::pair<std::string, std::string>> scenario_metadata(const ScenarioConfig &cfg) {
  std::ostringstream ss;
  write_scenario(ss, cfg);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::istringstream in(ss.str());
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    out.emplace_back(line.substr(0, eq), line.substr(eq + 3));
  }
  return out;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Power allocation for a secure DM network with a full-duplex UAV receiver"};
  app.require_subcommand(1);

  Common opt_common, sweep_common, oracle_common;
  PAPoint fixed = kDefaultFixedPA;

  auto *optimize = app.add_subcommand("optimize", "Optimize (beta1, beta2) at one distance");
  opt_common.attach(optimize);
  double opt_r = 0.0;
  std::string mode = "fd";
  bool trace = false;
  optimize->add_option("--r", opt_r, "Alice-Bob distance in metres")->required();
  optimize->add_option("--mode", mode, "fd, hd or fixed")->check(CLI::IsMember({"fd", "hd", "fixed"}));
  optimize->add_option("--beta1", fixed.beta1, "beta1 for --mode fixed");
  optimize->add_option("--beta2", fixed.beta2, "beta2 for --mode fixed");
  optimize->add_flag("--trace", trace, "Also print the iteration trace");

  auto *sweep = app.add_subcommand("sweep", "Sweep power, distance or antenna count");
  sweep_common.attach(sweep);
  std::string variable;
  double from = 0.0, to = 0.0, sweep_r = 100.0;
  int steps = 0;
  std::vector<std::string> strategies{"fd_opt", "fd_fixed", "hd"};
  std::string path;
  bool log_spacing = false;
  std::optional<double> pb_ratio;
  sweep->add_option("--variable", variable, "power, distance or antennas")
      ->required()
      ->check(CLI::IsMember({"power", "distance", "antennas"}));
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--steps", steps)->required();
  sweep->add_option("--strategies", strategies, "Comma-separated subset of fd_opt,fd_fixed,hd")->delimiter(',');
  sweep->add_option("--out", path, "CSV output path")->required();
  sweep->add_option("--r", sweep_r, "Alice-Bob distance for power and antenna sweeps");
  sweep->add_flag("--log", log_spacing, "Geometric spacing between --from and --to");
  sweep->add_option("--pb-ratio", pb_ratio, "Set p_b = ratio * p_a at each power-sweep point");
  sweep->add_option("--beta1", fixed.beta1, "beta1 for fd_fixed");
  sweep->add_option("--beta2", fixed.beta2, "beta2 for fd_fixed");

  auto *oracle = app.add_subcommand("oracle", "Compare the alternating optimizer with a grid search");
  oracle_common.attach(oracle);
  double oracle_r = 0.0;
  int grid = 1001;
  oracle->add_option("--r", oracle_r, "Alice-Bob distance in metres")->required();
  oracle->add_option("--grid", grid, "Grid points per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (optimize->parsed()) return cmd_optimize(opt_common, opt_r, mode, fixed, trace, out);
    if (sweep->parsed())
      return cmd_sweep(sweep_common, variable, from, to, steps, strategies, path, sweep_r, log_spacing, pb_ratio,
                       fixed, out);
    if (oracle->parsed()) return cmd_oracle(oracle_common, oracle_r, grid, out);
  } catch (const ScenarioParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnwritablePath &e) {
    err << "error: " << e.what() << '\n';
    return kUnwritable;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace fdpa::cli
