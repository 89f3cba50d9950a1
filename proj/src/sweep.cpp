#include "tangle/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "tangle/closed_form.hpp"

namespace tangle::sweep {

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::one_tangle_A: return "one_tangle_A";
    case Measure::one_tangle_B: return "one_tangle_B";
    case Measure::one_tangle_C: return "one_tangle_C";
    case Measure::two_tangle_AB: return "two_tangle_AB";
    case Measure::two_tangle_AC: return "two_tangle_AC";
    case Measure::two_tangle_BC: return "two_tangle_BC";
    case Measure::concurrence_AB: return "concurrence_AB";
    case Measure::concurrence_AC: return "concurrence_AC";
    case Measure::concurrence_BC: return "concurrence_BC";
    case Measure::residual_A: return "residual_A";
    case Measure::residual_B: return "residual_B";
    case Measure::residual_C: return "residual_C";
    case Measure::pi_tangle: return "pi_tangle";
  }
  return "unknown";
}

double measure_value(const TangleReport& report, Measure m) {
  const auto k = static_cast<int>(m);
  if (m <= Measure::one_tangle_C) return report.one_tangles[k];
  if (m <= Measure::two_tangle_BC) return report.two_tangles[k - 3];
  if (m <= Measure::concurrence_BC) return report.concurrences[k - 6];
  if (m <= Measure::residual_C) return report.residuals[k - 9];
  return report.pi_tangle;
}

void SweepConfig::validate() const {
  if (scenario == ScenarioKind::inertial)
    throw UsageError("scenario must be one-accelerated or two-accelerated");
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || r_min < 0.0 || r_max > kMaxAcceleration ||
      r_min > r_max)
    throw UsageError("require 0 <= r_min <= r_max <= pi/4");
  if (steps < 2) throw UsageError("steps must be at least 2");
  if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
  if (threads == 0) throw UsageError("threads must be at least 1");
}

std::vector<double> uniform_grid(double r_min, double r_max, int steps) {
  if (steps < 2) throw UsageError("steps must be at least 2");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double span = r_max - r_min;
  for (int k = 0; k < steps; ++k) grid[k] = r_min + span * k / (steps - 1);
  grid.back() = r_max;
  return grid;
}

std::vector<Scenario> grid_scenarios(const SweepConfig& config) {
  config.validate();
  const auto grid = uniform_grid(config.r_min, config.r_max, config.steps);
  std::vector<Scenario> out;
  if (config.scenario == ScenarioKind::one_accelerated) {
    for (double r : grid) out.push_back(Scenario::one_accelerated(AccelerationParam(r)));
  } else if (config.diagonal) {
    for (double r : grid)
      out.push_back(Scenario::two_accelerated(AccelerationParam(r), AccelerationParam(r)));
  } else {
    for (double rb : grid)
      for (double rc : grid)
        out.push_back(Scenario::two_accelerated(AccelerationParam(rb), AccelerationParam(rc)));
  }
  return out;
}

namespace {

std::vector<TangleReport> evaluate(const std::vector<Scenario>& points, unsigned threads) {
  std::vector<TangleReport> reports(points.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  if (threads == 1) {
    for (std::size_t k = 0; k < points.size(); ++k)
      reports[k] = tangle_report(physical_state(points[k]));
    return reports;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t k = t; k < points.size(); k += threads)
            reports[k] = tangle_report(physical_state(points[k]));
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

}  // namespace

std::vector<MeasureRecord> run_sweep(const SweepConfig& config) {
  const auto points = grid_scenarios(config);
  const auto reports = evaluate(points, config.threads);

  std::vector<MeasureRecord> records;
  records.reserve(points.size() * kAllMeasures.size());
  for (std::size_t k = 0; k < points.size(); ++k)
    for (Measure m : kAllMeasures)
      records.push_back({config.scenario, points[k].r("B").value(), points[k].r("C").value(), m,
                         measure_value(reports[k], m)});
  return records;
}

std::string format_csv_row(const MeasureRecord& record) {
  const double value = record.value == 0.0 ? 0.0 : record.value;  // no "-0"
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s,%.12f,%.12f,%s,%#.12g",
                std::string(to_string(record.scenario)).c_str(), record.r_b, record.r_c,
                std::string(to_string(record.measure)).c_str(), value);
  return buf;
}

void emit_csv(const std::vector<MeasureRecord>& records, std::ostream& out) {
  out << "scenario,r_b,r_c,measure,value\n";
  for (const auto& r : records) out << format_csv_row(r) << '\n';
}

void emit_csv(const std::vector<MeasureRecord>& records, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  emit_csv(records, file);
  file.flush();
  if (!file) throw IoError("write to '" + path.string() + "' failed");
}

// ---------------------------------------------------------------------------

namespace {

struct Comparison {
  std::string measure;
  double numeric;
  double analytic;
};

std::vector<Comparison> compare(const TangleReport& numeric,
                                const closed_form::AnalyticOneTangles& analytic) {
  const double pi = (analytic.n_A * analytic.n_A + analytic.n_B * analytic.n_B +
                     analytic.n_C * analytic.n_C) / 3.0;
  return {
      {"one_tangle_A", numeric.one_tangles[0], analytic.n_A},
      {"one_tangle_B", numeric.one_tangles[1], analytic.n_B},
      {"one_tangle_C", numeric.one_tangles[2], analytic.n_C},
      {"two_tangle_AB", numeric.two_tangles[0], 0.0},
      {"two_tangle_AC", numeric.two_tangles[1], 0.0},
      {"two_tangle_BC", numeric.two_tangles[2], 0.0},
      {"pi_tangle", numeric.pi_tangle, pi},
  };
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

}  // namespace

VerifyReport verify(double tolerance, int steps) {
  if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");

  VerifyReport report;
  std::ostringstream text;
  text << "verify: numeric pipeline vs published closed forms, tolerance "
       << fmt("%.3e", tolerance) << "\n";

  for (ScenarioKind kind : {ScenarioKind::two_accelerated, ScenarioKind::one_accelerated}) {
    SweepConfig config;
    config.scenario = kind;
    config.steps = steps;
    const auto points = grid_scenarios(config);

    std::map<std::string, Deviation> worst;
    std::vector<std::string> order;
    for (const Scenario& point : points) {
      const TangleReport numeric = tangle_report(physical_state(point));
      for (const auto& cmp : compare(numeric, closed_form::one_tangles(point))) {
        auto [it, inserted] = worst.try_emplace(cmp.measure, Deviation{kind, cmp.measure});
        if (inserted) order.push_back(cmp.measure);
        const double dev = std::abs(cmp.numeric - cmp.analytic);
        if (dev > it->second.max_abs || inserted) {
          it->second.max_abs = dev;
          it->second.at_r_b = point.r("B").value();
          it->second.at_r_c = point.r("C").value();
        }
      }
    }

    text << "\n[" << to_string(kind) << "] " << points.size() << " grid points\n";
    for (const auto& name : order) {
      const Deviation& d = worst.at(name);
      const bool ok = d.max_abs < tolerance;
      if (!ok) report.exit_code = kExitVerifyFailed;
      char line[256];
      std::snprintf(line, sizeof line, "  %-14s max |numeric - analytic| = %.3e at (r_b=%.6f, r_c=%.6f)  %s\n",
                    name.c_str(), d.max_abs, d.at_r_b, d.at_r_c, ok ? "ok" : "FAIL");
      text << line;
      report.deviations.push_back(d);
    }
  }

  // Infinite-acceleration findings.
  const AccelerationParam limit(kMaxAcceleration);
  const TangleReport two = tangle_report(physical_state(Scenario::two_accelerated(limit, limit)));
  const auto two_cf = closed_form::two_acc_one_tangles(limit, limit);
  const double spread = std::max({two.one_tangles[0], two.one_tangles[1], two.one_tangles[2]}) -
                        std::min({two.one_tangles[0], two.one_tangles[1], two.one_tangles[2]});
  text << "\nlimits at r = pi/4\n";
  text << fmt("  two-accelerated numeric one-tangles: %.12f %.12f %.12f (spread %.3e)\n",
              two.one_tangles[0], two.one_tangles[1], two.one_tangles[2], spread);
  text << fmt("  two-accelerated closed form evaluates to %.12f = (1+sqrt5)/8; printed limit "
              "(1-sqrt5)/8 = %.12f is negative (sign typo); numeric value %.12f\n",
              two_cf.n_A, (1.0 - std::sqrt(5.0)) / 8.0, two.one_tangles[0]);
  const TangleReport one = tangle_report(physical_state(Scenario::one_accelerated(limit)));
  const auto one_cf = closed_form::one_acc_one_tangles(limit);
  text << fmt("  one-accelerated numeric one-tangles: %.12f %.12f %.12f\n", one.one_tangles[0],
              one.one_tangles[1], one.one_tangles[2]);
  text << fmt("  one-accelerated closed form:         %.12f %.12f %.12f\n", one_cf.n_A,
              one_cf.n_B, one_cf.n_C);
  text << fmt("  pi-tangle numeric: two-accelerated %.12f, one-accelerated %.12f\n",
              two.pi_tangle, one.pi_tangle);

  text << "\nresult: " << (report.exit_code == kExitOk ? "PASS" : "FAIL") << "\n";
  report.text = text.str();
  return report;
}

// ---------------------------------------------------------------------------

std::vector<std::string> config_file_args(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");

  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string{};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };

  std::vector<std::string> args;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw UsageError(path.string() + ":" + std::to_string(line_no) + ": empty key");
    if (key.rfind("--", 0) != 0) key = "--" + key;
    if (value == "true") {
      args.push_back(key);
    } else if (value != "false") {
      args.push_back(key);
      args.push_back(value);
    }
  }
  return args;
}

}  // namespace tangle::sweep
