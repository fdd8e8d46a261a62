// Command-line front end: evaluation, curve export, kappa, zero surveys,
// verification suites and audit reports.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dh/audit.hpp"
#include "dh/curve.hpp"
#include "dh/dhfun.hpp"
#include "dh/io.hpp"
#include "dh/parallel.hpp"
#include "dh/settings.hpp"
#include "dh/verify.hpp"
#include "dh/xratio.hpp"
#include "dh/zeros.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kConfig = 2, kConvergence = 3, kIo = 4 };

struct RunConfig {
  std::string command;
  std::optional<std::string> rect;
  std::optional<double> step;
  std::optional<double> t0;
  std::optional<double> t1;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;  // empty: command default
  std::string suite = "all";
  std::vector<std::string> points;
};

struct Output {
  std::string text;
  int status = kOk;
};

dh::Rect require_rect(const RunConfig& c, const char* flag) {
  if (!c.rect) throw dh::io::ConfigError(c.command + " requires " + flag);
  return dh::io::parse_rect(*c.rect);
}

json envelope(const RunConfig& c, const dh::EvalSettings& s, json config, json result) {
  // jobs is left out on purpose: output must not depend on it.
  return {{"command", c.command}, {"settings", s}, {"config", std::move(config)}, {"result", std::move(result)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Output run(const RunConfig& c, const dh::EvalSettings& settings) {
  const auto exec = dh::threaded_for(c.jobs);
  const bool csv = c.format.empty() ? c.command == "curve" : c.format == "csv";
  namespace an = dh::analysis;

  if (c.command == "eval" || c.command == "ratio") {
    if (c.points.empty()) throw dh::io::ConfigError(c.command + " requires at least one point a+bi");
    std::vector<dh::Complex> pts;
    for (const auto& p : c.points) pts.push_back(dh::io::parse_complex(p));
    json config = {{"points", c.points}};
    if (c.command == "eval") {
      std::vector<dh::io::EvalRow> rows;
      for (const auto s : pts) {
        double fe = std::nan("");
        if (!dh::xratio::is_pole(s)) fe = dh::dhfun::functional_eq_residual(s, settings);
        rows.push_back({s, dh::dhfun::f(s, settings), fe});
      }
      if (csv) return {dh::io::eval_csv(rows)};
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(dh::io::to_json(r));
      return {dump(envelope(c, settings, config, arr))};
    }
    std::vector<dh::xratio::RatioValue> rows;
    for (const auto s : pts) rows.push_back(dh::xratio::x_of(s));
    if (csv) return {dh::io::ratio_csv(rows)};
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(dh::io::to_json(r));
    return {dump(envelope(c, settings, config, arr))};
  }

  if (c.command == "curve") {
    const auto window = require_rect(c, "--window");
    const double step = c.step.value_or(0.01);
    const auto trace = an::trace_unit_curve(window, step, exec);
    if (csv) return {dh::io::curve_csv(trace)};
    return {dump(envelope(c, settings, {{"window", dh::io::to_json(window)}, {"step", step}}, dh::io::to_json(trace)))};
  }

  if (c.command == "kappa") {
    const auto k = an::kappa(exec);
    if (csv) return {dh::io::kappa_csv(k)};
    return {dump(envelope(c, settings, json::object(), dh::io::to_json(k)))};
  }

  if (c.command == "zeros") {
    const auto rect = require_rect(c, "--rect");
    const double cell = c.step.value_or(0.25);
    const auto survey = an::survey_zeros(rect, settings, exec, cell);
    if (csv) return {dh::io::zeros_csv(survey.zeros)};
    json records = json::array();
    for (const auto& z : survey.zeros) records.push_back(dh::io::to_json(z));
    json result = {{"rect", dh::io::to_json(rect)},
                   {"cell", survey.cell},
                   {"row_offset", survey.row_offset},
                   {"winding_total", survey.winding_total},
                   {"record_count", survey.zeros.size()},
                   {"records", std::move(records)}};
    return {dump(envelope(c, settings, {{"rect", dh::io::to_json(rect)}, {"step", cell}}, std::move(result)))};
  }

  if (c.command == "scan") {
    if (!c.t0 || !c.t1) throw dh::io::ConfigError("scan requires --t0 and --t1");
    const double step = c.step.value_or(0.05);
    const auto zeros = an::scan_critical_line(*c.t0, *c.t1, step, settings, exec);
    if (csv) return {dh::io::zeros_csv(zeros)};
    json records = json::array();
    for (const auto& z : zeros) records.push_back(dh::io::to_json(z));
    return {dump(envelope(c, settings, {{"t0", *c.t0}, {"t1", *c.t1}, {"step", step}}, records))};
  }

  if (c.command == "verify") {
    const auto reports = dh::verify::run_suites(c.suite, settings, exec);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    const int status = ok ? kOk : kFailed;
    if (csv) return {dh::io::verify_csv(reports), status};
    json suites = json::array();
    for (const auto& r : reports) suites.push_back(dh::io::to_json(r));
    return {dump(envelope(c, settings, {{"suite", c.suite}}, {{"passed", ok}, {"suites", std::move(suites)}})),
            status};
  }

  if (c.command == "audit") {
    const auto rect = c.rect ? dh::io::parse_rect(*c.rect) : dh::Rect{0.0, 1.0, 0.0, 200.0};
    const auto survey = an::survey_zeros(rect, settings, exec, c.step.value_or(0.25));
    const auto reports = an::audit_claims(survey.zeros, settings);
    if (csv) return {dh::io::audit_csv(reports)};
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(dh::io::to_json(r));
    return {dump(envelope(c, settings, {{"rect", dh::io::to_json(rect)}}, arr))};
  }
  throw dh::io::ConfigError("unknown command '" + c.command + "'");
}

int fail(bool json_mode, int code, const std::string& type, const std::string& message) {
  if (json_mode) {
    std::cerr << json{{"error", {{"type", type}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  bool json_mode = false;
  for (int k = 1; k + 1 < argc; ++k) {
    if (std::string(argv[k]) == "--format" && std::string(argv[k + 1]) == "json") json_mode = true;
  }
  for (int k = 1; k < argc; ++k) {
    if (std::string(argv[k]) == "--format=json") json_mode = true;
  }

  RunConfig cfg;
  CLI::App app{"Davenport-Heilbronn function toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "RNG seed (overrides settings)");
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* eval = app.add_subcommand("eval", "f(s) at points a+bi");
  eval->add_option("points", cfg.points, "complex points")->required();
  auto* ratio = app.add_subcommand("ratio", "X(s) at points a+bi");
  ratio->add_option("points", cfg.points, "complex points")->required();
  auto* curve = app.add_subcommand("curve", "trace |X(s)| = 1");
  curve->add_option("--window,--rect", cfg.rect, "sigma0,sigma1,t0,t1");
  curve->add_option("--step", cfg.step, "grid step")->check(CLI::PositiveNumber);
  app.add_subcommand("kappa", "strip height bound of |X| = 1");
  auto* zeros = app.add_subcommand("zeros", "survey zeros in a rectangle");
  zeros->add_option("--rect,--window", cfg.rect, "sigma0,sigma1,t0,t1");
  zeros->add_option("--step", cfg.step, "tile side")->check(CLI::PositiveNumber);
  auto* scan = app.add_subcommand("scan", "zeros on the critical line");
  scan->add_option("--t0", cfg.t0);
  scan->add_option("--t1", cfg.t1);
  scan->add_option("--step", cfg.step, "grid step")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite, "all, specfun, dhfun, xratio or analysis");
  auto* audit = app.add_subcommand("audit", "claim audit report");
  audit->add_option("--rect,--window", cfg.rect, "sigma0,sigma1,t0,t1");
  audit->add_option("--step", cfg.step, "survey tile side")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(json_mode, kConfig, "ConfigError", e.what());
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    dh::EvalSettings settings = dh::settings_from_env();
    if (cfg.seed) settings.rng_seed = *cfg.seed;
    settings.validate();
    const Output out = run(cfg, settings);
    if (cfg.out_path.empty()) {
      std::cout << out.text;
      std::cout.flush();
      if (!std::cout) throw dh::IoError("write to stdout failed");
    } else {
      dh::io::write_file(cfg.out_path, out.text);
    }
    return out.status;
  } catch (const dh::IoError& e) {
    return fail(json_mode, kIo, "IoError", e.what());
  } catch (const dh::ConvergenceError& e) {
    return fail(json_mode, kConvergence, "ConvergenceError", e.what());
  } catch (const dh::BoundaryZeroError& e) {
    return fail(json_mode, kConvergence, "BoundaryZeroError", e.what());
  } catch (const dh::UndersampledError& e) {
    return fail(json_mode, kConvergence, "UndersampledError", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(json_mode, kConfig, "ConfigError", std::string("settings: ") + e.what());
  } catch (const dh::PoleError& e) {
    return fail(json_mode, kConfig, "PoleError", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(json_mode, kConfig, "ConfigError", e.what());
  } catch (const std::domain_error& e) {
    return fail(json_mode, kConfig, "DomainError", e.what());
  } catch (const std::exception& e) {
    return fail(json_mode, kFailed, "Error", e.what());
  }
}
