#include "dh/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dh::io {
namespace {

double parse_double(std::string_view text, std::string_view what) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

const char* flag(bool b) { return b ? "true" : "false"; }

nlohmann::json named_values(const std::vector<analysis::NamedValue>& values) {
  auto j = nlohmann::json::array();
  for (const auto& v : values) j.push_back({{"name", v.name}, {"value", v.value}});
  return j;
}

}  // namespace

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) {
  const double im = z.imag();
  std::string out = fmt(z.real());
  out += std::signbit(im) ? "-" : "+";
  out += fmt(std::abs(im));
  out += "i";
  return out;
}

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw ConfigError("empty complex literal");
  if (text.back() != 'i') return {parse_double(text, "complex literal"), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_double(body, "complex literal")};
  return {parse_double(body.substr(0, split), "complex literal"),
          parse_double(body.substr(split), "complex literal")};
}

Rect parse_rect(std::string_view text) {
  double v[4];
  std::size_t start = 0;
  for (int k = 0; k < 4; ++k) {
    const std::size_t comma = text.find(',', start);
    if ((k < 3) == (comma == std::string_view::npos)) {
      throw ConfigError("rectangle must be sigma0,sigma1,t0,t1: '" + std::string(text) + "'");
    }
    v[k] = parse_double(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start),
                        "rectangle bound");
    start = comma + 1;
  }
  const Rect r{v[0], v[1], v[2], v[3]};
  if (!r.valid()) throw ConfigError("rectangle needs sigma0 < sigma1 and t0 < t1: '" + std::string(text) + "'");
  return r;
}

std::string format_rect(const Rect& r) {
  return fmt(r.sigma0) + "," + fmt(r.sigma1) + "," + fmt(r.t0) + "," + fmt(r.t1);
}

nlohmann::json to_json(const Rect& r) { return {r.sigma0, r.sigma1, r.t0, r.t1}; }

nlohmann::json to_json(const analysis::ZeroRecord& r) {
  return {{"sigma", r.location.sigma()},
          {"t", r.location.t()},
          {"location", format_complex(r.location.value())},
          {"residual", r.residual},
          {"iterations", r.iterations},
          {"paired_location", format_complex(r.paired_location.value())},
          {"paired_residual", r.paired_residual},
          {"abs_x", r.abs_x_here},
          {"on_line", r.on_line},
          {"within_kappa", r.within_kappa}};
}

nlohmann::json to_json(const analysis::CurveTrace& trace) {
  auto comps = nlohmann::json::array();
  for (const auto& c : trace.components) {
    auto verts = nlohmann::json::array();
    for (const auto& v : c.vertices) verts.push_back({v.sigma(), v.t()});
    comps.push_back({{"component_id", c.component_id},
                     {"closed", c.closed},
                     {"excludes_line", c.excludes_line},
                     {"vertices", std::move(verts)}});
  }
  auto degenerate = nlohmann::json::array();
  for (const auto& d : trace.degenerate_cells) {
    degenerate.push_back({{"i", d.i},
                          {"j", d.j},
                          {"singularity", format_complex(d.singularity)},
                          {"resolved", d.resolved}});
  }
  return {{"window", to_json(trace.window)},
          {"step", trace.step},
          {"nx", trace.nx},
          {"ny", trace.ny},
          {"components", std::move(comps)},
          {"degenerate_cells", std::move(degenerate)}};
}

nlohmann::json to_json(const analysis::KappaResult& k) {
  return {{"kappa", k.kappa},
          {"trace_maximum", k.trace_maximum},
          {"digamma_root", k.digamma_root},
          {"negative_branch", k.negative_branch},
          {"argmax", format_complex(k.argmax)},
          {"zoom_levels", k.zoom_levels}};
}

nlohmann::json to_json(const analysis::AuditReport& report) {
  auto ev = nlohmann::json::array();
  for (const auto& e : report.evidence) {
    ev.push_back({{"inputs", named_values(e.inputs)}, {"measured", named_values(e.measured)}});
  }
  return {{"claim_id", std::string(analysis::claim_name(report.claim_id))},
          {"evidence", std::move(ev)},
          {"verdict_note", report.verdict_note}};
}

nlohmann::json to_json(const verify::SuiteReport& report) {
  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", c.measured},
                      {"threshold", c.threshold},
                      {"samples", c.samples}});
  }
  return {{"suite", report.suite}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

nlohmann::json to_json(const EvalRow& row) {
  return {{"s", format_complex(row.s)},
          {"value", format_complex(row.value.value)},
          {"abs", std::abs(row.value.value)},
          {"est_abs_err", row.value.est_abs_err},
          {"fe_residual", row.fe_residual},
          {"accuracy_warning", row.value.accuracy_warning}};
}

nlohmann::json to_json(const xratio::RatioValue& v) {
  return {{"s", format_complex(v.at)},
          {"value", format_complex(v.value)},
          {"log_abs", v.log_abs},
          {"arg", v.arg_cont},
          {"zero_flag", v.zero_flag}};
}

std::string zeros_csv(const std::vector<analysis::ZeroRecord>& records) {
  std::ostringstream out;
  out << "sigma,t,residual,iterations,paired_sigma,paired_t,paired_residual,abs_x,on_line,within_kappa\n";
  for (const auto& r : records) {
    out << fmt(r.location.sigma()) << ',' << fmt(r.location.t()) << ',' << fmt(r.residual) << ',' << r.iterations
        << ',' << fmt(r.paired_location.sigma()) << ',' << fmt(r.paired_location.t()) << ','
        << fmt(r.paired_residual) << ',' << fmt(r.abs_x_here) << ',' << flag(r.on_line) << ','
        << flag(r.within_kappa) << '\n';
  }
  return out.str();
}

std::string curve_csv(const analysis::CurveTrace& trace) {
  std::ostringstream out;
  out << "component_id,sigma,t\n";
  for (const auto& c : trace.components) {
    for (const auto& v : c.vertices) out << c.component_id << ',' << fmt(v.sigma()) << ',' << fmt(v.t()) << '\n';
  }
  return out.str();
}

std::string kappa_csv(const analysis::KappaResult& k) {
  std::ostringstream out;
  out << "kappa,trace_maximum,digamma_root,negative_branch,argmax_sigma,argmax_t,zoom_levels\n"
      << fmt(k.kappa) << ',' << fmt(k.trace_maximum) << ',' << fmt(k.digamma_root) << ',' << fmt(k.negative_branch)
      << ',' << fmt(k.argmax.real()) << ',' << fmt(k.argmax.imag()) << ',' << k.zoom_levels << '\n';
  return out.str();
}

std::string audit_csv(const std::vector<analysis::AuditReport>& reports) {
  std::ostringstream out;
  out << "claim_id,entry,kind,name,value\n";
  for (const auto& r : reports) {
    const auto id = analysis::claim_name(r.claim_id);
    for (std::size_t e = 0; e < r.evidence.size(); ++e) {
      for (const auto& v : r.evidence[e].inputs) out << id << ',' << e << ",input," << v.name << ',' << fmt(v.value) << '\n';
      for (const auto& v : r.evidence[e].measured) {
        out << id << ',' << e << ",measured," << v.name << ',' << fmt(v.value) << '\n';
      }
    }
  }
  return out.str();
}

std::string verify_csv(const std::vector<verify::SuiteReport>& reports) {
  std::ostringstream out;
  out << "suite,check,passed,measured,threshold,samples\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out << c.suite << ',' << c.name << ',' << flag(c.passed) << ',' << fmt(c.measured) << ',' << fmt(c.threshold)
          << ',' << c.samples << '\n';
    }
  }
  return out.str();
}

std::string eval_csv(const std::vector<EvalRow>& rows) {
  std::ostringstream out;
  out << "sigma,t,re,im,abs,est_abs_err,fe_residual,accuracy_warning\n";
  for (const auto& r : rows) {
    out << fmt(r.s.real()) << ',' << fmt(r.s.imag()) << ',' << fmt(r.value.value.real()) << ','
        << fmt(r.value.value.imag()) << ',' << fmt(std::abs(r.value.value)) << ',' << fmt(r.value.est_abs_err) << ','
        << fmt(r.fe_residual) << ',' << flag(r.value.accuracy_warning) << '\n';
  }
  return out.str();
}

std::string ratio_csv(const std::vector<xratio::RatioValue>& rows) {
  std::ostringstream out;
  out << "sigma,t,re,im,log_abs,arg,zero_flag\n";
  for (const auto& v : rows) {
    out << fmt(v.at.real()) << ',' << fmt(v.at.imag()) << ',' << fmt(v.value.real()) << ',' << fmt(v.value.imag())
        << ',' << fmt(v.log_abs) << ',' << fmt(v.arg_cont) << ',' << flag(v.zero_flag) << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace dh::io
