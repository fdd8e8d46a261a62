#pragma once

// Text formats shared by the command-line tool and the tests: complex and
// rectangle literals, CSV tables, JSON documents.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dh/audit.hpp"
#include "dh/curve.hpp"
#include "dh/dhfun.hpp"
#include "dh/verify.hpp"
#include "dh/xratio.hpp"
#include "dh/zeros.hpp"

namespace dh::io {

/// Malformed user input (literal syntax, option values).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// %.17g
std::string fmt(double v);

/// "a+bi" / "a-bi" with 17 significant digits.
std::string format_complex(Complex z);

/// Accepts "a", "bi", "a+bi", "a-bi" (exponents allowed). ConfigError otherwise.
Complex parse_complex(std::string_view text);

/// "sigma0,sigma1,t0,t1" with sigma0 < sigma1 and t0 < t1. ConfigError otherwise.
Rect parse_rect(std::string_view text);

std::string format_rect(const Rect& r);

nlohmann::json to_json(const analysis::ZeroRecord& r);
nlohmann::json to_json(const analysis::CurveTrace& trace);
nlohmann::json to_json(const analysis::KappaResult& k);
nlohmann::json to_json(const analysis::AuditReport& report);
nlohmann::json to_json(const verify::SuiteReport& report);
nlohmann::json to_json(const Rect& r);

// CSV tables. Every table starts with a header row and ends with a newline.
std::string zeros_csv(const std::vector<analysis::ZeroRecord>& records);
/// Columns component_id,sigma,t.
std::string curve_csv(const analysis::CurveTrace& trace);
std::string kappa_csv(const analysis::KappaResult& k);
std::string audit_csv(const std::vector<analysis::AuditReport>& reports);
std::string verify_csv(const std::vector<verify::SuiteReport>& reports);

struct EvalRow {
  Complex s;
  dhfun::FnValue value;
  double fe_residual;  // NaN at poles of X
};
std::string eval_csv(const std::vector<EvalRow>& rows);
nlohmann::json to_json(const EvalRow& row);

std::string ratio_csv(const std::vector<xratio::RatioValue>& rows);
nlohmann::json to_json(const xratio::RatioValue& v);

/// Writes `text` to `path`; IoError on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace dh::io
