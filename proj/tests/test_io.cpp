#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dh/io.hpp"
#include "dh/settings.hpp"

using dh::Complex;
namespace io = dh::io;

TEST(ComplexLiteral, ParsesForms) {
  EXPECT_EQ(io::parse_complex("0.5+14.1i"), Complex(0.5, 14.1));
  EXPECT_EQ(io::parse_complex("0.5-14.1i"), Complex(0.5, -14.1));
  EXPECT_EQ(io::parse_complex("-3"), Complex(-3.0, 0.0));
  EXPECT_EQ(io::parse_complex("2.5i"), Complex(0.0, 2.5));
  EXPECT_EQ(io::parse_complex("-1e-3+2E+2i"), Complex(-1e-3, 200.0));
  EXPECT_EQ(io::parse_complex("+1-1e-5i"), Complex(1.0, -1e-5));
}

TEST(ComplexLiteral, RejectsGarbage) {
  for (const char* bad : {"", "i", "1+i", "abc", "1+2j", "1++2i", "nan", "1,2"}) {
    EXPECT_THROW(io::parse_complex(bad), io::ConfigError) << bad;
  }
}

TEST(ComplexLiteral, RoundTripsAtFullPrecision) {
  const Complex z(0.1 + 0.2, -85.699348485377592);
  EXPECT_EQ(io::parse_complex(io::format_complex(z)), z);
  EXPECT_EQ(io::format_complex(Complex(0.5, 14.1)), "0.5+14.1i");
  EXPECT_EQ(io::format_complex(Complex(1.0, -2.0)), "1-2i");
}

TEST(RectLiteral, ParsesAndValidates) {
  const auto r = io::parse_rect("0,1,80,180");
  EXPECT_EQ(r.sigma0, 0.0);
  EXPECT_EQ(r.sigma1, 1.0);
  EXPECT_EQ(r.t0, 80.0);
  EXPECT_EQ(r.t1, 180.0);
  EXPECT_EQ(io::format_rect(r), "0,1,80,180");
  EXPECT_THROW(io::parse_rect("1,0,0,1"), io::ConfigError);
  EXPECT_THROW(io::parse_rect("0,1,0"), io::ConfigError);
  EXPECT_THROW(io::parse_rect("0,1,0,1,2"), io::ConfigError);
  EXPECT_THROW(io::parse_rect("0,1,x,2"), io::ConfigError);
}

TEST(Csv, SeventeenDigits) { EXPECT_EQ(io::fmt(0.1), "0.10000000000000001"); }

TEST(Csv, CurveColumns) {
  dh::analysis::CurveTrace trace;
  dh::analysis::CurvePolyline line;
  line.component_id = 3;
  line.vertices = {dh::ComplexPoint(0.25, 1.0), dh::ComplexPoint(0.5, 1.2)};
  trace.components.push_back(line);
  std::istringstream csv(io::curve_csv(trace));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  EXPECT_EQ(header, "component_id,sigma,t");
  EXPECT_EQ(row, "3,0.25,1");
}

TEST(Csv, ZerosRoundTrip) {
  dh::analysis::ZeroRecord r;
  r.location = dh::ComplexPoint(0.80851718245663739, 85.699348485377592);
  std::istringstream csv(io::zeros_csv({r}));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  EXPECT_EQ(header.substr(0, 8), "sigma,t,");
  const auto comma = row.find(',');
  EXPECT_EQ(std::stod(row.substr(0, comma)), r.location.sigma());
  EXPECT_EQ(std::stod(row.substr(comma + 1)), r.location.t());
}

TEST(Json, SettingsRoundTripAndPartialFile) {
  dh::EvalSettings s;
  s.hurwitz_cutoff = 33;
  s.rng_seed = 9;
  const nlohmann::json j = s;
  const auto back = j.get<dh::EvalSettings>();
  EXPECT_EQ(back.hurwitz_cutoff, 33);
  EXPECT_EQ(back.rng_seed, 9u);
  const auto partial = nlohmann::json::parse(R"({"fd_step": 2e-4})").get<dh::EvalSettings>();
  EXPECT_EQ(partial.fd_step, 2e-4);
  EXPECT_EQ(partial.hurwitz_cutoff, dh::EvalSettings{}.hurwitz_cutoff);
}

TEST(Settings, EnvironmentFile) {
  const auto path = std::filesystem::temp_directory_path() / "dh_settings_test.json";
  {
    std::ofstream out(path);
    out << R"({"newton_max_iter": 17, "rng_seed": 5})";
  }
  ::setenv("DH_SETTINGS", path.c_str(), 1);
  const auto s = dh::settings_from_env();
  EXPECT_EQ(s.newton_max_iter, 17);
  EXPECT_EQ(s.rng_seed, 5u);
  ::setenv("DH_SETTINGS", (path.string() + ".missing").c_str(), 1);
  EXPECT_THROW(dh::settings_from_env(), dh::IoError);
  ::unsetenv("DH_SETTINGS");
  EXPECT_EQ(dh::settings_from_env().newton_max_iter, dh::EvalSettings{}.newton_max_iter);
  std::filesystem::remove(path);
}

TEST(Settings, ValidationRejectsBadValues) {
  dh::EvalSettings s;
  s.bernoulli_order = 7;
  EXPECT_THROW(s.validate(), dh::DomainError);
  s = {};
  s.hurwitz_cutoff = 0;
  EXPECT_THROW(s.validate(), dh::DomainError);
  s = {};
  s.newton_tol = -1;
  EXPECT_THROW(s.validate(), dh::DomainError);
}

TEST(Files, WriteFailureIsIoError) {
  EXPECT_THROW(io::write_file("/nonexistent-dir/x.csv", "a"), dh::IoError);
}
