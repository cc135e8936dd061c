#include "veflab/config_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace vefl {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("config error at line " + std::to_string(line) +
                              ": " + what);
}

double parse_double(std::string_view v, std::string_view key, int line) {
  std::string buf(v);
  errno = 0;
  char* end = nullptr;
  double x = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0' || errno == ERANGE)
    fail(line, "value '" + buf + "' for key '" + std::string(key) +
                   "' is not a number");
  return x;
}

long long parse_int(std::string_view v, std::string_view key, int line) {
  std::string buf(v);
  errno = 0;
  char* end = nullptr;
  long long x = std::strtoll(buf.c_str(), &end, 10);
  if (end == buf.c_str() || *end != '\0' || errno == ERANGE)
    fail(line, "value '" + buf + "' for key '" + std::string(key) +
                   "' is not an integer");
  return x;
}

std::uint64_t parse_u64(std::string_view v, std::string_view key, int line) {
  std::string buf(v);
  errno = 0;
  char* end = nullptr;
  unsigned long long x = std::strtoull(buf.c_str(), &end, 10);
  if (end == buf.c_str() || *end != '\0' || errno == ERANGE ||
      buf.find('-') != std::string::npos)
    fail(line, "value '" + buf + "' for key '" + std::string(key) +
                   "' is not a non-negative integer");
  return static_cast<std::uint64_t>(x);
}

bool parse_bool(std::string_view v, std::string_view key, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  fail(line, "value '" + std::string(v) + "' for key '" + std::string(key) +
                 "' is not a boolean (use true/false)");
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

SimConfig parse_config(const std::string& text) {
  SimConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view sv(raw);
    if (auto h = sv.find('#'); h != std::string_view::npos) sv = sv.substr(0, h);
    sv = trim(sv);
    if (sv.empty()) continue;
    auto eq = sv.find('=');
    if (eq == std::string_view::npos)
      fail(line, "expected 'key = value', got '" + std::string(sv) + "'");
    std::string_view key = trim(sv.substr(0, eq));
    std::string_view val = trim(sv.substr(eq + 1));
    if (key.empty()) fail(line, "missing key before '='");
    if (val.empty())
      fail(line, "missing value for key '" + std::string(key) + "'");

    if (key == "dim") {
      long long d = parse_int(val, key, line);
      if (d != 2 && d != 3) fail(line, "dim must be 2 or 3");
      cfg.dim = static_cast<int>(d);
    } else if (key == "points") {
      long long m = parse_int(val, key, line);
      if (m < 8 || m % 2 != 0) fail(line, "points must be even and >= 8");
      cfg.points = static_cast<int>(m);
    } else if (key == "period") {
      double x = parse_double(val, key, line);
      if (!(x > 0.0)) fail(line, "period must be > 0");
      cfg.period = x;
    } else if (key == "mu") {
      double x = parse_double(val, key, line);
      if (!(x > 0.0)) fail(line, "mu must be > 0");
      cfg.mu = x;
    } else if (key == "dt") {
      double x = parse_double(val, key, line);
      if (!(x > 0.0)) fail(line, "dt must be > 0");
      cfg.dt = x;
    } else if (key == "t_end") {
      double x = parse_double(val, key, line);
      if (!(x >= 0.0)) fail(line, "t_end must be >= 0");
      cfg.t_end = x;
    } else if (key == "output_stride") {
      long long n = parse_int(val, key, line);
      if (n < 0) fail(line, "output_stride must be >= 0");
      cfg.output_stride = static_cast<int>(n);
    } else if (key == "dealias") {
      double x = parse_double(val, key, line);
      if (!(x > 0.0 && x <= 1.0)) fail(line, "dealias must lie in (0, 1]");
      cfg.dealias = x;
    } else if (key == "nonlinear") {
      cfg.nonlinear = parse_bool(val, key, line);
    } else if (key == "init") {
      if (val != "flowmap" && val != "oscillatory" && val != "zero")
        fail(line, "init must be flowmap, oscillatory, or zero");
      cfg.init = std::string(val);
    } else if (key == "amplitude") {
      double x = parse_double(val, key, line);
      if (!(x >= 0.0)) fail(line, "amplitude must be >= 0");
      cfg.amplitude = x;
    } else if (key == "pseudo_time") {
      double x = parse_double(val, key, line);
      if (!(x >= 0.0)) fail(line, "pseudo_time must be >= 0");
      cfg.pseudo_time = x;
    } else if (key == "pseudo_dt") {
      double x = parse_double(val, key, line);
      if (!(x > 0.0)) fail(line, "pseudo_dt must be > 0");
      cfg.pseudo_dt = x;
    } else if (key == "flow_band_min") {
      long long n = parse_int(val, key, line);
      if (n < 1) fail(line, "flow_band_min must be >= 1");
      cfg.flow_band_min = static_cast<int>(n);
    } else if (key == "flow_band_max") {
      long long n = parse_int(val, key, line);
      if (n < 1) fail(line, "flow_band_max must be >= 1");
      cfg.flow_band_max = static_cast<int>(n);
    } else if (key == "epsilon") {
      double x = parse_double(val, key, line);
      if (!(x > 0.0)) fail(line, "epsilon must be > 0");
      cfg.epsilon = x;
    } else if (key == "p_osc") {
      double x = parse_double(val, key, line);
      if (!(x >= 1.0)) fail(line, "p_osc must be >= 1");
      cfg.p_osc = x;
    } else if (key == "envelope_power") {
      long long n = parse_int(val, key, line);
      if (n < 1) fail(line, "envelope_power must be >= 1");
      cfg.envelope_power = static_cast<int>(n);
    } else if (key == "seed") {
      cfg.seed = parse_u64(val, key, line);
    } else if (key == "r0") {
      double x = parse_double(val, key, line);
      if (!(x >= 0.0)) fail(line, "r0 must be >= 0 (0 selects the default)");
      cfg.r0 = x;
    } else if (key == "s") {
      cfg.s = parse_double(val, key, line);
    } else if (key == "r") {
      double x = parse_double(val, key, line);
      if (!(x >= 1.0)) fail(line, "r must be >= 1");
      cfg.r = x;
    } else if (key == "p1") {
      double x = parse_double(val, key, line);
      if (!(x >= 1.0)) fail(line, "p1 must be >= 1");
      cfg.p1 = x;
    } else if (key == "p2") {
      double x = parse_double(val, key, line);
      if (!(x >= 1.0)) fail(line, "p2 must be >= 1");
      cfg.p2 = x;
    } else if (key == "lambda1") {
      double x = parse_double(val, key, line);
      if (!(x > 0.0)) fail(line, "lambda1 must be > 0");
      cfg.lambda1 = x;
    } else {
      fail(line, "unknown key '" + std::string(key) + "'");
    }
  }
  if (cfg.flow_band_max < cfg.flow_band_min)
    throw std::invalid_argument(
        "config error: flow_band_max must be >= flow_band_min");
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const SimConfig& cfg) {
  std::ostringstream out;
  out << "dim = " << cfg.dim << "\n";
  out << "points = " << cfg.points << "\n";
  out << "period = " << fmt(cfg.period) << "\n";
  out << "mu = " << fmt(cfg.mu) << "\n";
  out << "dt = " << fmt(cfg.dt) << "\n";
  out << "t_end = " << fmt(cfg.t_end) << "\n";
  out << "output_stride = " << cfg.output_stride << "\n";
  out << "dealias = " << fmt(cfg.dealias) << "\n";
  out << "nonlinear = " << (cfg.nonlinear ? "true" : "false") << "\n";
  out << "init = " << cfg.init << "\n";
  out << "amplitude = " << fmt(cfg.amplitude) << "\n";
  out << "pseudo_time = " << fmt(cfg.pseudo_time) << "\n";
  out << "pseudo_dt = " << fmt(cfg.pseudo_dt) << "\n";
  out << "flow_band_min = " << cfg.flow_band_min << "\n";
  out << "flow_band_max = " << cfg.flow_band_max << "\n";
  out << "epsilon = " << fmt(cfg.epsilon) << "\n";
  out << "p_osc = " << fmt(cfg.p_osc) << "\n";
  out << "envelope_power = " << cfg.envelope_power << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "r0 = " << fmt(cfg.r0) << "\n";
  out << "s = " << fmt(cfg.s) << "\n";
  out << "r = " << fmt(cfg.r) << "\n";
  out << "p1 = " << fmt(cfg.p1) << "\n";
  out << "p2 = " << fmt(cfg.p2) << "\n";
  out << "lambda1 = " << fmt(cfg.lambda1) << "\n";
  return out.str();
}

void save_config(const SimConfig& cfg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write config file '" + path + "'");
  out << serialize_config(cfg);
}

}  // namespace vefl
