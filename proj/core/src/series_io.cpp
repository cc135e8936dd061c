#include "veflab/series_io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace vefl {

namespace {

constexpr std::array<std::string_view, 5> kAuxNames = {
    "gradv", "r_det", "r_divT", "r_compat", "stressgap"};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const std::vector<double>* aux_vector(const NormSeries& s, std::size_t which) {
  switch (which) {
    case 0: return &s.grad_v_sup;
    case 1: return &s.r_det;
    case 2: return &s.r_divT;
    case 3: return &s.r_compat;
    default: return &s.stress_gap;
  }
}

std::vector<double>* aux_vector(NormSeries& s, std::size_t which) {
  return const_cast<std::vector<double>*>(
      aux_vector(static_cast<const NormSeries&>(s), which));
}

double parse_num(std::string_view v, const std::string& path, int line) {
  std::string buf(v);
  char* end = nullptr;
  double x = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0')
    throw std::runtime_error(path + ": malformed number '" + buf +
                             "' at line " + std::to_string(line));
  return x;
}

std::vector<std::string_view> split_row(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

void write_block_series_csv(const NormSeries& series, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write series file '" + path + "'");
  out << "t,q,field,p,norm\n";
  const std::size_t nt = series.times.size();
  for (std::size_t i = 0; i < nt; ++i) {
    const std::string t = fmt(series.times[i]);
    for (const auto& bs : series.blocks) {
      const std::string p = fmt(bs.p);
      for (int q = series.q_min; q <= series.q_max; ++q) {
        const auto& v = bs.by_block[static_cast<std::size_t>(q - series.q_min)];
        out << t << ',' << q << ',' << bs.field << ',' << p << ','
            << fmt(v[i]) << "\n";
      }
    }
    for (std::size_t a = 0; a < kAuxNames.size(); ++a) {
      const auto* v = aux_vector(series, a);
      if (v->size() != nt) continue;
      out << t << ",0," << kAuxNames[a] << ",0," << fmt((*v)[i]) << "\n";
    }
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

NormSeries read_block_series_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open series file '" + path + "'");
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty file, expected a CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,q,field,p,norm")
    throw std::runtime_error(path + ": unexpected header '" + line + "'");

  NormSeries series;
  // (field, p) -> q -> values in row order
  std::map<std::pair<std::string, double>, std::map<int, std::vector<double>>>
      table;
  std::array<std::vector<double>, kAuxNames.size()> aux;
  bool have_q_range = false;
  int q_lo = 0, q_hi = 0;

  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_row(line);
    if (cells.size() != 5)
      throw std::runtime_error(path + ": expected 5 columns at line " +
                               std::to_string(lineno));
    double t = parse_num(cells[0], path, lineno);
    double qd = parse_num(cells[1], path, lineno);
    int q = static_cast<int>(qd);
    std::string field(cells[2]);
    double p = parse_num(cells[3], path, lineno);
    double norm = parse_num(cells[4], path, lineno);

    if (series.times.empty() || t != series.times.back())
      series.times.push_back(t);

    bool is_aux = false;
    if (p == 0.0) {
      for (std::size_t a = 0; a < kAuxNames.size(); ++a) {
        if (field == kAuxNames[a]) {
          aux[a].push_back(norm);
          is_aux = true;
          break;
        }
      }
    }
    if (is_aux) continue;

    if (!have_q_range) {
      q_lo = q_hi = q;
      have_q_range = true;
    } else {
      if (q < q_lo) q_lo = q;
      if (q > q_hi) q_hi = q;
    }
    table[{field, p}][q].push_back(norm);
  }

  const std::size_t nt = series.times.size();
  for (std::size_t a = 0; a < kAuxNames.size(); ++a) {
    if (aux[a].empty()) continue;
    if (aux[a].size() != nt)
      throw std::runtime_error(path + ": auxiliary series '" +
                               std::string(kAuxNames[a]) +
                               "' does not cover every instant");
    *aux_vector(series, a) = std::move(aux[a]);
  }
  if (!have_q_range) {
    series.q_min = 0;
    series.q_max = -1;
    return series;
  }
  series.q_min = q_lo;
  series.q_max = q_hi;
  for (auto& [key, per_q] : table) {
    BlockSeries bs;
    bs.field = key.first;
    bs.p = key.second;
    bs.by_block.assign(static_cast<std::size_t>(q_hi - q_lo + 1),
                       std::vector<double>(nt, 0.0));
    for (auto& [q, vals] : per_q) {
      if (vals.size() != nt)
        throw std::runtime_error(path + ": block series '" + key.first +
                                 "' at q = " + std::to_string(q) +
                                 " does not cover every instant");
      bs.by_block[static_cast<std::size_t>(q - q_lo)] = std::move(vals);
    }
    series.blocks.push_back(std::move(bs));
  }
  return series;
}

void write_report_csv(const FunctionalReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report file '" + path + "'");
  out << "t,X_p1,X_p2,Y_s,Z_p1,Z_p2,U_tilde,r_det,r_divT,r_compat\n";
  auto at = [](const std::vector<double>& v, std::size_t i) {
    return i < v.size() ? v[i] : 0.0;
  };
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    out << fmt(report.times[i]) << ',' << fmt(at(report.x_p1, i)) << ','
        << fmt(at(report.x_p2, i)) << ',' << fmt(at(report.y_s, i)) << ','
        << fmt(at(report.z_p1, i)) << ',' << fmt(at(report.z_p2, i)) << ','
        << fmt(at(report.u_tilde, i)) << ',' << fmt(at(report.r_det, i)) << ','
        << fmt(at(report.r_divT, i)) << ',' << fmt(at(report.r_compat, i))
        << "\n";
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace vefl
