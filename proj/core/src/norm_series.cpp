#include "veflab/norm_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "veflab/fft.hpp"
#include "veflab/ops.hpp"

namespace vefl {

const BlockSeries* NormSeries::find(std::string_view field, double p) const {
  for (const auto& b : blocks)
    if (b.field == field && b.p == p) return &b;
  return nullptr;
}

BlockSeries& NormSeries::require(std::string_view field, double p) {
  for (auto& b : blocks)
    if (b.field == field && b.p == p) return b;
  BlockSeries b;
  b.field = std::string(field);
  b.p = p;
  b.by_block.assign(block_count(), {});
  blocks.push_back(std::move(b));
  return blocks.back();
}

void append_block_norms(NormSeries& s, const DyadicPartition& part,
                        std::string_view name, const SpectralField& f,
                        const std::vector<double>& ps) {
  if (s.q_min != part.q_min() || s.q_max != part.q_max())
    throw std::invalid_argument("append_block_norms: series/partition block mismatch");
  for (int q = part.q_min(); q <= part.q_max(); ++q) {
    PhysicalField blk = inverse_transform(dyadic_block(part, f, q));
    for (double p : ps) s.require(name, p).by_block[q - part.q_min()].push_back(
        grid_lp_norm(blk, p));
  }
}

namespace {

// cumulative L^{q_time}(0, t_i) of one block's sample sequence
std::vector<double> time_lebesgue_prefix(const std::vector<double>& t,
                                         const std::vector<double>& n, double q_time) {
  std::vector<double> out(n.size());
  if (std::isinf(q_time)) {
    double m = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      m = std::max(m, n[i]);
      out[i] = m;
    }
    return out;
  }
  double acc = 0.0;
  out[0] = 0.0;
  for (std::size_t i = 1; i < n.size(); ++i) {
    double a = std::pow(n[i - 1], q_time);
    double b = std::pow(n[i], q_time);
    acc += 0.5 * (a + b) * (t[i] - t[i - 1]);
    out[i] = std::pow(acc, 1.0 / q_time);
  }
  return out;
}

}  // namespace

std::vector<double> chemin_lerner_series(const NormSeries& s, std::string_view field,
                                         double p, double q_time, double reg_s, double r,
                                         int q_lo, int q_hi) {
  if (!(q_time >= 1.0)) throw std::invalid_argument("chemin_lerner: q_time must be >= 1");
  if (!std::isinf(q_time) && s.times.size() < 2)
    throw std::invalid_argument("chemin_lerner: at least 2 samples required");
  const BlockSeries* b = s.find(field, p);
  if (!b) throw std::invalid_argument("chemin_lerner: no block series for this field/p");

  const std::size_t nt = s.times.size();
  std::vector<std::vector<double>> pref(s.block_count());
  for (int q = s.q_min; q <= s.q_max; ++q) {
    const auto& series = b->by_block[q - s.q_min];
    if (series.size() != nt)
      throw std::invalid_argument("chemin_lerner: ragged block series");
    pref[q - s.q_min] = time_lebesgue_prefix(s.times, series, q_time);
  }

  std::vector<double> out(nt);
  std::vector<double> tmp(s.block_count());
  for (std::size_t i = 0; i < nt; ++i) {
    for (int q = s.q_min; q <= s.q_max; ++q) tmp[q - s.q_min] = pref[q - s.q_min][i];
    out[i] = besov_accumulate(tmp, reg_s, r, s.q_min, q_lo, q_hi);
  }
  return out;
}

double chemin_lerner_norm(const NormSeries& s, std::string_view field, double p,
                          double q_time, const BesovSpec& spec) {
  auto series = chemin_lerner_series(s, field, p, q_time, spec.s, spec.r, s.q_min, s.q_max);
  if (series.empty()) throw std::invalid_argument("chemin_lerner: empty series");
  return series.back();
}

double hybrid_time_norm(const NormSeries& s, std::string_view field, double reg_s,
                        double r, double r0) {
  if (!(r0 > 0.0)) throw std::invalid_argument("hybrid_time_norm: r0 must be > 0");
  const BlockSeries* b = s.find(field, 2.0);
  if (!b) throw std::invalid_argument("hybrid_time_norm: p = 2 block series required");
  if (s.times.size() < 2)
    throw std::invalid_argument("hybrid_time_norm: at least 2 samples required");
  std::vector<double> weighted(s.block_count());
  for (int q = s.q_min; q <= s.q_max; ++q) {
    double l1 = time_lebesgue_prefix(s.times, b->by_block[q - s.q_min], 1.0).back();
    weighted[q - s.q_min] =
        std::exp2(q * (reg_s + 1.0)) * std::min(r0, std::exp2(q)) * l1;
  }
  // weights already applied; accumulate with s = 0
  return besov_accumulate(weighted, 0.0, r, s.q_min, s.q_min, s.q_max);
}

}  // namespace vefl
