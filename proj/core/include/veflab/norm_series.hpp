#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "veflab/besov.hpp"

namespace vefl {

struct BlockSeries {
  std::string field;
  double p;
  // by_block[q - q_min][time_index]
  std::vector<std::vector<double>> by_block;
};

// Sampled per-block L^p norms over time for the tracked fields, plus
// the auxiliary scalar series recorded at the same instants.
struct NormSeries {
  int q_min = 0;
  int q_max = -1;
  std::vector<double> times;
  std::vector<BlockSeries> blocks;

  std::vector<double> grad_v_sup;
  std::vector<double> r_det, r_divT, r_compat, stress_gap;

  int block_count() const { return q_max - q_min + 1; }
  const BlockSeries* find(std::string_view field, double p) const;
  BlockSeries& require(std::string_view field, double p);
};

// append ||Delta_q f(t)||_{L^p} for every block and every p in ps to
// the series named `name`; the caller appends the matching time first
void append_block_norms(NormSeries& s, const DyadicPartition& part,
                        std::string_view name, const SpectralField& f,
                        const std::vector<double>& ps);

// || 2^{q reg_s} ||n_q||_{L^{q_time}(0,t_i)} ||_{l^r over q in [q_lo, q_hi]}
// per sample instant t_i. Trapezoid on n^{q_time}; q_time = inf is the
// running maximum. q_time < inf requires at least 2 samples.
std::vector<double> chemin_lerner_series(const NormSeries& s, std::string_view field,
                                         double p, double q_time, double reg_s, double r,
                                         int q_lo, int q_hi);

// final-time Chemin-Lerner norm over the full block range
double chemin_lerner_norm(const NormSeries& s, std::string_view field, double p,
                          double q_time, const BesovSpec& spec);

// l^r over blocks of 2^{q(reg_s+1)} min(r0, 2^q) ||n_q||_{L^1(0,T)} at p = 2
double hybrid_time_norm(const NormSeries& s, std::string_view field, double reg_s,
                        double r, double r0);

}  // namespace vefl
