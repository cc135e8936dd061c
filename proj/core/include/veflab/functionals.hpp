#pragma once

#include <vector>

#include "veflab/norm_series.hpp"

namespace vefl {

struct FunctionalParams {
  double s = 0.0;
  double r = 1.0;
  double p1 = 2.0;
  double p2 = 4.0;
  double r0 = 2.0;  // dyadic low/high threshold
  int dim = 2;
};

// The a-priori functionals assembled from a sampled block-norm series.
// x equals y + z at every instant by construction.
struct FunctionalReport {
  FunctionalParams params;
  std::vector<double> times;
  std::vector<double> y_s, z_p1, z_p2, x_p1, x_p2;
  std::vector<double> u_tilde;  // cumulative trapezoid of ||grad v||_inf
  double y0 = 0.0, z0_p1 = 0.0, z0_p2 = 0.0, x0_p1 = 0.0, x0_p2 = 0.0;
  bool s_window_warning = false;  // s outside the admissible range
  // residual series copied through for the report CSV
  std::vector<double> r_det, r_divT, r_compat;
};

// Y_s(t): low strain part in L~2(B^{s+1}) + L~1(B^{s+2}), whole strain
// in L~inf(B^{s+1}), high strain part in L~1(B^{s+1}), velocity in
// L~inf(B^s) + L~1(B^{s+2}), all at p = 2 with the l^r block sum and
// the low/high split at r0.
std::vector<double> functional_Y(const NormSeries& series, double s, double r,
                                 double r0);

// Z_p(t): high strain part in L~inf + L~1 of B^{N/p}_{p,1}, high
// velocity part in L~inf(B^{N/p-1}_{p,1}) + L~1(B^{N/p+1}_{p,1}).
std::vector<double> functional_Z(const NormSeries& series, double p, double r0,
                                 int dim);

// Initial-data versions: Y_{s,0} = ||E0_low||_{B^s} + ||E0_high||_{B^{s+1}}
// + ||v0||_{B^s} at p = 2; Z_{p,0} = ||E0_high||_{B^{N/p}_{p,1}} +
// ||v0_high||_{B^{N/p-1}_{p,1}}.
double initial_Y(const NormSeries& series, double s, double r, double r0);
double initial_Z(const NormSeries& series, double p, double r0, int dim);

FunctionalReport assemble_report(const NormSeries& series,
                                 const FunctionalParams& params);

struct BoundednessVerdict {
  bool rest_state = false;  // X_{p,0} = 0: ratios undefined
  double ratio_p1 = 0.0;    // sup_t X_p(t) / X_{p,0}
  double ratio_p2 = 0.0;
  double sup_x_p2 = 0.0;
  bool hypothesis_ok = false;  // X_{p2}(t) <= lambda1 throughout
  bool bounded = false;        // both ratios within pass_ratio
};

BoundednessVerdict boundedness_report(const FunctionalReport& report, double lambda1,
                                      double pass_ratio = 1.5);

}  // namespace vefl
