#include "veflab/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "veflab/dyadic.hpp"

namespace vefl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> add(std::vector<double> a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// row of per-block norms at a sample index
std::vector<double> row_at(const NormSeries& series, const char* field, double p,
                           std::size_t t_index) {
  const BlockSeries* bs = series.find(field, p);
  if (bs == nullptr)
    throw std::invalid_argument(std::string("functionals: series lacks field '") +
                                field + "'");
  std::vector<double> row(bs->by_block.size());
  for (std::size_t q = 0; q < row.size(); ++q) row[q] = bs->by_block[q][t_index];
  return row;
}

}  // namespace

std::vector<double> functional_Y(const NormSeries& series, double s, double r,
                                 double r0) {
  const int j0 = hybrid_cut_index(r0);
  const int lo = series.q_min, hi = series.q_max;
  auto cl = [&](double q_time, double reg, int a, int b) {
    return chemin_lerner_series(series, "E", 2.0, q_time, reg, r, a, b);
  };
  std::vector<double> y = cl(2.0, s + 1.0, lo, j0);       // low strain, L~2
  y = add(std::move(y), cl(1.0, s + 2.0, lo, j0));        // low strain, L~1
  y = add(std::move(y), cl(kInf, s + 1.0, lo, hi));       // whole strain, L~inf
  y = add(std::move(y), cl(1.0, s + 1.0, j0 + 1, hi));    // high strain, L~1
  y = add(std::move(y),
          chemin_lerner_series(series, "v", 2.0, kInf, s, r, lo, hi));
  y = add(std::move(y),
          chemin_lerner_series(series, "v", 2.0, 1.0, s + 2.0, r, lo, hi));
  return y;
}

std::vector<double> functional_Z(const NormSeries& series, double p, double r0,
                                 int dim) {
  const int j0 = hybrid_cut_index(r0);
  const int hi = series.q_max;
  const double np = static_cast<double>(dim) / p;
  std::vector<double> z =
      chemin_lerner_series(series, "E", p, kInf, np, 1.0, j0 + 1, hi);
  z = add(std::move(z), chemin_lerner_series(series, "E", p, 1.0, np, 1.0, j0 + 1, hi));
  z = add(std::move(z),
          chemin_lerner_series(series, "v", p, kInf, np - 1.0, 1.0, j0 + 1, hi));
  z = add(std::move(z),
          chemin_lerner_series(series, "v", p, 1.0, np + 1.0, 1.0, j0 + 1, hi));
  return z;
}

double initial_Y(const NormSeries& series, double s, double r, double r0) {
  const int j0 = hybrid_cut_index(r0);
  std::vector<double> e0 = row_at(series, "E", 2.0, 0);
  std::vector<double> v0 = row_at(series, "v", 2.0, 0);
  return besov_accumulate(e0, s, r, series.q_min, series.q_min, j0) +
         besov_accumulate(e0, s + 1.0, r, series.q_min, j0 + 1, series.q_max) +
         besov_accumulate(v0, s, r, series.q_min, series.q_min, series.q_max);
}

double initial_Z(const NormSeries& series, double p, double r0, int dim) {
  const int j0 = hybrid_cut_index(r0);
  const double np = static_cast<double>(dim) / p;
  std::vector<double> e0 = row_at(series, "E", p, 0);
  std::vector<double> v0 = row_at(series, "v", p, 0);
  return besov_accumulate(e0, np, 1.0, series.q_min, j0 + 1, series.q_max) +
         besov_accumulate(v0, np - 1.0, 1.0, series.q_min, j0 + 1, series.q_max);
}

FunctionalReport assemble_report(const NormSeries& series,
                                 const FunctionalParams& params) {
  if (series.times.empty())
    throw std::invalid_argument("assemble_report: empty series");
  FunctionalReport rep;
  rep.params = params;
  rep.times = series.times;

  // admissible window of the regularity index: s in (-1, N/2 - 1],
  // open at the right end unless r = 1
  double right = 0.5 * params.dim - 1.0;
  rep.s_window_warning =
      params.s <= -1.0 || (params.r == 1.0 ? params.s > right : params.s >= right);

  rep.y_s = functional_Y(series, params.s, params.r, params.r0);
  rep.z_p1 = functional_Z(series, params.p1, params.r0, params.dim);
  rep.z_p2 = functional_Z(series, params.p2, params.r0, params.dim);
  rep.x_p1 = add(rep.y_s, rep.z_p1);
  rep.x_p2 = add(rep.y_s, rep.z_p2);

  rep.y0 = initial_Y(series, params.s, params.r, params.r0);
  rep.z0_p1 = initial_Z(series, params.p1, params.r0, params.dim);
  rep.z0_p2 = initial_Z(series, params.p2, params.r0, params.dim);
  rep.x0_p1 = rep.y0 + rep.z0_p1;
  rep.x0_p2 = rep.y0 + rep.z0_p2;

  rep.u_tilde.assign(series.times.size(), 0.0);
  for (std::size_t i = 1; i < series.times.size(); ++i)
    rep.u_tilde[i] = rep.u_tilde[i - 1] +
                     0.5 * (series.grad_v_sup[i] + series.grad_v_sup[i - 1]) *
                         (series.times[i] - series.times[i - 1]);

  rep.r_det = series.r_det;
  rep.r_divT = series.r_divT;
  rep.r_compat = series.r_compat;
  return rep;
}

BoundednessVerdict boundedness_report(const FunctionalReport& report, double lambda1,
                                      double pass_ratio) {
  BoundednessVerdict v;
  double sup1 = 0.0, sup2 = 0.0;
  for (double x : report.x_p1) sup1 = std::max(sup1, x);
  for (double x : report.x_p2) sup2 = std::max(sup2, x);
  v.sup_x_p2 = sup2;
  v.hypothesis_ok = sup2 <= lambda1;
  if (report.x0_p1 <= 0.0 || report.x0_p2 <= 0.0) {
    v.rest_state = true;
    v.bounded = sup1 == 0.0 && sup2 == 0.0;
    return v;
  }
  v.ratio_p1 = sup1 / report.x0_p1;
  v.ratio_p2 = sup2 / report.x0_p2;
  v.bounded = v.ratio_p1 <= pass_ratio && v.ratio_p2 <= pass_ratio;
  return v;
}

}  // namespace vefl
