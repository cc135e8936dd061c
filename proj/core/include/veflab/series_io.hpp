#pragma once

#include <string>

#include "veflab/functionals.hpp"
#include "veflab/norm_series.hpp"

namespace vefl {

// Block-norm series CSV, header `t,q,field,p,norm`. One row per
// (time, block, field, p); the auxiliary scalar series (gradv, r_det,
// r_divT, r_compat, stressgap) ride along with q = 0 and p = 0.
// Doubles are printed with %.17g so a write/read round trip is
// bit-exact.
void write_block_series_csv(const NormSeries& series, const std::string& path);
NormSeries read_block_series_csv(const std::string& path);

// Functional report CSV, header
// `t,X_p1,X_p2,Y_s,Z_p1,Z_p2,U_tilde,r_det,r_divT,r_compat`.
void write_report_csv(const FunctionalReport& report, const std::string& path);

}  // namespace vefl
