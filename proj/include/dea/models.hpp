#pragma once

#include <string_view>

#include "dea/dataset.hpp"
#include "dea/linprog.hpp"

// Builders translating (dataset, target DMU) into the toolkit's linear
// programs. Each builder documents its fixed variable and row ordering so
// primal solutions can be unpacked deterministically.
//
// Weight-space ("multiplier") programs optimize over input weights u and
// output weights v; intensity-space ("envelopment") programs optimize over
// peer combinations lambda. The super-efficiency programs exclude the target
// DMU from the reference set; their intensity index j runs over DMUs != o in
// ascending order (j < o keeps its index, j > o shifts down by one).

namespace dea::models {

enum class ModelKind {
    ccr_multiplier,
    ccr_envelopment,
    csm, // slack maximization at the CCR envelopment optimum
    super_multiplier,
    super_envelopment,
    ssm, // slack maximization at the super-efficiency optimum
    uniqueness_probe,
};

std::string_view to_string(ModelKind k);

// maximize y_o.v  s.t.  x_o.u = 1,  y_i.v <= x_i.u for every DMU i,  u,v >= 0
// Variables: (u_1..u_l, v_1..v_m). Rows: n ratio rows (i ascending), then the
// normalization equality.
LinearProgram build_ccr_multiplier(const Dataset& d, std::size_t o);

// maximize eta  s.t.  X lambda <= x_o,  Y lambda >= eta y_o,  lambda >= 0
// Variables: (eta, lambda_1..lambda_n). Rows: l input rows, then m output
// rows. eta is declared nonnegative: eta = 1, lambda = e_o is always
// feasible, so the sign restriction never cuts the optimum.
LinearProgram build_ccr_envelopment(const Dataset& d, std::size_t o);

// maximize 1.eps1 + 1.eps2  s.t.  X lambda + eps1 = x_o,
// Y lambda - eps2 = eta_star * y_o, all variables >= 0.
// Variables: (lambda_1..lambda_n, eps1_1..eps1_l, eps2_1..eps2_m); the target
// DMU stays in the reference set. Rows: l input balances, m output balances.
LinearProgram build_csm(const Dataset& d, std::size_t o, double eta_star);

// minimize x_o.u~  s.t.  y_o.v = 1,  y_i.v <= x_i.u~ for i != o,  u~,v >= 0
// The second-best level t_o is carried implicitly as x_o.u~ (nonnegative by
// u~ >= 0 and x_o > 0), so no free variable is needed.
// Variables: (u~_1..u~_l, v_1..v_m). Rows: n-1 ratio rows (i ascending,
// skipping o), then the output normalization equality.
LinearProgram build_super_multiplier(const Dataset& d, std::size_t o);

// maximize eta~  s.t.  X_-o lambda <= x_o,  Y_-o lambda >= eta~ y_o,
// lambda >= 0. Variables: (eta~, lambda over DMUs != o). Rows: l input rows,
// then m output rows. eta~ = 0, lambda = 0 is feasible, so declaring eta~
// nonnegative never cuts the optimum.
LinearProgram build_super_envelopment(const Dataset& d, std::size_t o);

// Slack maximization at the super-efficiency optimum eta_tilde_star; same
// layout as build_csm but with the target DMU excluded:
// variables (lambda over DMUs != o, eps1, eps2).
LinearProgram build_ssm(const Dataset& d, std::size_t o, double eta_tilde_star);

// maximize sum_{j != o} lambda_j  s.t.  X lambda = x_o,  Y lambda = y_o,
// lambda >= 0. Variables: (lambda_1..lambda_n). When the slack program's
// optimum is zero, its optima are exactly this feasible set, so a probe
// optimum of zero certifies that (lambda_o, lambda_-o) = (1, 0) is unique.
LinearProgram build_uniqueness_probe(const Dataset& d, std::size_t o);

} // namespace dea::models
