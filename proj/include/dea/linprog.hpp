#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dea/error.hpp"

// Deterministic dense LP solver: two-phase primal simplex with Bland's rule.
// The problems in this toolkit have at most a few dozen variables, so the
// solver works on a dense tableau and keeps no factorization state.

namespace dea {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class VarBound { nonnegative, free };

struct Constraint {
    std::vector<double> coeffs;
    Relation rel = Relation::less_equal;
    double rhs = 0.0;
};

struct LinearProgram {
    Sense sense = Sense::maximize;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    // One entry per variable; empty means every variable is nonnegative.
    std::vector<VarBound> var_bounds;

    std::size_t var_count() const { return objective.size(); }
};

enum class SolveStatus { optimal, infeasible, unbounded };

std::string_view to_string(SolveStatus s);

struct LpSolution {
    SolveStatus status = SolveStatus::infeasible;
    // Defined only when status == optimal.
    double objective_value = 0.0;
    std::vector<double> primal; // one value per variable
    std::vector<double> dual;   // one multiplier per constraint
    int iterations = 0;
};

// Solver tolerances. Entries below kPivotTol are treated as zero; feasibility,
// optimality and the duality self-check use kFeasTol.
inline constexpr double kPivotTol = 1e-9;
inline constexpr double kFeasTol = 1e-7;
inline constexpr int kMaxSimplexIterations = 10000;

// Rejects malformed programs (dimension mismatch, non-finite entries) with
// ValidationError before solving. Throws SolverError if the iteration cap is
// hit or an internal self-check fails. Identical input yields bit-identical
// output.
//
// Dual multipliers follow the usual sign conventions: for a maximization,
// <= rows have nonnegative and >= rows nonpositive multipliers (reversed for
// a minimization); equality rows are unrestricted. The primal and dual
// objectives agree at the optimum, which solve() verifies itself.
LpSolution solve(const LinearProgram& lp);

// Throws ValidationError with the same diagnostics solve() would produce.
void validate(const LinearProgram& lp);

} // namespace dea
