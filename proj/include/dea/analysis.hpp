#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dea/dataset.hpp"
#include "dea/models.hpp"

// Scoring and frontier classification. All solves run on a row-normalized
// copy of the panel (each input/output row divided by its maximum across
// DMUs) to keep the tableau well conditioned; efficiency scores are
// units-invariant, and reported weights are mapped back to original units.

namespace dea::analysis {

// Tolerance for every "equals 1" / "equals 0" decision: Lemma-style
// efficiency tests, relation-table cells and the efficient flag. One knob,
// comfortably above the solver's 1e-7 duality tolerance.
inline constexpr double kDefaultTol = 1e-6;

struct CcrResult {
    double theta_star = 0.0;        // efficiency score in (0, 1]
    std::vector<double> u;          // input weights, original units
    std::vector<double> v;          // output weights, original units
    bool efficient = false;         // theta_star >= 1 - tol
};

struct SuperResult {
    double t_star = 0.0;            // second-best efficiency level
    std::vector<double> u_tilde;    // input weights with x_o.u~ = t*
    std::vector<double> v;          // output weights with y_o.v = 1
    std::vector<double> u_scaled;   // u~ / t*: DMU o scores exactly 1
    std::vector<std::size_t> second_best; // argmax ratio over i != o, ascending
};

// Combined result of an envelopment program and its slack-maximization
// stage. lambda has length n for the CCR form and n-1 for the
// super-efficiency form (target DMU excluded, ascending index order).
// Slacks are reported in original data units.
struct EnvelopmentResult {
    double eta = 0.0;
    std::vector<double> lambda;
    std::vector<double> slack_in;
    std::vector<double> slack_out;
    double slack_objective = 0.0;
};

enum class EfficiencyCell {
    extreme_efficient,
    efficient_non_extreme,
    weakly_efficient,
    inefficient,
};

std::string_view to_string(EfficiencyCell c);

// The five quantities the relation table consults.
struct Quadruple {
    double opt_c = 0.0;      // Opt of the CCR envelopment program
    double opt_csm = 0.0;    // Opt of its slack maximization
    bool probe_unique = false;
    double probe_value = 0.0;
    double opt_s = 0.0;      // Opt of the super-efficiency envelopment program
    double opt_ssm = 0.0;    // Opt of its slack maximization
};

struct EfficiencyClass {
    EfficiencyCell cell;
    Quadruple quadruple;
};

// One forbidden cell of the relation table, and by how much the quadruple
// stays clear of it (margin > 0 means the cell's conditions fail by at least
// that much).
struct ForbiddenCellCheck {
    std::string relation; // R0..R6
    std::string cell;     // human-readable cell description
    double margin = 0.0;
    bool violated = false;
};

struct Table1Report {
    Quadruple quadruple;
    int row = -1; // 0: CSM=0 & unique, 1: CSM=0 & not unique, 2: CSM>0, 3: C>1
    int col = -1; // 0: S>1, 1: S=1 & SSM>0, 2: S=1 & SSM=0, 3: S<1
    bool admissible = false;
    EfficiencyCell cell = EfficiencyCell::inefficient; // valid when admissible
    std::vector<ForbiddenCellCheck> forbidden;
};

// CCR efficiency score with one optimal weight vertex. Only the score is
// unique; weights are reported as solved and are generally not.
CcrResult ccr_score(const Dataset& d, std::size_t o, double tol = kDefaultTol);

// Second-best minimization via the super-efficiency multiplier program.
// Requires n >= 2. second_best collects every DMU attaining the maximal
// ratio under (u~, v) within tol.
SuperResult super_score(const Dataset& d, std::size_t o, double tol = kDefaultTol);

// Envelopment solves plus their slack stages.
EnvelopmentResult ccr_envelopment(const Dataset& d, std::size_t o);
EnvelopmentResult super_envelopment(const Dataset& d, std::size_t o);

// Ratio (y_i.v)/(x_i.u) per DMU under fixed weights; no normalization.
// Requires u, v >= 0 and u != 0.
std::vector<double> evaluate_ratios(const Dataset& d, std::span<const double> u,
                                    std::span<const double> v);

// Assigns the DMU to its relation-table cell. All five deciding quantities
// are always computed; a quadruple outside every admissible cell means a
// solver bug and raises SolverError.
EfficiencyClass classify(const Dataset& d, std::size_t o, double tol = kDefaultTol);

// Locates the quadruple in the relation table and reports the margins by
// which every forbidden cell is avoided.
Table1Report check_table1_consistency(const Dataset& d, std::size_t o, double tol = kDefaultTol);

struct DmuAnalysis {
    std::string name;
    std::optional<CcrResult> ccr;
    std::optional<SuperResult> super;
    std::optional<EfficiencyClass> cls;
    std::string error; // nonempty if this DMU's analysis failed
};

struct FullReport {
    std::vector<DmuAnalysis> entries;   // one per DMU, ordered by index
    std::size_t efficient_count = 0;    // DMUs with theta* >= 1 - tol
};

// Per-DMU scoring and classification over the whole panel; per-DMU errors
// are captured in the entry instead of aborting the run. Requires n >= 2.
FullReport full_report(const Dataset& d, double tol = kDefaultTol);

} // namespace dea::analysis
