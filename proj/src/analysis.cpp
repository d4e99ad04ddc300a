#include "dea/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "dea/kernels.hpp"
#include "dea/linprog.hpp"

namespace dea::analysis {

std::string_view to_string(EfficiencyCell c) {
    switch (c) {
    case EfficiencyCell::extreme_efficient:
        return "extreme-efficient";
    case EfficiencyCell::efficient_non_extreme:
        return "efficient-non-extreme";
    case EfficiencyCell::weakly_efficient:
        return "weakly-efficient";
    case EfficiencyCell::inefficient:
        return "inefficient";
    }
    return "unknown";
}

namespace {

struct Scaled {
    Dataset data;
    std::vector<double> sx; // per input row: max over DMUs
    std::vector<double> sy; // per output row
};

Scaled scale_rows(const Dataset& d) {
    Scaled s{d, {}, {}};
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();
    s.sx.assign(l, 0.0);
    s.sy.assign(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < l; ++k) {
            s.sx[k] = std::max(s.sx[k], d.inputs(i, k));
        }
        for (std::size_t r = 0; r < m; ++r) {
            s.sy[r] = std::max(s.sy[r], d.outputs(i, r));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < l; ++k) {
            s.data.inputs(i, k) = d.inputs(i, k) / s.sx[k];
        }
        for (std::size_t r = 0; r < m; ++r) {
            s.data.outputs(i, r) = d.outputs(i, r) / s.sy[r];
        }
    }
    return s;
}

LpSolution solve_model(const LinearProgram& lp, models::ModelKind kind, const Dataset& d,
                       std::size_t o) {
    LpSolution sol;
    try {
        sol = solve(lp);
    } catch (const SolverError& e) {
        throw SolverError(std::string(models::to_string(kind)) + " for DMU " +
                          std::to_string(o + 1) + " (" + d.names[o] + "): " + e.what());
    }
    if (sol.status != SolveStatus::optimal) {
        // Every model here is feasible and bounded on strictly positive data.
        throw SolverError(std::string(models::to_string(kind)) + " for DMU " +
                          std::to_string(o + 1) + " (" + d.names[o] +
                          ") ended " + std::string(to_string(sol.status)) +
                          "; positive data admits an optimum");
    }
    return sol;
}

} // namespace

CcrResult ccr_score(const Dataset& d, std::size_t o, double tol) {
    check_dmu_index(d, o);
    const Scaled s = scale_rows(d);
    const std::size_t l = d.input_count(), m = d.output_count();

    const LpSolution sol = solve_model(models::build_ccr_multiplier(s.data, o),
                                       models::ModelKind::ccr_multiplier, d, o);
    CcrResult res;
    res.theta_star = sol.objective_value;
    res.u.resize(l);
    res.v.resize(m);
    for (std::size_t k = 0; k < l; ++k) {
        res.u[k] = sol.primal[k] / s.sx[k];
    }
    for (std::size_t r = 0; r < m; ++r) {
        res.v[r] = sol.primal[l + r] / s.sy[r];
    }
    res.efficient = res.theta_star >= 1.0 - tol;
    return res;
}

SuperResult super_score(const Dataset& d, std::size_t o, double tol) {
    check_dmu_index(d, o);
    const Scaled s = scale_rows(d);
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();

    const LpSolution sol = solve_model(models::build_super_multiplier(s.data, o),
                                       models::ModelKind::super_multiplier, d, o);
    SuperResult res;
    res.t_star = sol.objective_value;
    if (res.t_star < 1e-12) {
        throw SolverError("super-efficiency level for DMU " + std::to_string(o + 1) +
                          " is degenerate (t* = " + std::to_string(res.t_star) + ")");
    }
    res.u_tilde.resize(l);
    res.v.resize(m);
    res.u_scaled.resize(l);
    for (std::size_t k = 0; k < l; ++k) {
        res.u_tilde[k] = sol.primal[k] / s.sx[k];
        res.u_scaled[k] = res.u_tilde[k] / res.t_star;
    }
    for (std::size_t r = 0; r < m; ++r) {
        res.v[r] = sol.primal[l + r] / s.sy[r];
    }

    double best = 0.0;
    std::vector<double> ratio(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == o) {
            continue;
        }
        ratio[i] = kernels::dot(d.output_vec(i), res.v) / kernels::dot(d.input_vec(i), res.u_tilde);
        best = std::max(best, ratio[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i != o && ratio[i] >= best - tol) {
            res.second_best.push_back(i);
        }
    }
    return res;
}

EnvelopmentResult ccr_envelopment(const Dataset& d, std::size_t o) {
    check_dmu_index(d, o);
    const Scaled s = scale_rows(d);
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();

    const LpSolution env = solve_model(models::build_ccr_envelopment(s.data, o),
                                       models::ModelKind::ccr_envelopment, d, o);
    const double eta_star = env.objective_value;
    const LpSolution slack = solve_model(models::build_csm(s.data, o, eta_star),
                                         models::ModelKind::csm, d, o);
    EnvelopmentResult res;
    res.eta = eta_star;
    res.lambda.assign(slack.primal.begin(), slack.primal.begin() + static_cast<std::ptrdiff_t>(n));
    res.slack_in.resize(l);
    res.slack_out.resize(m);
    res.slack_objective = 0.0;
    for (std::size_t k = 0; k < l; ++k) {
        res.slack_in[k] = slack.primal[n + k] * s.sx[k];
        res.slack_objective += res.slack_in[k];
    }
    for (std::size_t r = 0; r < m; ++r) {
        res.slack_out[r] = slack.primal[n + l + r] * s.sy[r];
        res.slack_objective += res.slack_out[r];
    }
    return res;
}

EnvelopmentResult super_envelopment(const Dataset& d, std::size_t o) {
    check_dmu_index(d, o);
    const Scaled s = scale_rows(d);
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();

    const LpSolution env = solve_model(models::build_super_envelopment(s.data, o),
                                       models::ModelKind::super_envelopment, d, o);
    const double eta_star = env.objective_value;
    const LpSolution slack = solve_model(models::build_ssm(s.data, o, eta_star),
                                         models::ModelKind::ssm, d, o);
    EnvelopmentResult res;
    res.eta = eta_star;
    res.lambda.assign(slack.primal.begin(),
                      slack.primal.begin() + static_cast<std::ptrdiff_t>(n - 1));
    res.slack_in.resize(l);
    res.slack_out.resize(m);
    res.slack_objective = 0.0;
    for (std::size_t k = 0; k < l; ++k) {
        res.slack_in[k] = slack.primal[(n - 1) + k] * s.sx[k];
        res.slack_objective += res.slack_in[k];
    }
    for (std::size_t r = 0; r < m; ++r) {
        res.slack_out[r] = slack.primal[(n - 1) + l + r] * s.sy[r];
        res.slack_objective += res.slack_out[r];
    }
    return res;
}

std::vector<double> evaluate_ratios(const Dataset& d, std::span<const double> u,
                                    std::span<const double> v) {
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();
    if (u.size() != l) {
        throw ValidationError("weight vector u has " + std::to_string(u.size()) +
                              " entries, expected " + std::to_string(l));
    }
    if (v.size() != m) {
        throw ValidationError("weight vector v has " + std::to_string(v.size()) +
                              " entries, expected " + std::to_string(m));
    }
    bool u_nonzero = false;
    for (std::size_t k = 0; k < l; ++k) {
        if (!std::isfinite(u[k]) || u[k] < 0.0) {
            throw ValidationError("input weight u[" + std::to_string(k + 1) +
                                  "] must be finite and nonnegative");
        }
        u_nonzero = u_nonzero || u[k] > 0.0;
    }
    for (std::size_t r = 0; r < m; ++r) {
        if (!std::isfinite(v[r]) || v[r] < 0.0) {
            throw ValidationError("output weight v[" + std::to_string(r + 1) +
                                  "] must be finite and nonnegative");
        }
    }
    if (!u_nonzero) {
        throw ValidationError("input weight vector u must not be all zero");
    }

    std::vector<double> ratios(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double den = kernels::dot(d.input_vec(i), u);
        if (den <= 0.0) {
            throw ValidationError("ratio denominator x.u vanishes for DMU " +
                                  std::to_string(i + 1) + " (" + d.names[i] + ")");
        }
        ratios[i] = kernels::dot(d.output_vec(i), v) / den;
    }
    return ratios;
}

namespace {

Quadruple compute_quadruple(const Dataset& d, std::size_t o, double tol) {
    const EnvelopmentResult c = ccr_envelopment(d, o);
    const EnvelopmentResult s = super_envelopment(d, o);
    const Scaled sc = scale_rows(d);
    const LpSolution probe = solve_model(models::build_uniqueness_probe(sc.data, o),
                                         models::ModelKind::uniqueness_probe, d, o);
    Quadruple q;
    q.opt_c = c.eta;
    q.opt_csm = c.slack_objective;
    q.probe_value = probe.objective_value;
    q.probe_unique = probe.objective_value <= tol;
    q.opt_s = s.eta;
    q.opt_ssm = s.slack_objective;
    return q;
}

int table_row(const Quadruple& q, double tol) {
    if (q.opt_c > 1.0 + tol) {
        return 3;
    }
    if (std::abs(q.opt_c - 1.0) <= tol) {
        if (q.opt_csm > tol) {
            return 2;
        }
        return q.probe_unique ? 0 : 1;
    }
    return -1; // opt_c < 1 never happens: the target combines itself
}

int table_col(const Quadruple& q, double tol) {
    if (q.opt_s > 1.0 + tol) {
        return 0;
    }
    if (std::abs(q.opt_s - 1.0) <= tol) {
        return q.opt_ssm > tol ? 1 : 2;
    }
    return 3;
}

// Admissible diagonal of the relation table.
constexpr int kAdmissibleCol[4] = {3, 2, 1, 0};

EfficiencyCell cell_for_row(int row) {
    switch (row) {
    case 0:
        return EfficiencyCell::extreme_efficient;
    case 1:
        return EfficiencyCell::efficient_non_extreme;
    case 2:
        return EfficiencyCell::weakly_efficient;
    default:
        return EfficiencyCell::inefficient;
    }
}

const char* kRowText[4] = {
    "C=1, CSM=0, unique",
    "C=1, CSM=0, non-unique",
    "C=1, CSM>0",
    "C>1",
};
const char* kColText[4] = {"S>1", "S=1, SSM>0", "S=1, SSM=0", "S<1"};

// Relation labels of the forbidden cells, by (row, col).
const char* kRelation[4][4] = {
    {"R0", "R1", "R2", ""},
    {"R0", "R3", "", "R4"},
    {"R0", "", "R5", "R6"},
    {"", "R0", "R0", "R0"},
};

double deficit_eq_one(double x, double tol) { return std::max(0.0, std::abs(x - 1.0) - tol); }
double deficit_gt(double x, double bound, double tol) { return std::max(0.0, bound + tol - x); }
double deficit_le(double x, double bound, double tol) { return std::max(0.0, x - bound - tol); }
double deficit_lt_one(double x, double tol) { return std::max(0.0, x - (1.0 - tol)); }

double row_deficit(const Quadruple& q, int row, double tol) {
    switch (row) {
    case 0:
        return std::max({deficit_eq_one(q.opt_c, tol), deficit_le(q.opt_csm, 0.0, tol),
                         deficit_le(q.probe_value, 0.0, tol)});
    case 1:
        return std::max({deficit_eq_one(q.opt_c, tol), deficit_le(q.opt_csm, 0.0, tol),
                         deficit_gt(q.probe_value, 0.0, tol)});
    case 2:
        return std::max(deficit_eq_one(q.opt_c, tol), deficit_gt(q.opt_csm, 0.0, tol));
    default:
        return deficit_gt(q.opt_c, 1.0, tol);
    }
}

double col_deficit(const Quadruple& q, int col, double tol) {
    switch (col) {
    case 0:
        return deficit_gt(q.opt_s, 1.0, tol);
    case 1:
        return std::max(deficit_eq_one(q.opt_s, tol), deficit_gt(q.opt_ssm, 0.0, tol));
    case 2:
        return std::max(deficit_eq_one(q.opt_s, tol), deficit_le(q.opt_ssm, 0.0, tol));
    default:
        return deficit_lt_one(q.opt_s, tol);
    }
}

} // namespace

EfficiencyClass classify(const Dataset& d, std::size_t o, double tol) {
    if (d.dmu_count() < 2) {
        throw ValidationError("classification needs at least 2 DMUs");
    }
    const Quadruple q = compute_quadruple(d, o, tol);
    const int row = table_row(q, tol);
    const int col = table_col(q, tol);
    if (row < 0 || kAdmissibleCol[row] != col) {
        throw SolverError("DMU " + std::to_string(o + 1) + " (" + d.names[o] +
                          ") landed in a forbidden relation-table cell: Opt(C)=" +
                          std::to_string(q.opt_c) + " Opt(CSM)=" + std::to_string(q.opt_csm) +
                          " probe=" + std::to_string(q.probe_value) +
                          " Opt(S)=" + std::to_string(q.opt_s) +
                          " Opt(SSM)=" + std::to_string(q.opt_ssm));
    }
    return {cell_for_row(row), q};
}

Table1Report check_table1_consistency(const Dataset& d, std::size_t o, double tol) {
    if (d.dmu_count() < 2) {
        throw ValidationError("relation-table check needs at least 2 DMUs");
    }
    Table1Report rep;
    rep.quadruple = compute_quadruple(d, o, tol);
    rep.row = table_row(rep.quadruple, tol);
    rep.col = table_col(rep.quadruple, tol);
    rep.admissible = rep.row >= 0 && kAdmissibleCol[rep.row] == rep.col;
    if (rep.admissible) {
        rep.cell = cell_for_row(rep.row);
    }
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (kAdmissibleCol[r] == c) {
                continue;
            }
            ForbiddenCellCheck check;
            check.relation = kRelation[r][c];
            check.cell = std::string(kRowText[r]) + "; " + kColText[c];
            check.margin = std::max(row_deficit(rep.quadruple, r, tol),
                                    col_deficit(rep.quadruple, c, tol));
            check.violated = check.margin <= 0.0;
            rep.forbidden.push_back(std::move(check));
        }
    }
    return rep;
}

FullReport full_report(const Dataset& d, double tol) {
    if (d.dmu_count() < 2) {
        throw ValidationError("full report needs at least 2 DMUs");
    }
    FullReport rep;
    rep.entries.resize(d.dmu_count());
    for (std::size_t o = 0; o < d.dmu_count(); ++o) {
        DmuAnalysis& entry = rep.entries[o];
        entry.name = d.names[o];
        try {
            entry.ccr = ccr_score(d, o, tol);
            entry.super = super_score(d, o, tol);
            entry.cls = classify(d, o, tol);
            if (entry.ccr->efficient) {
                ++rep.efficient_count;
            }
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
    }
    return rep;
}

} // namespace dea::analysis
