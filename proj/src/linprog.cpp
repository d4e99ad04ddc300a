#include "dea/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>

#include "dea/kernels.hpp"

namespace dea {

std::string_view to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::optimal:
        return "optimal";
    case SolveStatus::infeasible:
        return "infeasible";
    case SolveStatus::unbounded:
        return "unbounded";
    }
    return "unknown";
}

void validate(const LinearProgram& lp) {
    const std::size_t n = lp.var_count();
    if (n == 0) {
        throw ValidationError("linear program has no variables");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(lp.objective[j])) {
            throw ValidationError("objective coefficient " + std::to_string(j) + " is not finite");
        }
    }
    if (!lp.var_bounds.empty() && lp.var_bounds.size() != n) {
        throw ValidationError("var_bounds has " + std::to_string(lp.var_bounds.size()) +
                              " entries, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        const Constraint& c = lp.constraints[i];
        if (c.coeffs.size() != n) {
            throw ValidationError("constraint " + std::to_string(i) + " has " +
                                  std::to_string(c.coeffs.size()) + " coefficients, expected " +
                                  std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(c.coeffs[j])) {
                throw ValidationError("constraint " + std::to_string(i) + ", coefficient " +
                                      std::to_string(j) + " is not finite");
            }
        }
        if (!std::isfinite(c.rhs)) {
            throw ValidationError("constraint " + std::to_string(i) + " has non-finite rhs");
        }
    }
}

namespace {

constexpr std::ptrdiff_t kNone = -1;

// Standard form: maximize c.x subject to A x = b, x >= 0, b >= 0.
// Free variables are split into a difference of two nonnegative columns;
// rows with negative rhs are negated (their relation flips accordingly).
struct StandardForm {
    std::size_t rows = 0;
    std::size_t cols = 0;             // without rhs
    std::size_t first_artificial = 0; // columns >= this are artificial
    std::vector<double> a;            // row-major, clean copy kept for duals
    std::vector<double> b;
    std::vector<double> c;                  // phase-2 objective (0 on artificials)
    std::vector<std::size_t> pos_col;       // original var -> column
    std::vector<std::ptrdiff_t> neg_col;    // column of the negative part, or kNone
    std::vector<std::ptrdiff_t> slack_col;  // per row, or kNone
    std::vector<std::ptrdiff_t> art_col;    // per row, or kNone
    std::vector<double> row_sign;           // +1 / -1 per original constraint
    double sense_sign = 1.0;                // original objective = sense_sign * internal

    double at(std::size_t r, std::size_t col) const { return a[r * cols + col]; }
};

StandardForm standardize(const LinearProgram& lp) {
    const std::size_t n = lp.var_count();
    const std::size_t m = lp.constraints.size();

    StandardForm sf;
    sf.rows = m;
    sf.sense_sign = (lp.sense == Sense::minimize) ? -1.0 : 1.0;
    sf.pos_col.resize(n);
    sf.neg_col.assign(n, kNone);
    sf.slack_col.assign(m, kNone);
    sf.art_col.assign(m, kNone);
    sf.row_sign.assign(m, 1.0);

    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        sf.pos_col[j] = col++;
        if (!lp.var_bounds.empty() && lp.var_bounds[j] == VarBound::free) {
            sf.neg_col[j] = static_cast<std::ptrdiff_t>(col++);
        }
    }

    std::vector<Relation> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
        rel[i] = lp.constraints[i].rel;
        if (lp.constraints[i].rhs < 0.0) {
            sf.row_sign[i] = -1.0;
            if (rel[i] == Relation::less_equal) {
                rel[i] = Relation::greater_equal;
            } else if (rel[i] == Relation::greater_equal) {
                rel[i] = Relation::less_equal;
            }
        }
        if (rel[i] != Relation::equal) {
            sf.slack_col[i] = static_cast<std::ptrdiff_t>(col++);
        }
    }
    sf.first_artificial = col;
    for (std::size_t i = 0; i < m; ++i) {
        if (rel[i] != Relation::less_equal) {
            sf.art_col[i] = static_cast<std::ptrdiff_t>(col++);
        }
    }
    sf.cols = col;

    sf.a.assign(m * sf.cols, 0.0);
    sf.b.resize(m);
    sf.c.assign(sf.cols, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double cj = sf.sense_sign * lp.objective[j];
        sf.c[sf.pos_col[j]] = cj;
        if (sf.neg_col[j] != kNone) {
            sf.c[static_cast<std::size_t>(sf.neg_col[j])] = -cj;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint& con = lp.constraints[i];
        double* row = sf.a.data() + i * sf.cols;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = sf.row_sign[i] * con.coeffs[j];
            row[sf.pos_col[j]] = v;
            if (sf.neg_col[j] != kNone) {
                row[static_cast<std::size_t>(sf.neg_col[j])] = -v;
            }
        }
        if (sf.slack_col[i] != kNone) {
            row[static_cast<std::size_t>(sf.slack_col[i])] = (rel[i] == Relation::less_equal) ? 1.0 : -1.0;
        }
        if (sf.art_col[i] != kNone) {
            row[static_cast<std::size_t>(sf.art_col[i])] = 1.0;
        }
        sf.b[i] = sf.row_sign[i] * con.rhs;
    }
    return sf;
}

// Dense tableau with the reduced-cost row stored as the last row.
// Invariant: t[r][basis[r]] = 1 and the basis columns form an identity.
class Tableau {
  public:
    explicit Tableau(const StandardForm& sf)
        : ncols_(sf.cols), stride_(sf.cols + 1), nrows_(sf.rows) {
        t_.assign((nrows_ + 1) * stride_, 0.0);
        basis_.assign(nrows_, 0);
        orig_row_.resize(nrows_);
        enterable_.assign(ncols_, 1);
        for (std::size_t r = 0; r < nrows_; ++r) {
            std::copy_n(sf.a.data() + r * sf.cols, sf.cols, row(r).data());
            rhs(r) = sf.b[r];
            orig_row_[r] = r;
            basis_[r] = (sf.slack_col[r] != kNone && sf.art_col[r] == kNone)
                            ? static_cast<std::size_t>(sf.slack_col[r])
                            : static_cast<std::size_t>(sf.art_col[r]);
        }
    }

    std::size_t rows() const { return nrows_; }
    std::size_t cols() const { return ncols_; }
    std::span<double> row(std::size_t r) { return {t_.data() + r * stride_, stride_}; }
    std::span<double> zrow() { return row(nrows_); }
    double at(std::size_t r, std::size_t c) const { return t_[r * stride_ + c]; }
    double& at(std::size_t r, std::size_t c) { return t_[r * stride_ + c]; }
    double& rhs(std::size_t r) { return t_[r * stride_ + ncols_]; }
    double objective_value() { return t_[nrows_ * stride_ + ncols_]; }
    std::size_t basis(std::size_t r) const { return basis_[r]; }
    std::size_t orig_row(std::size_t r) const { return orig_row_[r]; }
    void ban_column(std::size_t c) { enterable_[c] = 0; }

    void set_objective(std::span<const double> c) {
        std::span<double> z = zrow();
        for (std::size_t j = 0; j < ncols_; ++j) {
            z[j] = -c[j];
        }
        z[ncols_] = 0.0;
        for (std::size_t r = 0; r < nrows_; ++r) {
            const double cb = c[basis_[r]];
            if (cb != 0.0) {
                kernels::axpy_minus(z, row(r), -cb); // z += cb * row
            }
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const double p = at(pr, pc);
        kernels::scale(row(pr), 1.0 / p);
        at(pr, pc) = 1.0;
        for (std::size_t r = 0; r <= nrows_; ++r) {
            if (r == pr) {
                continue;
            }
            const double f = at(r, pc);
            if (f != 0.0) {
                kernels::axpy_minus(row(r), row(pr), f);
                at(r, pc) = 0.0;
            }
        }
        basis_[pr] = pc;
    }

    enum class RunResult { optimal, unbounded };

    // Bland's rule: entering = lowest eligible column, leaving = minimum
    // ratio with ties broken by the lowest basic variable index.
    RunResult run(int& iterations) {
        for (;;) {
            std::ptrdiff_t pc = kNone;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (enterable_[j] && at(nrows_, j) < -kFeasTol) {
                    pc = static_cast<std::ptrdiff_t>(j);
                    break;
                }
            }
            if (pc == kNone) {
                return RunResult::optimal;
            }
            std::ptrdiff_t pr = kNone;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < nrows_; ++r) {
                const double arc = at(r, static_cast<std::size_t>(pc));
                if (arc > kPivotTol) {
                    const double ratio = rhs(r) / arc;
                    if (pr == kNone || ratio < best ||
                        (ratio == best && basis_[r] < basis_[static_cast<std::size_t>(pr)])) {
                        pr = static_cast<std::ptrdiff_t>(r);
                        best = ratio;
                    }
                }
            }
            if (pr == kNone) {
                return RunResult::unbounded;
            }
            if (++iterations > kMaxSimplexIterations) {
                throw SolverError("simplex iteration cap exceeded (" +
                                  std::to_string(kMaxSimplexIterations) + ")");
            }
            pivot(static_cast<std::size_t>(pr), static_cast<std::size_t>(pc));
        }
    }

    // End of phase 1: pivot artificial variables out of the basis where
    // possible; rows where no real column has a nonzero entry are redundant
    // and get removed.
    void drive_out_artificials(std::size_t first_artificial, int& iterations) {
        std::vector<char> dead(nrows_, 0);
        for (std::size_t r = 0; r < nrows_; ++r) {
            if (basis_[r] < first_artificial) {
                continue;
            }
            std::ptrdiff_t pc = kNone;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (std::abs(at(r, j)) > kPivotTol) {
                    pc = static_cast<std::ptrdiff_t>(j);
                    break;
                }
            }
            if (pc == kNone) {
                dead[r] = 1;
                continue;
            }
            if (++iterations > kMaxSimplexIterations) {
                throw SolverError("simplex iteration cap exceeded during drive-out");
            }
            pivot(r, static_cast<std::size_t>(pc));
        }
        if (std::find(dead.begin(), dead.end(), 1) == dead.end()) {
            return;
        }
        std::vector<double> nt;
        nt.reserve(t_.size());
        std::vector<std::size_t> nbasis;
        std::vector<std::size_t> norig;
        for (std::size_t r = 0; r < nrows_; ++r) {
            if (dead[r]) {
                continue;
            }
            nt.insert(nt.end(), t_.begin() + static_cast<std::ptrdiff_t>(r * stride_),
                      t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * stride_));
            nbasis.push_back(basis_[r]);
            norig.push_back(orig_row_[r]);
        }
        nt.insert(nt.end(), stride_, 0.0); // fresh z row, rebuilt by set_objective
        nrows_ = nbasis.size();
        t_ = std::move(nt);
        basis_ = std::move(nbasis);
        orig_row_ = std::move(norig);
    }

  private:
    std::size_t ncols_;
    std::size_t stride_;
    std::size_t nrows_;
    std::vector<double> t_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> orig_row_;
    std::vector<char> enterable_;
};

// Solve M y = rhs by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(std::vector<double> m, std::vector<double> rhs) {
    const std::size_t n = rhs.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m[perm[k] * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(m[perm[i] * n + k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= kPivotTol * 1e-3) {
            throw SolverError("singular basis while extracting duals");
        }
        std::swap(perm[k], perm[piv]);
        const double pv = m[perm[k] * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m[perm[i] * n + k] / pv;
            if (f != 0.0) {
                for (std::size_t j = k; j < n; ++j) {
                    m[perm[i] * n + j] -= f * m[perm[k] * n + j];
                }
                rhs[perm[i]] -= f * rhs[perm[k]];
            }
        }
    }
    std::vector<double> y(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = rhs[perm[k]];
        for (std::size_t j = k + 1; j < n; ++j) {
            s -= m[perm[k] * n + j] * y[j];
        }
        y[k] = s / m[perm[k] * n + k];
    }
    return y;
}

std::vector<double> extract_duals(const LinearProgram& lp, const StandardForm& sf, const Tableau& tab) {
    const std::size_t nr = tab.rows();
    std::vector<double> bt(nr * nr);
    std::vector<double> cb(nr);
    for (std::size_t k = 0; k < nr; ++k) {
        for (std::size_t i = 0; i < nr; ++i) {
            bt[k * nr + i] = sf.at(tab.orig_row(i), tab.basis(k));
        }
        cb[k] = sf.c[tab.basis(k)];
    }
    std::vector<double> y = nr > 0 ? solve_dense(std::move(bt), std::move(cb)) : std::vector<double>{};

    std::vector<double> dual(lp.constraints.size(), 0.0);
    for (std::size_t i = 0; i < nr; ++i) {
        const std::size_t orig = tab.orig_row(i);
        dual[orig] = sf.sense_sign * sf.row_sign[orig] * y[i];
    }
    return dual;
}

void self_check(const LinearProgram& lp, const LpSolution& sol) {
    // Primal feasibility of every original constraint.
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        const Constraint& con = lp.constraints[i];
        const double lhs = kernels::dot(con.coeffs, sol.primal);
        const double tol = kFeasTol * std::max({1.0, std::abs(lhs), std::abs(con.rhs)});
        const double diff = lhs - con.rhs;
        const bool ok = (con.rel == Relation::less_equal && diff <= tol) ||
                        (con.rel == Relation::greater_equal && diff >= -tol) ||
                        (con.rel == Relation::equal && std::abs(diff) <= tol);
        if (!ok) {
            throw SolverError("optimal point violates constraint " + std::to_string(i) +
                              " by " + std::to_string(diff));
        }
    }
    // Strong duality.
    double dual_obj = 0.0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        dual_obj += sol.dual[i] * lp.constraints[i].rhs;
    }
    const double gap = std::abs(dual_obj - sol.objective_value);
    if (gap > kFeasTol * std::max({1.0, std::abs(dual_obj), std::abs(sol.objective_value)})) {
        throw SolverError("duality gap " + std::to_string(gap) + " exceeds tolerance");
    }
    // Dual sign conventions.
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        const double y = sol.dual[i];
        const double slack = kFeasTol * std::max(1.0, std::abs(y));
        bool ok = true;
        if (lp.constraints[i].rel == Relation::less_equal) {
            ok = (lp.sense == Sense::maximize) ? y >= -slack : y <= slack;
        } else if (lp.constraints[i].rel == Relation::greater_equal) {
            ok = (lp.sense == Sense::maximize) ? y <= slack : y >= -slack;
        }
        if (!ok) {
            throw SolverError("dual multiplier " + std::to_string(i) + " breaks sign convention");
        }
    }
}

} // namespace

LpSolution solve(const LinearProgram& lp) {
    validate(lp);
    const StandardForm sf = standardize(lp);
    Tableau tab(sf);

    LpSolution sol;
    sol.iterations = 0;

    const bool need_phase1 = sf.first_artificial < sf.cols;
    if (need_phase1) {
        std::vector<double> c1(sf.cols, 0.0);
        for (std::size_t j = sf.first_artificial; j < sf.cols; ++j) {
            c1[j] = -1.0;
        }
        tab.set_objective(c1);
        if (tab.run(sol.iterations) == Tableau::RunResult::unbounded) {
            throw SolverError("phase-1 objective reported unbounded");
        }
        if (tab.objective_value() < -kFeasTol) {
            sol.status = SolveStatus::infeasible;
            return sol;
        }
        tab.drive_out_artificials(sf.first_artificial, sol.iterations);
        for (std::size_t j = sf.first_artificial; j < sf.cols; ++j) {
            tab.ban_column(j);
        }
    }

    tab.set_objective(sf.c);
    if (tab.run(sol.iterations) == Tableau::RunResult::unbounded) {
        sol.status = SolveStatus::unbounded;
        return sol;
    }

    std::vector<double> x_std(sf.cols, 0.0);
    for (std::size_t r = 0; r < tab.rows(); ++r) {
        double v = tab.rhs(r);
        if (v < 0.0 && v > -kFeasTol) {
            v = 0.0;
        }
        x_std[tab.basis(r)] = v;
    }
    sol.status = SolveStatus::optimal;
    sol.primal.resize(lp.var_count());
    for (std::size_t j = 0; j < lp.var_count(); ++j) {
        double v = x_std[sf.pos_col[j]];
        if (sf.neg_col[j] != kNone) {
            v -= x_std[static_cast<std::size_t>(sf.neg_col[j])];
        }
        sol.primal[j] = v;
    }
    sol.objective_value = kernels::dot(lp.objective, sol.primal);
    sol.dual = extract_duals(lp, sf, tab);
    self_check(lp, sol);
    return sol;
}

} // namespace dea
