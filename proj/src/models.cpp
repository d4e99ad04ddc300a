#include "dea/models.hpp"

#include <cmath>

namespace dea::models {

std::string_view to_string(ModelKind k) {
    switch (k) {
    case ModelKind::ccr_multiplier:
        return "ccr-multiplier";
    case ModelKind::ccr_envelopment:
        return "ccr-envelopment";
    case ModelKind::csm:
        return "ccr-slack-maximization";
    case ModelKind::super_multiplier:
        return "super-multiplier";
    case ModelKind::super_envelopment:
        return "super-envelopment";
    case ModelKind::ssm:
        return "super-slack-maximization";
    case ModelKind::uniqueness_probe:
        return "uniqueness-probe";
    }
    return "unknown";
}

namespace {

void require_reference_set(const Dataset& d, std::size_t o) {
    check_dmu_index(d, o);
    if (d.dmu_count() < 2) {
        throw ValidationError("super-efficiency needs at least 2 DMUs: with a single DMU the "
                              "reference set for DMU " + std::to_string(o + 1) + " is empty");
    }
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(what) + " must be finite, got " + std::to_string(v));
    }
}

} // namespace

LinearProgram build_ccr_multiplier(const Dataset& d, std::size_t o) {
    check_dmu_index(d, o);
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();

    LinearProgram lp;
    lp.sense = Sense::maximize;
    lp.objective.assign(l + m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        lp.objective[l + r] = d.outputs(o, r);
    }
    lp.var_bounds.assign(l + m, VarBound::nonnegative);

    for (std::size_t i = 0; i < n; ++i) {
        Constraint row;
        row.coeffs.assign(l + m, 0.0);
        for (std::size_t k = 0; k < l; ++k) {
            row.coeffs[k] = -d.inputs(i, k);
        }
        for (std::size_t r = 0; r < m; ++r) {
            row.coeffs[l + r] = d.outputs(i, r);
        }
        row.rel = Relation::less_equal;
        row.rhs = 0.0;
        lp.constraints.push_back(std::move(row));
    }
    Constraint norm;
    norm.coeffs.assign(l + m, 0.0);
    for (std::size_t k = 0; k < l; ++k) {
        norm.coeffs[k] = d.inputs(o, k);
    }
    norm.rel = Relation::equal;
    norm.rhs = 1.0;
    lp.constraints.push_back(std::move(norm));
    return lp;
}

LinearProgram build_ccr_envelopment(const Dataset& d, std::size_t o) {
    check_dmu_index(d, o);
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();

    LinearProgram lp;
    lp.sense = Sense::maximize;
    lp.objective.assign(1 + n, 0.0);
    lp.objective[0] = 1.0;
    lp.var_bounds.assign(1 + n, VarBound::nonnegative);

    for (std::size_t k = 0; k < l; ++k) {
        Constraint row;
        row.coeffs.assign(1 + n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            row.coeffs[1 + j] = d.inputs(j, k);
        }
        row.rel = Relation::less_equal;
        row.rhs = d.inputs(o, k);
        lp.constraints.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < m; ++r) {
        Constraint row;
        row.coeffs.assign(1 + n, 0.0);
        row.coeffs[0] = d.outputs(o, r);
        for (std::size_t j = 0; j < n; ++j) {
            row.coeffs[1 + j] = -d.outputs(j, r);
        }
        row.rel = Relation::less_equal;
        row.rhs = 0.0;
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

LinearProgram build_csm(const Dataset& d, std::size_t o, double eta_star) {
    check_dmu_index(d, o);
    require_finite(eta_star, "eta_star");
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();
    const std::size_t nv = n + l + m;

    LinearProgram lp;
    lp.sense = Sense::maximize;
    lp.objective.assign(nv, 0.0);
    for (std::size_t k = 0; k < l + m; ++k) {
        lp.objective[n + k] = 1.0;
    }
    lp.var_bounds.assign(nv, VarBound::nonnegative);

    for (std::size_t k = 0; k < l; ++k) {
        Constraint row;
        row.coeffs.assign(nv, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            row.coeffs[j] = d.inputs(j, k);
        }
        row.coeffs[n + k] = 1.0; // eps1
        row.rel = Relation::equal;
        row.rhs = d.inputs(o, k);
        lp.constraints.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < m; ++r) {
        Constraint row;
        row.coeffs.assign(nv, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            row.coeffs[j] = d.outputs(j, r);
        }
        row.coeffs[n + l + r] = -1.0; // eps2
        row.rel = Relation::equal;
        row.rhs = eta_star * d.outputs(o, r);
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

LinearProgram build_super_multiplier(const Dataset& d, std::size_t o) {
    require_reference_set(d, o);
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();

    LinearProgram lp;
    lp.sense = Sense::minimize;
    lp.objective.assign(l + m, 0.0);
    for (std::size_t k = 0; k < l; ++k) {
        lp.objective[k] = d.inputs(o, k); // t_o = x_o.u~
    }
    lp.var_bounds.assign(l + m, VarBound::nonnegative);

    for (std::size_t i = 0; i < n; ++i) {
        if (i == o) {
            continue;
        }
        Constraint row;
        row.coeffs.assign(l + m, 0.0);
        for (std::size_t k = 0; k < l; ++k) {
            row.coeffs[k] = -d.inputs(i, k);
        }
        for (std::size_t r = 0; r < m; ++r) {
            row.coeffs[l + r] = d.outputs(i, r);
        }
        row.rel = Relation::less_equal;
        row.rhs = 0.0;
        lp.constraints.push_back(std::move(row));
    }
    Constraint norm;
    norm.coeffs.assign(l + m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        norm.coeffs[l + r] = d.outputs(o, r);
    }
    norm.rel = Relation::equal;
    norm.rhs = 1.0;
    lp.constraints.push_back(std::move(norm));
    return lp;
}

LinearProgram build_super_envelopment(const Dataset& d, std::size_t o) {
    require_reference_set(d, o);
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();

    LinearProgram lp;
    lp.sense = Sense::maximize;
    lp.objective.assign(n, 0.0); // eta~ plus n-1 intensities
    lp.objective[0] = 1.0;
    lp.var_bounds.assign(n, VarBound::nonnegative);

    for (std::size_t k = 0; k < l; ++k) {
        Constraint row;
        row.coeffs.assign(n, 0.0);
        std::size_t col = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != o) {
                row.coeffs[col++] = d.inputs(j, k);
            }
        }
        row.rel = Relation::less_equal;
        row.rhs = d.inputs(o, k);
        lp.constraints.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < m; ++r) {
        Constraint row;
        row.coeffs.assign(n, 0.0);
        row.coeffs[0] = d.outputs(o, r);
        std::size_t col = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != o) {
                row.coeffs[col++] = -d.outputs(j, r);
            }
        }
        row.rel = Relation::less_equal;
        row.rhs = 0.0;
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

LinearProgram build_ssm(const Dataset& d, std::size_t o, double eta_tilde_star) {
    require_reference_set(d, o);
    require_finite(eta_tilde_star, "eta_tilde_star");
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();
    const std::size_t nv = (n - 1) + l + m;

    LinearProgram lp;
    lp.sense = Sense::maximize;
    lp.objective.assign(nv, 0.0);
    for (std::size_t k = 0; k < l + m; ++k) {
        lp.objective[(n - 1) + k] = 1.0;
    }
    lp.var_bounds.assign(nv, VarBound::nonnegative);

    for (std::size_t k = 0; k < l; ++k) {
        Constraint row;
        row.coeffs.assign(nv, 0.0);
        std::size_t col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != o) {
                row.coeffs[col++] = d.inputs(j, k);
            }
        }
        row.coeffs[(n - 1) + k] = 1.0; // eps1
        row.rel = Relation::equal;
        row.rhs = d.inputs(o, k);
        lp.constraints.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < m; ++r) {
        Constraint row;
        row.coeffs.assign(nv, 0.0);
        std::size_t col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != o) {
                row.coeffs[col++] = d.outputs(j, r);
            }
        }
        row.coeffs[(n - 1) + l + r] = -1.0; // eps2
        row.rel = Relation::equal;
        row.rhs = eta_tilde_star * d.outputs(o, r);
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

LinearProgram build_uniqueness_probe(const Dataset& d, std::size_t o) {
    check_dmu_index(d, o);
    const std::size_t n = d.dmu_count(), l = d.input_count(), m = d.output_count();

    LinearProgram lp;
    lp.sense = Sense::maximize;
    lp.objective.assign(n, 1.0);
    lp.objective[o] = 0.0;
    lp.var_bounds.assign(n, VarBound::nonnegative);

    for (std::size_t k = 0; k < l; ++k) {
        Constraint row;
        row.coeffs.assign(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            row.coeffs[j] = d.inputs(j, k);
        }
        row.rel = Relation::equal;
        row.rhs = d.inputs(o, k);
        lp.constraints.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < m; ++r) {
        Constraint row;
        row.coeffs.assign(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            row.coeffs[j] = d.outputs(j, r);
        }
        row.rel = Relation::equal;
        row.rhs = d.outputs(o, r);
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

} // namespace dea::models
