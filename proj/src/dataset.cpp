#include "dea/dataset.hpp"

#include <cmath>

namespace dea {

namespace {

void check_matrix(const Matrix& m, std::size_t n, const std::vector<std::string>& labels,
                  const char* what) {
    if (m.rows != n) {
        throw ValidationError(std::string(what) + " matrix has " + std::to_string(m.rows) +
                              " rows, expected one per DMU (" + std::to_string(n) + ")");
    }
    if (m.cols == 0) {
        throw ValidationError(std::string(what) + " matrix has no columns");
    }
    if (m.values.size() != m.rows * m.cols) {
        throw ValidationError(std::string(what) + " matrix storage does not match its shape");
    }
    if (!labels.empty() && labels.size() != m.cols) {
        throw ValidationError(std::string(what) + " labels do not match the column count");
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t k = 0; k < m.cols; ++k) {
            const double v = m(i, k);
            if (!std::isfinite(v) || v <= 0.0) {
                throw ValidationError(std::string(what) + " cell (DMU " + std::to_string(i + 1) +
                                      ", column " + std::to_string(k + 1) + ") is " +
                                      std::to_string(v) + "; all entries must be finite and > 0");
            }
        }
    }
}

} // namespace

void validate_dataset(const Dataset& d) {
    const std::size_t n = d.names.size();
    if (n == 0) {
        throw ValidationError("dataset has no DMUs");
    }
    if (!d.ids.empty() && d.ids.size() != n) {
        throw ValidationError("dataset ids do not match the DMU count");
    }
    if (!d.tags.empty() && d.tags.size() != n) {
        throw ValidationError("dataset tags do not match the DMU count");
    }
    check_matrix(d.inputs, n, d.input_labels, "input");
    check_matrix(d.outputs, n, d.output_labels, "output");
}

Dataset make_dataset(std::vector<std::string> names, Matrix inputs, Matrix outputs) {
    Dataset d;
    d.names = std::move(names);
    d.inputs = std::move(inputs);
    d.outputs = std::move(outputs);
    d.ids.reserve(d.names.size());
    for (std::size_t i = 0; i < d.names.size(); ++i) {
        d.ids.push_back(std::to_string(i + 1));
    }
    for (std::size_t k = 0; k < d.inputs.cols; ++k) {
        d.input_labels.push_back("x" + std::to_string(k + 1));
    }
    for (std::size_t k = 0; k < d.outputs.cols; ++k) {
        d.output_labels.push_back("y" + std::to_string(k + 1));
    }
    validate_dataset(d);
    return d;
}

void check_dmu_index(const Dataset& d, std::size_t o) {
    if (o >= d.dmu_count()) {
        throw ValidationError("DMU index " + std::to_string(o) + " out of range (dataset has " +
                              std::to_string(d.dmu_count()) + " DMUs)");
    }
}

} // namespace dea
