#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dea/error.hpp"

namespace dea {

// Minimal dense row-major matrix; enough for panels and tableaus.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    std::span<double> row(std::size_t r) { return {values.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {values.data() + r * cols, cols}; }
};

// Immutable panel of n DMUs with strictly positive input/output vectors.
// Inputs are stored one DMU per row (n x l), outputs likewise (n x m), so a
// DMU's vectors are contiguous. tags (e.g. bank type) and ids are optional
// presentation metadata and never enter any computation.
struct Dataset {
    std::vector<std::string> ids;
    std::vector<std::string> names;
    std::vector<std::string> tags;
    std::vector<std::string> input_labels;
    std::vector<std::string> output_labels;
    Matrix inputs;  // n x l
    Matrix outputs; // n x m

    std::size_t dmu_count() const { return names.size(); }
    std::size_t input_count() const { return inputs.cols; }
    std::size_t output_count() const { return outputs.cols; }

    std::span<const double> input_vec(std::size_t i) const { return inputs.row(i); }
    std::span<const double> output_vec(std::size_t i) const { return outputs.row(i); }
};

// Throws ValidationError naming the offending cell/field.
void validate_dataset(const Dataset& d);

// Builds a dataset with default ids ("1".."n") and labels, then validates it.
Dataset make_dataset(std::vector<std::string> names, Matrix inputs, Matrix outputs);

// Bounds-checks a DMU index against the dataset.
void check_dmu_index(const Dataset& d, std::size_t o);

} // namespace dea
