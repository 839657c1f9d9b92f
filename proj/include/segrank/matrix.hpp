#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "segrank/errors.hpp"

namespace segrank {

/// Row-major numeric matrix with named columns. The workhorse container
/// handed between the loading, regression, clustering and boosting stages.
struct FeatureMatrix {
    std::vector<std::string> column_names;
    std::vector<double> values; // n_rows * n_cols, row-major
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;

    FeatureMatrix() = default;
    FeatureMatrix(std::vector<std::string> names, std::size_t rows)
        : column_names(std::move(names)),
          n_rows(rows),
          n_cols(column_names.size()) {
        values.assign(n_rows * n_cols, 0.0);
    }

    double& at(std::size_t r, std::size_t c) { return values[r * n_cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * n_cols + c]; }

    std::span<const double> row(std::size_t r) const {
        return {values.data() + r * n_cols, n_cols};
    }
    std::span<double> row(std::size_t r) {
        return {values.data() + r * n_cols, n_cols};
    }

    std::vector<double> column(std::size_t c) const {
        std::vector<double> out(n_rows);
        for (std::size_t r = 0; r < n_rows; ++r) out[r] = at(r, c);
        return out;
    }

    std::size_t column_index(const std::string& name) const {
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (column_names[c] == name) return c;
        }
        throw config_error("unknown column: " + name);
    }

    /// Copies the named columns (in the given order) into a new matrix.
    FeatureMatrix select(const std::vector<std::string>& names) const {
        std::vector<std::size_t> idx;
        idx.reserve(names.size());
        for (const auto& n : names) idx.push_back(column_index(n));
        FeatureMatrix out(names, n_rows);
        for (std::size_t r = 0; r < n_rows; ++r) {
            for (std::size_t j = 0; j < idx.size(); ++j) {
                out.at(r, j) = at(r, idx[j]);
            }
        }
        return out;
    }

    /// Copies the given rows (in the given order) into a new matrix.
    FeatureMatrix select_rows(const std::vector<std::size_t>& rows) const {
        FeatureMatrix out(column_names, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t c = 0; c < n_cols; ++c) {
                out.at(i, c) = at(rows[i], c);
            }
        }
        return out;
    }
};

} // namespace segrank
