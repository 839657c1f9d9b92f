#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "segrank/matrix.hpp"

namespace segrank {

struct LogTransform {
    std::vector<double> values;             // ln(y) for retained rows
    std::vector<std::size_t> retained_rows; // original indices, ascending
    std::vector<std::size_t> excluded_rows; // rows with y <= 0, ascending
};

/// Logs the target, dropping nonpositive rows (reported, not silently fixed).
LogTransform log_transform_target(std::span<const double> y);

/// OLS summary over the full predictor list. Aliased columns keep their slot
/// with NaN statistics, mirroring a regression summary's NA line.
struct RegressionFit {
    std::vector<std::string> predictor_names;
    std::vector<double> coefficients; // NaN where aliased
    std::vector<double> std_errors;
    std::vector<double> t_stats;
    std::vector<double> p_values;
    std::vector<bool> aliased;

    double intercept = 0.0;
    double intercept_se = 0.0;
    double intercept_t = 0.0;
    double intercept_p = 0.0;

    long residual_df = 0;
    double sigma2 = 0.0;
    double r_squared = 0.0;
    bool saturated = false; // zero residual variance; p-values reported as 0

    std::size_t n_rows = 0;
};

/// Least squares of y on X plus an intercept. Linear dependences are detected
/// left-to-right with relative pivot tolerance `alias_tol`: a column that adds
/// no rank beyond the columns before it is marked aliased and excluded from
/// the fit. Two-sided t-test p-values with n - rank degrees of freedom.
RegressionFit fit_ols(const FeatureMatrix& X, std::span<const double> y,
                      double alias_tol = 1e-10);

/// Applies the significance cut: keeps the target dimension plus every
/// non-aliased predictor with p < alpha, in schema order; customer_code never
/// enters. Errors if no predictor survives.
std::vector<std::string> select_features(const RegressionFit& fit, double alpha);

/// Two-column (name, p-value) table in the style of a regression summary;
/// aliased rows print NA and p-values below 2e-16 print as "<2e-16".
std::string format_fit_table(const RegressionFit& fit);

} // namespace segrank
