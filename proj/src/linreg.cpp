#include "segrank/linreg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>

#include "segrank/errors.hpp"
#include "segrank/schema.hpp"

namespace segrank {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double two_sided_p(double t, double df) {
    if (!std::isfinite(t)) return 0.0;
    boost::math::students_t dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

} // namespace

LogTransform log_transform_target(std::span<const double> y) {
    LogTransform out;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] > 0.0) {
            out.values.push_back(std::log(y[i]));
            out.retained_rows.push_back(i);
        } else {
            out.excluded_rows.push_back(i);
        }
    }
    if (out.values.empty()) throw numeric_error("no positive-contribution rows");
    return out;
}

RegressionFit fit_ols(const FeatureMatrix& X, std::span<const double> y, double alias_tol) {
    const std::size_t n = X.n_rows;
    const std::size_t p = X.n_cols;
    if (y.size() != n) throw config_error("target length does not match matrix rows");
    if (n <= p + 1) throw numeric_error("too few rows for OLS: need n > p + 1");

    // Design with intercept first, then predictors in schema order.
    Eigen::MatrixXd design(n, p + 1);
    design.col(0).setOnes();
    for (std::size_t c = 0; c < p; ++c) {
        for (std::size_t r = 0; r < n; ++r) design(r, c + 1) = X.at(r, c);
    }

    // Left-to-right rank detection by modified Gram-Schmidt: a column whose
    // residual after projecting onto the accepted span falls below
    // alias_tol * ||column|| adds no rank and is marked aliased. Matching the
    // paper's NA convention, the later-ordered column of a dependent set is
    // the one dropped.
    std::vector<bool> aliased(p + 1, false);
    std::vector<Eigen::VectorXd> basis;
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c <= p; ++c) {
        Eigen::VectorXd v = design.col(c);
        const double norm0 = v.norm();
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) v -= q.dot(v) * q;
        }
        if (norm0 == 0.0 || v.norm() <= alias_tol * norm0) {
            aliased[c] = true;
        } else {
            basis.push_back(v / v.norm());
            kept.push_back(c);
        }
    }
    if (kept.size() < 2) throw numeric_error("degenerate design: rank below 2");

    Eigen::MatrixXd reduced(n, kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) reduced.col(j) = design.col(kept[j]);

    Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(reduced);
    Eigen::VectorXd beta = qr.solve(yv);

    const Eigen::VectorXd resid = yv - reduced * beta;
    const double rss = resid.squaredNorm();
    const double ymean = yv.mean();
    const double tss = (yv.array() - ymean).square().sum();

    RegressionFit fit;
    fit.n_rows = n;
    fit.predictor_names = X.column_names;
    fit.coefficients.assign(p, kNaN);
    fit.std_errors.assign(p, kNaN);
    fit.t_stats.assign(p, kNaN);
    fit.p_values.assign(p, kNaN);
    fit.aliased.assign(p, false);
    for (std::size_t c = 1; c <= p; ++c) fit.aliased[c - 1] = aliased[c];

    fit.residual_df = static_cast<long>(n) - static_cast<long>(kept.size());
    if (fit.residual_df < 1) throw numeric_error("no residual degrees of freedom");
    fit.sigma2 = rss / static_cast<double>(fit.residual_df);
    fit.r_squared = tss > 0.0 ? std::clamp(1.0 - rss / tss, 0.0, 1.0) : (rss == 0.0 ? 1.0 : 0.0);
    fit.saturated = rss <= 1e-14 * std::max(1.0, tss);

    // (X'X)^-1 diagonal from the R factor: rows of R^-1.
    Eigen::MatrixXd R = qr.matrixQR()
                            .topLeftCorner(kept.size(), kept.size())
                            .triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(kept.size(), kept.size()));

    const double df = static_cast<double>(fit.residual_df);
    for (std::size_t j = 0; j < kept.size(); ++j) {
        const double xtx_inv_jj = Rinv.row(j).squaredNorm();
        const double se = std::sqrt(fit.sigma2 * xtx_inv_jj);
        const double b = beta(static_cast<Eigen::Index>(j));
        double t, pval;
        if (fit.saturated) {
            t = b == 0.0 ? 0.0 : std::numeric_limits<double>::infinity() * (b > 0 ? 1 : -1);
            pval = 0.0;
        } else {
            t = b / se;
            pval = two_sided_p(t, df);
        }
        if (kept[j] == 0) {
            fit.intercept = b;
            fit.intercept_se = se;
            fit.intercept_t = t;
            fit.intercept_p = pval;
        } else {
            const std::size_t c = kept[j] - 1;
            fit.coefficients[c] = b;
            fit.std_errors[c] = se;
            fit.t_stats[c] = t;
            fit.p_values[c] = pval;
        }
    }
    return fit;
}

std::vector<std::string> select_features(const RegressionFit& fit, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw config_error("alpha must be in (0,1]");

    // (ordering key, name); schema columns sort by schema position, anything
    // else keeps its input position after them.
    std::vector<std::pair<std::size_t, std::string>> retained;
    for (std::size_t i = 0; i < fit.predictor_names.size(); ++i) {
        if (fit.aliased[i]) continue;
        if (!(fit.p_values[i] < alpha)) continue;
        const std::string& name = fit.predictor_names[i];
        if (name == schema::name(schema::kCustomerCode)) continue;
        const auto col = schema::resolve(name);
        const std::size_t key = col ? static_cast<std::size_t>(*col)
                                    : schema::kColumnCount + i;
        retained.emplace_back(key, name);
    }
    if (retained.empty()) {
        throw numeric_error("no predictor significant at alpha=" + std::to_string(alpha));
    }
    std::stable_sort(retained.begin(), retained.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    // The target dimension always stays in the analysis set; its schema slot
    // precedes every predictor, so it leads the list.
    std::vector<std::string> out;
    out.push_back(schema::name(schema::kTotalContribution));
    for (const auto& [key, name] : retained) out.push_back(name);
    return out;
}

std::string format_fit_table(const RegressionFit& fit) {
    std::size_t width = 8;
    for (const auto& n : fit.predictor_names) width = std::max(width, n.size());

    std::ostringstream os;
    auto row = [&](const std::string& name, const std::string& value) {
        os << name << std::string(width + 2 - name.size(), ' ') << value << '\n';
    };
    row("variable", "p_value");
    for (std::size_t i = 0; i < fit.predictor_names.size(); ++i) {
        std::string pv;
        if (fit.aliased[i]) {
            pv = "NA";
        } else if (fit.p_values[i] < 2e-16) {
            pv = "<2e-16";
        } else {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.4g", fit.p_values[i]);
            pv = buf;
        }
        row(fit.predictor_names[i], pv);
    }
    return os.str();
}

} // namespace segrank
