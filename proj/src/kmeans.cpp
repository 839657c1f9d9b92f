#include "segrank/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "segrank/errors.hpp"
#include "segrank/rng.hpp"

namespace segrank {

namespace {

double sq_distance(std::span<const double> a, const double* b, std::size_t d) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double diff = a[j] - b[j];
        s += diff * diff;
    }
    return s;
}

// k-means++ seeding: first center uniform, then D^2-weighted picks.
std::vector<double> plus_plus_init(const FeatureMatrix& X, std::size_t k, Rng& rng) {
    const std::size_t n = X.n_rows, d = X.n_cols;
    std::vector<double> centers(k * d);
    std::vector<double> dist2(n, std::numeric_limits<double>::infinity());

    std::size_t first = static_cast<std::size_t>(rng.below(n));
    std::copy_n(X.row(first).data(), d, centers.begin());

    for (std::size_t c = 1; c < k; ++c) {
        const double* last = centers.data() + (c - 1) * d;
        double total = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            dist2[r] = std::min(dist2[r], sq_distance(X.row(r), last, d));
            total += dist2[r];
        }
        std::size_t pick;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double cum = 0.0;
            pick = n - 1;
            for (std::size_t r = 0; r < n; ++r) {
                cum += dist2[r];
                if (cum > target) {
                    pick = r;
                    break;
                }
            }
        } else {
            // All points coincide with some chosen center; any point works.
            pick = static_cast<std::size_t>(rng.below(n));
        }
        std::copy_n(X.row(pick).data(), d, centers.begin() + c * d);
    }
    return centers;
}

struct LloydResult {
    std::vector<double> centers;
    std::vector<int> assign;
    std::vector<std::size_t> sizes;
    double inertia = 0.0;
    std::vector<double> trace;
    std::size_t iterations = 0;
};

LloydResult lloyd(const FeatureMatrix& X, std::size_t k, std::uint64_t restart_seed,
                  std::size_t max_iter) {
    const std::size_t n = X.n_rows, d = X.n_cols;
    Rng rng(restart_seed);
    LloydResult res;
    res.centers = plus_plus_init(X, k, rng);
    res.assign.assign(n, -1);
    res.sizes.assign(k, 0);

    std::vector<int> prev(n, -1);
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        // Assignment: nearest centroid, ties to the lowest index.
        double inertia = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            double best = std::numeric_limits<double>::infinity();
            int best_c = 0;
            for (std::size_t c = 0; c < k; ++c) {
                const double dd = sq_distance(X.row(r), res.centers.data() + c * d, d);
                if (dd < best) {
                    best = dd;
                    best_c = static_cast<int>(c);
                }
            }
            res.assign[r] = best_c;
            inertia += best;
        }
        res.trace.push_back(inertia);
        res.inertia = inertia;
        res.iterations = iter + 1;

        if (res.assign == prev) break;
        prev = res.assign;

        // Update: centroid = mean of assigned rows.
        std::fill(res.centers.begin(), res.centers.end(), 0.0);
        std::fill(res.sizes.begin(), res.sizes.end(), 0);
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t c = static_cast<std::size_t>(res.assign[r]);
            ++res.sizes[c];
            const auto row = X.row(r);
            for (std::size_t j = 0; j < d; ++j) res.centers[c * d + j] += row[j];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (res.sizes[c] > 0) {
                for (std::size_t j = 0; j < d; ++j) {
                    res.centers[c * d + j] /= static_cast<double>(res.sizes[c]);
                }
            }
        }

        // Repair empty clusters: reseed at the point farthest from its own
        // centroid, one point per empty cluster.
        std::vector<std::size_t> empties;
        for (std::size_t c = 0; c < k; ++c) {
            if (res.sizes[c] == 0) empties.push_back(c);
        }
        if (!empties.empty()) {
            std::vector<std::pair<double, std::size_t>> far; // (-distance, row)
            far.reserve(n);
            for (std::size_t r = 0; r < n; ++r) {
                const std::size_t c = static_cast<std::size_t>(res.assign[r]);
                far.emplace_back(-sq_distance(X.row(r), res.centers.data() + c * d, d), r);
            }
            std::sort(far.begin(), far.end());
            for (std::size_t e = 0; e < empties.size() && e < far.size(); ++e) {
                const std::size_t r = far[e].second;
                std::copy_n(X.row(r).data(), d, res.centers.begin() + empties[e] * d);
            }
            prev.assign(n, -1); // force another assignment pass
        }
    }

    // Final bookkeeping against the converged assignment.
    std::fill(res.sizes.begin(), res.sizes.end(), 0);
    for (std::size_t r = 0; r < n; ++r) ++res.sizes[static_cast<std::size_t>(res.assign[r])];
    return res;
}

} // namespace

KMeansModel kmeans_fit(const FeatureMatrix& X, std::size_t k, std::uint64_t seed,
                       std::size_t max_iter, std::size_t n_restarts) {
    if (k < 1 || k > X.n_rows) {
        throw config_error("k must be in [1, n_rows], got k=" + std::to_string(k) +
                           " for n=" + std::to_string(X.n_rows));
    }
    if (X.n_cols == 0) throw config_error("empty matrix");
    if (n_restarts < 1) n_restarts = 1;

    LloydResult best;
    std::size_t best_restart = 0;
    bool have = false;
    for (std::size_t r = 0; r < n_restarts; ++r) {
        LloydResult cur = lloyd(X, k, mix_seed(seed, r), max_iter);
        if (!have || cur.inertia < best.inertia) {
            best = std::move(cur);
            best_restart = r;
            have = true;
        }
    }

    KMeansModel model;
    model.k = k;
    model.d = X.n_cols;
    model.seed = seed;
    model.centroids = std::move(best.centers);
    model.assignments = std::move(best.assign);
    model.sizes = std::move(best.sizes);
    model.inertia = best.inertia;
    model.inertia_trace = std::move(best.trace);
    model.iterations = best.iterations;
    model.best_restart = best_restart;

    // Converged centroids must equal the mean of their members; recompute so
    // the invariant holds even when the loop exited on max_iter.
    std::vector<double> means(k * X.n_cols, 0.0);
    for (std::size_t r = 0; r < X.n_rows; ++r) {
        const std::size_t c = static_cast<std::size_t>(model.assignments[r]);
        const auto row = X.row(r);
        for (std::size_t j = 0; j < X.n_cols; ++j) means[c * X.n_cols + j] += row[j];
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (model.sizes[c] > 0) {
            for (std::size_t j = 0; j < X.n_cols; ++j) {
                means[c * X.n_cols + j] /= static_cast<double>(model.sizes[c]);
            }
        }
    }
    model.centroids = std::move(means);
    return model;
}

ElbowCurve elbow_curve(const FeatureMatrix& X, std::size_t k_max, std::uint64_t seed,
                       std::size_t n_restarts, std::size_t max_iter) {
    if (k_max < 3) throw config_error("k_max must be >= 3");
    if (k_max > X.n_rows) k_max = X.n_rows;

    ElbowCurve curve;
    for (std::size_t k = 1; k <= k_max; ++k) {
        const KMeansModel m =
            kmeans_fit(X, k, mix_seed(seed, 0xe1b0 + k), max_iter, n_restarts);
        curve.ks.push_back(k);
        curve.costs.push_back(m.inertia);
    }
    for (std::size_t i = 1; i < curve.costs.size(); ++i) {
        if (curve.costs[i] > curve.costs[i - 1] * (1.0 + 1e-12) + 1e-12) {
            curve.monotone = false;
        }
    }
    return curve;
}

ElbowChoice detect_elbow(const ElbowCurve& curve) {
    const std::size_t m = curve.costs.size();
    if (m < 3) throw config_error("elbow detection needs at least 3 points");

    double scale = 0.0;
    for (double c : curve.costs) scale = std::max(scale, std::fabs(c));

    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        const double d2 = curve.costs[i - 1] - 2.0 * curve.costs[i] + curve.costs[i + 1];
        if (d2 > best) { // strict: ties keep the smaller k
            best = d2;
            best_i = i;
        }
    }

    ElbowChoice choice;
    bool all_zero = true;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        const double d2 = curve.costs[i - 1] - 2.0 * curve.costs[i] + curve.costs[i + 1];
        if (std::fabs(d2) > 1e-12 * std::max(1.0, scale)) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        choice.k = 1;
        choice.no_elbow = true;
    } else {
        choice.k = curve.ks[best_i];
    }
    return choice;
}

} // namespace segrank
