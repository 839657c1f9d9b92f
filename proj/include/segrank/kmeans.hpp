#pragma once

#include <cstdint>
#include <vector>

#include "segrank/matrix.hpp"

namespace segrank {

struct KMeansModel {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::vector<double> centroids;          // k x d, same units as the fitted matrix
    std::vector<double> centroids_original; // k x d, original units (filled when scaling is known)
    std::vector<int> assignments;           // cluster index per row
    std::vector<std::size_t> sizes;         // per cluster, all nonzero
    double inertia = 0.0;                   // total within-cluster squared distance
    std::vector<double> inertia_trace;      // per Lloyd iteration, non-increasing
    std::size_t iterations = 0;
    std::size_t best_restart = 0;

    double centroid(std::size_t cluster, std::size_t dim) const {
        return centroids[cluster * d + dim];
    }
    std::size_t d = 0;
};

/// Lloyd iterations from k-means++ starts, best of `n_restarts` by inertia
/// (ties to the lowest restart index). Empty clusters are reseeded at the
/// point farthest from its assigned centroid. Deterministic given the seed.
KMeansModel kmeans_fit(const FeatureMatrix& X, std::size_t k, std::uint64_t seed,
                       std::size_t max_iter = 300, std::size_t n_restarts = 10);

struct ElbowCurve {
    std::vector<std::size_t> ks;
    std::vector<double> costs;
    bool monotone = true; // restarts should make costs non-increasing; flagged if not
};

/// Converged inertia for k = 1..k_max, each fit seeded from a per-k
/// derivation of `seed`.
ElbowCurve elbow_curve(const FeatureMatrix& X, std::size_t k_max, std::uint64_t seed,
                       std::size_t n_restarts = 10, std::size_t max_iter = 300);

struct ElbowChoice {
    std::size_t k = 1;
    bool no_elbow = false;
};

/// Maximum discrete curvature: argmax over interior k of
/// cost(k-1) - 2 cost(k) + cost(k+1), ties toward smaller k. An exactly
/// linear curve has no elbow and reports k=1 flagged.
ElbowChoice detect_elbow(const ElbowCurve& curve);

} // namespace segrank
