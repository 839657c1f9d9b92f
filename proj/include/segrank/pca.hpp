#pragma once

#include <array>
#include <vector>

#include "segrank/matrix.hpp"

namespace segrank {

struct PcaProjection {
    std::vector<double> scores;      // n x 2, row-major
    std::vector<double> components;  // 2 x d, row-major (unit eigenvectors)
    std::array<double, 2> eigenvalues{};
    double explained_fraction = 0.0; // (l1 + l2) / sum of all eigenvalues
};

/// Projects rows onto the top-2 eigenvectors of the sample covariance.
/// Sign convention: the first nonzero loading of each component is positive.
/// Requires n_rows >= 3 and n_cols >= 2; zero covariance is an error.
PcaProjection pca_project_2d(const FeatureMatrix& X);

} // namespace segrank
