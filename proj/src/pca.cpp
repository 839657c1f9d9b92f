#include "segrank/pca.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "segrank/errors.hpp"

namespace segrank {

PcaProjection pca_project_2d(const FeatureMatrix& X) {
    const std::size_t n = X.n_rows, d = X.n_cols;
    if (n < 3) throw config_error("pca_project_2d needs at least 3 rows");
    if (d < 2) throw config_error("pca_project_2d needs at least 2 columns");

    Eigen::MatrixXd M(n, d);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) M(r, c) = X.at(r, c);
    }
    const Eigen::RowVectorXd mean = M.colwise().mean();
    M.rowwise() -= mean;

    const Eigen::MatrixXd cov = (M.transpose() * M) / static_cast<double>(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");

    const Eigen::VectorXd evals = solver.eigenvalues(); // ascending
    double total = 0.0;
    for (Eigen::Index i = 0; i < evals.size(); ++i) total += std::max(evals(i), 0.0);
    if (total <= 0.0) throw numeric_error("zero covariance: nothing to project");

    PcaProjection out;
    Eigen::MatrixXd top(d, 2);
    for (int comp = 0; comp < 2; ++comp) {
        const Eigen::Index idx = evals.size() - 1 - comp;
        out.eigenvalues[comp] = std::max(evals(idx), 0.0);
        Eigen::VectorXd v = solver.eigenvectors().col(idx);
        for (Eigen::Index j = 0; j < v.size(); ++j) {
            if (std::fabs(v(j)) > 1e-12) {
                if (v(j) < 0.0) v = -v;
                break;
            }
        }
        top.col(comp) = v;
    }
    out.explained_fraction = (out.eigenvalues[0] + out.eigenvalues[1]) / total;

    const Eigen::MatrixXd scores = M * top;
    out.scores.resize(n * 2);
    for (std::size_t r = 0; r < n; ++r) {
        out.scores[r * 2] = scores(r, 0);
        out.scores[r * 2 + 1] = scores(r, 1);
    }
    out.components.resize(2 * d);
    for (std::size_t c = 0; c < d; ++c) {
        out.components[c] = top(c, 0);
        out.components[d + c] = top(c, 1);
    }
    return out;
}

} // namespace segrank
