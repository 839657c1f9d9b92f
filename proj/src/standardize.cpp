#include "segrank/standardize.hpp"

#include <cmath>

#include "segrank/errors.hpp"

namespace segrank {

Standardized standardize(const FeatureMatrix& m) {
    if (m.n_rows < 2) throw config_error("standardize requires at least 2 rows");

    Standardized out;
    out.matrix = FeatureMatrix(m.column_names, m.n_rows);
    out.scaling.resize(m.n_cols);

    const double n = static_cast<double>(m.n_rows);
    for (std::size_t c = 0; c < m.n_cols; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < m.n_rows; ++r) sum += m.at(r, c);
        const double mean = sum / n;

        double ss = 0.0;
        for (std::size_t r = 0; r < m.n_rows; ++r) {
            const double d = m.at(r, c) - mean;
            ss += d * d;
        }
        const double sd = std::sqrt(ss / (n - 1.0));

        ColumnScaling& sc = out.scaling[c];
        sc.mean = mean;
        sc.stddev = sd;
        sc.constant = (sd == 0.0);
        if (sc.constant) {
            for (std::size_t r = 0; r < m.n_rows; ++r) out.matrix.at(r, c) = 0.0;
        } else {
            for (std::size_t r = 0; r < m.n_rows; ++r) {
                out.matrix.at(r, c) = (m.at(r, c) - mean) / sd;
            }
        }
    }
    return out;
}

} // namespace segrank
