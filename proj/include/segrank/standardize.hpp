#pragma once

#include <vector>

#include "segrank/matrix.hpp"

namespace segrank {

struct ColumnScaling {
    double mean = 0.0;
    double stddev = 0.0; // sample stddev (n-1)
    bool constant = false;
};

struct Standardized {
    FeatureMatrix matrix;
    std::vector<ColumnScaling> scaling; // one per column
};

/// z-scores every column with sample (n-1) stddev. Constant columns come back
/// all-zero and flagged rather than failing. Requires n_rows >= 2.
Standardized standardize(const FeatureMatrix& m);

} // namespace segrank
