#pragma once

#include <array>
#include <span>
#include <vector>

namespace segrank {

/// The distribution-based 7-group alternative to k-means: rank customers by
/// contribution, cut the list each time another benchmark fraction of the
/// total accrues, keep the nine-cut core (90% of contribution), and band the
/// core by how many standard deviations their assets sit from the top
/// contributor's assets.
struct SigmaGrouping {
    double benchmark_fraction = 0.10;
    std::size_t core_customer_count = 0;
    std::vector<std::size_t> cut_positions; // customer count at each 10% cut (9 entries)
    std::array<double, 6> band_edges{};     // midpoint -3s,-2s,-1s,+1s,+2s,+3s in asset units
    double midpoint = 0.0;                  // top contributor's assets
    double asset_stddev = 0.0;              // sample stddev of core assets
    std::vector<std::size_t> core_rows;     // original row indices, assets ascending
    std::vector<int> group_of;              // parallel to core_rows, groups 1..7
    std::array<std::size_t, 7> group_sizes{};
};

/// Requires nonnegative contributions, at least 10 positive ones, and a
/// benchmark fraction small enough that nine cuts exist (fraction <= 1/9).
SigmaGrouping sigma_band_grouping(std::span<const double> contribution,
                                  std::span<const double> assets,
                                  double benchmark_fraction = 0.10);

} // namespace segrank
