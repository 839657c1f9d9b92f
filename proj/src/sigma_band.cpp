#include "segrank/sigma_band.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "segrank/errors.hpp"

namespace segrank {

SigmaGrouping sigma_band_grouping(std::span<const double> contribution,
                                  std::span<const double> assets,
                                  double benchmark_fraction) {
    const std::size_t n = contribution.size();
    if (assets.size() != n) throw config_error("contribution/assets length mismatch");
    if (!(benchmark_fraction > 0.0) || benchmark_fraction > 1.0 / 9.0 + 1e-12) {
        throw config_error("benchmark_fraction must be in (0, 1/9]");
    }

    double total = 0.0;
    std::size_t positive = 0;
    for (double c : contribution) {
        if (c < 0.0) throw numeric_error("negative contribution");
        total += c;
        if (c > 0.0) ++positive;
    }
    if (total <= 0.0) throw numeric_error("all contributions are zero");
    if (positive < 10) throw numeric_error("insufficient data: fewer than 10 positive-contribution customers");

    // Contribution descending; ties broken by values only (assets descending,
    // then index) so grouping does not depend on file order beyond identical
    // rows.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (contribution[a] != contribution[b]) return contribution[a] > contribution[b];
        if (assets[a] != assets[b]) return assets[a] > assets[b];
        return a < b;
    });

    SigmaGrouping g;
    g.benchmark_fraction = benchmark_fraction;

    // Walk down the ranking, cutting each time another benchmark fraction of
    // the total accrues. The ninth cut closes the core set.
    const double step = benchmark_fraction * total;
    double cum = 0.0;
    std::size_t next_cut = 1;
    std::size_t core_end = 0;
    for (std::size_t i = 0; i < n && next_cut <= 9; ++i) {
        cum += contribution[order[i]];
        while (next_cut <= 9 && cum >= static_cast<double>(next_cut) * step - 1e-9 * total) {
            g.cut_positions.push_back(i + 1);
            if (next_cut == 9) core_end = i + 1;
            ++next_cut;
        }
    }
    if (core_end == 0) { // rounding left the ninth cut short; take everything
        core_end = n;
        while (g.cut_positions.size() < 9) g.cut_positions.push_back(n);
    }

    g.core_customer_count = core_end;
    g.midpoint = assets[order[0]]; // the top contributor's assets

    g.core_rows.assign(order.begin(), order.begin() + core_end);
    std::sort(g.core_rows.begin(), g.core_rows.end(), [&](std::size_t a, std::size_t b) {
        if (assets[a] != assets[b]) return assets[a] < assets[b];
        return a < b;
    });

    // Sample stddev of core assets sets the band scale.
    double mean = 0.0;
    for (std::size_t r : g.core_rows) mean += assets[r];
    mean /= static_cast<double>(core_end);
    double ss = 0.0;
    for (std::size_t r : g.core_rows) {
        const double d = assets[r] - mean;
        ss += d * d;
    }
    g.asset_stddev = core_end > 1 ? std::sqrt(ss / static_cast<double>(core_end - 1)) : 0.0;

    const double s = g.asset_stddev;
    g.band_edges = {g.midpoint - 3 * s, g.midpoint - 2 * s, g.midpoint - s,
                    g.midpoint + s,     g.midpoint + 2 * s, g.midpoint + 3 * s};

    g.group_of.reserve(core_end);
    for (std::size_t r : g.core_rows) {
        const double z = s > 0.0 ? (assets[r] - g.midpoint) / s : 0.0;
        const double az = std::fabs(z);
        int group;
        if (az <= 1.0) group = z <= 0.0 ? 1 : 2;
        else if (az <= 2.0) group = z < 0.0 ? 3 : 4;
        else if (az <= 3.0) group = z < 0.0 ? 5 : 6;
        else group = 7;
        g.group_of.push_back(group);
        ++g.group_sizes[static_cast<std::size_t>(group - 1)];
    }
    return g;
}

} // namespace segrank
