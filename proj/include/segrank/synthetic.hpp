#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segrank/csv.hpp"

namespace segrank {

/// Synthetic-table knobs. Defaults are calibrated so that roughly half the
/// customers are empty (zero assets, zero contribution) and the positive
/// contributions are heavy-tailed enough that the bottom 90% of customers
/// hold under 3% of the total.
struct SyntheticConfig {
    std::size_t n_customers = 100000;
    double zero_asset_fraction = 0.5;
    double contribution_tail_exponent = 1.01; // Pareto shape, must be > 1
    std::uint64_t seed = 42;
    double noise_scale = 1.0;

    void validate() const;
};

/// Generates a customer table with a planted dependence structure:
///   - total_contribution is a noisy monotone function of
///     net_process_fee_retained (strong) and assets (weaker), so those two
///     are the top-influence variables by construction;
///   - process_fee_retained == process_fee - process_fee_submitted exactly,
///     so it is aliased in any regression containing all three;
///   - withdraw_rate is negatively associated with contribution;
///   - interest_revenue and exchange_return_1 carry no independent signal.
/// Deterministic for a fixed config.
std::vector<CustomerRecord> generate_synthetic(const SyntheticConfig& cfg);

/// Flat key=value config file ('#' comments allowed). Unknown keys error.
SyntheticConfig load_synthetic_config(const std::string& path);

} // namespace segrank
