#include "segrank/synthetic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "segrank/errors.hpp"
#include "segrank/rng.hpp"

namespace segrank {

void SyntheticConfig::validate() const {
    if (zero_asset_fraction < 0.0 || zero_asset_fraction > 1.0) {
        throw config_error("zero_asset_fraction must be in [0,1]");
    }
    if (!(contribution_tail_exponent > 1.0)) {
        throw config_error("contribution_tail_exponent must be > 1");
    }
    if (noise_scale < 0.0) throw config_error("noise_scale must be >= 0");
}

std::vector<CustomerRecord> generate_synthetic(const SyntheticConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    std::vector<CustomerRecord> out;
    out.reserve(cfg.n_customers);

    for (std::size_t i = 0; i < cfg.n_customers; ++i) {
        CustomerRecord r;
        r.customer_code = std::to_string(100001 + i);

        if (rng.uniform() < cfg.zero_asset_fraction) {
            // Empty customer: no assets, no activity, zero contribution.
            out.push_back(std::move(r));
            continue;
        }

        auto jitter = [&](double sigma) { return std::exp(sigma * rng.normal()); };

        // One heavy-tailed size factor drives all monetary magnitudes.
        const double s = rng.pareto(cfg.contribution_tail_exponent);

        r.assets = 50000.0 * s * jitter(0.25);
        r.deposit = 0.35 * r.assets * jitter(0.20);

        r.process_fee = 2000.0 * s * jitter(0.25);
        r.process_fee_submitted = r.process_fee * (0.50 + 0.15 * rng.uniform());
        // Exact decomposition: retained is what was not submitted. This makes
        // the column linearly dependent on the two above.
        r.process_fee_retained = r.process_fee - r.process_fee_submitted;
        r.net_process_fee_retained = r.process_fee_retained * (0.80 + 0.15 * rng.uniform());

        r.trading_volume = std::floor(40.0 * std::pow(s, 0.7) * jitter(0.30));
        r.trading_amount = 300000.0 * s * jitter(0.30);
        r.turnover_rate = 100.0 * r.trading_amount / (r.assets + r.deposit + 1.0);

        r.order_amount = std::floor(60.0 * std::pow(s, 0.6) * jitter(0.30)) + r.trading_volume;

        // The planted ground truth: contribution follows net retained fee and
        // assets, with multiplicative lognormal noise keeping it positive.
        r.total_contribution = (5.0 * r.net_process_fee_retained + 2.0 * r.assets) *
                               std::exp(0.10 * cfg.noise_scale * rng.normal());

        // Withdraw rate shrinks as contribution grows (negative association).
        const double wr_base = 0.55 / (1.0 + std::log1p(r.total_contribution) / 8.0);
        const double wr_frac = std::clamp(wr_base * (0.5 + rng.uniform()), 0.0, 0.95);
        r.withdraw_amount = std::floor(r.order_amount * wr_frac);
        r.withdraw_rate = 100.0 * r.withdraw_amount / std::max(r.order_amount, 1.0);

        r.profit = 0.4 * r.total_contribution - 0.15 * r.process_fee +
                   2000.0 * cfg.noise_scale * rng.normal();
        r.profit_rate = 100.0 * r.profit / (r.assets + 1.0);

        // Pure noise, independent of the target.
        r.interest_revenue = 800.0 * jitter(0.50);
        r.interest_return = 0.0015 * r.assets * jitter(0.25);

        r.exchange_return_2 = 0.008 * r.trading_amount * jitter(0.20);
        // Overlaps exchange_return_2 (correlated, not an exact copy).
        r.exchange_return_1 = 0.5 * r.exchange_return_2 + 300.0 * jitter(0.30);

        out.push_back(std::move(r));
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace

SyntheticConfig load_synthetic_config(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw io_error("cannot open config file " + path);
    SyntheticConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw config_error("expected key=value at line " + std::to_string(line_no));
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        try {
            if (key == "n_customers") cfg.n_customers = std::stoull(val);
            else if (key == "zero_asset_fraction") cfg.zero_asset_fraction = std::stod(val);
            else if (key == "contribution_tail_exponent") cfg.contribution_tail_exponent = std::stod(val);
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "noise_scale") cfg.noise_scale = std::stod(val);
            else throw config_error("unknown config key: " + key);
        } catch (const std::invalid_argument&) {
            throw config_error("bad value for " + key + ": " + val);
        } catch (const std::out_of_range&) {
            throw config_error("bad value for " + key + ": " + val);
        }
    }
    cfg.validate();
    return cfg;
}

} // namespace segrank
