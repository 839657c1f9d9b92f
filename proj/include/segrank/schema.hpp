#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace segrank {

/// The 20-column customer table schema. Canonical names are English;
/// the pinyin names used by the source system are accepted aliases.
namespace schema {

inline constexpr std::size_t kColumnCount = 20;

enum Column : std::size_t {
    kCustomerCode = 0,
    kTotalContribution,
    kAssets,
    kDeposit,
    kProfit,
    kProfitRate,
    kTradingVolume,
    kTradingAmount,
    kTurnoverRate,
    kOrderAmount,
    kWithdrawAmount,
    kWithdrawRate,
    kProcessFee,
    kProcessFeeSubmitted,
    kProcessFeeRetained,
    kNetProcessFeeRetained,
    kInterestRevenue,
    kInterestReturn,
    kExchangeReturn1,
    kExchangeReturn2,
};

inline constexpr std::array<std::string_view, kColumnCount> kColumnNames = {
    "customer_code",
    "total_contribution",
    "assets",
    "deposit",
    "profit",
    "profit_rate",
    "trading_volume",
    "trading_amount",
    "turnover_rate",
    "order_amount",
    "withdraw_amount",
    "withdraw_rate",
    "process_fee",
    "process_fee_submitted",
    "process_fee_retained",
    "net_process_fee_retained",
    "interest_revenue",
    "interest_return",
    "exchange_return_1",
    "exchange_return_2",
};

struct Alias {
    std::string_view alias;
    Column column;
};

inline constexpr std::array<Alias, 15> kPinyinAliases = {{
    {"zonggongxian", kTotalContribution},
    {"quanyi", kAssets},
    {"baozhengjin", kDeposit},
    {"yingkui", kProfit},
    {"yingkuilv", kProfitRate},
    {"chengjiaojine", kTradingAmount},
    {"huanshoulv", kTurnoverRate},
    {"weituobishu", kOrderAmount},
    {"chedanbishu", kWithdrawAmount},
    {"chedanlv", kWithdrawRate},
    {"shouxufei", kProcessFee},
    {"shangjiaoshouxufei", kProcessFeeSubmitted},
    {"jingliucunshouxufei", kNetProcessFeeRetained},
    {"lingxifanhuan", kInterestReturn},
    {"jiaoyisuofanhuanfanhuan", kExchangeReturn2},
}};

/// Resolves a header cell (canonical English or pinyin alias) to its column.
inline std::optional<Column> resolve(std::string_view name) {
    for (std::size_t i = 0; i < kColumnCount; ++i) {
        if (kColumnNames[i] == name) return static_cast<Column>(i);
    }
    for (const auto& a : kPinyinAliases) {
        if (a.alias == name) return a.column;
    }
    return std::nullopt;
}

inline std::string name(std::size_t column) {
    return std::string(kColumnNames[column]);
}

inline std::vector<std::string> canonical_names() {
    return {kColumnNames.begin(), kColumnNames.end()};
}

/// The 18 regression predictors: every column except customer_code and the
/// target total_contribution, in schema order.
inline std::vector<std::size_t> predictor_columns() {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < kColumnCount; ++c) {
        if (c != kCustomerCode && c != kTotalContribution) out.push_back(c);
    }
    return out;
}

} // namespace schema
} // namespace segrank
