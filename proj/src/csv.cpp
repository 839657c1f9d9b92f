#include "segrank/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "segrank/errors.hpp"

namespace segrank {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
    const std::string s = trim(cell);
    if (!s.empty()) {
        const char* begin = s.data();
        const char* end = begin + s.size();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec == std::errc() && ptr == end) {
            if (!std::isfinite(v)) {
                throw io_error("non-finite value at row " + std::to_string(row) +
                               ", column " + column);
            }
            return v;
        }
    }
    throw io_error("non-numeric cell \"" + s + "\" at row " + std::to_string(row) +
                   ", column " + column);
}

} // namespace

std::array<double, schema::kColumnCount - 1> CustomerRecord::numeric_fields() const {
    return {total_contribution, assets,  deposit,  profit,  profit_rate,
            trading_volume,     trading_amount, turnover_rate, order_amount,
            withdraw_amount,    withdraw_rate,  process_fee,   process_fee_submitted,
            process_fee_retained, net_process_fee_retained, interest_revenue,
            interest_return,    exchange_return_1, exchange_return_2};
}

void CustomerRecord::set_numeric_field(std::size_t column, double v) {
    switch (column) {
        case schema::kTotalContribution: total_contribution = v; break;
        case schema::kAssets: assets = v; break;
        case schema::kDeposit: deposit = v; break;
        case schema::kProfit: profit = v; break;
        case schema::kProfitRate: profit_rate = v; break;
        case schema::kTradingVolume: trading_volume = v; break;
        case schema::kTradingAmount: trading_amount = v; break;
        case schema::kTurnoverRate: turnover_rate = v; break;
        case schema::kOrderAmount: order_amount = v; break;
        case schema::kWithdrawAmount: withdraw_amount = v; break;
        case schema::kWithdrawRate: withdraw_rate = v; break;
        case schema::kProcessFee: process_fee = v; break;
        case schema::kProcessFeeSubmitted: process_fee_submitted = v; break;
        case schema::kProcessFeeRetained: process_fee_retained = v; break;
        case schema::kNetProcessFeeRetained: net_process_fee_retained = v; break;
        case schema::kInterestRevenue: interest_revenue = v; break;
        case schema::kInterestReturn: interest_return = v; break;
        case schema::kExchangeReturn1: exchange_return_1 = v; break;
        case schema::kExchangeReturn2: exchange_return_2 = v; break;
        default: throw config_error("not a numeric schema column: " + std::to_string(column));
    }
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

CustomerTable load_csv(const std::string& path, const std::vector<std::string>& columns) {
    std::ifstream in(path);
    if (!in.is_open()) throw io_error("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw io_error("empty file, header row required: " + path);

    // Strip a UTF-8 BOM if present.
    if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
        static_cast<unsigned char>(line[1]) == 0xBB &&
        static_cast<unsigned char>(line[2]) == 0xBF) {
        line.erase(0, 3);
    }

    // Resolve requested columns against the header, aliases included.
    std::vector<std::size_t> wanted; // schema column per requested name
    for (const auto& n : columns) {
        auto col = schema::resolve(n);
        if (!col) throw config_error("unknown schema column: " + n);
        wanted.push_back(*col);
    }

    const auto header = split_line(line);
    std::vector<int> file_index(schema::kColumnCount, -1);
    for (std::size_t i = 0; i < header.size(); ++i) {
        auto col = schema::resolve(trim(header[i]));
        if (col && file_index[*col] < 0) file_index[*col] = static_cast<int>(i);
    }
    for (std::size_t c : wanted) {
        if (file_index[c] < 0) {
            throw io_error("missing column " + schema::name(c) + " in " + path);
        }
    }

    CustomerTable table;
    std::vector<std::string> names;
    names.reserve(wanted.size());
    for (std::size_t c : wanted) names.push_back(schema::name(c));

    std::vector<double> values;
    std::unordered_set<std::string> seen_codes;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        ++row;
        const auto cells = split_line(line);
        if (cells.size() < header.size()) {
            throw io_error("row " + std::to_string(row) + " has " +
                           std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(header.size()));
        }
        CustomerRecord rec;
        for (std::size_t c : wanted) {
            const std::string& cell = cells[static_cast<std::size_t>(file_index[c])];
            const double v = parse_cell(cell, row, schema::name(c));
            values.push_back(v);
            if (c == schema::kCustomerCode) {
                rec.customer_code = trim(cell);
            } else {
                rec.set_numeric_field(c, v);
            }
        }
        if (file_index[schema::kCustomerCode] >= 0 && rec.customer_code.empty()) {
            rec.customer_code = trim(cells[static_cast<std::size_t>(file_index[schema::kCustomerCode])]);
        }
        if (!rec.customer_code.empty()) {
            if (!seen_codes.insert(rec.customer_code).second) {
                throw io_error("duplicate customer_code " + rec.customer_code + " at row " +
                               std::to_string(row));
            }
        }
        table.records.push_back(std::move(rec));
    }

    table.matrix.column_names = std::move(names);
    table.matrix.n_rows = table.records.size();
    table.matrix.n_cols = wanted.size();
    table.matrix.values = std::move(values);
    return table;
}

void write_csv(const std::string& path, const std::vector<CustomerRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw io_error("cannot write " + path);

    const auto names = schema::canonical_names();
    for (std::size_t c = 0; c < names.size(); ++c) {
        out << names[c] << (c + 1 < names.size() ? ',' : '\n');
    }
    for (const auto& rec : records) {
        out << rec.customer_code;
        for (double v : rec.numeric_fields()) out << ',' << format_value(v);
        out << '\n';
    }
    if (!out) throw io_error("write failed: " + path);
}

std::vector<std::string> load_schema_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw io_error("cannot open schema file " + path);
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        names.push_back(t);
    }
    return names;
}

FeatureMatrix records_to_matrix(const std::vector<CustomerRecord>& records) {
    FeatureMatrix m(schema::canonical_names(), records.size());
    for (std::size_t r = 0; r < records.size(); ++r) {
        double code = 0.0;
        const std::string& s = records[r].customer_code;
        if (!s.empty()) {
            std::from_chars(s.data(), s.data() + s.size(), code);
        }
        m.at(r, schema::kCustomerCode) = code;
        const auto f = records[r].numeric_fields();
        for (std::size_t c = 1; c < schema::kColumnCount; ++c) m.at(r, c) = f[c - 1];
    }
    return m;
}

} // namespace segrank
