#pragma once

#include <array>
#include <string>
#include <vector>

#include "segrank/matrix.hpp"
#include "segrank/schema.hpp"

namespace segrank {

/// One customer row across the 20 schema dimensions. The code is kept as the
/// original text; its numeric parse lives in the feature matrix.
struct CustomerRecord {
    std::string customer_code;
    double total_contribution = 0;
    double assets = 0;
    double deposit = 0;
    double profit = 0;
    double profit_rate = 0;
    double trading_volume = 0;
    double trading_amount = 0;
    double turnover_rate = 0;
    double order_amount = 0;
    double withdraw_amount = 0;
    double withdraw_rate = 0;
    double process_fee = 0;
    double process_fee_submitted = 0;
    double process_fee_retained = 0;
    double net_process_fee_retained = 0;
    double interest_revenue = 0;
    double interest_return = 0;
    double exchange_return_1 = 0;
    double exchange_return_2 = 0;

    /// Numeric fields in schema order (indices 1..19).
    std::array<double, schema::kColumnCount - 1> numeric_fields() const;
    void set_numeric_field(std::size_t column, double v);
};

struct CustomerTable {
    std::vector<CustomerRecord> records;
    FeatureMatrix matrix; // all 20 columns, schema order
};

/// Reads a CSV with a header row. Columns are matched by name (canonical or
/// pinyin alias) against `columns`; file column order is irrelevant and extra
/// columns are ignored. Rows must be fully numeric and finite, and customer
/// codes unique.
CustomerTable load_csv(const std::string& path,
                       const std::vector<std::string>& columns = schema::canonical_names());

/// Writes the canonical 20-column CSV. Values are printed with 15 significant
/// digits so that load_csv(write_csv(t)) reproduces t for tables whose decimal
/// text fits in 15 digits.
void write_csv(const std::string& path, const std::vector<CustomerRecord>& records);

std::string format_value(double v); // the %.15g used by write_csv

/// Optional schema file: one column name per line, '#' comments allowed.
std::vector<std::string> load_schema_file(const std::string& path);

FeatureMatrix records_to_matrix(const std::vector<CustomerRecord>& records);

} // namespace segrank
