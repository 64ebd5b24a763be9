#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "liquidpower/report.hpp"

namespace liquidpower::cli {

struct Instance;

struct ResultRow {
    int voter_id{0};
    std::string label;
    std::int64_t weight{0};
    int out_degree{0};
    int in_degree{0};
    double measure{0};
    std::optional<double> positive;
    std::optional<double> negative;
};

struct ResultTable {
    std::vector<ResultRow> rows;
    std::string engine;
    std::optional<SamplingInfo> sampling;
};

/// Rows ordered by voter id; positive/negative filled when the report has them.
ResultTable make_table(const Instance& instance, const MeasureReport& report);

/// Fixed header:
/// voter_id,label,weight,out_degree,in_degree,measure,positive_criticality,
/// negative_criticality,engine,samples,epsilon,delta,seed
/// Values print at full precision unless round_digits is set.
void write_csv(std::ostream& out, const ResultTable& table, std::optional<int> round_digits);
void write_json(std::ostream& out, const ResultTable& table, std::optional<int> round_digits);

std::string format_value(double value, std::optional<int> round_digits);

} // namespace liquidpower::cli
