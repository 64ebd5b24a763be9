#include "results.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "instance.hpp"

namespace liquidpower::cli {

using nlohmann::json;

ResultTable make_table(const Instance& instance, const MeasureReport& report) {
    ResultTable table;
    table.engine = report.engine;
    table.sampling = report.sampling;
    const int n = instance.game.size();
    table.rows.reserve(n);
    for (int v = 0; v < n; ++v) {
        ResultRow row;
        row.voter_id = v;
        row.label = instance.labels[v];
        row.weight = instance.game.weight(v);
        row.out_degree = instance.graph.out_degree(v);
        row.in_degree = instance.graph.in_degree(v);
        row.measure = report.measure[v];
        if (!report.positive.empty()) row.positive = report.positive[v];
        if (!report.negative.empty()) row.negative = report.negative[v];
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string format_value(double value, std::optional<int> round_digits) {
    char buffer[64];
    if (round_digits) {
        std::snprintf(buffer, sizeof buffer, "%.*f", *round_digits, value);
    } else {
        std::snprintf(buffer, sizeof buffer, "%.17g", value);
    }
    return buffer;
}

void write_csv(std::ostream& out, const ResultTable& table, std::optional<int> round_digits) {
    out << "voter_id,label,weight,out_degree,in_degree,measure,positive_criticality,"
           "negative_criticality,engine,samples,epsilon,delta,seed\n";
    for (const auto& row : table.rows) {
        out << row.voter_id << ',' << row.label << ',' << row.weight << ',' << row.out_degree
            << ',' << row.in_degree << ',' << format_value(row.measure, round_digits) << ',';
        if (row.positive) out << format_value(*row.positive, round_digits);
        out << ',';
        if (row.negative) out << format_value(*row.negative, round_digits);
        out << ',' << table.engine << ',';
        if (table.sampling) {
            out << table.sampling->samples << ',' << format_value(table.sampling->epsilon, {})
                << ',' << format_value(table.sampling->delta, {}) << ','
                << table.sampling->seed;
        } else {
            out << ",,,";
        }
        out << '\n';
    }
}

namespace {

json rounded(double value, std::optional<int> round_digits) {
    if (!round_digits) return value;
    const double scale = std::pow(10.0, *round_digits);
    return std::round(value * scale) / scale;
}

} // namespace

void write_json(std::ostream& out, const ResultTable& table, std::optional<int> round_digits) {
    json doc;
    doc["engine"] = table.engine;
    if (table.sampling) {
        doc["sampling"] = {{"samples", table.sampling->samples},
                           {"epsilon", table.sampling->epsilon},
                           {"delta", table.sampling->delta},
                           {"seed", table.sampling->seed},
                           {"derived", table.sampling->samples_derived},
                           {"generator", table.sampling->generator}};
    }
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r = {{"voter_id", row.voter_id},   {"label", row.label},
                  {"weight", row.weight},       {"out_degree", row.out_degree},
                  {"in_degree", row.in_degree}, {"measure", rounded(row.measure, round_digits)}};
        if (row.positive) r["positive_criticality"] = rounded(*row.positive, round_digits);
        if (row.negative) r["negative_criticality"] = rounded(*row.negative, round_digits);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

} // namespace liquidpower::cli
