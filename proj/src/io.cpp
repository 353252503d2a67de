#include "pball/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pball {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

nlohmann::json exponent_json(Exponent e) {
    if (e.is_inf()) return "inf";
    return e.value();
}

const char* mode_name(SampleMode m) { return m == SampleMode::volume ? "volume" : "surface"; }
const char* algorithm_name(Algorithm a) { return a == Algorithm::squig ? "squig" : "pnormal"; }

}  // namespace

void write_csv(std::ostream& os, const SampleBatch& batch) {
    for (int j = 0; j < batch.n; ++j) {
        if (j) os << ',';
        os << 'x' << j + 1;
    }
    os << '\n';
    for (std::size_t i = 0; i < batch.rows; ++i) {
        const auto row = batch.row(i);
        for (int j = 0; j < batch.n; ++j) {
            if (j) os << ',';
            os << format_double(row[j]);
        }
        os << '\n';
    }
}

void write_jsonl(std::ostream& os, const SampleBatch& batch) {
    for (std::size_t i = 0; i < batch.rows; ++i) {
        const auto row = batch.row(i);
        os << '[';
        for (int j = 0; j < batch.n; ++j) {
            if (j) os << ',';
            os << format_double(row[j]);
        }
        os << "]\n";
    }
}

void write_json(std::ostream& os, const SampleBatch& batch) {
    nlohmann::json doc{{"p", exponent_json(batch.p)},
                       {"q", exponent_json(batch.q)},
                       {"n", batch.n},
                       {"mode", mode_name(batch.mode)},
                       {"algorithm", algorithm_name(batch.algorithm)},
                       {"seed", batch.seed},
                       {"count", batch.rows}};
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < batch.rows; ++i) {
        const auto row = batch.row(i);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    doc["data"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

SampleBatch read_csv(std::istream& is, Exponent p, Exponent q, SampleMode mode,
                     Algorithm algorithm, std::uint64_t seed) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty csv");
    int n = 1;
    for (char c : line)
        if (c == ',') ++n;

    SampleBatch batch{p, q, n, mode, algorithm, seed, 0};
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        int got = 0;
        while (std::getline(ls, cell, ',')) {
            batch.data.push_back(std::strtod(cell.c_str(), nullptr));
            ++got;
        }
        if (got != n) throw std::invalid_argument("ragged csv row");
        ++batch.rows;
    }
    return batch;
}

std::string constants_json(const PCircleGrid& grid, const GeometryReport& report) {
    nlohmann::json doc{{"p", exponent_json(grid.p)},
                       {"q", exponent_json(grid.q)},
                       {"n", report.n},
                       {"pi_p", grid.pi_p},
                       {"quarter_length_q", grid.quarter_length_q},
                       {"V_n", report.V_n},
                       {"S_nq", report.S_nq}};
    return doc.dump(2);
}

void write_rel_diff_csv(std::ostream& os, const RelDiffCurve& curve) {
    os << "relative_area,diff\n";
    for (std::size_t i = 0; i < curve.rel_area.size(); ++i)
        os << format_double(curve.rel_area[i]) << ',' << format_double(curve.diff[i]) << '\n';
}

void write_squig_table_csv(std::ostream& os, const PCircleGrid& grid, int resolution) {
    os << "t,cos_p,sin_p\n";
    const double t_max = 2.0 * grid.pi_p;
    for (int i = 0; i <= resolution; ++i) {
        const double t = t_max * static_cast<double>(i) / resolution;
        os << format_double(t) << ',' << format_double(grid.cos_p(t)) << ','
           << format_double(grid.sin_p(t)) << '\n';
    }
}

}  // namespace pball
