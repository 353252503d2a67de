// Regenerates tests/fixtures/thresholds.json: the frozen separation
// thresholds for the strict cases of the length-area dichotomy, produced by
// a high-resolution quadrature run (grid precision 1e7).
//
// Usage: make_fixtures [output-path]

#include <cmath>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "pball/geometry.hpp"

namespace {

constexpr int kOracleGridPrecision = 10000000;
constexpr int kOracleCurveResolution = 1000000;

double cdf_gap(const pball::PCircleGrid& grid, int n) {
    const pball::CdfTable fv = pball::volume_cdf(grid, n);
    const pball::CdfTable fs = pball::surface_cdf(grid, n);
    double gap = 0.0;
    for (std::size_t i = 0; i < fv.t.size(); ++i)
        gap = std::max(gap, std::abs(fv.F[i] - fs.F[i]));
    return gap;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string out_path = argc > 1 ? argv[1] : "tests/fixtures/thresholds.json";

    nlohmann::json doc;
    doc["oracle_grid_precision"] = kOracleGridPrecision;
    doc["oracle_curve_resolution"] = kOracleCurveResolution;

    nlohmann::json rel = nlohmann::json::array();
    const std::pair<double, double> strict_cases[] = {{1.5, 1.5}, {3, 3}, {4, 4}, {4, 2}};
    for (auto [pv, qv] : strict_cases) {
        const pball::Exponent p(pv), q(qv);
        std::cerr << "rel-diff oracle p=" << p.str() << " q=" << q.str() << "...\n";
        const pball::PCircleGrid grid = pball::build_grid(p, q, kOracleGridPrecision);
        const pball::RelDiffCurve curve = pball::rel_diff_curve(grid, kOracleCurveResolution);
        rel.push_back({{"p", p.str()}, {"q", q.str()}, {"max_abs_diff", curve.max_abs_diff}});
    }
    doc["rel_diff"] = std::move(rel);

    nlohmann::json gaps = nlohmann::json::array();
    for (double pv : {1.5, 3.0}) {
        const pball::Exponent p(pv);
        std::cerr << "slice-law gap oracle p=" << p.str() << " n=3...\n";
        const pball::PCircleGrid grid = pball::build_grid(p, p, kOracleGridPrecision);
        gaps.push_back({{"p", p.str()}, {"n", 3}, {"sup_gap", cdf_gap(grid, 3)}});
    }
    doc["cdf_gap"] = std::move(gaps);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << out_path << '\n';
        return 1;
    }
    out << doc.dump(2) << '\n';
    std::cerr << "wrote " << out_path << '\n';
    return 0;
}
