// pball: sample generators, constants, and verification experiments for
// n-dimensional p-balls.
//
// Exit codes: 0 success, 2 parameter error, 3 numerical failure,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "pball/experiments.hpp"
#include "pball/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParameter = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

struct Options {
    std::string p = "2";
    std::string q;  // defaults to p
    int n = 3;
    std::size_t count = 1000;
    std::size_t verify_count = 50000;
    std::string mode = "volume";
    std::string algorithm = "squig";
    std::string seed = std::to_string(pball::kDefaultSeed);
    std::string verify_seed = std::to_string(pball::kVerifySeed);
    int precision = 100000;
    int resolution = 2000;
    std::string kind = "reldiff";
    std::string output;
    std::string format = "csv";
    bool force_table = false;
    bool serial = false;
};

std::uint64_t parse_seed(const std::string& text) {
    if (text == "random") {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    return std::stoull(text);
}

pball::SampleMode parse_mode(const std::string& text) {
    if (text == "volume") return pball::SampleMode::volume;
    if (text == "surface") return pball::SampleMode::surface;
    throw std::invalid_argument("mode must be volume or surface");
}

// Data goes to stdout unless an output path was given; diagnostics always go
// to stderr.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_sample(const Options& opt) {
    const pball::Exponent p = pball::Exponent::parse(opt.p);
    const pball::Exponent q = opt.q.empty() ? p : pball::Exponent::parse(opt.q);
    const pball::SampleMode mode = parse_mode(opt.mode);
    const std::uint64_t seed = parse_seed(opt.seed);
    const pball::Execution exec =
        opt.serial ? pball::Execution::serial : pball::Execution::openmp;

    const pball::SampleBatch batch = [&] {
        if (opt.algorithm == "squig") {
            const pball::PCircleGrid grid = pball::build_grid(p, q, opt.precision);
            return pball::squig_sample(grid, opt.n, mode, opt.count, seed,
                                       {opt.force_table, exec});
        }
        if (opt.algorithm == "pnormal")
            return pball::pnormal_sample(p, opt.n, mode, opt.count, seed, {exec});
        throw std::invalid_argument("algorithm must be squig or pnormal");
    }();

    OutputTarget out(opt.output);
    if (opt.format == "csv")
        pball::write_csv(out.stream(), batch);
    else if (opt.format == "jsonl")
        pball::write_jsonl(out.stream(), batch);
    else if (opt.format == "json")
        pball::write_json(out.stream(), batch);
    else
        throw std::invalid_argument("format must be csv, jsonl or json");
    return kExitOk;
}

int run_constants(const Options& opt) {
    const pball::Exponent p = pball::Exponent::parse(opt.p);
    const pball::Exponent q = opt.q.empty() ? p : pball::Exponent::parse(opt.q);
    const pball::PCircleGrid grid = pball::build_grid(p, q, opt.precision);
    const pball::GeometryReport report = pball::geometry_report(grid, opt.n);
    OutputTarget out(opt.output);
    out.stream() << pball::constants_json(grid, report) << '\n';
    return kExitOk;
}

int run_curves(const Options& opt) {
    const pball::Exponent p = pball::Exponent::parse(opt.p);
    const pball::Exponent q = opt.q.empty() ? p : pball::Exponent::parse(opt.q);
    const pball::PCircleGrid grid = pball::build_grid(p, q, opt.precision);
    OutputTarget out(opt.output);
    if (opt.kind == "reldiff")
        pball::write_rel_diff_csv(out.stream(), pball::rel_diff_curve(grid, opt.resolution));
    else if (opt.kind == "squig")
        pball::write_squig_table_csv(out.stream(), grid, opt.resolution);
    else
        throw std::invalid_argument("curve kind must be reldiff or squig");
    return kExitOk;
}

int run_verify(const Options& opt) {
    pball::VerifyOptions vopt;
    vopt.precision = opt.precision;
    vopt.equivalence_count = opt.verify_count;
    vopt.dichotomy_count = opt.verify_count;
    vopt.oracle_count = 2 * opt.verify_count;
    vopt.seed = parse_seed(opt.verify_seed);
    vopt.exec = opt.serial ? pball::Execution::serial : pball::Execution::openmp;

    const auto results = pball::run_verification(vopt);
    OutputTarget out(opt.output);
    out.stream() << pball::experiment_results_to_json(results) << '\n';

    std::size_t bad = 0;
    for (const auto& r : results) {
        if (!r.ok()) {
            ++bad;
            std::cerr << "unexpected "
                      << (r.report.verdict == pball::Verdict::pass ? "pass" : "reject") << ": "
                      << r.report.name << " (statistic " << r.report.statistic << ", critical "
                      << r.report.critical_value << ")\n";
        }
    }
    std::cerr << results.size() - bad << "/" << results.size()
              << " experiments matched expectations\n";
    return bad == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform sampling in and on n-dimensional p-balls"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* sub, bool with_q = true) {
        sub->add_option("--p", opt.p, "ball norm exponent (decimal or 'inf')");
        if (with_q)
            sub->add_option("--q", opt.q, "measuring norm exponent (defaults to --p)");
        sub->add_option("--precision", opt.precision, "grid knot budget")
            ->check(CLI::Range(1000, 100000000));
        sub->add_option("--output", opt.output, "output path (default: stdout)");
    };

    CLI::App* sample = app.add_subcommand("sample", "generate points in or on the unit p-ball");
    add_common(sample);
    sample->add_option("--n", opt.n, "dimension")->check(CLI::Range(1, 1000));
    sample->add_option("--count", opt.count, "number of points")->check(CLI::PositiveNumber);
    sample->add_option("--mode", opt.mode, "volume or surface");
    sample->add_option("--algorithm", opt.algorithm, "squig or pnormal");
    sample->add_option("--seed", opt.seed, "64-bit seed, or 'random'");
    sample->add_option("--format", opt.format, "csv, jsonl or json");
    sample->add_flag("--force-table", opt.force_table,
                     "surface mode: always use the table path, even for p in {1,2,inf}");
    sample->add_flag("--serial", opt.serial, "disable the OpenMP row driver");

    CLI::App* constants =
        app.add_subcommand("constants", "pi_p, quarter q-length, V_n and S_nq as JSON");
    add_common(constants);
    constants->add_option("--n", opt.n, "dimension")->check(CLI::Range(2, 1000));

    CLI::App* curves = app.add_subcommand(
        "curves", "export the relative length-area difference or the cos_p/sin_p table");
    add_common(curves);
    curves->add_option("--resolution", opt.resolution, "points along the curve")
        ->check(CLI::Range(100, 100000000));
    curves->add_option("--kind", opt.kind, "reldiff or squig");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the equivalence/dichotomy experiment matrix, report as JSON");
    add_common(verify, false);
    verify->add_option("--count", opt.verify_count, "sample size per batch")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.verify_seed, "64-bit seed, or 'random'");
    verify->add_flag("--serial", opt.serial, "disable the OpenMP row driver");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParameter;
    }

    try {
        if (sample->parsed()) return run_sample(opt);
        if (constants->parsed()) return run_constants(opt);
        if (curves->parsed()) return run_curves(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitParameter;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitParameter;
}
