#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepcrit/criteria.hpp"
#include "sepcrit/families.hpp"
#include "sepcrit/statefile.hpp"
#include "sepcrit/sweep.hpp"

namespace {

using namespace sepcrit;

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> params;
    for (const std::string& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ParamOutOfRange("expected key=value, got '" + kv + "'");
        try {
            params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParamOutOfRange("cannot parse value in '" + kv + "'");
        }
    }
    return params;
}

void parse_range(const std::string& range, double& from, double& to,
                 double& step) {
    const auto c1 = range.find(':');
    const auto c2 = (c1 == std::string::npos) ? std::string::npos
                                              : range.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ParamOutOfRange("range must be from:to:step, got '" + range + "'");
    try {
        from = std::stod(range.substr(0, c1));
        to = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
        step = std::stod(range.substr(c2 + 1));
    } catch (const std::exception&) {
        throw ParamOutOfRange("cannot parse range '" + range + "'");
    }
}

int run_check(const std::string& path, double tol, bool machine) {
    auto [dims, matrix] = read_state_file(path);
    DensityMatrix rho = validate_density_matrix(matrix, dims, tol);
    Evaluation eval = evaluate_all(rho, tol);

    if (!machine)
        std::cout << "state: dims " << dims.d_A << "x" << dims.d_B << "\n";
    for (const CriterionResult& r : eval.results) {
        if (machine)
            std::cout << "criterion=" << r.criterion_name;
        else
            std::cout << r.criterion_name << ":";
        for (const auto& [name, value] : r.statistics)
            std::cout << ' ' << name << '=' << fmt6(value);
        std::cout << " threshold=" << fmt6(r.threshold)
                  << " verdict=" << to_string(r.verdict) << "\n";
    }
    if (machine)
        std::cout << "overall=" << to_string(eval.overall) << "\n";
    else
        std::cout << "overall: " << to_string(eval.overall) << "\n";
    return 0;
}

int run_sweep_cmd(const std::string& family, const std::string& range,
                  const std::string& out_path, double tol) {
    double from = 0, to = 0, step = 0;
    parse_range(range, from, to, step);
    SweepResult result = run_sweep(family, from, to, step, tol);

    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw Error("cannot open '" + out_path + "' for writing");
    out << sweep_csv(result);

    auto report = [](const char* name, const std::optional<double>& x) {
        if (x)
            std::cout << "crossing " << name << ": param=" << fmt6(*x) << "\n";
        else
            std::cout << "crossing " << name << ": none\n";
    };
    report("verdict_ppt", result.crossing_ppt);
    report("verdict_realign", result.crossing_realign);
    report("verdict_smin", result.crossing_smin);
    std::cout << "rows=" << result.rows.size() << " out=" << out_path << "\n";
    return 0;
}

int run_gen(const std::string& family, const std::vector<std::string>& kvs,
            const std::string& out_path) {
    DensityMatrix rho = make_family(family, parse_params(kvs));
    write_state_file(out_path, rho);
    std::cout << "wrote " << family << " (" << rho.dims().d_A << "x"
              << rho.dims().d_B << ") to " << out_path << "\n";
    return 0;
}

int run_bench(int d, int trials, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    double full_seconds = 0.0;
    double min_only_seconds = 0.0;
    int below_threshold = 0;
    const double threshold = 1.0 / (static_cast<double>(d) * d);

    for (int t = 0; t < trials; ++t) {
        DensityMatrix rho = random_ginibre_state(d, d, seed + t);
        ComplexMatrix r = realign(rho);

        auto t0 = clock::now();
        SingularSpectrum spec = singular_values(r);
        const double tn = spec.sum();
        auto t1 = clock::now();
        const double s_min_gram = min_singular_value_gram(r);
        auto t2 = clock::now();

        full_seconds += std::chrono::duration<double>(t1 - t0).count();
        min_only_seconds += std::chrono::duration<double>(t2 - t1).count();
        (void)tn;
        if (std::abs(spec.min() - s_min_gram) > 1e-10)
            throw std::runtime_error("s_min path disagreement at trial " +
                                     std::to_string(t));
        if (spec.min() < threshold)
            ++below_threshold;
    }
    std::printf("full_spectrum_mean_us=%.3f\n", 1e6 * full_seconds / trials);
    std::printf("min_singular_mean_us=%.3f\n", 1e6 * min_only_seconds / trials);
    std::printf("agreement=ok tol=1e-10 trials=%d\n", trials);
    std::printf("smin_below_threshold_rate=%.4f\n",
                static_cast<double>(below_threshold) / trials);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Separability criteria for bipartite quantum states"};
    app.require_subcommand(1);

    std::string path, family, range, out_path;
    std::vector<std::string> kvs;
    double tol = kCriterionTol;
    bool machine = false;
    int bench_d = 3, bench_trials = 10;
    std::uint64_t bench_seed = 1;

    auto* check = app.add_subcommand("check", "evaluate all criteria on a state file");
    check->add_option("file", path)->required();
    check->add_option("--tol", tol);
    check->add_flag("--machine", machine, "machine-readable key=value output");

    auto* sweep = app.add_subcommand("sweep", "scan a family parameter to CSV");
    sweep->add_option("--family", family)->required();
    sweep->add_option("--range", range, "from:to:step")->required();
    sweep->add_option("--out", out_path)->required();
    sweep->add_option("--tol", tol);

    auto* gen = app.add_subcommand("gen", "write a built-in family state file");
    gen->add_option("--family", family)->required();
    gen->add_option("--param", kvs, "key=value, repeatable");
    gen->add_option("--out", out_path)->required();

    auto* bench = app.add_subcommand("bench", "time full-spectrum vs min-singular paths");
    bench->add_option("--d", bench_d);
    bench->add_option("--trials", bench_trials);
    bench->add_option("--seed", bench_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed())
            return run_check(path, tol, machine);
        if (sweep->parsed())
            return run_sweep_cmd(family, range, out_path, tol);
        if (gen->parsed())
            return run_gen(family, kvs, out_path);
        if (bench->parsed()) {
            if (bench_d < 2 || bench_trials < 1)
                throw ParamOutOfRange("bench requires d >= 2 and trials >= 1");
            return run_bench(bench_d, bench_trials, bench_seed);
        }
    } catch (const sepcrit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
