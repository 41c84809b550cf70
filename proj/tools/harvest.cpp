// harvest: single points, sweeps, sudden-death and gap searches, oracle checks.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include "btzharvest/config.hpp"
#include "btzharvest/csv.hpp"
#include "btzharvest/errors.hpp"
#include "btzharvest/oracle.hpp"
#include "btzharvest/sweep.hpp"

namespace {

using namespace btzharvest;

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kNumerical = 3;
constexpr int kBracket = 4;

struct Inputs {
    std::string config_path;
    std::map<std::string, std::string> overrides;
};

// One --key flag per config key, e.g. --gap_sigma 0.3 or --axis.count 50.
void add_config_flags(CLI::App& app, Inputs& in) {
    app.add_option("-c,--config", in.config_path, "key = value run configuration")->check(CLI::ExistingFile);
    for (const std::string& key : config_keys()) {
        app.add_option_function<std::string>(
            "--" + key, [&in, key](const std::string& v) { in.overrides[key] = v; }, "override " + key);
    }
}

ConfigValues resolve(const Inputs& in) {
    ConfigValues v = in.config_path.empty() ? ConfigValues{} : load_config_file(in.config_path);
    for (const auto& [k, value] : in.overrides) set_config_value(v, k, value);
    return v;
}

void print_kv(const char* key, double value) { std::cout << key << " = " << format_double(value) << '\n'; }

int cmd_respond(const Inputs& in) {
    const ConfigValues v = resolve(in);
    const ExperimentPoint point = point_from(v);
    validate(point);
    const SweepRow row = evaluate_point(point, quadrature_from(v));
    write_csv_header(std::cout);
    write_csv_row(std::cout, row);
    return row.ok() ? kOk : (row.status == "error:domain" ? kValidation : kNumerical);
}

int cmd_sweep(const Inputs& in, const std::string& out_path, int threads) {
    const SweepSpec spec = sweep_spec_from(resolve(in));
    const auto rows = run_sweep(spec, threads);
    if (out_path.empty() || out_path == "-") {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw DomainError("cannot write '" + out_path + "'");
        write_csv(out, rows);
    }
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok(); });
    if (failed > 0) std::cerr << "harvest: " << failed << " of " << rows.size() << " points failed\n";
    return failed == static_cast<long>(rows.size()) ? kNumerical : kOk;
}

int cmd_find_death(const Inputs& in, double lo, double hi, double tol) {
    const ConfigValues v = resolve(in);
    const DeathLocation d = find_sudden_death(point_from(v), lo, hi, quadrature_from(v), tol);
    print_kv("d_death", d.distance);
    print_kv("bracket_lo", d.lo);
    print_kv("bracket_hi", d.hi);
    print_kv("margin_lo", d.margin_lo);
    print_kv("margin_hi", d.margin_hi);
    return kOk;
}

int cmd_optimize_gap(const Inputs& in, const std::string& objective, const GapSearch& search) {
    const ConfigValues v = resolve(in);
    const GapObjective obj =
        objective == "max_far_concurrence" ? GapObjective::max_far_concurrence : GapObjective::min_death_distance;
    const GapOptimum best = optimize_gap(point_from(v), obj, search, quadrature_from(v));
    if (best.at_edge) std::cerr << "harvest: warning: optimum sits on the gap bracket edge\n";
    print_kv("gap_sigma", best.gap);
    print_kv(objective.c_str(), best.value);
    std::cout << "at_edge = " << (best.at_edge ? "true" : "false") << '\n';
    return kOk;
}

int cmd_verify(const Inputs& in, double tol) {
    const ConfigValues v = resolve(in);
    const Configuration c = configure(point_from(v));
    const QuadratureSettings q = quadrature_from(v);
    const ResponseResult r = respond(c.spacetime, c.a, c.b, q);
    const double oa = oracle_P(c.spacetime, c.a).value.real();
    const double ob = oracle_P(c.spacetime, c.b).value.real();
    const std::complex<double> ox = oracle_X(c.spacetime, c.a, c.b).value;

    bool ok = true;
    auto line = [&](const char* name, double closed, double oracle) {
        const double rel = std::abs(closed - oracle) / std::abs(oracle);
        const bool pass = rel <= tol;
        ok = ok && pass;
        std::printf("%-6s closed %-22s oracle %-22s rel %.2e %s\n", name, format_double(closed).c_str(),
                    format_double(oracle).c_str(), rel, pass ? "ok" : "MISMATCH");
    };
    line("P_A", r.p_a, oa);
    line("P_B", r.p_b, ob);
    line("|X|", std::abs(r.x), std::abs(ox));
    line("re_X", r.x.real(), ox.real());
    line("im_X", r.x.imag(), ox.imag());
    return ok ? kOk : kNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement harvesting by static detectors outside a BTZ black hole"};
    app.require_subcommand(1);

    Inputs in;
    auto* respond = app.add_subcommand("respond", "P_A, P_B, X and the measures at one point (CSV)");
    add_config_flags(*respond, in);

    auto* sweep = app.add_subcommand("sweep", "one-axis parameter grid to CSV");
    add_config_flags(*sweep, in);
    std::string out_path;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    sweep->add_option("-o,--out", out_path, "output CSV (default stdout)");
    sweep->add_option("-j,--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    auto* death = app.add_subcommand("find-death", "horizon distance where harvesting stops");
    add_config_flags(*death, in);
    double dA_lo = 1e-3, dA_hi = 10.0, death_tol = 1e-4;
    death->add_option("--dA-lo", dA_lo, "bracket lower end")->capture_default_str();
    death->add_option("--dA-hi", dA_hi, "bracket upper end")->capture_default_str();
    death->add_option("--tol", death_tol, "bisection tolerance in dA")->capture_default_str();

    auto* gap = app.add_subcommand("optimize-gap", "best energy gap for one of two objectives");
    add_config_flags(*gap, in);
    std::string objective = "min_death_distance";
    GapSearch search;
    gap->add_option("--objective", objective)
        ->check(CLI::IsMember({"min_death_distance", "max_far_concurrence"}))
        ->capture_default_str();
    gap->add_option("--gap-lo", search.gap_lo)->capture_default_str();
    gap->add_option("--gap-hi", search.gap_hi)->capture_default_str();
    gap->add_option("--coarse", search.coarse_points, "coarse scan points")->capture_default_str();
    gap->add_option("--rel-tol", search.rel_tol, "golden-section tolerance")->capture_default_str();
    gap->add_option("--dA-lo", search.death_lo)->capture_default_str();
    gap->add_option("--dA-hi", search.death_hi)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "compare closed forms with direct double integrals");
    add_config_flags(*verify, in);
    double verify_tol = 1e-3;
    verify->add_option("--tol", verify_tol, "relative tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (*respond) return cmd_respond(in);
        if (*sweep) return cmd_sweep(in, out_path, threads);
        if (*death) return cmd_find_death(in, dA_lo, dA_hi, death_tol);
        if (*gap) return cmd_optimize_gap(in, objective, search);
        if (*verify) return cmd_verify(in, verify_tol);
    } catch (const DomainError& e) {
        std::cerr << "harvest: invalid input: " << e.what() << '\n';
        return kValidation;
    } catch (const BracketError& e) {
        std::cerr << "harvest: " << e.what() << " (f_lo = " << format_double(e.f_lo())
                  << ", f_hi = " << format_double(e.f_hi()) << ")\n";
        return kBracket;
    } catch (const std::exception& e) {
        std::cerr << "harvest: numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
    return kValidation;
}
