// Command-line front end: build sequence sets, compute correlation/ambiguity
// tolerances, evaluate Gauss sums, and run bound-verification sweeps.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gqs/analysis.hpp"
#include "gqs/gauss.hpp"
#include "gqs/harness.hpp"
#include "gqs/report.hpp"
#include "gqs/sequences.hpp"
#include "gqs/validation.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
    std::string out;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string format = "json";
    std::int64_t max_modulus = 20000;
};

void check_modulus_cap(std::int64_t modulus, const GlobalOpts& g) {
    if (modulus > g.max_modulus)
        throw gqs::ValidationError("cli.modulus_cap",
                                   "modulus " + std::to_string(modulus) +
                                       " exceeds the cap; raise --max-modulus explicitly");
}

void write_or_print(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + out);
    f << text;
}

std::string flatten_csv(const json& j, const std::string& prefix = "") {
    std::string rows;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            rows += flatten_csv(*it, key);
        } else if (it->is_array()) {
            rows += key + "," + it->dump() + "\n";
        } else {
            rows += key + "," + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
        }
    }
    return rows;
}

std::string render(const json& j, const GlobalOpts& g) {
    if (g.format == "csv") return "key,value\n" + flatten_csv(j);
    return gqs::canonical_json(j);
}

gqs::SetSpec spec_from_flags(const std::string& family, std::int64_t K, std::int64_t m,
                             std::int64_t modulus) {
    gqs::SetSpec spec;
    if (family == "C1") spec.kind = gqs::SetKind::C1;
    else if (family == "C2") spec.kind = gqs::SetKind::C2;
    else if (family == "A1") spec.kind = gqs::SetKind::A1;
    else if (family == "A2") spec.kind = gqs::SetKind::A2;
    else throw gqs::ValidationError("cli.family", "family must be one of C1, C2, A1, A2");
    spec.K = K;
    spec.m = m;
    spec.modulus = modulus;
    return spec;
}

json set_summary(const gqs::SequenceSet& set) {
    json j = {{"kind", gqs::set_kind_name(set.kind)},
              {"K", static_cast<std::int64_t>(set.members.size())},
              {"modulus", set.modulus},
              {"small_modulus_warning", set.small_modulus_warning}};
    if (set.m > 0) j["m"] = set.m;
    if (set.laz) j["laz"] = {{"z_x", set.laz->z_x}, {"z_y", set.laz->z_y}};
    json roots = json::array();
    for (const auto& s : set.members) roots.push_back(s.root);
    j["roots"] = roots;
    return j;
}

json tolerance_json(const gqs::ToleranceResult& t) {
    const auto wit = [](const gqs::WitnessPoint& w) {
        return json{{"root1", w.root1}, {"root2", w.root2}, {"tau", w.tau}, {"nu", w.nu}};
    };
    return {{"auto_tol", t.auto_tol},       {"cross_tol", t.cross_tol},
            {"max_tol", t.max_tol},         {"witness", wit(t.witness)},
            {"auto_witness", wit(t.auto_witness)}, {"cross_witness", wit(t.cross_witness)},
            {"profiles", t.profiles},       {"spot_checks", t.spot_checks}};
}

int cmd_construct(const GlobalOpts& g, const gqs::SetSpec& spec) {
    const gqs::SequenceSet set = gqs::build_set(spec);
    if (g.out.empty()) throw gqs::ValidationError("cli.out", "construct requires --out DIR");
    std::filesystem::create_directories(g.out);
    for (const auto& seq : set.members) {
        const std::string name = std::string(gqs::set_kind_name(set.kind)) + "_" +
                                 std::to_string(set.modulus) + "_r" + std::to_string(seq.root) +
                                 ".csv";
        gqs::write_sequence_csv(seq, (std::filesystem::path(g.out) / name).string());
    }
    const json summary = set_summary(set);
    std::ofstream f(std::filesystem::path(g.out) / "set.json", std::ios::binary);
    f << gqs::canonical_json(summary);
    std::cout << gqs::canonical_json(summary);
    return 0;
}

int cmd_analyze(const GlobalOpts& g, const gqs::SetSpec& spec, std::int64_t zx, std::int64_t zy,
                const std::string& engine, double spot_check, const std::string& profiles_dir) {
    const gqs::SequenceSet set = gqs::build_set(spec);
    gqs::AnalysisOptions opts;
    opts.engine = engine == "direct" ? gqs::Engine::Direct : gqs::Engine::Fast;
    opts.workers = g.workers;
    opts.seed = g.seed;
    opts.spot_check_fraction = spot_check;

    if (!profiles_dir.empty()) {
        std::filesystem::create_directories(profiles_dir);
        for (std::size_t i = 0; i < set.members.size(); ++i)
            for (std::size_t j = i; j < set.members.size(); ++j) {
                const auto p =
                    gqs::correlation_profile(set.members[i], set.members[j], opts.engine);
                const std::string name = "profile_r" + std::to_string(set.members[i].root) +
                                         "_r" + std::to_string(set.members[j].root) + ".csv";
                gqs::emit_profile(p, (std::filesystem::path(profiles_dir) / name).string());
            }
    }

    json out = {{"set", set_summary(set)}};
    out["delta"] = tolerance_json(gqs::delta_tolerances(set, opts));

    std::optional<gqs::LazRegion> laz = set.laz;
    if (zx > 0 && zy > 0) laz = gqs::LazRegion{zx, zy};
    if (laz) {
        out["theta"] = tolerance_json(gqs::theta_tolerances(set, *laz, opts));
        out["theta"]["z_x"] = laz->z_x;
        out["theta"]["z_y"] = laz->z_y;
    }
    write_or_print(render(out, g), g.out);
    return 0;
}

int cmd_gauss(const GlobalOpts& g, std::int64_t N, std::int64_t a, std::int64_t q, double x_real,
              double theta, bool decompose, bool certificate) {
    gqs::GaussSumInput in = q > 0 ? gqs::GaussSumInput::fraction(N, a, q, theta)
                                  : gqs::GaussSumInput::real(N, x_real, theta);
    const gqs::cdouble s = gqs::gauss_sum_direct(in);
    json out = {{"N", N},
                {"x", in.x},
                {"theta", theta},
                {"re", s.real()},
                {"im", s.imag()},
                {"magnitude", std::abs(s)}};
    if (q > 0) {
        out["a"] = a;
        out["q"] = q;
        out["explicit_gauss_bound"] = gqs::explicit_gauss_bound(q);
    }
    if (decompose) {
        const gqs::ParisDecomposition pd = gqs::paris_decompose(in);
        const auto c = [](gqs::cdouble z) { return json{{"re", z.real()}, {"im", z.imag()}}; };
        out["decomposition"] = {{"main_term", c(pd.main_term)},
                                {"mu_term", c(pd.mu_term)},
                                {"E_term", c(pd.E_term)},
                                {"g_term", c(pd.g_term)},
                                {"residual_R", c(pd.residual_R)},
                                {"residual_abs", std::abs(pd.residual_R)},
                                {"M", pd.M},
                                {"epsilon", pd.epsilon}};
        out["remainder"] = {{"T_abs", gqs::main_term_remainder(in)},
                         {"bound", 2.035 / std::sqrt(in.x) + 3.0}};
    }
    if (certificate && q > 0) {
        const gqs::BoundCertificate cert =
            gqs::reduction_certificate(gqs::ReducedFraction(a % q, q));
        out["certificate"] = {{"chain", cert.chain.terms},
                              {"per_level_terms", cert.per_level_terms},
                              {"telescoped_bound", cert.telescoped_bound},
                              {"explicit_gauss_bound", cert.explicit_gauss_bound}};
    }
    write_or_print(render(out, g), g.out);
    return 0;
}

int cmd_verify(const GlobalOpts& g, gqs::SweepConfig cfg) {
    cfg.rng_seed = g.seed;
    cfg.workers = g.workers;
    const gqs::VerificationReport report = gqs::run_sweep(cfg);
    std::fprintf(stderr, "[%s] %s: observed %.6g vs bound %.6g (%.0f ms)\n",
                 report.pass ? "pass" : "FAIL", report.target.c_str(), report.observed_max,
                 report.bound_value, report.wall_time_ms);
    write_or_print(render(report.to_json(), g), g.out);
    return report.pass ? 0 : 1;
}

int cmd_sweep(const GlobalOpts& g, const std::string& config_path) {
    const auto configs = gqs::load_config_file(config_path);
    bool all_pass = true;
    int idx = 0;
    for (auto cfg : configs) {
        cfg.workers = g.workers;
        const gqs::VerificationReport report = gqs::run_sweep(cfg);
        all_pass = all_pass && report.pass;
        std::fprintf(stderr, "[%s] %s: observed %.6g vs bound %.6g (%.0f ms)\n",
                     report.pass ? "pass" : "FAIL", report.target.c_str(), report.observed_max,
                     report.bound_value, report.wall_time_ms);
        if (!g.out.empty()) {
            std::filesystem::create_directories(g.out);
            const std::string name =
                "report_" + std::to_string(idx) + "_" + report.target + ".json";
            gqs::emit_report(report, (std::filesystem::path(g.out) / name).string());
        } else {
            std::cout << render(report.to_json(), g);
        }
        ++idx;
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-sum bounds and low-ambiguity polyphase sequence toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // let global flags (--out, --seed, ...) follow the subcommand

    GlobalOpts g;
    app.add_option("--out", g.out, "Output file or directory");
    app.add_option("--seed", g.seed, "RNG seed for sampled sweeps");
    app.add_option("--workers", g.workers, "Worker thread count (results are identical for any value)");
    app.add_option("--format", g.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--max-modulus", g.max_modulus,
                   "Desk-scale cap on L, p and q (default 20000)");

    std::string family = "C1";
    std::int64_t K = 2, m = 1, modulus = 15, zx = 0, zy = 0;
    std::string engine = "fast";
    double spot_check = 0.01;

    auto* construct = app.add_subcommand("construct", "Build a sequence set and export CSVs");
    construct->add_option("--family", family, "C1, C2, A1 or A2")->required();
    construct->add_option("--K", K, "Set size parameter");
    construct->add_option("--m", m, "C2 spacing parameter");
    construct->add_option("--modulus", modulus, "Sequence length (L or p)")->required();

    auto* analyze = app.add_subcommand("analyze", "Correlation/ambiguity tolerances for a set");
    analyze->add_option("--family", family, "C1, C2, A1 or A2")->required();
    analyze->add_option("--K", K, "Set size parameter");
    analyze->add_option("--m", m, "C2 spacing parameter");
    analyze->add_option("--modulus", modulus, "Sequence length (L or p)")->required();
    analyze->add_option("--zx", zx, "LAZ delay half-width (overrides the built-in window)");
    analyze->add_option("--zy", zy, "LAZ Doppler half-width");
    analyze->add_option("--engine", engine, "fast or direct")
        ->check(CLI::IsMember({"fast", "direct"}));
    analyze->add_option("--spot-check", spot_check, "Fraction of fast profiles checked directly");
    std::string profiles_dir;
    analyze->add_option("--profiles", profiles_dir,
                        "Directory for per-pair correlation profile CSVs (tau,nu,re,im,magnitude)");

    std::int64_t N = 5, a = 0, q = 0;
    double x_real = 0.5, theta = 0.0;
    bool decompose = false, certificate = false;
    auto* gauss = app.add_subcommand("gauss", "Evaluate or decompose a single Gauss sum");
    gauss->add_option("--N", N, "Term count")->required();
    gauss->add_option("--a", a, "Numerator of x = a/q");
    gauss->add_option("--q", q, "Denominator of x = a/q");
    gauss->add_option("--x", x_real, "Real x (used when --q is absent)");
    gauss->add_option("--theta", theta, "Linear phase offset");
    gauss->add_flag("--decompose", decompose, "Include the exact decomposition pieces");
    gauss->add_flag("--certificate", certificate, "Include the Euclid-chain bound certificate");

    std::string target = "gauss_bound";
    gqs::SweepConfig overrides;
    bool has_q_hi = false, has_samples = false, has_nmax = false, has_terms = false;
    std::int64_t q_hi = 200, samples = -1, n_max = 1001;
    int fib_terms = 20;
    auto* verify = app.add_subcommand("verify", "Run one bound-verification sweep target");
    verify->add_option("--target", target,
                       "gauss_bound remainder paris_residual littlewood fib_zeta c1_bound c2_bound "
                       "a1_bound a2_bound welch_sanity")
        ->required();
    verify->add_option("--q-hi", q_hi, "GaussBound: exhaustive q upper limit")
        ->each([&](const std::string&) { has_q_hi = true; });
    verify->add_option("--samples", samples, "Random sample count")
        ->each([&](const std::string&) { has_samples = true; });
    verify->add_option("--n-max", n_max, "Littlewood: largest odd N")
        ->each([&](const std::string&) { has_nmax = true; });
    verify->add_option("--terms", fib_terms, "FibZeta: partial sum length")
        ->each([&](const std::string&) { has_terms = true; });

    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "Run a batch of sweeps from a JSON config file");
    sweep->add_option("--config", config_path, "Config file (object or array of objects)")
        ->required()
        ->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            check_modulus_cap(modulus, g);
            return cmd_construct(g, spec_from_flags(family, K, m, modulus));
        }
        if (analyze->parsed()) {
            check_modulus_cap(modulus, g);
            return cmd_analyze(g, spec_from_flags(family, K, m, modulus), zx, zy, engine,
                               spot_check, profiles_dir);
        }
        if (gauss->parsed()) {
            check_modulus_cap(std::max(q, N), g);
            return cmd_gauss(g, N, a, q, x_real, theta, decompose, certificate);
        }
        if (verify->parsed()) {
            gqs::SweepConfig cfg = gqs::default_config(gqs::target_from_name(target));
            if (has_q_hi) cfg.q_hi = q_hi;
            if (has_samples) cfg.random_samples = samples;
            if (has_nmax) cfg.n_max = n_max;
            if (has_terms) cfg.fib_terms = fib_terms;
            cfg.modulus_cap = g.max_modulus;
            return cmd_verify(g, cfg);
        }
        if (sweep->parsed()) return cmd_sweep(g, config_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
