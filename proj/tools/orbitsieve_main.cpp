#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitsieve/config.hpp"
#include "orbitsieve/errors.hpp"
#include "orbitsieve/report.hpp"

namespace {

using namespace orbitsieve;

namespace fs = std::filesystem;

std::string out_path(const RunConfig& cfg, const std::optional<std::string>& out_override,
                     const std::string& file) {
    const fs::path dir = out_override.value_or(cfg.out_dir);
    return (dir / file).string();
}

RunConfig config_or_defaults(const std::optional<std::string>& path) {
    if (path) return load_config_file(*path);
    return parse_config(R"({"preset": "pythagorean_full"})");
}

std::vector<ModularOrbit> closures_for_moduli(const RunConfig& cfg, int threads) {
    const auto& qs = cfg.moduli;
    std::vector<ModularOrbit> out(qs.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < qs.size(); ++i)
            out[i] = orbit_mod_q(cfg.orbit, qs[i]);
        return out;
    }
    // distinct moduli are independent; results land at fixed indices, so the
    // report stays deterministic
    std::vector<std::future<ModularOrbit>> futs;
    futs.reserve(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i)
        futs.push_back(std::async(std::launch::async,
                                  [&cfg, q = qs[i]] { return orbit_mod_q(cfg.orbit, q); }));
    for (std::size_t i = 0; i < qs.size(); ++i) out[i] = futs[i].get();
    return out;
}

int run_orbit(const RunConfig& cfg, const std::optional<std::string>& out_dir) {
    const OrbitBall ball = orbit_ball(cfg.orbit, cfg.T, cfg.limits);
    if (ball.points.empty())
        throw ValidationError("empty orbit ball: T is below the base-point norm");
    write_file_atomic(out_path(cfg, out_dir, "orbit.csv"), render_orbit_csv(ball));

    std::vector<std::pair<double, std::int64_t>> samples;
    for (const double t : cfg.delta_samples) {
        const auto b = orbit_ball(cfg.orbit, t, cfg.limits);
        if (b.count() >= 1) samples.emplace_back(t, static_cast<std::int64_t>(b.count()));
    }
    write_file_atomic(out_path(cfg, out_dir, "delta.csv"), render_delta_csv(samples));
    const double delta = estimate_delta(samples);
    std::cout << "points=" << ball.count() << " delta_estimate=" << format_double(delta)
              << "\n";
    return 0;
}

int run_densities(const RunConfig& cfg, const std::optional<std::string>& out_dir,
                  int threads) {
    const auto closures = closures_for_moduli(cfg, threads);
    std::vector<DensityReportRow> rows;
    for (const auto& m : closures)
        for (auto& row : density_rows(m, cfg.f)) rows.push_back(std::move(row));
    write_file_atomic(out_path(cfg, out_dir, "densities.csv"), render_densities_csv(rows));
    std::cout << "densities for " << closures.size() << " moduli written\n";
    return 0;
}

int run_sieve_functions(const RunConfig& cfg, const std::optional<std::string>& out_dir) {
    const double kappa = cfg.kappa();
    auto table = solve_sigma(kappa, cfg.sieve_u_max, cfg.sieve_h);
    if (cfg.alpha_kappa)
        table = solve_F_f(kappa, *cfg.alpha_kappa, beta_for_kappa(kappa),
                          std::move(table));
    const int stride = std::max(1, static_cast<int>(std::lround(0.01 / table.h)));
    write_file_atomic(out_path(cfg, out_dir, "sieve_functions.csv"),
                      render_sieve_functions_csv(table, stride));
    std::cout << "sieve functions solved for kappa=" << kappa
              << (table.has_Ff() ? " with F,f" : " (sigma only; no alpha_kappa)") << "\n";
    return 0;
}

int run_r_values(const RunConfig& cfg, const std::optional<std::string>& out_dir) {
    const auto rows = saturation_table();
    write_file_atomic(out_path(cfg, out_dir, "r_values.csv"), render_r_values_csv(rows));
    for (const auto& r : rows)
        std::cout << r.example << ' '
                  << (r.mode == SieveMode::classic ? "classic" : "projective")
                  << " m*=" << format_double(r.m_star) << " R=" << r.R << '\n';
    return 0;
}

int run_distribution(const RunConfig& cfg, const std::optional<std::string>& out_dir,
                     int threads) {
    const SequenceA seq = build_sequence(cfg.orbit, cfg.f, cfg.T, cfg.limits);
    std::vector<LocalDensityValue> densities;
    DistributionReport report;
    std::vector<std::int64_t> good;
    for (const std::int64_t q : cfg.moduli) {
        try {
            (void)orbit_mod_q(cfg.orbit, q);  // validates the modulus
            good.push_back(q);
        } catch (const BadModulusError&) {
            DistributionRow row;
            row.q = q;
            row.mass_q = seq.mass_along(q);
            row.bad_modulus = true;
            report.rows.push_back(row);
        }
    }
    RunConfig good_cfg = cfg;
    good_cfg.moduli = good;
    const auto closures = closures_for_moduli(good_cfg, threads);
    for (const auto& m : closures)
        densities.push_back(local_density(m, cfg.f, DensityMode::line));
    auto computed = distribution_report(seq, densities);
    for (auto& row : report.rows) computed.rows.push_back(row);
    std::sort(computed.rows.begin(), computed.rows.end(),
              [](const auto& a, const auto& b) { return a.q < b.q; });
    write_file_atomic(out_path(cfg, out_dir, "distribution.csv"),
                      render_distribution_csv(computed));
    std::cout << "mass=" << seq.mass << " zeros=" << seq.zero_count
              << " max_n=" << seq.max_n << "\n";
    return 0;
}

int run_almost_primes(const RunConfig& cfg, const std::optional<std::string>& out_dir) {
    const SequenceA seq = build_sequence(cfg.orbit, cfg.f, cfg.T, cfg.limits);
    const auto counting =
        cfg.distinct_primes ? PrimeCounting::distinct : PrimeCounting::with_multiplicity;
    std::vector<AlmostPrimeRow> rows;
    for (int r = 0; r <= cfg.almost_prime_max_R; ++r) {
        const auto c = almost_prime_count(seq, cfg.f, r, counting);
        rows.push_back({r, c.count, c.density_ratio});
    }
    write_file_atomic(out_path(cfg, out_dir, "almost_primes.csv"),
                      render_almost_primes_csv(rows));
    const auto total = almost_prime_count(seq, cfg.f, std::nullopt, counting);
    std::cout << "mass=" << seq.mass << " count(R=inf)=" << total.count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit enumeration, local densities, and weighted-sieve saturation bounds"};
    app.require_subcommand(1);
    app.fallthrough();  // app-level flags may follow the subcommand

    std::optional<std::string> config_path;
    std::optional<std::string> out_dir;
    int threads = 1;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--threads", threads, "worker threads for per-modulus closures")
        ->check(CLI::PositiveNumber);

    auto* cmd_orbit = app.add_subcommand("orbit", "enumerate orbit ball, dump points, estimate delta");
    auto* cmd_dens = app.add_subcommand("densities", "mod-q local density report");
    auto* cmd_sf = app.add_subcommand("sieve-functions", "solve sigma/F/f tables");
    auto* cmd_rv = app.add_subcommand("r-values", "saturation-number table");
    auto* cmd_dist = app.add_subcommand("distribution", "|A_q| vs omega(q)|A| report");
    auto* cmd_ap = app.add_subcommand("almost-primes", "almost-prime counts per R");

    CLI11_PARSE(app, argc, argv);

    try {
        const RunConfig cfg = config_or_defaults(config_path);
        std::cout << "effective config:\n" << cfg.echo_json() << "\n";
        if (cmd_orbit->parsed()) return run_orbit(cfg, out_dir);
        if (cmd_dens->parsed()) return run_densities(cfg, out_dir, threads);
        if (cmd_sf->parsed()) return run_sieve_functions(cfg, out_dir);
        if (cmd_rv->parsed()) return run_r_values(cfg, out_dir);
        if (cmd_dist->parsed()) return run_distribution(cfg, out_dir, threads);
        if (cmd_ap->parsed()) return run_almost_primes(cfg, out_dir);
    } catch (const ResourceLimitError& e) {
        std::cerr << R"({"error":{"code":"resource","message":")" << e.what() << "\"}}\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << R"({"error":{"code":"validation","message":")" << e.what() << "\"}}\n";
        return 2;
    } catch (const BadModulusError& e) {
        std::cerr << R"({"error":{"code":"validation","message":")" << e.what() << "\"}}\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << R"({"error":{"code":"runtime","message":")" << e.what() << "\"}}\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << R"({"error":{"code":"internal","message":")" << e.what() << "\"}}\n";
        return 1;
    }
    return 0;
}
