#include "orbitsieve/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orbitsieve/errors.hpp"

namespace orbitsieve {

namespace fs = std::filesystem;

void write_file_atomic(const std::string& path, const std::string& contents) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << contents;
    }
    fs::rename(tmp, target);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render_orbit_csv(const OrbitBall& ball) {
    std::ostringstream out;
    out << "x,y,z\n";
    for (const auto& p : ball.points)
        out << p[0] << ',' << p[1] << ',' << p[2] << '\n';
    return out.str();
}

std::string render_delta_csv(const std::vector<std::pair<double, std::int64_t>>& samples) {
    std::ostringstream out;
    out << "T,count\n";
    for (const auto& [t, c] : samples) out << format_double(t) << ',' << c << '\n';
    return out.str();
}

std::string render_densities_csv(const std::vector<DensityReportRow>& rows) {
    std::ostringstream out;
    out << "q,mode,orbit_size,vanishing_count,omega_num,omega_den,reference_value,match_flag\n";
    for (const auto& r : rows)
        out << r.q << ',' << (r.mode == DensityMode::point ? "point" : "line") << ','
            << r.orbit_size << ',' << r.vanishing_count << ',' << r.omega.num() << ','
            << r.omega.den() << ',' << r.reference_value << ',' << r.match_flag << '\n';
    return out.str();
}

std::string render_sieve_functions_csv(const SieveFunctionTable& table, int stride) {
    std::ostringstream out;
    out << "u,sigma,F,f\n";
    for (std::size_t i = stride; i < table.sigma.size();
         i += static_cast<std::size_t>(stride)) {
        const double u = static_cast<double>(i) * table.h;
        out << format_double(u) << ',' << format_double(table.sigma[i]) << ',';
        if (table.has_Ff() && i < table.big_f.size())
            out << format_double(table.big_f[i]) << ',' << format_double(table.small_f[i]);
        else
            out << ',';
        out << '\n';
    }
    return out.str();
}

std::string render_r_values_csv(const std::vector<SaturationRow>& rows) {
    std::ostringstream out;
    out << "example,mode,theta,alpha,kappa,zeta_star,m_star,R,provenance,"
           "literature_R,delta_star\n";
    for (const auto& r : rows) {
        out << r.example << ','
            << (r.mode == SieveMode::classic ? "classic" : "projective") << ','
            << format_double(r.theta) << ',' << format_double(r.alpha) << ','
            << format_double(r.kappa) << ',' << format_double(r.zeta_star) << ','
            << format_double(r.m_star) << ',' << r.R << ',' << r.provenance << ',';
        if (r.literature_R) out << *r.literature_R;
        out << ',' << format_double(r.delta_star) << '\n';
    }
    return out.str();
}

std::string render_distribution_csv(const DistributionReport& report) {
    std::ostringstream out;
    out << "q,mass_q,predicted,abs_error,rel_error,flag\n";
    for (const auto& r : report.rows) {
        out << r.q << ',' << r.mass_q << ',';
        if (r.bad_modulus) {
            out << ",,,bad_modulus\n";
            continue;
        }
        out << format_double(r.predicted) << ',' << format_double(r.abs_error) << ','
            << (std::isinf(r.rel_error) ? "inf" : format_double(r.rel_error)) << ",ok\n";
    }
    return out.str();
}

std::string render_almost_primes_csv(const std::vector<AlmostPrimeRow>& rows) {
    std::ostringstream out;
    out << "R,count,density_ratio\n";
    for (const auto& r : rows)
        out << r.R << ',' << r.count << ',' << format_double(r.density_ratio) << '\n';
    return out.str();
}

std::vector<DensityReportRow> density_rows(const ModularOrbit& morbit,
                                           const CoordinateFunction& f) {
    const char label = example_label(f.tag());
    std::vector<DensityReportRow> rows;
    for (const auto mode : {DensityMode::point, DensityMode::line}) {
        const auto d = local_density(morbit, f, mode);
        DensityReportRow row;
        row.q = morbit.modulus;
        row.mode = mode;
        row.orbit_size =
            mode == DensityMode::point ? d.point_orbit_size : d.line_orbit_size;
        row.vanishing_count =
            mode == DensityMode::point ? d.numerator_points : d.numerator_lines;
        row.omega = d.omega;
        try {
            const auto ref = omega_reference(label, morbit.modulus);
            if (ref.is_band) {
                row.reference_value = ref.value.str();
                const double err = std::abs(d.omega.as_double() - ref.value.as_double());
                row.match_flag = err <= ref.band_radius ? "band_ok" : "band_fail";
            } else {
                row.reference_value = ref.value.str();
                row.match_flag = d.omega == ref.value ? "exact" : "mismatch";
            }
        } catch (const Error&) {
            row.match_flag = "n/a";  // composite q or prime below the threshold
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace orbitsieve
