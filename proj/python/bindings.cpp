#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitsieve/config.hpp"
#include "orbitsieve/errors.hpp"
#include "orbitsieve/modular.hpp"
#include "orbitsieve/orbit.hpp"
#include "orbitsieve/sequence.hpp"
#include "orbitsieve/sieve.hpp"

namespace py = pybind11;
using namespace orbitsieve;

namespace {

Mat3 mat_from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.size() != 3) throw ValidationError("matrix needs 3 rows");
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        if (rows[i].size() != 3) throw ValidationError("matrix rows need 3 entries");
        for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

OrbitSpec spec_by_name(const std::string& preset) {
    auto s = preset_by_name(preset);
    if (!s) throw ValidationError("unknown preset \"" + preset + "\"");
    return *s;
}

CoordinateFunction f_by_name(const std::string& name) {
    auto f = CoordinateFunction::by_name(name);
    if (!f) throw ValidationError("unknown coordinate function \"" + name + "\"");
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "orbit enumeration, local densities, and weighted-sieve bounds";

    py::register_exception<Error>(m, "OrbitSieveError");

    m.def("preset_names", &preset_names);

    m.def(
        "evaluate_form",
        [](const std::vector<std::vector<std::int64_t>>& gram, const Vec3& x) {
            return TernaryForm(mat_from_rows(gram), 0).evaluate(x);
        },
        py::arg("gram"), py::arg("x"), "x^T F x for a symmetric integer gram matrix");

    m.def(
        "is_isometry",
        [](const std::vector<std::vector<std::int64_t>>& gram,
           const std::vector<std::vector<std::int64_t>>& g) {
            TernaryForm form(mat_from_rows(gram), 0);
            return is_isometry(form, mat_from_rows(g));
        },
        py::arg("gram"), py::arg("g"));

    m.def(
        "orbit_ball",
        [](const std::string& preset, double T) {
            const auto ball = orbit_ball(spec_by_name(preset), T);
            return ball.points;
        },
        py::arg("preset"), py::arg("T"),
        "sorted orbit points with |x| < T for a named preset");

    m.def("estimate_delta", &estimate_delta, py::arg("samples"));

    m.def(
        "local_density",
        [](const std::string& preset, const std::string& f_name, std::int64_t q,
           const std::string& mode) {
            const auto morbit = orbit_mod_q(spec_by_name(preset), q);
            const auto d = local_density(morbit, f_by_name(f_name),
                                         mode == "line" ? DensityMode::line
                                                        : DensityMode::point);
            py::dict out;
            out["q"] = d.modulus;
            out["omega"] = py::make_tuple(d.omega.num(), d.omega.den());
            out["point_orbit"] = d.point_orbit_size;
            out["line_orbit"] = d.line_orbit_size;
            out["vanishing_points"] = d.numerator_points;
            out["vanishing_lines"] = d.numerator_lines;
            return out;
        },
        py::arg("preset"), py::arg("f"), py::arg("q"), py::arg("mode") = "point");

    m.def("m_zeta", &m_zeta, py::arg("alpha"), py::arg("kappa"), py::arg("beta_k"),
          py::arg("zeta"));
    m.def("beta_for_kappa", &beta_for_kappa, py::arg("kappa"));

    m.def(
        "optimize_R",
        [](double alpha, double kappa, double beta_k) {
            const auto r = optimize_R(alpha, kappa, beta_k);
            return py::make_tuple(r.zeta_star, r.m_star, r.R);
        },
        py::arg("alpha"), py::arg("kappa"), py::arg("beta_k"));

    m.def("exponent_of_distribution",
          [](double delta, double theta, int degree, const std::string& mode) {
              return exponent_of_distribution(delta, theta, degree,
                                              mode == "projective"
                                                  ? SieveMode::projective
                                                  : SieveMode::classic);
          },
          py::arg("delta"), py::arg("theta"), py::arg("degree"),
          py::arg("mode") = "classic");

    m.def("delta_threshold_for_R",
          [](double theta, int degree, double kappa, const std::string& mode) {
              return delta_threshold_for_R(theta, degree, kappa,
                                           mode == "projective" ? SieveMode::projective
                                                                : SieveMode::classic);
          },
          py::arg("theta"), py::arg("degree"), py::arg("kappa"),
          py::arg("mode") = "classic");

    m.def("saturation_table", [] {
        py::list rows;
        for (const auto& r : saturation_table()) {
            py::dict d;
            d["example"] = r.example;
            d["mode"] = r.mode == SieveMode::classic ? "classic" : "projective";
            d["theta"] = r.theta;
            d["alpha"] = r.alpha;
            d["kappa"] = r.kappa;
            d["zeta_star"] = r.zeta_star;
            d["m_star"] = r.m_star;
            d["R"] = r.R;
            d["provenance"] = r.provenance;
            if (r.literature_R) d["literature_R"] = *r.literature_R;
            d["delta_star"] = r.delta_star;
            rows.append(d);
        }
        return rows;
    });

    py::class_<SieveFunctionTable>(m, "SieveFunctionTable")
        .def_readonly("kappa", &SieveFunctionTable::kappa)
        .def_readonly("h", &SieveFunctionTable::h)
        .def_readonly("u_max", &SieveFunctionTable::u_max)
        .def("sigma", &SieveFunctionTable::sigma_at, py::arg("u"))
        .def("F", &SieveFunctionTable::F_at, py::arg("u"))
        .def("f", &SieveFunctionTable::f_at, py::arg("u"));

    m.def(
        "solve_tables",
        [](double kappa, double alpha_k, double beta_k, double u_max, double h) {
            return solve_F_f(kappa, alpha_k, beta_k, solve_sigma(kappa, u_max, h));
        },
        py::arg("kappa") = 1.0, py::arg("alpha_k") = 2.0, py::arg("beta_k") = 2.0,
        py::arg("u_max") = 25.0, py::arg("h") = 1e-3);

    m.def("prime_divisor_count",
          [](std::int64_t n, bool distinct) {
              return prime_divisor_count(n, distinct ? PrimeCounting::distinct
                                                     : PrimeCounting::with_multiplicity);
          },
          py::arg("n"), py::arg("distinct") = false);

    m.def(
        "build_sequence",
        [](const std::string& preset, const std::string& f_name, double T) {
            const auto seq = build_sequence(spec_by_name(preset), f_by_name(f_name), T);
            py::dict out;
            out["support"] = seq.support;
            out["mass"] = seq.mass;
            out["zero_count"] = seq.zero_count;
            out["max_n"] = seq.max_n;
            return out;
        },
        py::arg("preset"), py::arg("f"), py::arg("T"));

    m.def(
        "almost_prime_count",
        [](const std::string& preset, const std::string& f_name, double T,
           std::optional<int> R) {
            const auto f = f_by_name(f_name);
            const auto seq = build_sequence(spec_by_name(preset), f, T);
            const auto c = almost_prime_count(seq, f, R);
            return py::make_tuple(c.count, c.density_ratio);
        },
        py::arg("preset"), py::arg("f"), py::arg("T"), py::arg("R") = py::none());
}
