#include "orbitsieve/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orbitsieve/errors.hpp"
#include "orbitsieve/modular.hpp"

namespace orbitsieve {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.contains(it.key()))
            throw ValidationError("unknown key \"" + it.key() + "\" in " + where);
}

Mat3 parse_mat3(const json& rows, const std::string& where) {
    if (!rows.is_array() || rows.size() != 3)
        throw ValidationError(where + " must be a 3x3 array");
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 3)
            throw ValidationError(where + " must be a 3x3 array");
        for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j].get<std::int64_t>();
    }
    return m;
}

OrbitSpec parse_inline_orbit(const json& o) {
    reject_unknown_keys(o, {"gram", "base", "generators", "closure", "ball_slack"},
                        "orbit");
    for (const char* req : {"gram", "base", "generators"})
        if (!o.contains(req))
            throw ValidationError(std::string("orbit.") + req + " is required");
    const Mat3 gram = parse_mat3(o["gram"], "orbit.gram");
    if (!o["base"].is_array() || o["base"].size() != 3)
        throw ValidationError("orbit.base must be a 3-vector");
    Vec3 base;
    for (int i = 0; i < 3; ++i) base[i] = o["base"][i].get<std::int64_t>();
    TernaryForm form(gram, TernaryForm(gram, 0).evaluate(base));
    std::vector<Mat3> gens;
    for (const auto& g : o["generators"])
        gens.push_back(parse_mat3(g, "orbit.generators[]"));
    ClosureMode mode = ClosureMode::group;
    if (o.contains("closure")) {
        const auto s = o["closure"].get<std::string>();
        if (s == "group")
            mode = ClosureMode::group;
        else if (s == "monoid")
            mode = ClosureMode::monoid;
        else
            throw ValidationError("orbit.closure must be \"group\" or \"monoid\"");
    }
    const double slack = o.value("ball_slack", 2.0);
    return OrbitSpec::make(std::move(form), base, std::move(gens), mode, slack);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");
    reject_unknown_keys(doc,
                        {"preset", "orbit", "f", "T", "moduli", "delta_samples",
                         "sieve", "out_dir", "caps", "almost_prime_max_R",
                         "distinct_primes", "aniso_search_bound",
                         "canonicalize_signs"},
                        "config");

    const std::int64_t aniso_bound = doc.value("aniso_search_bound", std::int64_t{12});
    if (aniso_bound < 1)
        throw ValidationError("aniso_search_bound must be >= 1");

    std::optional<OrbitSpec> orbit;
    std::optional<std::string> preset_name;
    if (doc.contains("preset") && doc.contains("orbit"))
        throw ValidationError("give either preset or orbit, not both");
    if (doc.contains("preset")) {
        preset_name = doc["preset"].get<std::string>();
        orbit = preset_by_name(*preset_name, aniso_bound);
        if (!orbit)
            throw ValidationError("unknown preset \"" + *preset_name + "\"");
    } else if (doc.contains("orbit")) {
        orbit = parse_inline_orbit(doc["orbit"]);
    } else {
        throw ValidationError("config needs a preset name or an inline orbit");
    }

    auto f = CoordinateFunction::by_name(doc.value("f", std::string("coord_product")));
    if (!f) throw ValidationError("unknown coordinate function in key f");

    RunConfig cfg{preset_name, std::move(*orbit), std::move(*f)};
    cfg.aniso_search_bound = aniso_bound;
    cfg.T = doc.value("T", 1e4);
    if (cfg.T <= 0) throw ValidationError("T must be positive");

    if (doc.contains("moduli")) {
        for (const auto& q : doc["moduli"]) {
            const auto v = q.get<std::int64_t>();
            if (v < 2 || !is_squarefree(v))
                throw ValidationError("modulus " + std::to_string(v) +
                                      " is not squarefree (or < 2)");
            cfg.moduli.push_back(v);
        }
    } else {
        cfg.moduli = {7, 11, 13, 17, 19};
    }

    if (doc.contains("delta_samples")) {
        for (const auto& t : doc["delta_samples"]) {
            const auto v = t.get<double>();
            if (v <= 0) throw ValidationError("delta_samples entries must be positive");
            cfg.delta_samples.push_back(v);
        }
        if (cfg.delta_samples.size() < 2)
            throw ValidationError("delta_samples needs at least 2 radii");
    } else {
        cfg.delta_samples = {cfg.T / 100.0, cfg.T / 10.0, cfg.T};
    }

    if (doc.contains("sieve")) {
        const auto& s = doc["sieve"];
        reject_unknown_keys(
            s, {"delta", "theta", "mode", "kappa", "u_max", "h", "alpha_kappa"},
            "sieve");
        cfg.sieve_delta = s.value("delta", 1.0);
        cfg.sieve_theta = s.value("theta", kThetaGamburd);
        if (s.contains("mode")) {
            const auto m = s["mode"].get<std::string>();
            if (m == "classic")
                cfg.sieve_mode = SieveMode::classic;
            else if (m == "projective")
                cfg.sieve_mode = SieveMode::projective;
            else
                throw ValidationError("sieve.mode must be classic or projective");
        }
        if (s.contains("kappa")) cfg.kappa_override = s["kappa"].get<double>();
        cfg.sieve_u_max = s.value("u_max", 25.0);
        cfg.sieve_h = s.value("h", 1e-3);
        if (s.contains("alpha_kappa"))
            cfg.alpha_kappa = s["alpha_kappa"].get<double>();
        // validates the (delta, theta) pair
        exponent_of_distribution(cfg.sieve_delta, cfg.sieve_theta, cfg.f.degree(),
                                 cfg.sieve_mode);
    }
    if (!cfg.alpha_kappa && cfg.kappa() == 1.0) cfg.alpha_kappa = 2.0;

    if (doc.contains("caps")) {
        const auto& c = doc["caps"];
        reject_unknown_keys(c, {"visited_max"}, "caps");
        const auto cap = c.value("visited_max", std::int64_t{100'000'000});
        if (cap < 1) throw ValidationError("caps.visited_max must be >= 1");
        cfg.limits.visited_cap = static_cast<std::size_t>(cap);
    }
    cfg.limits.canonicalize_signs = doc.value("canonicalize_signs", false);

    cfg.out_dir = doc.value("out_dir", std::string("out"));
    cfg.almost_prime_max_R = doc.value("almost_prime_max_R", 10);
    if (cfg.almost_prime_max_R < 0)
        throw ValidationError("almost_prime_max_R must be >= 0");
    cfg.distinct_primes = doc.value("distinct_primes", false);
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string RunConfig::echo_json() const {
    json doc;
    if (preset_name) doc["preset"] = *preset_name;
    json o;
    json gram = json::array(), gens = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(orbit.form.gram()(i, j));
        gram.push_back(row);
    }
    for (const auto& g : orbit.generators) {
        json rows = json::array();
        for (int i = 0; i < 3; ++i) {
            json row = json::array();
            for (int j = 0; j < 3; ++j) row.push_back(g.entries()(i, j));
            rows.push_back(row);
        }
        gens.push_back(rows);
    }
    o["gram"] = gram;
    o["base"] = {orbit.base[0], orbit.base[1], orbit.base[2]};
    o["generators"] = gens;
    o["closure"] = orbit.closure_mode == ClosureMode::group ? "group" : "monoid";
    o["ball_slack"] = orbit.ball_slack;
    doc["orbit"] = o;
    doc["f"] = f.name();
    doc["T"] = T;
    doc["moduli"] = moduli;
    doc["delta_samples"] = delta_samples;
    doc["sieve"] = {{"delta", sieve_delta},
                    {"theta", sieve_theta},
                    {"mode", sieve_mode == SieveMode::classic ? "classic" : "projective"},
                    {"kappa", kappa()},
                    {"u_max", sieve_u_max},
                    {"h", sieve_h}};
    if (alpha_kappa) doc["sieve"]["alpha_kappa"] = *alpha_kappa;
    doc["out_dir"] = out_dir;
    doc["caps"] = {{"visited_max", limits.visited_cap}};
    doc["canonicalize_signs"] = limits.canonicalize_signs;
    doc["almost_prime_max_R"] = almost_prime_max_R;
    doc["distinct_primes"] = distinct_primes;
    doc["aniso_search_bound"] = aniso_search_bound;
    return doc.dump(2);
}

}  // namespace orbitsieve
