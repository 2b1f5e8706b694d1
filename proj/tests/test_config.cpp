#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "orbitsieve/config.hpp"
#include "orbitsieve/errors.hpp"

using namespace orbitsieve;

namespace {

bool throws_mentioning(const std::string& text, const std::string& needle) {
    try {
        (void)parse_config(text);
    } catch (const ValidationError& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("minimal preset config") {
    const auto cfg = parse_config(
        R"({"preset": "pythagorean_full", "f": "coord_product", "T": 1e4})");
    CHECK(cfg.preset_name == "pythagorean_full");
    CHECK(cfg.f.name() == "coord_product");
    CHECK(cfg.T == 1e4);
    CHECK(cfg.moduli == std::vector<std::int64_t>{7, 11, 13, 17, 19});
    CHECK(cfg.delta_samples == std::vector<double>{100.0, 1000.0, 10000.0});
    CHECK(cfg.sieve_theta == kThetaGamburd);
    CHECK(cfg.kappa() == 5);
    CHECK(cfg.limits.visited_cap == 100'000'000);
    const auto echo = cfg.echo_json();
    CHECK(echo.find("pythagorean_full") != std::string::npos);
    CHECK(echo.find("visited_max") != std::string::npos);
    CHECK(echo.find("\"kappa\": 5.0") != std::string::npos);
}

TEST_CASE("strict key rejection") {
    CHECK(throws_mentioning(R"({"preset": "pythagorean_full", "tee": 7})", "tee"));
    CHECK(throws_mentioning(
        R"({"preset": "pythagorean_full", "sieve": {"htheta": 1}})", "htheta"));
    CHECK(throws_mentioning(
        R"({"preset": "pythagorean_full", "caps": {"max": 5}})", "max"));
}

TEST_CASE("inline orbit") {
    const std::string doc = R"({
      "orbit": {
        "gram": [[1,0,0],[0,1,0],[0,0,-1]],
        "base": [3,4,5],
        "generators": [[[1,-2,2],[2,-1,2],[2,-2,3]], [[1,2,2],[2,1,2],[2,2,3]]],
        "closure": "monoid",
        "ball_slack": 1.0
      },
      "f": "hypotenuse"
    })";
    const auto cfg = parse_config(doc);
    CHECK_FALSE(cfg.preset_name.has_value());
    CHECK(cfg.orbit.generators.size() == 2);
    CHECK(cfg.orbit.closure_mode == ClosureMode::monoid);
    CHECK(cfg.kappa() == 1);
    CHECK(cfg.alpha_kappa == 2.0);  // kappa = 1 default
}

TEST_CASE("invalid configs") {
    // non-isometry generator
    CHECK_THROWS_AS(parse_config(R"({
      "orbit": {"gram": [[1,0,0],[0,1,0],[0,0,-1]], "base": [3,4,5],
                "generators": [[[1,1,0],[0,1,0],[0,0,1]]]}})"),
                    ValidationError);
    // q = 12 not squarefree
    CHECK(throws_mentioning(R"({"preset": "pythagorean_full", "moduli": [7, 12]})",
                            "12"));
    // both preset and inline orbit
    CHECK_THROWS_AS(parse_config(R"({
      "preset": "pythagorean_full",
      "orbit": {"gram": [[1,0,0],[0,1,0],[0,0,-1]], "base": [3,4,5],
                "generators": [[[1,-2,2],[2,-1,2],[2,-2,3]]]}})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"f": "area"})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"preset": "unknown_preset"})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"preset": "pythagorean_full", "T": -5})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"preset": "pythagorean_full", "f": "volume"})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_config("not json at all"), ValidationError);
    // theta >= delta
    CHECK_THROWS_AS(
        parse_config(
            R"({"preset": "pythagorean_full", "sieve": {"delta": 0.8, "theta": 0.9}})"),
        ConstraintError);
}

TEST_CASE("sieve overrides") {
    const auto cfg = parse_config(R"({
      "preset": "pythagorean_full",
      "f": "hypotenuse",
      "sieve": {"delta": 1.0, "theta": 0.5, "mode": "projective", "kappa": 1,
                "u_max": 12.0, "h": 0.002}})");
    CHECK(cfg.sieve_mode == SieveMode::projective);
    CHECK(cfg.sieve_theta == 0.5);
    CHECK(cfg.sieve_u_max == 12.0);
    CHECK(cfg.sieve_h == 0.002);
    CHECK(cfg.kappa() == 1);
}
