// CLI end-to-end checks: exit codes, report files, determinism.
// argv[1] is the orbitsieve binary path (wired by CMake).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "ok: " : "FAILED: ") << what << "\n";
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <orbitsieve-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const fs::path work = fs::temp_directory_path() / "orbitsieve_cli_test";
    fs::remove_all(work);
    fs::create_directories(work);
    const auto out1 = (work / "out1").string();
    const auto out2 = (work / "out2").string();

    // r-values with defaults
    expect(run(bin + " r-values --out " + out1) == 0, "r-values exits 0");
    const std::string rv = slurp(fs::path(out1) / "r_values.csv");
    expect(rv.find("example,mode,theta,alpha,kappa,zeta_star,m_star,R,provenance") == 0,
           "r_values.csv header");
    expect(rv.find("A,classic") != std::string::npos &&
               rv.find("D_selberg,projective") != std::string::npos,
           "r_values.csv has classic and projective rows");
    expect(run(bin + " r-values --out " + out2) == 0, "r-values rerun exits 0");
    expect(slurp(fs::path(out2) / "r_values.csv") == rv, "r-values byte-identical");

    // densities on the Pythagorean preset
    write(work / "dens.json",
          R"({"preset": "pythagorean_full", "f": "coord_product", "moduli": [7, 11, 13]})");
    const std::string dens_cmd =
        bin + " densities --config " + (work / "dens.json").string() + " --out ";
    expect(run(dens_cmd + out1) == 0, "densities exits 0");
    const std::string dens = slurp(fs::path(out1) / "densities.csv");
    expect(dens.find("13,point,84,36,3,7,3/7,exact") != std::string::npos,
           "densities.csv point row for q=13");
    expect(dens.find("13,line,14,6,3,7,3/7,exact") != std::string::npos,
           "densities.csv line row for q=13");
    expect(run(dens_cmd + out2) == 0, "densities rerun");
    expect(slurp(fs::path(out2) / "densities.csv") == dens, "densities byte-identical");
    expect(run(dens_cmd + out2 + " --threads 3") == 0, "densities threaded");
    expect(slurp(fs::path(out2) / "densities.csv") == dens,
           "threaded run byte-identical");

    // orbit with T below the base norm: validation failure
    write(work / "small.json", R"({"preset": "pythagorean_full", "T": 3.0,
                                   "delta_samples": [2.0, 3.0]})");
    expect(run(bin + " orbit --config " + (work / "small.json").string() + " --out " +
               out1) == 2,
           "empty-ball orbit exits 2");

    // unknown key: validation failure
    write(work / "bad.json", R"({"preset": "pythagorean_full", "bogus": 1})");
    expect(run(bin + " orbit --config " + (work / "bad.json").string()) == 2,
           "unknown key exits 2");

    // visited cap: resource exhaustion is a distinct exit code
    write(work / "cap.json",
          R"({"preset": "pythagorean_full", "T": 1e4, "caps": {"visited_max": 16}})");
    expect(run(bin + " orbit --config " + (work / "cap.json").string() + " --out " +
               out1) == 3,
           "visited cap exits 3");

    // orbit dump on the monoid tree
    write(work / "orbit.json", R"({
        "orbit": {"gram": [[1,0,0],[0,1,0],[0,0,-1]], "base": [3,4,5],
                  "generators": [[[1,-2,2],[2,-1,2],[2,-2,3]],
                                  [[1,2,2],[2,1,2],[2,2,3]],
                                  [[-1,2,2],[-2,1,2],[-2,2,3]]],
                  "closure": "monoid", "ball_slack": 1.0},
        "T": 30.0, "delta_samples": [20.0, 30.0]})");
    expect(run(bin + " orbit --config " + (work / "orbit.json").string() + " --out " +
               out1) == 0,
           "orbit exits 0");
    expect(slurp(fs::path(out1) / "orbit.csv") == "x,y,z\n3,4,5\n5,12,13\n15,8,17\n",
           "orbit.csv exact content");

    // sieve-functions for the linear sieve
    write(work / "sf.json",
          R"({"preset": "pythagorean_full", "f": "hypotenuse", "sieve": {"u_max": 6.0}})");
    expect(run(bin + " sieve-functions --config " + (work / "sf.json").string() +
               " --out " + out1) == 0,
           "sieve-functions exits 0");
    expect(slurp(fs::path(out1) / "sieve_functions.csv").find("u,sigma,F,f") == 0,
           "sieve_functions.csv header");

    // distribution + almost-primes on a small monoid ball
    write(work / "dist.json", R"({
        "orbit": {"gram": [[1,0,0],[0,1,0],[0,0,-1]], "base": [3,4,5],
                  "generators": [[[1,-2,2],[2,-1,2],[2,-2,3]],
                                  [[1,2,2],[2,1,2],[2,2,3]],
                                  [[-1,2,2],[-2,1,2],[-2,2,3]]],
                  "closure": "monoid", "ball_slack": 1.0},
        "f": "coord_product", "T": 300.0, "moduli": [7, 11, 13, 10],
        "almost_prime_max_R": 4})");
    expect(run(bin + " distribution --config " + (work / "dist.json").string() +
               " --out " + out1) == 0,
           "distribution exits 0");
    const std::string dist = slurp(fs::path(out1) / "distribution.csv");
    expect(dist.find("q,mass_q,predicted,abs_error,rel_error,flag") == 0,
           "distribution.csv header");
    expect(dist.find("10,") != std::string::npos &&
               dist.find("bad_modulus") != std::string::npos,
           "q=10 flagged bad (shares 2 with the bad primes)");
    expect(run(bin + " almost-primes --config " + (work / "dist.json").string() +
               " --out " + out1) == 0,
           "almost-primes exits 0");
    expect(slurp(fs::path(out1) / "almost_primes.csv").find("R,count,density_ratio") == 0,
           "almost_primes.csv header");

    std::cout << (failures == 0 ? "all CLI checks passed\n"
                                : std::to_string(failures) + " CLI checks failed\n");
    return failures == 0 ? 0 : 1;
}
