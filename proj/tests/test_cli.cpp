#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = IFSECON_CLI_PATH;
const std::string kData = IFSECON_DATA_DIR;

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("ifsecon_cli_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string tmp(const std::string& name) { return (scratch() / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string out = tmp("stdout.txt");
    const int status = std::system((kCli + " " + args + " > " + out + " 2> " + tmp("stderr.txt")).c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

std::vector<std::vector<double>> read_rows(const std::string& path, bool header) {
    std::ifstream in(path);
    std::string line;
    if (header) std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) row.push_back(f.empty() ? std::nan("") : std::stod(f));
        rows.push_back(row);
    }
    return rows;
}

const std::string kGrowth = "--rho 0.9 --la 1.1 --lb 0.9 --q 0.5";

}  // namespace

TEST_CASE("attractor: Cantor groups") {
    const Run r = run("attractor " + kData + "/cantor3.json --eps 0.004115226337448559 --out " + tmp("c.csv"));
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["groups"] == 32);
    CHECK(j["converged"] == true);
    CHECK(slurp(tmp("c.csv")).rfind("0.0041152263374485592,0\n", 0) == 0);
}

// At 0.004115226 the grid no longer lines up with multiples of 3^-5, so
// Cantor endpoints spill into neighbouring cells and pairs of groups merge.
// Frozen from an exact rational cover of the level-12 Cantor intervals.
TEST_CASE("attractor: rounded epsilon covers the shifted endpoints") {
    const Run r = run("attractor " + kData + "/cantor3.json --eps 0.004115226 --out " + tmp("c2.csv"));
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["cells"] == 64);
    CHECK(j["groups"] == 16);
}

TEST_CASE("attractor: Peano occupancy") {
    const Run r = run("attractor " + kData + "/peano.json --eps 0.0625 --out " + tmp("p.csv"));
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["region_occupancy"].get<double>() >= 0.95);
}

TEST_CASE("attractor: invalid spec and non-convergence") {
    std::ofstream(tmp("bad.json")) << "{\"dim\": 1, \"maps\": [";
    const std::string out = tmp("never.csv");
    CHECK(run("attractor " + tmp("bad.json") + " --eps 0.1 --out " + out).code == 2);
    CHECK_FALSE(fs::exists(out));
    std::ofstream(tmp("expanding.json"))
        << R"({"dim":1,"bounding_box":[[0],[1]],"maps":[{"matrix":[[1.5]],"offset":[0]},{"matrix":[[0.5]],"offset":[0]}]})";
    CHECK(run("attractor " + tmp("expanding.json") + " --eps 0.1 --out " + out).code == 2);
    CHECK_FALSE(fs::exists(out));

    const std::string partial = tmp("partial.csv");
    const Run r = run("attractor " + kData + "/koch.json --eps 0.001 --max-iter 2 --out " + partial);
    CHECK(r.code == 3);
    CHECK(fs::exists(partial));
    CHECK(json::parse(r.out)["converged"] == false);
}

TEST_CASE("chaos: Koch million points stay in the box") {
    const std::string out = tmp("koch.csv");
    REQUIRE(run("chaos " + kData + "/koch.json --n 1000000 --seed 7 --out " + out).code == 0);
    const auto rows = read_rows(out, false);
    CHECK(rows.size() == 1000000);
    const double top = std::sqrt(3.0) / 6.0;
    std::size_t outside = 0;
    for (const auto& p : rows) {
        outside += (p.size() == 2 && p[0] >= -1e-12 && p[0] <= 1 + 1e-12 && p[1] >= -1e-12 && p[1] <= top + 1e-12) ? 0 : 1;
    }
    CHECK(outside == 0);
}

TEST_CASE("chaos: contract and determinism") {
    CHECK(run("chaos " + kData + "/cantor3.json --n 10 --burn 10 --out " + tmp("x.csv")).code == 2);
    CHECK_FALSE(fs::exists(tmp("x.csv")));
    REQUIRE(run("chaos " + kData + "/cantor3.json --n 5000 --seed 1 --out " + tmp("a.csv")).code == 0);
    REQUIRE(run("chaos " + kData + "/cantor3.json --n 5000 --seed 1 --out " + tmp("b.csv")).code == 0);
    REQUIRE(run("chaos " + kData + "/cantor3.json --n 5000 --seed 2 --out " + tmp("d.csv")).code == 0);
    CHECK(slurp(tmp("a.csv")) == slurp(tmp("b.csv")));
    CHECK(slurp(tmp("a.csv")) != slurp(tmp("d.csv")));
    CHECK(run("chaos " + kData + "/cantor3.json --n 10 --x0 2 --out " + tmp("y.csv")).code == 2);
}

TEST_CASE("dim similarity") {
    const Run r = run("dim similarity --ratios 0.3333333333,0.3333333333");
    REQUIRE(r.code == 0);
    CHECK(std::abs(json::parse(r.out)["dimension"].get<double>() - 0.6309) <= 1e-4);
    CHECK(std::abs(json::parse(r.out)["dimension"].get<double>() - std::log(2.0) / std::log(3.0)) <= 1e-6);
    CHECK(run("dim similarity --ratios 1.0,0.5").code == 2);
    CHECK(run("dim similarity --ratios 0.5,abc").code == 2);
}

TEST_CASE("dim box on a Cantor cloud") {
    const std::string pts = tmp("cantor_points.csv");
    REQUIRE(run("chaos " + kData + "/cantor3.json --n 1000000 --seed 3 --out " + pts).code == 0);
    const Run r = run("dim box --in " + pts + " --eps0 0.1111 --factor 3 --levels 6");
    REQUIRE(r.code == 0);
    CHECK(std::abs(json::parse(r.out)["dimension"].get<double>() - 0.6309) <= 0.05);
    const Run full = run("dim box --in " + pts + " --eps0 0.1111 --factor 3 --levels 6 --report");
    REQUIRE(full.code == 0);
    CHECK(json::parse(full.out)["counts"].size() == 6);
    std::ofstream(tmp("empty.csv")) << "";
    CHECK(run("dim box --in " + tmp("empty.csv")).code == 2);
}

TEST_CASE("growth verify-policy") {
    const Run r = run("growth verify-policy " + kGrowth);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["max_euler_residual"].get<double>() <= 1e-12);
    CHECK(j["max_policy_gap_vs_value_iteration"].get<double>() <= 1e-3);
    CHECK(run("growth verify-policy --rho 0.9 --la 1.2 --lb 0.9 --q 0.5").code == 2);
    CHECK(run("growth verify-policy --rho 0.9").code == 2);
    std::ofstream(tmp("g.json")) << R"({"rho": 0.5, "lambda_a": 1.1, "lambda_b": 0.9, "q": 0.3})";
    CHECK(run("growth verify-policy --params " + tmp("g.json")).code == 0);
}

TEST_CASE("growth simulate passes the accounting audit") {
    const std::string out = tmp("path.csv");
    REQUIRE(run("growth simulate " + kGrowth + " --T 10000 --seed 4 --out " + out).code == 0);
    CHECK(slurp(out).rfind("n,k,y,c,i,xi\n", 0) == 0);
    const auto rows = read_rows(out, true);
    REQUIRE(rows.size() == 10001);
    std::size_t broken = 0;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const auto& r = rows[n];
        broken += r[2] == r[3] + r[4] ? 0 : 1;
        broken += r[2] == r[5] * std::cbrt(r[1]) ? 0 : 1;
        if (n + 1 < rows.size()) broken += r[4] == rows[n + 1][1] ? 0 : 1;
    }
    CHECK(broken == 0);
}

TEST_CASE("growth attractor matches the unit Cantor attractor") {
    const Run r = run("growth attractor " + kGrowth + " --out " + tmp("ka.csv") + " --unit-out " + tmp("ua.csv"));
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["dH_vs_unit_cantor"].get<double>() <= 2.0 / 243.0);
    CHECK(fs::exists(tmp("ua.csv")));
}

TEST_CASE("render") {
    const std::string pts = tmp("koch_small.csv");
    REQUIRE(run("chaos " + kData + "/koch.json --n 50000 --seed 7 --out " + pts).code == 0);
    REQUIRE(run("render --in " + pts + " --out " + tmp("k.pgm") + " --width 200 --height 100").code == 0);
    const std::string img = slurp(tmp("k.pgm"));
    CHECK(img.rfind("P5\n200 100\n255\n", 0) == 0);
    std::ofstream(tmp("none.csv")) << "";
    CHECK(run("render --in " + tmp("none.csv") + " --out " + tmp("none.pgm")).code == 2);
    CHECK_FALSE(fs::exists(tmp("none.pgm")));
    std::ofstream(tmp("one.csv")) << "0.25,0.75\n";
    REQUIRE(run("render --in " + tmp("one.csv") + " --out " + tmp("one.pgm") + " --width 8 --height 8").code == 0);
    const std::string one = slurp(tmp("one.pgm"));
    std::size_t lit = 0;
    for (std::size_t i = std::string("P5\n8 8\n255\n").size(); i < one.size(); ++i) lit += one[i] != 0;
    CHECK(lit == 1);
}

TEST_CASE("utility") {
    std::ofstream(tmp("mul.json")) << R"({"rhos": [0.5, 0.25], "pi": [0.5, 0.5], "k0": 1})";
    REQUIRE(run("utility multiplicative --params " + tmp("mul.json") + " --n 20 --seed 3 --out " + tmp("u.csv")).code == 0);
    CHECK(read_rows(tmp("u.csv"), true).size() == 21);
    std::ofstream(tmp("aff.json")) << R"({"rho": 0.5, "rs": [1, 1], "pi": [0.5, 0.5], "k0": 0})";
    CHECK(run("utility affine --params " + tmp("aff.json") + " --out " + tmp("v.csv")).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("attractor").code == 2);
    CHECK(run("attractor " + kData + "/cantor3.json --eps 0.1 --out " + tmp("z.csv") + " --bogus").code == 2);
    CHECK(run("--help").code == 0);
}
