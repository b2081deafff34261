#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ifsecon/dynamics.hpp"
#include "ifsecon/errors.hpp"
#include "support.hpp"

using namespace ifsecon;
using namespace ifsecon::dynamics;

namespace {

ScalarMap halving() { return piecewise_linear({{0.0, 0.0}, {1.0, 0.5}}); }

bool has_orbit(const std::vector<PeriodicOrbit>& orbits, std::vector<double> expect, double tol) {
    for (const auto& o : orbits) {
        if (o.points.size() != expect.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < expect.size(); ++i) same = same && std::abs(o.points[i] - expect[i]) <= tol;
        if (same) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("ScalarMap construction") {
    CHECK_THROWS_AS(ScalarMap([](double x) { return 2 * x; }, 0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(logistic_map(4.5), InvalidArgument);
    CHECK_THROWS_AS(piecewise_linear({{0.0, 0.0}, {0.0, 1.0}}), InvalidArgument);
    CHECK_THROWS_AS(named_map("sine"), InvalidArgument);
    CHECK(named_map("tent")(0.25) == 0.5);
    CHECK(named_map("logistic:4")(0.5) == 1.0);
    const ScalarMap pl = piecewise_linear({{0.0, 0.0}, {0.5, 1.0}, {1.0, 0.0}});
    CHECK(pl(0.25) == 0.5);
    CHECK(pl(0.75) == 0.5);
}

TEST_CASE("iterate examples") {
    const ScalarMap tent = tent_map();
    const auto path = iterate(tent, 2.0 / 9.0, 3);
    REQUIRE(path.size() == 4);
    const double expect[] = {2.0 / 9.0, 4.0 / 9.0, 8.0 / 9.0, 2.0 / 9.0};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(path[i] - expect[i]) <= 1e-15);
    CHECK(iterate(tent, 0.0, 5) == std::vector<double>(6, 0.0));
    // The double nearest 2/3 is off by half an ulp, which doubles each step.
    const auto fixed = iterate(tent, 2.0 / 3.0, 5);
    for (double v : fixed) CHECK(std::abs(v - 2.0 / 3.0) <= 64 * 1.2e-16);
    CHECK(iterate(tent, 0.4, 0) == std::vector<double>{0.4});
    CHECK_THROWS_AS(iterate(tent, 1.5, 3), InvalidArgument);
    CHECK_THROWS_AS(iterate(tent, 0.5, -1), InvalidArgument);
}

TEST_CASE("iterate composes") {
    std::mt19937_64 rng(5);
    const ScalarMap maps[] = {tent_map(), logistic_map(3.9), halving()};
    for (int t = 0; t < 300; ++t) {
        const ScalarMap& m = maps[t % 3];
        const double x = testsupport::uniform(rng, 0, 1);
        const int a = static_cast<int>(testsupport::uniform_int(rng, 0, 40));
        const int b = static_cast<int>(testsupport::uniform_int(rng, 0, 40));
        const auto whole = iterate(m, x, a + b);
        const auto first = iterate(m, x, a);
        const auto rest = iterate(m, first.back(), b);
        std::vector<double> joined(first.begin(), first.end() - 1);
        joined.insert(joined.end(), rest.begin(), rest.end());
        CHECK(joined == whole);
    }
}

TEST_CASE("find_periodic_orbits examples") {
    const ScalarMap tent = tent_map();
    const auto p1 = find_periodic_orbits(tent, 1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].points == std::vector<double>{0.0});
    CHECK(std::abs(p1[1].points[0] - 2.0 / 3.0) <= 1e-10);

    const auto p3 = find_periodic_orbits(tent, 3);
    CHECK(has_orbit(p3, {2.0 / 9.0, 4.0 / 9.0, 8.0 / 9.0}, 1e-10));
    CHECK(has_orbit(p3, {2.0 / 7.0, 4.0 / 7.0, 6.0 / 7.0}, 1e-10));

    const auto contraction = find_periodic_orbits(halving(), 6);
    REQUIRE(contraction.size() == 1);
    CHECK(contraction[0].period == 1);
    CHECK(contraction[0].points[0] == 0.0);

    CHECK_THROWS_AS(find_periodic_orbits(tent, 0), InvalidArgument);
    CHECK_THROWS_AS(find_periodic_orbits(tent, 3, 10), InvalidArgument);
}

TEST_CASE("tent map has every period up to 7 and valid orbits") {
    const ScalarMap tent = tent_map();
    const auto orbits = find_periodic_orbits(tent, 7);
    // The tent map has 2^p points of period dividing p; count orbits per minimal period.
    std::vector<int> count(8, 0);
    for (const auto& o : orbits) {
        REQUIRE(o.period == static_cast<int>(o.points.size()));
        ++count[static_cast<std::size_t>(o.period)];
        for (std::size_t j = 0; j < o.points.size(); ++j) {
            CHECK(std::abs(tent(o.points[j]) - o.points[(j + 1) % o.points.size()]) <= 1e-8);
        }
        for (int q = 1; q < o.period; ++q) {
            if (o.period % q != 0) continue;
            CHECK(std::abs(iterate(tent, o.points[0], q).back() - o.points[0]) > 1e-8);
        }
    }
    const int expected[] = {0, 2, 1, 2, 3, 6, 9, 18};
    for (int p = 1; p <= 7; ++p) CHECK(count[static_cast<std::size_t>(p)] == expected[p]);
    for (std::size_t i = 1; i < orbits.size(); ++i) {
        CHECK(orbits[i - 1].period <= orbits[i].period);
        if (orbits[i - 1].period == orbits[i].period) CHECK(orbits[i - 1].points[0] < orbits[i].points[0]);
    }
}

TEST_CASE("sharkovskii_precedes examples") {
    for (std::int64_t m = 1; m <= 2000; ++m) {
        if (m != 3) CHECK(sharkovskii_precedes(3, m));
    }
    for (int k = 1; k < 40; ++k) {
        CHECK(sharkovskii_precedes(std::int64_t{1} << k, std::int64_t{1} << (k - 1)));
    }
    CHECK(sharkovskii_precedes(2, 1));
    CHECK(sharkovskii_precedes(6, 8));
    CHECK(sharkovskii_precedes(5, 7));
    CHECK_FALSE(sharkovskii_precedes(7, 5));
    CHECK(sharkovskii_precedes(9, 6));
    CHECK(sharkovskii_precedes(12, 20));
    CHECK(sharkovskii_precedes(20, 1024));
    CHECK_FALSE(sharkovskii_precedes(1, 2));
    CHECK_FALSE(sharkovskii_precedes(4, 4));
    CHECK_THROWS_AS(sharkovskii_precedes(0, 3), InvalidArgument);
    CHECK_THROWS_AS(sharkovskii_precedes(3, -1), InvalidArgument);
}

TEST_CASE("sharkovskii order is a strict total order") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20000; ++t) {
        const auto a = testsupport::uniform_int(rng, 1, 10000);
        const auto b = testsupport::uniform_int(rng, 1, 10000);
        const auto c = testsupport::uniform_int(rng, 1, 10000);
        if (a != b) CHECK(sharkovskii_precedes(a, b) != sharkovskii_precedes(b, a));
        CHECK_FALSE(sharkovskii_precedes(a, a));
        if (sharkovskii_precedes(a, b) && sharkovskii_precedes(b, c)) CHECK(sharkovskii_precedes(a, c));
    }
}

TEST_CASE("liyorke_pair_stats") {
    const PairStats contraction = liyorke_pair_stats(halving(), 0.0, 1.0, 60, 10);
    CHECK(contraction.sup_gap <= std::pow(2.0, -50));

    const PairStats tent = liyorke_pair_stats(tent_map(), 0.3, 0.3 + 1e-9, 200, 150);
    CHECK(tent.sup_gap > 0.1);
    CHECK(tent.inf_gap <= tent.sup_gap);

    // The exact period-3 pair (x, f^3(x)) is the same point.
    CHECK_THROWS_AS(liyorke_pair_stats(tent_map(), 0.25, 0.25, 20, 5), InvalidArgument);
    // In doubles f^3(2/9) misses 2/9 by about one ulp; the two orbits agree
    // while the doubling has not yet amplified that gap.
    const double x = 2.0 / 9.0;
    const double y = iterate(tent_map(), x, 3).back();
    REQUIRE(x != y);
    CHECK(liyorke_pair_stats(tent_map(), x, y, 30, 10).sup_gap <= 1e-6);

    CHECK_THROWS_AS(liyorke_pair_stats(tent_map(), 0.1, 0.2, 10, 10), InvalidArgument);
    CHECK_THROWS_AS(liyorke_pair_stats(tent_map(), 0.1, 0.2, 10, 0), InvalidArgument);
}

TEST_CASE("sensitivity_probe") {
    CHECK_FALSE(sensitivity_probe(halving(), 0.5, 2e-3, 1e-3, 60).has_value());
    const ScalarMap tent = tent_map();
    // Folding brings some of the 64 samples back onto f^n(x), so the
    // min-over-samples separation never clears 0.25 for this neighbourhood.
    CHECK_FALSE(sensitivity_probe(tent, 1.0 / 3.0, 0.25, 1e-6, 60).has_value());
    const auto n = sensitivity_probe(tent, 1.0 / 3.0, 1e-3, 1e-6, 60);
    REQUIRE(n.has_value());
    CHECK(*n == 16);
    const auto edge = sensitivity_probe(tent, 0.0, 1e-3, 1e-6, 60);
    REQUIRE(edge.has_value());
    CHECK(*edge == 17);
    CHECK_THROWS_AS(sensitivity_probe(tent, 0.5, 0.1, 0.0, 10), InvalidArgument);
}
