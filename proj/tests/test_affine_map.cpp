#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ifsecon/affine_map.hpp"
#include "ifsecon/errors.hpp"
#include "ifsecon/ifs_system.hpp"
#include "support.hpp"

using namespace ifsecon;

TEST_CASE("apply_map examples") {
    const AffineMap fa = AffineMap::scalar(1.0 / 3.0, 0.0);
    const AffineMap fb = AffineMap::scalar(1.0 / 3.0, 2.0 / 3.0);
    CHECK(apply_map(fa, std::vector<double>{0.9})[0] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(apply_map(fb, std::vector<double>{0.0})[0] == 2.0 / 3.0);
    CHECK(apply_map(fa, std::vector<double>{0.0})[0] == 0.0);
    CHECK_THROWS_AS(apply_map(fa, std::vector<double>{0.1, 0.2}), InvalidArgument);
}

TEST_CASE("AffineMap rejects non-contractions") {
    CHECK_THROWS_AS(AffineMap::scalar(1.0, 0.0), NotContractive);
    CHECK_THROWS_AS(AffineMap::scalar(-1.5, 0.0), NotContractive);
    CHECK_THROWS_AS(AffineMap::scalar(0.0, 0.3), NotContractive);
    CHECK_THROWS_AS(AffineMap(3, Matrix{}, State{}), InvalidArgument);
    CHECK_NOTHROW(AffineMap::scalar(-0.5, 0.0));
}

TEST_CASE("koch_maps lipschitz constants") {
    SUBCASE("Koch") {
        const auto [f1, f2] = koch_maps(0.5, std::sqrt(3.0) / 6.0);
        CHECK(std::abs(f1.lipschitz() - 1.0 / std::sqrt(3.0)) <= 1e-12);
        CHECK(std::abs(f2.lipschitz() - 1.0 / std::sqrt(3.0)) <= 1e-12);
    }
    SUBCASE("Peano") {
        const auto [f1, f2] = koch_maps(0.5, 0.5);
        CHECK(std::abs(f1.lipschitz() - 1.0 / std::sqrt(2.0)) <= 1e-12);
        CHECK(std::abs(f2.lipschitz() - 1.0 / std::sqrt(2.0)) <= 1e-12);
    }
    SUBCASE("real a halves the segment") {
        const auto [f1, f2] = koch_maps(0.5, 0.0);
        CHECK(f1.lipschitz() == 0.5);
        CHECK(f2.lipschitz() == 0.5);
        CHECK(f1(State{1.0, 0.0})[0] == 0.5);
        CHECK(f2(State{0.0, 0.0})[0] == 0.5);
        CHECK(f2(State{1.0, 0.0})[0] == 1.0);
    }
    SUBCASE("endpoints are fixed") {
        const auto [f1, f2] = koch_maps(0.5, std::sqrt(3.0) / 6.0);
        CHECK(f1(State{0.0, 0.0}) == State{0.0, 0.0});
        const State e = f2(State{1.0, 0.0});
        CHECK(std::abs(e[0] - 1.0) <= 1e-15);
        CHECK(std::abs(e[1]) <= 1e-15);
    }
    CHECK_THROWS_AS(koch_maps(1.2, 0.0), NotContractive);
    CHECK_THROWS_AS(koch_maps(-0.1, 0.0), NotContractive);
    CHECK_THROWS_AS(koch_maps(0.5, 0.9), NotContractive);
}

TEST_CASE("lipschitz equals the largest singular value") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        Matrix m{};
        for (auto& row : m)
            for (auto& v : row) v = testsupport::uniform(rng, -0.5, 0.5);
        // Largest singular value through the eigenvalues of m^T m.
        const double a = m[0][0] * m[0][0] + m[1][0] * m[1][0];
        const double b = m[0][0] * m[0][1] + m[1][0] * m[1][1];
        const double d = m[0][1] * m[0][1] + m[1][1] * m[1][1];
        const double top = 0.5 * (a + d) + std::sqrt(0.25 * (a - d) * (a - d) + b * b);
        const double sigma = std::sqrt(top);
        if (sigma <= 0.0 || sigma >= 1.0) continue;
        const AffineMap f(2, m, State{0.0, 0.0});
        CHECK(std::abs(f.lipschitz() - sigma) <= 1e-12);
    }
}

TEST_CASE("fixed_point solves f(x) = x") {
    const auto [f1, f2] = koch_maps(0.5, 0.5);
    for (const AffineMap& f : {f1, f2}) {
        const State p = f.fixed_point();
        const State fp = f(p);
        CHECK(std::abs(fp[0] - p[0]) <= 1e-15);
        CHECK(std::abs(fp[1] - p[1]) <= 1e-15);
    }
    CHECK(AffineMap::scalar(1.0 / 3.0, 2.0 / 3.0).fixed_point()[0] == doctest::Approx(1.0));
}

TEST_CASE("cantor_system builder") {
    const IfsSystem c3 = cantor_system(3.0);
    REQUIRE(c3.size() == 2);
    CHECK(c3.map(0).matrix()[0][0] == 1.0 / 3.0);
    CHECK(c3.map(0).offset()[0] == 0.0);
    CHECK(c3.map(1).offset()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(c3.lambda() == 1.0 / 3.0);
    CHECK(c3.bounding_box().lo[0] == 0.0);
    CHECK(c3.bounding_box().hi[0] == 1.0);

    const IfsSystem c4 = cantor_system(4.0);
    CHECK(c4.map(0).matrix()[0][0] == 0.25);
    CHECK(c4.map(1).offset()[0] == 0.75);

    CHECK_THROWS_AS(cantor_system(2.0), InvalidArgument);
    CHECK_THROWS_AS(cantor_system(1.5), InvalidArgument);
}

TEST_CASE("IfsSystem validation") {
    const AffineMap half = AffineMap::scalar(0.5, 0.0);
    const Box unit{1, {0.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(IfsSystem({half}, unit), InvalidArgument);
    // x/2 + 0.6 leaves [0, 1].
    CHECK_THROWS_AS(IfsSystem({half, AffineMap::scalar(0.5, 0.6)}, unit), InvalidArgument);
    CHECK_THROWS_AS(IfsSystem({half, half}, unit, ProbVector({0.5, 0.3, 0.2})), InvalidArgument);
    const auto [f1, f2] = koch_maps(0.5, 0.5);
    CHECK_THROWS_AS(IfsSystem({half, f1}, unit), InvalidArgument);
    CHECK_NOTHROW(IfsSystem({half, half}, unit));
}

TEST_CASE("ProbVector validation") {
    CHECK_THROWS_AS(ProbVector({1.0}), InvalidArgument);
    CHECK_THROWS_AS(ProbVector({0.5, 0.0, 0.5}), InvalidArgument);
    CHECK_THROWS_AS(ProbVector({0.5, 0.6}), InvalidArgument);
    CHECK_NOTHROW(ProbVector({0.25, 0.75}));
}

TEST_CASE("Peano has no invariant axis-aligned box but an invariant triangle") {
    const auto [f1, f2] = koch_maps(0.5, 0.5);
    // The triangle's own box is not mapped into itself.
    CHECK_THROWS_AS(IfsSystem({f1, f2}, Box{2, {0.0, 0.0}, {1.0, 0.5}}), InvalidArgument);
    const IfsSystem p = de_rham_system(0.5, 0.5);
    CHECK(p.has_region());
    CHECK(p.contains(State{0.5, 0.25}));
    CHECK_FALSE(p.contains(State{0.05, 0.45}));
}

TEST_CASE("apriori_iterations") {
    const IfsSystem c3 = cantor_system(3.0);
    CHECK(c3.apriori_iterations(std::pow(3.0, -5)) == 5);
    CHECK(c3.apriori_iterations(0.1) == 3);
    CHECK(c3.apriori_iterations(2.0) == 0);
}

TEST_CASE("cantor_membership") {
    CHECK(cantor_membership(0.0));
    CHECK(cantor_membership(1.0));
    CHECK(cantor_membership(2.0 / 9.0));
    CHECK(cantor_membership(0.25));  // 0.0202... in base 3
    CHECK(cantor_membership(0.75));
    CHECK_FALSE(cantor_membership(0.5));
    CHECK_FALSE(cantor_membership(0.4));
    CHECK_FALSE(cantor_membership(1.0 / 3.0 + 1e-6));
    CHECK_FALSE(cantor_membership(-0.1));
    CHECK_FALSE(cantor_membership(0.1, 20, 1e-9, 4.0));  // gap (1/4, 3/4) then (1/16, 3/16)
    CHECK(cantor_membership(0.0625, 20, 1e-9, 4.0));
}
