#include <doctest.h>

#include <cmath>
#include <numbers>

#include "noiselab/besov.hpp"

using namespace noiselab;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("besov norm of the constant mode") {
    SpectralField f(1, 2);
    f.set_coeff(FreqIndex{0}, {1.0, 0.0});
    for (double s : {-1.0, -0.5, 0.0, 1.0}) {
        for (double q : {1.0, 2.0, kInf}) {
            for (double p : {1.0, 2.0, 4.0}) {
                const auto rep = besov_norm(f, s, p, q, PartitionProfile::sharp());
                CHECK(rep.value == doctest::Approx(std::pow(kTwoPi, 1.0 / p)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("besov norm of a single shell mode") {
    // |k| = 3 lies in S_2 (8 < 9 <= 32); complete once N >= 8
    SpectralField f(1, 8);
    f.set_coeff(FreqIndex{3}, {1.0, 0.0});
    for (double p : {1.0, 2.0, 4.0}) {
        const double s = -0.5;
        const auto rep = besov_norm(f, s, p, kInf, PartitionProfile::sharp());
        CHECK(rep.value ==
              doctest::Approx(std::exp2(2 * s) * std::pow(kTwoPi, 1.0 / p)).epsilon(1e-9));
    }
}

TEST_CASE("monotonicity in s and in q on the same field") {
    const auto f = sample_white_noise(1, 16, {21, 0});
    const auto profile = PartitionProfile::sharp();
    const double n_s1 = besov_norm(f, -1.0, 2.0, 2.0, profile).value;
    const double n_s2 = besov_norm(f, -0.5, 2.0, 2.0, profile).value;
    CHECK(n_s1 <= n_s2 * (1 + 1e-12));

    const double n_q1 = besov_norm(f, -0.5, 2.0, 1.0, profile).value;
    const double n_q2 = besov_norm(f, -0.5, 2.0, 2.0, profile).value;
    const double n_qi = besov_norm(f, -0.5, 2.0, kInf, profile).value;
    CHECK(n_qi <= n_q2 * (1 + 1e-12));
    CHECK(n_q2 <= n_q1 * (1 + 1e-12));
}

TEST_CASE("levelwise L^p monotonicity with the measure constant") {
    const auto f = sample_white_noise(1, 16, {22, 3});
    const auto profile = PartitionProfile::sharp();
    for (const auto& [p, r] : std::vector<std::pair<double, double>>{{1, 2}, {2, 4}, {1, 4}}) {
        const auto rep_p = besov_norm(f, 0.0, p, kInf, profile);
        const auto rep_r = besov_norm(f, 0.0, r, kInf, profile);
        for (std::size_t j = 0; j < rep_p.levels.size(); ++j) {
            const double lhs = rep_p.levels[j].block_norm;
            const double rhs = std::pow(kTwoPi, 1.0 / p - 1.0 / r) * rep_r.levels[j].block_norm;
            CHECK(lhs <= rhs + 1e-9 * std::max(1.0, rhs));
        }
    }
}

TEST_CASE("sharp and smooth profiles give comparable values") {
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = sample_white_noise(1, 64, {500, static_cast<std::uint64_t>(trial)});
        const double a = besov_norm(f, -0.5, 2.0, kInf, PartitionProfile::sharp()).value;
        const double b = besov_norm(f, -0.5, 2.0, kInf, PartitionProfile::smooth()).value;
        CHECK(a / b > 0.05);
        CHECK(a / b < 20.0);
    }
}

TEST_CASE("sobolev norm identities and equivalence bracket") {
    SpectralField e0(1, 2);
    e0.set_coeff(FreqIndex{0}, {1.0, 0.0});
    for (double s : {-1.0, 0.0, 2.0})
        CHECK(sobolev_h2_norm(e0, s) == doctest::Approx(std::sqrt(kTwoPi)));

    for (int trial = 0; trial < 10; ++trial) {
        const auto f = sample_white_noise(1, 32, {31, static_cast<std::uint64_t>(trial)});
        CHECK(sobolev_h2_norm(f, 0.0) == doctest::Approx(l2_norm_parseval(f)).epsilon(1e-12));
        for (double s : {-1.0, -0.5}) {
            const double ratio = sobolev_h2_norm(f, s) /
                                 besov_norm(f, s, 2.0, 2.0, PartitionProfile::sharp()).value;
            CHECK(ratio >= std::pow(3.0, s / 2.0) - 1e-9);
            CHECK(ratio <= std::pow(2.0, -s / 2.0) + 1e-9);
        }
    }
}

TEST_CASE("incomplete top levels are flagged and excluded from the value") {
    SpectralField f(1, 5);
    f.set_coeff(FreqIndex{1}, {1.0, 0.0});
    f.set_coeff(FreqIndex{5}, {1.0, 0.0});  // level 2, incomplete (2^3 > 5)
    const auto rep = besov_norm(f, 0.0, 2.0, kInf, PartitionProfile::sharp());
    bool saw_incomplete = false;
    for (const auto& e : rep.levels) {
        if (e.j >= 2) {
            CHECK(!e.complete);
            saw_incomplete = true;
        } else {
            CHECK(e.complete);
        }
    }
    CHECK(saw_incomplete);
    CHECK(rep.value == doctest::Approx(std::sqrt(kTwoPi)));  // only the k=1 level counts
}

TEST_CASE("p = inf level norms are approximate grid maxima") {
    SpectralField f(1, 2);
    f.set_coeff(FreqIndex{0}, {1.5, 0.0});
    const auto rep = besov_norm(f, 0.0, kInf, kInf, PartitionProfile::sharp());
    CHECK(rep.levels.front().approximate);
    CHECK(rep.value == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("quadrature refinement failure raises") {
    const auto f = sample_white_noise(1, 8, {77, 0});
    QuadratureOptions opts;
    opts.tol = 1e-300;  // unreachable target
    opts.max_refine = 1;
    CHECK_THROWS_AS(besov_norm(f, 0.0, 3.0, kInf, PartitionProfile::sharp(), opts),
                    QuadratureError);
}

TEST_CASE("besov rejects out-of-range indices") {
    SpectralField f(1, 2);
    CHECK_THROWS_AS(besov_norm(f, 0.0, 0.5, 2.0, PartitionProfile::sharp()), PreconditionError);
    CHECK_THROWS_AS(besov_norm(f, 0.0, 2.0, 0.0, PartitionProfile::sharp()), PreconditionError);
}
