#include <doctest.h>

#include <cmath>
#include <numbers>

#include "noiselab/besov.hpp"
#include "noiselab/fourier_besov.hpp"

using namespace noiselab;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("fb norms of the constant mode are all one") {
    SpectralField f(1, 2);
    f.set_coeff(FreqIndex{0}, {1.0, 0.0});
    for (double s : {-1.0, -0.5, 0.0}) {
        for (double p : {1.0, 2.0, kInf}) {
            for (double q : {1.0, 2.0, kInf}) {
                const auto tri = fb_norms(f, s, p, q);
                CHECK(tri.sharp_value == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(tri.smooth_value == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(tri.dyadic_value == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("a dyadic-radius mode is counted by exactly three cells") {
    SpectralField f(1, 16);
    f.set_coeff(FreqIndex{8}, {1.0, 0.0});  // |k| = 2^3
    for (double p : {1.0, 2.0}) {
        for (double q : {1.0, 2.0}) {
            const auto tri = fb_norms(f, 0.0, p, q);
            CHECK(tri.dyadic_value == doctest::Approx(std::pow(3.0, 1.0 / q)).epsilon(1e-12));
        }
        CHECK(fb_norms(f, 0.0, p, kInf).dyadic_value == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("w_stat examples") {
    SpectralField ones(1, 16);
    for (const auto& k : enumerate_ball(1, 16)) ones.set_coeff(k, {1.0, 0.0});
    for (double p : {1.0, 2.0, 4.0})
        CHECK(w_stat(ones, 2, p) == doctest::Approx(std::pow(14.0, 1.0 / p)).epsilon(1e-12));

    SpectralField zero(1, 16);
    CHECK(w_stat(zero, 2, 2.0) == 0.0);
    CHECK_THROWS_AS(w_stat(zero, 0, 2.0), PreconditionError);
}

TEST_CASE("variant inequalities on random and structured fields") {
    const auto smooth = PartitionProfile::smooth();
    for (int trial = 0; trial < 30; ++trial) {
        SpectralField f = sample_white_noise(1, 64, {900, static_cast<std::uint64_t>(trial)});
        if (trial % 5 == 0) {
            f = SpectralField(1, 64);
            f.set_coeff(FreqIndex{1 << (trial % 6)}, {1.0, 0.0});
        }
        for (double s : {-1.0, -0.5, 0.0}) {
            for (double p : {1.0, 2.0, 4.0, kInf}) {
                for (double q : {1.0, 2.0, kInf}) {
                    const auto tri = fb_norms(f, s, p, q, smooth);
                    const double scale = std::max(tri.sharp_value, 1e-300);
                    CHECK(tri.smooth_value <= tri.sharp_value * (1 + 1e-9));
                    CHECK(tri.sharp_value <= 3.0 * tri.smooth_value * (1 + 1e-9));
                    const double c1 = std::pow(4.0, -std::abs(s));
                    const double c2 = std::exp2(std::abs(s));
                    CHECK(c1 * tri.dyadic_value <= scale * (1 + 1e-9));
                    CHECK(tri.sharp_value <= c2 * tri.dyadic_value * (1 + 1e-9) + 1e-300);
                }
            }
        }
    }
}

TEST_CASE("p = 2 levelwise comparison against Parseval block norms") {
    const auto smooth = PartitionProfile::smooth();
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = sample_white_noise(1, 64, {901, static_cast<std::uint64_t>(trial)});
        const double s = -0.5;
        const auto tri = fb_norms(f, s, 2.0, kInf, smooth);
        const auto blocks = level_l2_norms(f, smooth, top_level(f));
        const double c1 = std::pow(4.0, -std::abs(s));
        const double c2 = std::exp2(std::abs(s));
        for (const auto& le : tri.levels) {
            const double besov_side = std::exp2(s * le.j) *
                                      blocks[static_cast<std::size_t>(le.j)] /
                                      std::sqrt(kTwoPi);
            if (besov_side < 1e-12) continue;
            CHECK(le.smooth >= c1 * besov_side * (1 - 1e-9));
            CHECK(le.smooth <= c2 * besov_side * (1 + 1e-9));
        }
    }
}

TEST_CASE("fb parameter validation") {
    SpectralField f(1, 2);
    CHECK_THROWS_AS(fb_norms(f, 0.0, 0.5, 2.0), PreconditionError);
    CHECK_THROWS_AS(fb_norms(f, 0.0, 2.0, 2.0, PartitionProfile::sharp()), PreconditionError);
}
