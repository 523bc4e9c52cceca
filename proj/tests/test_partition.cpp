#include <doctest.h>

#include <cmath>

#include "noiselab/partition.hpp"

using namespace noiselab;

TEST_CASE("sharp profile values and boundaries") {
    const auto sharp = PartitionProfile::sharp();
    CHECK(phi(sharp, 1.0) == 1.0);
    CHECK(phi(sharp, 2.1) == 0.0);
    CHECK(phi(sharp, 0.70710678) == 0.0);          // just below 2^{-1/2}: outside
    CHECK(phi(sharp, std::sqrt(2.0)) == 1.0);      // closed right end
    CHECK(phi(sharp, std::sqrt(2.0) + 1e-9) == 0.0);
}

TEST_CASE("smooth profile telescoping at a scalar radius") {
    const auto smooth = PartitionProfile::smooth();
    CHECK(phi(smooth, 1.2) + phi(smooth, 0.6) + phi(smooth, 2.4) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phi(smooth, 1.0) == doctest::Approx(1.0));   // plateau [1, sqrt2]
    CHECK(phi(smooth, 2.0) == 0.0);
    CHECK(phi(smooth, 0.70) == 0.0);
}

TEST_CASE("smooth profile configuration errors") {
    CHECK_THROWS_AS(PartitionProfile::smooth(1.2, 2.0), ConfigError);
    CHECK_THROWS_AS(PartitionProfile::smooth(1.5, 2.2), ConfigError);
    CHECK_THROWS_AS(PartitionProfile::smooth(1.9, 1.5), ConfigError);
}

TEST_CASE("phi_j on lattice points") {
    const auto sharp = PartitionProfile::sharp();
    const auto smooth = PartitionProfile::smooth();
    CHECK(phi_j(sharp, 1, FreqIndex{2}) == 1.0);   // 2 in S_1
    CHECK(phi_j(sharp, 1, FreqIndex{3}) == 0.0);   // 3 > 2^{3/2}
    CHECK(phi_j(sharp, 0, FreqIndex{0}) == 1.0);
    CHECK(phi_j(smooth, 0, FreqIndex{0}) == 1.0);
}

TEST_CASE("partition identity on the lattice") {
    const int J = 5;
    for (int d : {1, 2}) {
        for (const auto& profile : {PartitionProfile::sharp(), PartitionProfile::smooth()}) {
            for (const auto& k : enumerate_ball_nsq(d, std::int64_t{1} << (2 * J))) {
                if (k.norm_sq() == 0) continue;
                double sum = 0.0;
                for (int j = 0; j <= J + 1; ++j) sum += phi_j(profile, j, k);
                CHECK(std::abs(sum - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("support of phi_j") {
    for (const auto& profile : {PartitionProfile::sharp(), PartitionProfile::smooth()}) {
        for (int j = 0; j <= 4; ++j) {
            for (const auto& k : enumerate_ball_nsq(1, 1 << 10)) {
                const double w = phi_j(profile, j, k);
                const double r = k.norm();
                if (r > std::exp2(j + 1) + 1e-12) CHECK(w == 0.0);
                if (j >= 1 && r < std::exp2(j - 1) - 1e-12) CHECK(w == 0.0);
                CHECK(w >= 0.0);
                CHECK(w <= 1.0);
            }
        }
    }
}

TEST_CASE("sharp phi_j equals one on its shell") {
    for (int d : {1, 2}) {
        for (int j = 1; j <= 5; ++j) {
            for (const auto& k : shell_members(d, {j, ShellKind::HalfWidthHalf}))
                CHECK(phi_j(PartitionProfile::sharp(), j, k) == 1.0);
        }
    }
}

TEST_CASE("phi_sq_sum sharp equals lattice counts") {
    CHECK(phi_sq_sum(PartitionProfile::sharp(), 1, 1) == 2.0);
    CHECK(phi_sq_sum(PartitionProfile::sharp(), 0, 1) == 3.0);
    CHECK(phi_sq_sum(PartitionProfile::sharp(), 2, 1) == 6.0);
    CHECK(phi_sq_sum(PartitionProfile::sharp(), 1, 2) == 16.0);
}

TEST_CASE("phi_sq_sum smooth bracketed by plateau and support counts") {
    const auto smooth = PartitionProfile::smooth();
    for (int j = 1; j <= 6; ++j) {
        // plateau [1, sqrt2] scaled by 2^j; support within [2^{-1/2}, 2] scaled
        std::int64_t plateau = 0, support = 0;
        for (const auto& k : enumerate_ball_nsq(1, std::int64_t{1} << (2 * j + 2))) {
            const double r = k.norm() / std::exp2(j);
            if (r >= 1.0 && r <= std::sqrt(2.0)) ++plateau;
            if (r >= 1.0 / std::sqrt(2.0) && r <= 2.0) ++support;
        }
        const double v = phi_sq_sum(smooth, j, 1);
        CHECK(v >= static_cast<double>(plateau) - 1e-9);
        CHECK(v <= static_cast<double>(support) + 1e-9);
    }
}

TEST_CASE("smooth profile has no jumps: bounded second difference") {
    const auto smooth = PartitionProfile::smooth();
    const double h = 1e-4;
    double max_fd2 = 0.0;
    for (double r = 0.5; r <= 2.05; r += h) {
        const double fd2 = std::abs(phi(smooth, r + h) - 2.0 * phi(smooth, r) + phi(smooth, r - h)) / (h * h);
        max_fd2 = std::max(max_fd2, fd2);
    }
    CHECK(max_fd2 < 1e4);
}
