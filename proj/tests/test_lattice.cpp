#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "noiselab/lattice.hpp"

using namespace noiselab;

namespace {

// Independent brute-force ball count: plain nested loops over [-R, R]^d.
std::int64_t brute_ball_count(int d, double radius) {
    const int lim = static_cast<int>(std::ceil(radius)) + 1;
    std::int64_t count = 0;
    for (int a = -lim; a <= lim; ++a) {
        if (d == 1) {
            if (static_cast<double>(a) * a <= radius * radius * (1 + 1e-12) + 1e-12) ++count;
            continue;
        }
        for (int b = -lim; b <= lim; ++b) {
            if (d == 2) {
                const double nsq = static_cast<double>(a) * a + static_cast<double>(b) * b;
                if (nsq <= radius * radius * (1 + 1e-12) + 1e-12) ++count;
                continue;
            }
            for (int c = -lim; c <= lim; ++c) {
                const double nsq = static_cast<double>(a) * a + static_cast<double>(b) * b +
                                   static_cast<double>(c) * c;
                if (nsq <= radius * radius * (1 + 1e-12) + 1e-12) ++count;
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("enumerate_ball basic examples") {
    const auto b1 = enumerate_ball(1, 2.5);
    REQUIRE(b1.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(b1[static_cast<std::size_t>(i)].k[0] == i - 2);

    CHECK(enumerate_ball(2, 1.0).size() == 5);
    CHECK(enumerate_ball(2, std::sqrt(2.0)).size() == 9);
}

TEST_CASE("enumerate_ball against the brute-force oracle, nondecreasing in R") {
    for (int d = 1; d <= 3; ++d) {
        std::int64_t prev = -1;
        for (double r : {0.0, 0.5, 1.0, 1.5, 2.0, 3.7, 5.0, 8.0, 13.2, 21.0, 32.0}) {
            if (d == 3 && r > 21.0) break;
            const auto n = static_cast<std::int64_t>(enumerate_ball(d, r).size());
            CHECK(n == brute_ball_count(d, r));
            CHECK(n >= prev);
            prev = n;
        }
    }
}

TEST_CASE("enumerate_ball rejects unsupported dimensions") {
    CHECK_THROWS_AS(enumerate_ball(0, 1.0), ConfigError);
    CHECK_THROWS_AS(enumerate_ball(5, 1.0), ConfigError);
}

TEST_CASE("shell membership, exact boundaries") {
    // d=1, j=1 half shell: 2 < k^2 <= 8 -> {-2, 2}
    const auto s1 = shell_members(1, {1, ShellKind::HalfWidthHalf});
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].k[0] == -2);
    CHECK(s1[1].k[0] == 2);

    // d=1, j=2: |k| in {3,4,5}
    const auto s2 = shell_members(1, {2, ShellKind::HalfWidthHalf});
    CHECK(s2.size() == 6);
    for (const auto& k : s2) CHECK((std::abs(k.k[0]) >= 3 && std::abs(k.k[0]) <= 5));

    CHECK(shell_members(2, {1, ShellKind::HalfWidthHalf}).size() == 16);

    // boundary |k|^2 = 2^{2j+1} is attainable in d=2 and must be included
    FreqIndex corner{2, 2};  // |k|^2 = 8 = 2^3
    CHECK(shell_contains({1, ShellKind::HalfWidthHalf}, corner));
    CHECK(!shell_contains({2, ShellKind::HalfWidthHalf}, corner));

    // d=1 width-one j=2: 2 <= |k| <= 8
    CHECK(shell_members(1, {2, ShellKind::WidthOne}).size() == 14);
}

TEST_CASE("half-width shells are pairwise disjoint") {
    for (int d : {1, 2}) {
        std::set<std::vector<int>> seen;
        for (int j = 1; j <= 6; ++j) {
            for (const auto& k : shell_members(d, {j, ShellKind::HalfWidthHalf})) {
                std::vector<int> key(k.k.begin(), k.k.begin() + d);
                CHECK(seen.insert(key).second);
            }
        }
    }
}

TEST_CASE("ball volumes") {
    CHECK(ball_volume(1) == doctest::Approx(2.0));
    CHECK(ball_volume(2) == doctest::Approx(3.14159265358979));
    CHECK(ball_volume(3) == doctest::Approx(4.0 * 3.14159265358979 / 3.0));
}

TEST_CASE("shell count limits and the lattice remainder envelope") {
    CHECK(shell_count_limit(1, ShellKind::HalfWidthHalf) == doctest::Approx(std::sqrt(2.0)));
    CHECK(shell_count_limit(1, ShellKind::WidthOne) == doctest::Approx(3.0));

    // |2^{-j} #S_j - sqrt(2)| <= 2 * 2^{-j}, and the suffix envelope shrinks.
    std::vector<double> err;
    for (int j = 1; j <= 14; ++j) {
        const double count = static_cast<double>(shell_count(1, {j, ShellKind::HalfWidthHalf}));
        const double e = std::abs(std::exp2(-j) * count - std::sqrt(2.0));
        CHECK(e <= 2.0 * std::exp2(-j));
        err.push_back(e);
    }
    double envelope = 0.0;
    std::vector<double> suffix(err.size());
    for (int i = static_cast<int>(err.size()) - 1; i >= 0; --i) {
        envelope = std::max(envelope, err[static_cast<std::size_t>(i)]);
        suffix[static_cast<std::size_t>(i)] = envelope;
    }
    for (std::size_t i = 4; i + 1 < suffix.size(); ++i) CHECK(suffix[i] >= suffix[i + 1]);

    // width-one limit via the same counting oracle at depth 14
    const double c14 = static_cast<double>(shell_count(1, {14, ShellKind::WidthOne}));
    CHECK(std::exp2(-14) * c14 == doctest::Approx(3.0).epsilon(1e-3));
}

TEST_CASE("lexicographic enumeration order is stable") {
    const auto pts = enumerate_ball(2, 1.5);
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);
}
