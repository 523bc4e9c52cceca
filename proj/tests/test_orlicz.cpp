#include <doctest.h>

#include <cmath>

#include "noiselab/orlicz.hpp"
#include "noiselab/rng.hpp"

using namespace noiselab;

namespace {

// Scalar root of Theta(u) = 1, solved independently of the sequence solver.
double theta_unit_root() {
    double lo = 0.5, hi = 3.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (theta(mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double constraint_sum(const WeightSequence& seq, double t) {
    double sum = 0.0;
    for (double v : seq.entries)
        if (v > 0) sum += theta(v / t);
    return sum;
}

}  // namespace

TEST_CASE("theta values and monotonicity") {
    CHECK(theta(0.0) == 0.0);
    CHECK(theta(1.0) == doctest::Approx(std::exp(-0.5)));
    double prev = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        const double x = 5.0 * i / 1000.0;
        const double v = theta(x);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(theta(-1.0), PreconditionError);
}

TEST_CASE("luxemburg_rho: zero sequence and single entries") {
    CHECK(luxemburg_rho({{}, 0.0}) == 0.0);
    CHECK(luxemburg_rho({{0.0, 0.0}, 0.0}) == 0.0);

    const double ustar = theta_unit_root();
    CHECK(ustar == doctest::Approx(1.1922793027991).epsilon(1e-10));
    for (double a : {0.3, 1.0, 7.5}) {
        CHECK(luxemburg_rho({{a}, 0.0}) == doctest::Approx(a / ustar).epsilon(1e-8));
    }
}

TEST_CASE("luxemburg_rho of (2^-n) sits near sqrt(log 2)") {
    WeightSequence seq = WeightSequence::geometric(0.5, 0.5);
    const double rho = luxemburg_rho(seq);
    CHECK(rho == doctest::Approx(0.43166899353).epsilon(1e-6));  // frozen from the scalar oracle
    const double target = std::sqrt(std::log(2.0));
    CHECK(rho / target >= 0.25);
    CHECK(rho / target <= 4.0);
}

TEST_CASE("luxemburg_rho residual certificate") {
    GaussianStream rng(2024, 0);
    for (int rep = 0; rep < 50; ++rep) {
        WeightSequence seq;
        const int n = 1 + (rep * 7) % 40;
        for (int i = 0; i < n; ++i) seq.entries.push_back(std::abs(rng.next_real()) + 1e-3);
        const double tol = 1e-10;
        const double t = luxemburg_rho(seq, tol);
        CHECK(std::abs(constraint_sum(seq, t) - 1.0) <= tol);
        CHECK(constraint_sum(seq, t * (1.0 - 10 * tol)) >= 1.0 - 1e-8);
    }
}

TEST_CASE("luxemburg_rho homogeneity and monotonicity") {
    GaussianStream rng(99, 1);
    for (int rep = 0; rep < 20; ++rep) {
        WeightSequence seq;
        for (int i = 0; i < 25; ++i) seq.entries.push_back(std::abs(rng.next_real()));
        const double rho1 = luxemburg_rho(seq);
        for (double c : {0.1, 3.0}) {
            WeightSequence scaled = seq;
            for (auto& v : scaled.entries) v *= c;
            CHECK(luxemburg_rho(scaled) == doctest::Approx(c * rho1).epsilon(1e-8));
        }
        WeightSequence bigger = seq;
        for (auto& v : bigger.entries) v += 0.05;
        CHECK(luxemburg_rho(bigger) >= rho1 - 1e-12);
    }
}

TEST_CASE("dominance by (2^-n)") {
    WeightSequence dyadic = WeightSequence::geometric(0.5, 0.5);
    const double rho_dyadic = luxemburg_rho(dyadic);
    WeightSequence below;
    for (std::size_t i = 0; i < dyadic.entries.size(); ++i)
        below.entries.push_back(0.9 * dyadic.entries[i]);
    CHECK(luxemburg_rho(below) <= rho_dyadic + 1e-12);
}

TEST_CASE("divergent or uncertified input is rejected") {
    WeightSequence bad;
    bad.entries = {1.0};
    bad.tail_l2_sq = 1.0;  // unresolved tail mass
    CHECK_THROWS_AS(luxemburg_rho(bad), DivergenceError);
    WeightSequence inf_entry;
    inf_entry.entries = {std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(luxemburg_rho(inf_entry), DivergenceError);
}

TEST_CASE("hv_upper_bound") {
    CHECK(hv_upper_bound(0.0, {{}, 0.0}) == 0.0);
    const double ustar = theta_unit_root();
    CHECK(hv_upper_bound(1.0, {{1.0}, 0.0}) ==
          doctest::Approx(1.0 + 3.0 * std::sqrt(2.0) / ustar).epsilon(1e-8));

    // geometric sigma_j = (3/4)^j stays within a factor 4 of sqrt(log 4)
    WeightSequence geo = WeightSequence::geometric(0.75, 0.75);  // starts at n=1 value
    const double rho = luxemburg_rho(geo);
    const double target = std::sqrt(std::log(4.0));
    CHECK(rho / target >= 0.25);
    CHECK(rho / target <= 4.0);
}
