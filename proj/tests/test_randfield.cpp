#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "noiselab/randfield.hpp"

using namespace noiselab;

TEST_CASE("white noise sampling is deterministic and trial-separated") {
    const auto a = sample_white_noise(1, 3, {42, 7});
    const auto b = sample_white_noise(1, 3, {42, 7});
    const auto c = sample_white_noise(1, 3, {42, 8});
    bool all_equal = true, any_diff = false;
    a.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        all_equal = all_equal && v == b.coeff(k);
        any_diff = any_diff || v != c.coeff(k);
    });
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("complex standard gaussian moments") {
    GaussianStream g(123, 0);
    const int n = 1'000'000;
    double m_re = 0, m_im = 0, m2 = 0, m4 = 0;
    for (int i = 0; i < n; ++i) {
        const auto z = g.next_complex();
        m_re += z.real();
        m_im += z.imag();
        const double a2 = std::norm(z);
        m2 += a2;
        m4 += a2 * a2;
    }
    m_re /= n;
    m_im /= n;
    m2 /= n;
    m4 /= n;
    CHECK(std::abs(m_re) < 0.005);
    CHECK(std::abs(m_im) < 0.005);
    CHECK(m2 == doctest::Approx(1.0).epsilon(0.005));
    CHECK(m4 == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("gamma_moment closed forms and Monte Carlo confirmation") {
    CHECK(gamma_moment(2.0) == doctest::Approx(1.0));
    CHECK(gamma_moment(4.0) == doctest::Approx(std::pow(2.0, 0.25)));
    CHECK(gamma_moment(1.0) == doctest::Approx(std::sqrt(std::acos(-1.0)) / 2.0));
    CHECK_THROWS_AS(gamma_moment(0.5), PreconditionError);

    GaussianStream g(5, 2);
    const int n = 1'000'000;
    double s1 = 0, s4 = 0;
    for (int i = 0; i < n; ++i) {
        const double a = std::abs(g.next_complex());
        s1 += a;
        s4 += a * a * a * a;
    }
    CHECK(s1 / n == doctest::Approx(gamma_moment(1.0)).epsilon(0.005));
    CHECK(std::pow(s4 / n, 0.25) == doctest::Approx(gamma_moment(4.0)).epsilon(0.005));
}

TEST_CASE("moment identity for linear combinations") {
    // (E|sum gamma_k a_k|^p)^{1/p} = gamma_moment(p) ||a||_2
    GaussianStream coeffs(77, 3);
    for (int n : {1, 5, 50}) {
        std::vector<std::complex<double>> a(static_cast<std::size_t>(n));
        double norm_sq = 0.0;
        for (auto& v : a) {
            v = coeffs.next_complex();
            norm_sq += std::norm(v);
        }
        const double norm_a = std::sqrt(norm_sq);
        const int trials = 20000;
        std::vector<double> abs_vals(trials);
        GaussianStream g(501, static_cast<std::uint64_t>(n));
        for (int t = 0; t < trials; ++t) {
            std::complex<double> acc{0, 0};
            for (const auto& v : a) acc += g.next_complex() * v;
            abs_vals[static_cast<std::size_t>(t)] = std::abs(acc);
        }
        for (double p : {1.0, 2.0, 4.0}) {
            double mean = 0.0;
            for (double x : abs_vals) mean += std::pow(x, p);
            mean /= trials;
            double var = 0.0;
            for (double x : abs_vals) var += std::pow(std::pow(x, p) - mean, 2.0);
            const double se = std::sqrt(var / trials / (trials - 1.0));
            const double target = std::pow(gamma_moment(p) * norm_a, p);
            CHECK(std::abs(mean - target) <= 3.0 * se + 1e-12);
        }
    }
}

TEST_CASE("rotational invariance via one-sample KS on the modulus") {
    // |a g1 + b g2| with |a|^2+|b|^2 = 1 has CDF 1 - exp(-x^2).
    const double a = 0.6, b = 0.8;
    const int n = 100'000;
    std::vector<double> xs(n);
    GaussianStream g(31337, 0);
    for (int i = 0; i < n; ++i) {
        const auto z = a * g.next_complex() + b * g.next_complex();
        xs[static_cast<std::size_t>(i)] = std::abs(z);
    }
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
        const double cdf = 1.0 - std::exp(-xs[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(i)]);
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i + 1) / n));
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i) / n));
    }
    CHECK(ks < 0.01);
}

TEST_CASE("empirical coefficient covariance is the identity") {
    const int N = 4, trials = 10000;
    const auto pts = enumerate_ball(1, N);
    const std::size_t n = pts.size();
    std::vector<std::vector<std::complex<double>>> cov(n, std::vector<std::complex<double>>(n));
    for (int t = 0; t < trials; ++t) {
        std::vector<std::complex<double>> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = white_noise_coeff({9, static_cast<std::uint64_t>(t)}, pts[i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) cov[i][j] += g[i] * std::conj(g[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto c = cov[i][j] / static_cast<double>(trials);
            if (i == j)
                CHECK(std::abs(c - 1.0) < 0.05);
            else
                CHECK(std::abs(c) < 0.05);
        }
    }
}

TEST_CASE("pairing with e_1 has unit variance") {
    SpectralField e1(1, 2);
    e1.set_coeff(FreqIndex{1}, {1.0, 0.0});
    const int trials = 10000;
    double var = 0.0;
    std::complex<double> mean{0, 0};
    for (int t = 0; t < trials; ++t) {
        const auto w = sample_white_noise(1, 2, {11, static_cast<std::uint64_t>(t)});
        const auto v = pair_with(w, e1);
        mean += v;
        var += std::norm(v);
    }
    var /= trials;
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
    CHECK(std::abs(mean) / trials < 0.02);
}

TEST_CASE("log_sup_statistic basics") {
    const auto w8 = sample_white_noise(1, 8, {3, 0});
    const auto w64 = sample_white_noise(1, 64, {3, 0});
    CHECK(log_sup_statistic(w64) >= log_sup_statistic(w8));  // nested coefficients

    SpectralField zero(1, 8);
    CHECK(log_sup_statistic(zero) == 0.0);
    SpectralField tiny(1, 1);
    CHECK_THROWS_AS(log_sup_statistic(tiny), PreconditionError);
}

TEST_CASE("hermitian real-noise variant") {
    const auto w = sample_white_noise(2, 5, {2, 4}, true);
    w.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        FreqIndex neg = k;
        for (int i = 0; i < k.dim; ++i) neg.k[i] = -neg.k[i];
        CHECK(w.coeff(neg) == std::conj(v));
    });
    CHECK(w.coeff(FreqIndex{0, 0}).imag() == 0.0);
}

TEST_CASE("coefficient budget guard") {
    CHECK_THROWS_AS(sample_white_noise(4, 200, {0, 0}), ResourceError);
}

TEST_CASE("lookups outside the cutoff ball return zero") {
    const auto w = sample_white_noise(2, 3, {1, 1});
    CHECK(w.coeff(FreqIndex{4, 0}) == std::complex<double>{0.0, 0.0});
    CHECK(w.coeff(FreqIndex{3, 3}) == std::complex<double>{0.0, 0.0});  // box corner
    SpectralField f(1, 2);
    CHECK_THROWS_AS(f.set_coeff(FreqIndex{3}, {1.0, 0.0}), PreconditionError);
}
