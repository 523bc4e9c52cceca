#include "noiselab/synthesis.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace noiselab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

int block_band_limit(const SpectralField& field, int j) {
    const std::int64_t support = std::int64_t{1} << (j + 1);  // phi_j vanishes beyond 2^{j+1}
    return static_cast<int>(std::min<std::int64_t>(support, field.cutoff()));
}

std::int64_t grid_points(int d, int M) {
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= M;
    return total;
}

void check_grid(int d, int M, int band, std::int64_t budget) {
    if (M <= 2 * band)
        throw PreconditionError("grid M = " + std::to_string(M) +
                                " violates the Nyquist margin M > 2*band (band = " +
                                std::to_string(band) + ")");
    if (grid_points(d, M) > budget)
        throw ResourceError("grid M^d exceeds the configured budget");
}

// Weighted coefficient visitor: applies phi_j when j >= 0, identity otherwise.
template <typename Fn>
void for_each_weighted(const SpectralField& field, const PartitionProfile& profile, int j,
                       Fn&& fn) {
    field.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        if (v == std::complex<double>{0.0, 0.0}) return;
        if (j < 0) {
            fn(k, v);
            return;
        }
        const double w = phi_j(profile, j, k);
        if (w != 0.0) fn(k, w * v);
    });
}

GridField synthesize_impl(const SpectralField& field, const PartitionProfile& profile, int j,
                          int M, std::int64_t budget) {
    const int d = field.dim();
    const int band = j < 0 ? field.cutoff() : block_band_limit(field, j);
    check_grid(d, M, band, budget);

    GridField out;
    out.d = d;
    out.M = M;
    out.band_limit = band;
    out.samples.assign(static_cast<std::size_t>(grid_points(d, M)), {0.0, 0.0});

    // f(x_m) = sum_k c_k e^{ik.(-pi + 2pi m/M)} = IDFT of c folded mod M,
    // twisted by e^{-i pi sum(k_i)} = (-1)^{sum k_i}.
    for_each_weighted(field, profile, j, [&](const FreqIndex& k, std::complex<double> c) {
        std::int64_t idx = 0;
        std::int64_t parity = 0;
        for (int i = 0; i < d; ++i) {
            const int m = ((k.k[i] % M) + M) % M;
            idx = idx * M + m;
            parity += k.k[i];
        }
        if (parity & 1) c = -c;
        out.samples[static_cast<std::size_t>(idx)] += c;
    });

    std::vector<int> dims(static_cast<std::size_t>(d), M);
    auto* data = reinterpret_cast<fftw_complex*>(out.samples.data());
    fftw_plan plan;
    {
        std::scoped_lock lk(fftw_planner_mutex());
        plan = fftw_plan_dft(d, dims.data(), data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::scoped_lock lk(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

GridField synthesize_block(const SpectralField& field, const PartitionProfile& profile, int j,
                           int M, std::int64_t grid_budget) {
    if (j < 0) throw PreconditionError("synthesize_block: level must be >= 0");
    return synthesize_impl(field, profile, j, M, grid_budget);
}

GridField synthesize_field(const SpectralField& field, int M, std::int64_t grid_budget) {
    return synthesize_impl(field, PartitionProfile::sharp(), -1, M, grid_budget);
}

GridField synthesize_block_direct(const SpectralField& field, const PartitionProfile& profile,
                                  int j, int M, std::int64_t grid_budget) {
    if (j < 0) throw PreconditionError("synthesize_block_direct: level must be >= 0");
    const int d = field.dim();
    const int band = block_band_limit(field, j);
    check_grid(d, M, band, grid_budget);

    GridField out;
    out.d = d;
    out.M = M;
    out.band_limit = band;
    out.samples.assign(static_cast<std::size_t>(grid_points(d, M)), {0.0, 0.0});

    std::vector<std::pair<FreqIndex, std::complex<double>>> terms;
    for_each_weighted(field, profile, j, [&](const FreqIndex& k, std::complex<double> c) {
        terms.emplace_back(k, c);
    });

    std::vector<int> m(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < out.samples.size(); ++flat) {
        std::array<double, kMaxDim> x{};
        for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = -std::numbers::pi + kTwoPi * m[static_cast<std::size_t>(i)] / M;
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [k, c] : terms) {
            double phase = 0.0;
            for (int i = 0; i < d; ++i) phase += k.k[i] * x[static_cast<std::size_t>(i)];
            acc += c * std::complex<double>{std::cos(phase), std::sin(phase)};
        }
        out.samples[flat] = acc;
        for (int axis = d - 1; axis >= 0; --axis) {
            if (++m[static_cast<std::size_t>(axis)] < M) break;
            m[static_cast<std::size_t>(axis)] = 0;
        }
    }
    return out;
}

double lp_norm_grid(const GridField& g, double p) {
    if (!(p >= 1.0)) throw PreconditionError("lp_norm_grid: p must be >= 1");
    if (std::isinf(p)) {
        double best = 0.0;
        for (const auto& v : g.samples) best = std::max(best, std::abs(v));
        return best;
    }
    double acc = 0.0;
    for (const auto& v : g.samples) acc += std::pow(std::abs(v), p);
    const double cell = std::pow(kTwoPi / g.M, g.d);
    return std::pow(cell * acc, 1.0 / p);
}

double l2_norm_parseval(const SpectralField& field, const PartitionProfile& profile, int j) {
    double acc = 0.0;
    field.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        const double w = phi_j(profile, j, k);
        if (w != 0.0) acc += std::norm(w * v);
    });
    return std::pow(kTwoPi, field.dim() / 2.0) * std::sqrt(acc);
}

double l2_norm_parseval(const SpectralField& field) {
    double acc = 0.0;
    field.for_each_in_ball(
        [&](const FreqIndex&, const std::complex<double>& v) { acc += std::norm(v); });
    return std::pow(kTwoPi, field.dim() / 2.0) * std::sqrt(acc);
}

}  // namespace noiselab
