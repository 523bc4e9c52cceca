#include "noiselab/rng.hpp"

#include <cmath>
#include <numbers>

namespace noiselab {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

namespace {

// uint64 -> double in (0,1), never 0 or 1.
double to_unit(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t zigzag(std::int64_t v) {
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

}  // namespace

GaussPair gauss_from_key(std::uint64_t key) {
    const double u1 = to_unit(mix64(key ^ 0x243F6A8885A308D3ull));
    const double u2 = to_unit(mix64(key ^ 0x13198A2E03707344ull));
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

std::uint64_t coeff_key(std::uint64_t seed, std::uint64_t trial, const FreqIndex& k) {
    std::uint64_t h = mix64(seed ^ 0xA0761D6478BD642Full);
    h = mix64(h ^ trial);
    h = mix64(h ^ static_cast<std::uint64_t>(k.dim));
    for (int i = 0; i < k.dim; ++i) h = mix64(h ^ zigzag(k.k[i]));
    return h;
}

std::complex<double> standard_complex_gaussian(std::uint64_t seed, std::uint64_t trial,
                                               const FreqIndex& k) {
    const GaussPair g = gauss_from_key(coeff_key(seed, trial, k));
    constexpr double inv_sqrt2 = 0.7071067811865476;
    return {g.z0 * inv_sqrt2, g.z1 * inv_sqrt2};
}

double GaussianStream::next_real() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    std::uint64_t h = mix64(seed_ ^ 0xE7037ED1A0B428DBull);
    h = mix64(h ^ stream_);
    h = mix64(h ^ pos_++);
    const GaussPair g = gauss_from_key(h);
    spare_ = g.z1;
    have_spare_ = true;
    return g.z0;
}

std::complex<double> GaussianStream::next_complex() {
    constexpr double inv_sqrt2 = 0.7071067811865476;
    const double re = next_real();
    const double im = next_real();
    return {re * inv_sqrt2, im * inv_sqrt2};
}

}  // namespace noiselab
