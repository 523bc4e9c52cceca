#pragma once

#include <complex>
#include <cstdint>

#include "noiselab/lattice.hpp"

namespace noiselab {

/// SplitMix64 finalizer; the avalanche kernel behind all sampling.
std::uint64_t mix64(std::uint64_t x);

/// Two independent N(0,1) draws from one 64-bit key (Box-Muller).
/// |z0 + i z1|^2 / 2 is exactly standard exponential in distribution.
struct GaussPair {
    double z0;
    double z1;
};
GaussPair gauss_from_key(std::uint64_t key);

/// Key for the coefficient at lattice point k of trial `trial` under `seed`.
/// Pure function of its arguments: evaluation order and thread count never
/// change a coefficient.
std::uint64_t coeff_key(std::uint64_t seed, std::uint64_t trial, const FreqIndex& k);

/// Complex standard Gaussian (Re and Im independent N(0, 1/2), E|g|^2 = 1).
std::complex<double> standard_complex_gaussian(std::uint64_t seed, std::uint64_t trial,
                                               const FreqIndex& k);

/// Counter-based scalar stream for generic Monte Carlo draws; draw i of
/// stream s under seed is a pure function of (seed, s, i).
class GaussianStream {
  public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    double next_real();                  // N(0,1)
    std::complex<double> next_complex(); // standard complex Gaussian
    std::uint64_t position() const { return pos_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t pos_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace noiselab
