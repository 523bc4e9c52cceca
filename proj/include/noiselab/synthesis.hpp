#pragma once

#include <complex>
#include <vector>

#include "noiselab/partition.hpp"
#include "noiselab/randfield.hpp"

namespace noiselab {

/// Complex samples of a band-limited function on the uniform grid
/// x_m = -pi + 2*pi*m/M per axis, m in {0,...,M-1}^d, row-major.
struct GridField {
    int d = 1;
    int M = 1;
    int band_limit = 0;  // largest |k| present
    std::vector<std::complex<double>> samples;
};

inline constexpr std::int64_t kDefaultGridBudget = std::int64_t{1} << 24;

/// f_j(x_m) = sum_k phi_j(k) fhat(k) e^{ik.x_m} via FFT.
/// Requires M > 2*min(2^{j+1}, N) (Nyquist margin).
GridField synthesize_block(const SpectralField& field, const PartitionProfile& profile, int j,
                           int M, std::int64_t grid_budget = kDefaultGridBudget);

/// Same sum evaluated term by term; the slow cross-check path.
GridField synthesize_block_direct(const SpectralField& field, const PartitionProfile& profile,
                                  int j, int M, std::int64_t grid_budget = kDefaultGridBudget);

/// Whole-field synthesis (no partition weight); requires M > 2N.
GridField synthesize_field(const SpectralField& field, int M,
                           std::int64_t grid_budget = kDefaultGridBudget);

/// ((2pi/M)^d sum_m |g(x_m)|^p)^{1/p} for finite p; max_m |g(x_m)| for
/// p = inf (a lower bound on the true sup norm).
double lp_norm_grid(const GridField& g, double p);

/// Exact L^2 norm of block j: (2pi)^{d/2} (sum_k |phi_j(k) fhat(k)|^2)^{1/2}.
double l2_norm_parseval(const SpectralField& field, const PartitionProfile& profile, int j);

/// Exact L^2 norm of the whole field.
double l2_norm_parseval(const SpectralField& field);

}  // namespace noiselab
