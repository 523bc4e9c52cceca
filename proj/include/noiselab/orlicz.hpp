#pragma once

#include <vector>

#include "noiselab/errors.hpp"

namespace noiselab {

/// Theta(x) = x^2 exp(-1/(2x^2)), Theta(0) = 0; strictly increasing.
double theta(double x);

/// Nonnegative weight sequence with an l^2 certificate for any truncated
/// tail; tail_l2_sq must bound sum of squares of the omitted entries.
struct WeightSequence {
    std::vector<double> entries;
    double tail_l2_sq = 0.0;

    /// first * ratio^n for n = 0, 1, ...; truncated once the certified tail
    /// is negligible at double precision. Requires ratio in (0, 1).
    static WeightSequence geometric(double first, double ratio);
};

/// Luxemburg norm inf{t > 0 : sum_n Theta(sigma_n / t) <= 1} by bisection.
/// The returned t* satisfies |sum Theta(sigma_n/t*) - 1| <= tol (zero
/// sequences return 0).
double luxemburg_rho(const WeightSequence& seq, double tol = 1e-10);

/// m + 3 sqrt(2) rho_Theta(sigmas).
double hv_upper_bound(double m, const WeightSequence& sigmas, double tol = 1e-10);

}  // namespace noiselab
