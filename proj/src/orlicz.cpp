#include "noiselab/orlicz.hpp"

#include <algorithm>
#include <cmath>

namespace noiselab {

double theta(double x) {
    if (x < 0) throw PreconditionError("theta: argument must be nonnegative");
    if (x == 0.0) return 0.0;
    return x * x * std::exp(-1.0 / (2.0 * x * x));
}

WeightSequence WeightSequence::geometric(double first, double ratio) {
    if (!(first >= 0)) throw PreconditionError("geometric: first term must be nonnegative");
    if (!(ratio > 0 && ratio < 1)) throw DivergenceError("geometric: ratio must be in (0,1)");
    WeightSequence seq;
    double v = first;
    while (v > first * 1e-16 && seq.entries.size() < 4096) {
        seq.entries.push_back(v);
        v *= ratio;
    }
    // Certified tail: sum_{n>K} v_n^2 = v_{K+1}^2 / (1 - ratio^2).
    seq.tail_l2_sq = v * v / (1.0 - ratio * ratio);
    return seq;
}

double luxemburg_rho(const WeightSequence& seq, double tol) {
    if (!(tol > 0)) throw PreconditionError("luxemburg_rho: tol must be positive");
    double max_entry = 0.0;
    double l2_sq = seq.tail_l2_sq;
    for (double v : seq.entries) {
        if (!(v >= 0)) throw PreconditionError("luxemburg_rho: entries must be nonnegative");
        if (!std::isfinite(v)) throw DivergenceError("luxemburg_rho: non-finite entry");
        max_entry = std::max(max_entry, v);
        l2_sq += v * v;
    }
    if (!std::isfinite(l2_sq) || !std::isfinite(seq.tail_l2_sq) || seq.tail_l2_sq < 0)
        throw DivergenceError("luxemburg_rho: sequence is not certified square-summable");
    if (l2_sq == 0.0) return 0.0;

    const double l2 = std::sqrt(l2_sq);
    if (seq.tail_l2_sq > tol * tol * l2_sq)
        throw DivergenceError("luxemburg_rho: certified tail too large for requested tolerance");

    const auto constraint = [&](double t) {
        double sum = 0.0;
        for (double v : seq.entries)
            if (v > 0.0) sum += theta(v / t);
        return sum;
    };

    // Theta(x) <= x^2, hence t = ||sigma||_2 always satisfies the constraint.
    double hi = l2;
    double lo = max_entry / 4.0;
    while (constraint(lo) <= 1.0) lo /= 2.0;  // terminates: Theta(max/t) -> inf as t -> 0

    // Keep F(lo) > 1 >= F(hi); stop once hi certifies both the bracket and
    // the residual, so F(hi) <= 1 and hi*(1-tol) <= lo violates the constraint.
    for (int it = 0; it < 300; ++it) {
        if (hi - lo <= tol * hi && std::abs(constraint(hi) - 1.0) <= tol) return hi;
        const double mid = 0.5 * (lo + hi);
        if (constraint(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    if (std::abs(constraint(hi) - 1.0) <= tol) return hi;
    throw QuadratureError("luxemburg_rho: bisection stalled above the residual tolerance");
}

double hv_upper_bound(double m, const WeightSequence& sigmas, double tol) {
    if (!(m >= 0)) throw PreconditionError("hv_upper_bound: m must be nonnegative");
    return m + 3.0 * std::sqrt(2.0) * luxemburg_rho(sigmas, tol);
}

}  // namespace noiselab
