#pragma once

#include "noiselab/lattice.hpp"

namespace noiselab {

enum class ProfileKind { Sharp, Smooth };

/// Dyadic partition of unity (phi_j)_{j>=0} evaluated at lattice frequencies.
///
/// "sharp" is the indicator of (2^{-1/2}, 2^{1/2}]; on the lattice it is an
/// exact partition and phi_j = 1 on the half-width shell S_j. "smooth" is the
/// usual C^inf profile eta(r) - eta(2r) with plateau [b/2, a], built from
/// h(x) = exp(-1/x).
struct PartitionProfile {
    ProfileKind kind = ProfileKind::Sharp;
    double smooth_a = 1.4142135623730951;  // plateau edge, sqrt(2) <= a < b
    double smooth_b = 2.0;                 // support edge, b <= 2

    static PartitionProfile sharp();
    static PartitionProfile smooth(double a = 1.4142135623730951, double b = 2.0);
};

/// Radial cutoff phi(r) in [0, 1]; vanishes for r >= 2 and r <= 2^{-1/2}.
double phi(const PartitionProfile& profile, double r);

/// phi_j(k): phi(|k| / 2^j) for j >= 1, and 1 - sum_{j'>=1} phi_{j'}(k) for
/// j = 0. Sharp membership is decided exactly on |k|^2.
double phi_j(const PartitionProfile& profile, int j, const FreqIndex& k);

/// sum_{k in Z^d} phi_j(k)^2 (finite; support is inside |k| <= 2^{j+1}).
double phi_sq_sum(const PartitionProfile& profile, int j, int d);

/// For the sharp profile, the unique level with phi_j(k) = 1; exact.
int sharp_level_of(const FreqIndex& k);

}  // namespace noiselab
