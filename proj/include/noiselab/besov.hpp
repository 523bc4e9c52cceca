#pragma once

#include <vector>

#include "noiselab/synthesis.hpp"

namespace noiselab {

struct QuadratureOptions {
    int osf = 4;                // grid oversampling, M_j = osf * 2^{j+1}, power of two
    double tol = 1e-6;          // relative-change convergence target under M -> 2M
    int max_refine = 5;
    std::int64_t grid_budget = kDefaultGridBudget;
};

struct LevelEntry {
    int j = 0;
    double block_norm = 0.0;  // ||f_j||_{L^p}
    double weighted = 0.0;    // 2^{js} ||f_j||_{L^p}
    bool complete = false;    // 2^{j+1} <= N
    bool converged = true;
    bool approximate = false;  // p = inf grid maximum
    int grid_M = 0;            // 0 when computed spectrally
};

/// Norm value plus per-level contributions. The value aggregates complete
/// levels only; incomplete top levels are computed and flagged.
struct NormReport {
    double value = 0.0;
    double s = 0.0, p = 2.0, q = 2.0;
    ProfileKind profile = ProfileKind::Sharp;
    int osf = 4;
    std::vector<LevelEntry> levels;
};

/// ||f||_{B^s_{p,q}} of a truncated field from its Littlewood-Paley blocks.
/// p = 2 goes through Parseval; other finite p through grid quadrature with
/// doubling refinement (throws QuadratureError if it fails to settle).
NormReport besov_norm(const SpectralField& field, double s, double p, double q,
                      const PartitionProfile& profile, const QuadratureOptions& opts = {});

/// (2pi)^{d/2} (sum_k (1+|k|^2)^s |fhat(k)|^2)^{1/2}.
double sobolev_h2_norm(const SpectralField& field, double s);

/// One-pass exact L^2 block norms (2pi)^{d/2}(sum_k |phi_j(k) fhat(k)|^2)^{1/2}
/// for j = 0..jmax.
std::vector<double> level_l2_norms(const SpectralField& field, const PartitionProfile& profile,
                                   int jmax);

/// Largest level with a possibly-nonzero block: j = 0 or 2^{j-1} <= N.
int top_level(const SpectralField& field);
bool level_complete(const SpectralField& field, int j);

}  // namespace noiselab
