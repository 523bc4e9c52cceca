#pragma once

#include <vector>

#include "noiselab/partition.hpp"
#include "noiselab/randfield.hpp"

namespace noiselab {

/// Per-level breakdown of the three Fourier-Besov norm variants. Level cells
/// are the width-one shells 2^{j-1} <= |k| <= 2^{j+1} (the ball |k| <= 2 at
/// j = 0); adjacent cells overlap.
struct FbLevel {
    int j = 0;
    double sharp = 0.0;   // (sum_{cell_j} (|k|+1)^{sp} |fhat|^p)^{1/p}, sup for p = inf
    double smooth = 0.0;  // same with |phi_j(k) fhat(k)| and weight (|k|+1)^s
    double dyadic = 0.0;  // 2^{js} (sum_{cell_j} |fhat|^p)^{1/p}
    bool complete = false;
};

struct FBNormTriple {
    double sharp_value = 0.0;
    double smooth_value = 0.0;
    double dyadic_value = 0.0;
    double s = 0.0, p = 2.0, q = 2.0;
    std::vector<FbLevel> levels;
};

/// Exact membership in the level cell (integer arithmetic).
bool fb_cell_contains(int j, const FreqIndex& k);

/// All three Fourier-Besov norms of a truncated field. Values aggregate every
/// level (spectral sums are exact); completeness flags mark levels with
/// 2^{j+1} <= N for use as proxies of the untruncated noise.
FBNormTriple fb_norms(const SpectralField& field, double s, double p, double q,
                      const PartitionProfile& smooth_profile = PartitionProfile::smooth());

/// w_{j,p} = (sum_{2^{j-1} <= |k| <= 2^{j+1}} |fhat(k)|^p)^{1/p}, j >= 1.
double w_stat(const SpectralField& field, int j, double p);

}  // namespace noiselab
