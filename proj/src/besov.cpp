#include "noiselab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace noiselab {

namespace {

void validate_pq(double p, double q) {
    if (!(p >= 1.0) || !(q >= 1.0))
        throw PreconditionError("Besov indices require p, q in [1, inf]");
}

// ||f_j||_{L^p} by grid quadrature with doubling refinement.
// Returns {value, converged, M_used}.
struct GridNorm {
    double value;
    bool converged;
    int M;
};

GridNorm grid_block_norm(const SpectralField& field, const PartitionProfile& profile, int j,
                         double p, const QuadratureOptions& opts) {
    const std::int64_t support = std::int64_t{1} << (j + 1);
    const std::int64_t band = std::min<std::int64_t>(support, field.cutoff());
    std::int64_t M = static_cast<std::int64_t>(opts.osf) * support;
    while (M <= 2 * band) M *= 2;
    if (std::isinf(p)) {
        const auto g = synthesize_block(field, profile, j, static_cast<int>(M), opts.grid_budget);
        return {lp_norm_grid(g, p), true, static_cast<int>(M)};
    }
    double prev = lp_norm_grid(synthesize_block(field, profile, j, static_cast<int>(M), opts.grid_budget), p);
    for (int r = 0; r < opts.max_refine; ++r) {
        M *= 2;
        const double cur =
            lp_norm_grid(synthesize_block(field, profile, j, static_cast<int>(M), opts.grid_budget), p);
        if (std::abs(cur - prev) <= opts.tol * std::max(std::abs(cur), 1e-300))
            return {cur, true, static_cast<int>(M)};
        prev = cur;
    }
    return {prev, false, static_cast<int>(M)};
}

}  // namespace

int top_level(const SpectralField& field) {
    int j = 0;
    while ((std::int64_t{1} << j) <= field.cutoff()) ++j;
    return j;  // largest j with 2^{j-1} <= N
}

bool level_complete(const SpectralField& field, int j) {
    return (std::int64_t{1} << (j + 1)) <= field.cutoff();
}

std::vector<double> level_l2_norms(const SpectralField& field, const PartitionProfile& profile,
                                   int jmax) {
    std::vector<double> sums(static_cast<std::size_t>(jmax) + 1, 0.0);
    field.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        if (v == std::complex<double>{0.0, 0.0}) return;
        const double a = std::norm(v);
        const int base = sharp_level_of(k);
        if (profile.kind == ProfileKind::Sharp) {
            if (base <= jmax) sums[static_cast<std::size_t>(base)] += a;
            return;
        }
        // Smooth phi_j(k) is supported on at most the levels base-1..base+1.
        for (int j = std::max(0, base - 1); j <= std::min(jmax, base + 1); ++j) {
            const double w = phi_j(profile, j, k);
            if (w != 0.0) sums[static_cast<std::size_t>(j)] += w * w * a;
        }
    });
    const double scale = std::pow(2.0 * std::numbers::pi, field.dim() / 2.0);
    std::vector<double> out(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) out[i] = scale * std::sqrt(sums[i]);
    return out;
}

NormReport besov_norm(const SpectralField& field, double s, double p, double q,
                      const PartitionProfile& profile, const QuadratureOptions& opts) {
    validate_pq(p, q);
    NormReport rep;
    rep.s = s;
    rep.p = p;
    rep.q = q;
    rep.profile = profile.kind;
    rep.osf = opts.osf;

    const int jtop = top_level(field);
    std::vector<double> l2;
    if (p == 2.0) l2 = level_l2_norms(field, profile, jtop);

    for (int j = 0; j <= jtop; ++j) {
        LevelEntry e;
        e.j = j;
        e.complete = level_complete(field, j);
        if (p == 2.0) {
            e.block_norm = l2[static_cast<std::size_t>(j)];
        } else {
            const GridNorm g = grid_block_norm(field, profile, j, p, opts);
            e.block_norm = g.value;
            e.converged = g.converged;
            e.grid_M = g.M;
            e.approximate = std::isinf(p);
            if (!g.converged)
                throw QuadratureError("block j=" + std::to_string(j) +
                                      " quadrature did not converge within " +
                                      std::to_string(opts.max_refine) + " refinements");
        }
        e.weighted = std::exp2(s * j) * e.block_norm;
        rep.levels.push_back(e);
    }

    if (std::isinf(q)) {
        double best = 0.0;
        for (const auto& e : rep.levels)
            if (e.complete) best = std::max(best, e.weighted);
        rep.value = best;
    } else {
        double acc = 0.0;
        for (const auto& e : rep.levels)
            if (e.complete) acc += std::pow(e.weighted, q);
        rep.value = std::pow(acc, 1.0 / q);
    }
    return rep;
}

double sobolev_h2_norm(const SpectralField& field, double s) {
    double acc = 0.0;
    field.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        acc += std::pow(1.0 + static_cast<double>(k.norm_sq()), s) * std::norm(v);
    });
    return std::pow(2.0 * std::numbers::pi, field.dim() / 2.0) * std::sqrt(acc);
}

}  // namespace noiselab
