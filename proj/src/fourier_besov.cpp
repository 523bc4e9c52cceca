#include "noiselab/fourier_besov.hpp"

#include <algorithm>
#include <cmath>

#include "noiselab/besov.hpp"

namespace noiselab {

namespace {

void validate_pq(double p, double q) {
    if (!(p >= 1.0) || !(q >= 1.0))
        throw PreconditionError("Fourier-Besov indices require p, q in [1, inf]");
}

// Inner l^p accumulator that also covers p = inf.
struct LpAcc {
    double sum = 0.0;
    double sup = 0.0;
    void add(double v, double p) {
        if (std::isinf(p))
            sup = std::max(sup, v);
        else
            sum += std::pow(v, p);
    }
    double finish(double p) const { return std::isinf(p) ? sup : std::pow(sum, 1.0 / p); }
};

double lq_reduce(const std::vector<double>& vals, double q) {
    if (std::isinf(q)) {
        double best = 0.0;
        for (double v : vals) best = std::max(best, v);
        return best;
    }
    double acc = 0.0;
    for (double v : vals) acc += std::pow(v, q);
    return std::pow(acc, 1.0 / q);
}

}  // namespace

bool fb_cell_contains(int j, const FreqIndex& k) {
    if (j < 0) throw PreconditionError("fb_cell_contains: level must be >= 0");
    if (j == 0) return k.norm_sq() <= 4;
    return shell_contains({j, ShellKind::WidthOne}, k);
}

double w_stat(const SpectralField& field, int j, double p) {
    if (j < 1) throw PreconditionError("w_stat: level must be >= 1");
    if (!(p >= 1.0)) throw PreconditionError("w_stat: p must be >= 1");
    const ShellSpec spec{j, ShellKind::WidthOne};
    LpAcc acc;
    field.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        if (shell_contains(spec, k)) acc.add(std::abs(v), p);
    });
    return acc.finish(p);
}

FBNormTriple fb_norms(const SpectralField& field, double s, double p, double q,
                      const PartitionProfile& smooth_profile) {
    validate_pq(p, q);
    if (smooth_profile.kind != ProfileKind::Smooth)
        throw PreconditionError("fb_norms: the smooth variant needs a smooth profile");

    FBNormTriple out;
    out.s = s;
    out.p = p;
    out.q = q;

    const int jtop = top_level(field);
    std::vector<LpAcc> sharp_acc(static_cast<std::size_t>(jtop) + 1);
    std::vector<LpAcc> smooth_acc(static_cast<std::size_t>(jtop) + 1);
    std::vector<LpAcc> dyadic_acc(static_cast<std::size_t>(jtop) + 1);

    field.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        const double a = std::abs(v);
        if (a == 0.0) return;
        const double weight = std::pow(k.norm() + 1.0, s);
        // A point lies in at most three consecutive cells around its sharp level.
        const int base = sharp_level_of(k);
        for (int j = std::max(0, base - 1); j <= std::min(jtop, base + 2); ++j) {
            if (!fb_cell_contains(j, k)) continue;
            sharp_acc[static_cast<std::size_t>(j)].add(weight * a, p);
            dyadic_acc[static_cast<std::size_t>(j)].add(a, p);
        }
        for (int j = std::max(0, base - 1); j <= std::min(jtop, base + 1); ++j) {
            const double w = phi_j(smooth_profile, j, k);
            if (w != 0.0) smooth_acc[static_cast<std::size_t>(j)].add(weight * w * a, p);
        }
    });

    std::vector<double> sharp_l(static_cast<std::size_t>(jtop) + 1);
    std::vector<double> smooth_l(static_cast<std::size_t>(jtop) + 1);
    std::vector<double> dyadic_l(static_cast<std::size_t>(jtop) + 1);
    for (int j = 0; j <= jtop; ++j) {
        const auto u = static_cast<std::size_t>(j);
        sharp_l[u] = sharp_acc[u].finish(p);
        smooth_l[u] = smooth_acc[u].finish(p);
        dyadic_l[u] = std::exp2(s * j) * dyadic_acc[u].finish(p);
        out.levels.push_back({j, sharp_l[u], smooth_l[u], dyadic_l[u], level_complete(field, j)});
    }
    out.sharp_value = lq_reduce(sharp_l, q);
    out.smooth_value = lq_reduce(smooth_l, q);
    out.dyadic_value = lq_reduce(dyadic_l, q);
    return out;
}

}  // namespace noiselab
