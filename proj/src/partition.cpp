#include "noiselab/partition.hpp"

#include <algorithm>
#include <cmath>

namespace noiselab {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865476;

double smooth_step(double x) {
    // C^inf transition: 0 at x<=0, 1 at x>=1.
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double h0 = std::exp(-1.0 / x);
    const double h1 = std::exp(-1.0 / (1.0 - x));
    return h0 / (h0 + h1);
}

// eta(r): 1 for r <= a, 0 for r >= b, smooth in between.
double eta(const PartitionProfile& p, double r) {
    return smooth_step((p.smooth_b - r) / (p.smooth_b - p.smooth_a));
}

}  // namespace

PartitionProfile PartitionProfile::sharp() { return PartitionProfile{}; }

PartitionProfile PartitionProfile::smooth(double a, double b) {
    if (!(a >= kSqrt2 - 1e-12 && a < b && b <= 2.0 + 1e-12))
        throw ConfigError("smooth profile requires sqrt(2) <= a < b <= 2");
    PartitionProfile p;
    p.kind = ProfileKind::Smooth;
    p.smooth_a = a;
    p.smooth_b = b;
    return p;
}

double phi(const PartitionProfile& profile, double r) {
    if (r < 0) throw PreconditionError("phi: radius must be nonnegative");
    if (profile.kind == ProfileKind::Sharp) {
        return (r > kInvSqrt2 && r <= kSqrt2) ? 1.0 : 0.0;
    }
    return std::clamp(eta(profile, r) - eta(profile, 2.0 * r), 0.0, 1.0);
}

int sharp_level_of(const FreqIndex& k) {
    const std::int64_t nsq = k.norm_sq();
    if (nsq <= 2) return 0;
    int j = 1;
    while (nsq > (std::int64_t{1} << (2 * j + 1))) ++j;
    return j;
}

double phi_j(const PartitionProfile& profile, int j, const FreqIndex& k) {
    if (j < 0) throw PreconditionError("phi_j: level must be >= 0");
    if (profile.kind == ProfileKind::Sharp) {
        return sharp_level_of(k) == j ? 1.0 : 0.0;
    }
    const double r = k.norm();
    if (j >= 1) return phi(profile, r / std::exp2(j));
    // phi_0 = 1 minus the tail; terms vanish once r / 2^{j'} <= a/2.
    double tail = 0.0;
    for (int jp = 1; r / std::exp2(jp) > 0.5 * profile.smooth_a - 1e-12; ++jp)
        tail += phi(profile, r / std::exp2(jp));
    return std::clamp(1.0 - tail, 0.0, 1.0);
}

double phi_sq_sum(const PartitionProfile& profile, int j, int d) {
    require_supported_dim(d);
    if (j < 0) throw PreconditionError("phi_sq_sum: level must be >= 0");
    if (profile.kind == ProfileKind::Sharp) {
        if (j == 0) return static_cast<double>(enumerate_ball_nsq(d, 2).size());
        return static_cast<double>(shell_count(d, {j, ShellKind::HalfWidthHalf}));
    }
    const std::int64_t max_nsq = std::int64_t{1} << (2 * j + 2);  // support within |k| <= 2^{j+1}
    double sum = 0.0;
    for (const auto& k : enumerate_ball_nsq(d, max_nsq)) {
        const double w = phi_j(profile, j, k);
        sum += w * w;
    }
    return sum;
}

}  // namespace noiselab
