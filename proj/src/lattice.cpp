#include "noiselab/lattice.hpp"

#include <cmath>
#include <numbers>

namespace noiselab {

FreqIndex::FreqIndex(std::initializer_list<std::int32_t> comps) {
    if (comps.size() < 1 || comps.size() > static_cast<std::size_t>(kMaxDim))
        throw ConfigError("FreqIndex: dimension must be in [1," + std::to_string(kMaxDim) + "]");
    dim = static_cast<int>(comps.size());
    int i = 0;
    for (auto c : comps) k[i++] = c;
}

FreqIndex FreqIndex::zero(int d) {
    require_supported_dim(d);
    FreqIndex out;
    out.dim = d;
    return out;
}

std::int64_t FreqIndex::norm_sq() const {
    std::int64_t s = 0;
    for (int i = 0; i < dim; ++i) s += static_cast<std::int64_t>(k[i]) * k[i];
    return s;
}

double FreqIndex::norm() const { return std::sqrt(static_cast<double>(norm_sq())); }

bool FreqIndex::operator<(const FreqIndex& o) const {
    for (int i = 0; i < dim; ++i) {
        if (k[i] != o.k[i]) return k[i] < o.k[i];
    }
    return false;
}

void require_supported_dim(int d) {
    if (d < 1 || d > kMaxDim)
        throw ConfigError("dimension " + std::to_string(d) + " outside supported range [1," +
                          std::to_string(kMaxDim) + "]");
}

bool shell_contains(const ShellSpec& spec, const FreqIndex& k) {
    if (spec.level < 1) throw PreconditionError("shell level must be >= 1");
    if (spec.level > 30) throw PreconditionError("shell level too large for exact integer bounds");
    const std::int64_t nsq = k.norm_sq();
    const int j = spec.level;
    if (spec.kind == ShellKind::HalfWidthHalf) {
        // 2^{2j-1} < |k|^2 <= 2^{2j+1}
        return (std::int64_t{1} << (2 * j - 1)) < nsq && nsq <= (std::int64_t{1} << (2 * j + 1));
    }
    // 2^{2j-2} <= |k|^2 <= 2^{2j+2}
    return (std::int64_t{1} << (2 * j - 2)) <= nsq && nsq <= (std::int64_t{1} << (2 * j + 2));
}

namespace {

// Odometer over the box [-kmax, kmax]^d in lexicographic order.
template <typename Fn>
void for_each_box_point(int d, std::int32_t kmax, Fn&& fn) {
    FreqIndex k;
    k.dim = d;
    for (int i = 0; i < d; ++i) k.k[i] = -kmax;
    while (true) {
        fn(k);
        int axis = d - 1;
        while (axis >= 0) {
            if (k.k[axis] < kmax) {
                ++k.k[axis];
                break;
            }
            k.k[axis] = -kmax;
            --axis;
        }
        if (axis < 0) break;
    }
}

}  // namespace

std::vector<FreqIndex> enumerate_ball_nsq(int d, std::int64_t max_norm_sq) {
    require_supported_dim(d);
    std::vector<FreqIndex> out;
    if (max_norm_sq < 0) return out;
    const auto kmax = static_cast<std::int32_t>(std::floor(std::sqrt(static_cast<double>(max_norm_sq)) + 0.5));
    std::int32_t lim = kmax;
    while (static_cast<std::int64_t>(lim) * lim > max_norm_sq) --lim;
    while (static_cast<std::int64_t>(lim + 1) * (lim + 1) <= max_norm_sq) ++lim;
    for_each_box_point(d, lim, [&](const FreqIndex& k) {
        if (k.norm_sq() <= max_norm_sq) out.push_back(k);
    });
    return out;
}

std::vector<FreqIndex> enumerate_ball(int d, double radius) {
    require_supported_dim(d);
    if (radius < 0) throw PreconditionError("ball radius must be nonnegative");
    // Tolerant squared threshold so radii given as sqrt(integer) keep their
    // boundary points; exact boundaries go through enumerate_ball_nsq.
    const double rsq = radius * radius;
    const auto max_nsq = static_cast<std::int64_t>(std::floor(rsq * (1.0 + 1e-12) + 1e-12));
    return enumerate_ball_nsq(d, max_nsq);
}

std::vector<FreqIndex> shell_members(int d, const ShellSpec& spec) {
    require_supported_dim(d);
    if (spec.level < 1) throw PreconditionError("shell level must be >= 1");
    const int j = spec.level;
    const std::int64_t hi_nsq = spec.kind == ShellKind::HalfWidthHalf
                                    ? (std::int64_t{1} << (2 * j + 1))
                                    : (std::int64_t{1} << (2 * j + 2));
    std::vector<FreqIndex> out;
    std::int32_t lim = 1;
    while (static_cast<std::int64_t>(lim) * lim < hi_nsq) ++lim;
    for_each_box_point(d, lim, [&](const FreqIndex& k) {
        if (shell_contains(spec, k)) out.push_back(k);
    });
    return out;
}

std::int64_t shell_count(int d, const ShellSpec& spec) {
    return static_cast<std::int64_t>(shell_members(d, spec).size());
}

double ball_volume(int d) {
    require_supported_dim(d);
    switch (d) {
        case 1: return 2.0;
        case 2: return std::numbers::pi;
        case 3: return 4.0 * std::numbers::pi / 3.0;
        default: return std::numbers::pi * std::numbers::pi / 2.0;
    }
}

double shell_count_limit(int d, ShellKind kind) {
    const double v = ball_volume(d);
    if (kind == ShellKind::HalfWidthHalf)
        return v * (std::pow(2.0, d / 2.0) - std::pow(2.0, -d / 2.0));
    return v * (std::pow(2.0, d) - std::pow(2.0, -d));
}

}  // namespace noiselab
