#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "noiselab/errors.hpp"

namespace noiselab {

inline constexpr int kMaxDim = 4;

/// Frequency vector k in the integer lattice Z^d (components beyond dim are 0).
struct FreqIndex {
    std::array<std::int32_t, kMaxDim> k{0, 0, 0, 0};
    int dim = 1;

    FreqIndex() = default;
    FreqIndex(std::initializer_list<std::int32_t> comps);
    static FreqIndex zero(int d);

    std::int64_t norm_sq() const;
    double norm() const;

    bool operator==(const FreqIndex& o) const { return dim == o.dim && k == o.k; }
    /// Lexicographic order on components; reproducible coefficient ordering.
    bool operator<(const FreqIndex& o) const;
};

enum class ShellKind {
    HalfWidthHalf,  // 2^{j-1/2} < |k| <= 2^{j+1/2}, pairwise disjoint
    WidthOne,       // 2^{j-1}   <= |k| <= 2^{j+1}, adjacent shells overlap
};

struct ShellSpec {
    int level = 1;  // j >= 1
    ShellKind kind = ShellKind::HalfWidthHalf;
};

/// Exact membership test on |k|^2 against integer powers of two.
bool shell_contains(const ShellSpec& spec, const FreqIndex& k);

/// All k with |k| <= R, lexicographic order. d in {1,...,4}.
std::vector<FreqIndex> enumerate_ball(int d, double radius);

/// All k with |k|^2 <= max_norm_sq (exact integer boundary), lexicographic order.
std::vector<FreqIndex> enumerate_ball_nsq(int d, std::int64_t max_norm_sq);

std::vector<FreqIndex> shell_members(int d, const ShellSpec& spec);

std::int64_t shell_count(int d, const ShellSpec& spec);

/// Volume of the unit Euclidean ball in dimension d.
double ball_volume(int d);

/// Limit of 2^{-jd} * #shell(j) as j grows: V_d (2^{d/2}-2^{-d/2}) for
/// half-width shells, V_d (2^d - 2^{-d}) for width-one shells.
double shell_count_limit(int d, ShellKind kind);

void require_supported_dim(int d);

}  // namespace noiselab
