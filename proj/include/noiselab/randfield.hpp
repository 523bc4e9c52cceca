#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noiselab/rng.hpp"

namespace noiselab {

/// Counter-based sampling position: the coefficient at k is a pure function
/// of (seed, trial, k).
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

inline constexpr std::int64_t kDefaultCoeffBudget = std::int64_t{1} << 26;

/// Truncated Fourier-coefficient map k -> fhat(k), stored densely on the box
/// [-N, N]^d; only |k| <= N may be nonzero and lookups outside return 0.
/// Fourier convention: fhat(k) = (2pi)^{-d} int f e^{-ik.x} dx.
class SpectralField {
  public:
    SpectralField(int d, int N, std::int64_t coeff_budget = kDefaultCoeffBudget);

    int dim() const { return d_; }
    int cutoff() const { return N_; }
    bool has_rng_provenance() const { return rng_.has_value(); }
    const std::optional<RngSpec>& provenance() const { return rng_; }

    std::complex<double> coeff(const FreqIndex& k) const;
    void set_coeff(const FreqIndex& k, std::complex<double> v);  // requires |k| <= N

    /// Visit every ball point |k| <= N with its coefficient, lexicographic order.
    template <typename Fn>
    void for_each_in_ball(Fn&& fn) const {
        FreqIndex k;
        k.dim = d_;
        for (int i = 0; i < d_; ++i) k.k[i] = -N_;
        const std::int64_t nsq_max = static_cast<std::int64_t>(N_) * N_;
        while (true) {
            if (k.norm_sq() <= nsq_max) fn(k, c_[flat_index(k)]);
            int axis = d_ - 1;
            while (axis >= 0) {
                if (k.k[axis] < N_) {
                    ++k.k[axis];
                    break;
                }
                k.k[axis] = -N_;
                --axis;
            }
            if (axis < 0) break;
        }
    }

    std::size_t flat_index(const FreqIndex& k) const;
    bool in_box(const FreqIndex& k) const;

  private:
    friend SpectralField sample_white_noise(int, int, const RngSpec&, bool, std::int64_t);
    int d_;
    int N_;
    std::vector<std::complex<double>> c_;
    std::optional<RngSpec> rng_;
};

/// i.i.d. complex standard Gaussian coefficients at every |k| <= N. With
/// real_noise, coefficients are Hermitian (gamma_{-k} = conj(gamma_k),
/// gamma_0 real N(0,1)) so the synthesized field is real-valued.
SpectralField sample_white_noise(int d, int N, const RngSpec& rng, bool real_noise = false,
                                 std::int64_t coeff_budget = kDefaultCoeffBudget);

/// Single coefficient of the white noise without materializing the field.
std::complex<double> white_noise_coeff(const RngSpec& rng, const FreqIndex& k);

/// ||gamma_1||_{L^p(Omega)} = Gamma(p/2 + 1)^{1/p} for p >= 1.
double gamma_moment(double p);

/// max over 1 <= |k| <= N of |gamma_k| (log(|k|^d + 1))^{-1/2}.
double log_sup_statistic(const SpectralField& field);

/// Pairing <f, W> = sum_k W(k) fhat(-k) on trigonometric polynomials.
std::complex<double> pair_with(const SpectralField& noise, const SpectralField& test_fn);

}  // namespace noiselab
