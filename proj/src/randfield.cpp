#include "noiselab/randfield.hpp"

#include <cmath>

namespace noiselab {

namespace {

std::int64_t box_size(int d, int N) {
    std::int64_t side = 2 * static_cast<std::int64_t>(N) + 1;
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= side;
    return total;
}

}  // namespace

SpectralField::SpectralField(int d, int N, std::int64_t coeff_budget) : d_(d), N_(N) {
    require_supported_dim(d);
    if (N < 1) throw PreconditionError("cutoff N must be >= 1");
    const std::int64_t total = box_size(d, N);
    if (total > coeff_budget)
        throw ResourceError("coefficient box (2N+1)^d = " + std::to_string(total) +
                            " exceeds budget " + std::to_string(coeff_budget));
    c_.assign(static_cast<std::size_t>(total), {0.0, 0.0});
}

bool SpectralField::in_box(const FreqIndex& k) const {
    if (k.dim != d_) return false;
    for (int i = 0; i < d_; ++i)
        if (k.k[i] < -N_ || k.k[i] > N_) return false;
    return true;
}

std::size_t SpectralField::flat_index(const FreqIndex& k) const {
    const std::int64_t side = 2 * static_cast<std::int64_t>(N_) + 1;
    std::int64_t idx = 0;
    for (int i = 0; i < d_; ++i) idx = idx * side + (k.k[i] + N_);
    return static_cast<std::size_t>(idx);
}

std::complex<double> SpectralField::coeff(const FreqIndex& k) const {
    if (!in_box(k)) return {0.0, 0.0};
    return c_[flat_index(k)];
}

void SpectralField::set_coeff(const FreqIndex& k, std::complex<double> v) {
    if (k.dim != d_) throw PreconditionError("set_coeff: dimension mismatch");
    if (k.norm_sq() > static_cast<std::int64_t>(N_) * N_)
        throw PreconditionError("set_coeff: |k| exceeds cutoff N");
    c_[flat_index(k)] = v;
    rng_.reset();  // now deterministic provenance
}

SpectralField sample_white_noise(int d, int N, const RngSpec& rng, bool real_noise,
                                 std::int64_t coeff_budget) {
    SpectralField f(d, N, coeff_budget);
    f.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>&) {
        std::complex<double>& slot = f.c_[f.flat_index(k)];
        if (!real_noise) {
            slot = standard_complex_gaussian(rng.seed, rng.trial, k);
            return;
        }
        // Hermitian variant: draw at the lexicographically positive
        // representative so gamma_{-k} = conj(gamma_k) holds exactly.
        bool negative = false;
        for (int i = 0; i < d; ++i) {
            if (k.k[i] != 0) {
                negative = k.k[i] < 0;
                break;
            }
        }
        if (k.norm_sq() == 0) {
            slot = {gauss_from_key(coeff_key(rng.seed, rng.trial, k)).z0, 0.0};
        } else if (negative) {
            FreqIndex pos = k;
            for (int i = 0; i < d; ++i) pos.k[i] = -pos.k[i];
            slot = std::conj(standard_complex_gaussian(rng.seed, rng.trial, pos));
        } else {
            slot = standard_complex_gaussian(rng.seed, rng.trial, k);
        }
    });
    f.rng_ = rng;
    return f;
}

std::complex<double> white_noise_coeff(const RngSpec& rng, const FreqIndex& k) {
    return standard_complex_gaussian(rng.seed, rng.trial, k);
}

double gamma_moment(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("gamma_moment: p must be finite and >= 1");
    return std::pow(std::tgamma(p / 2.0 + 1.0), 1.0 / p);
}

double log_sup_statistic(const SpectralField& field) {
    if (field.cutoff() < 2) throw PreconditionError("log_sup_statistic needs N >= 2");
    double best = 0.0;
    const int d = field.dim();
    field.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        const std::int64_t nsq = k.norm_sq();
        if (nsq < 1) return;
        const double denom = std::sqrt(std::log(std::pow(std::sqrt(static_cast<double>(nsq)), d) + 1.0));
        best = std::max(best, std::abs(v) / denom);
    });
    return best;
}

std::complex<double> pair_with(const SpectralField& noise, const SpectralField& test_fn) {
    if (noise.dim() != test_fn.dim()) throw PreconditionError("pair_with: dimension mismatch");
    std::complex<double> acc{0.0, 0.0};
    noise.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        FreqIndex neg = k;
        for (int i = 0; i < k.dim; ++i) neg.k[i] = -neg.k[i];
        acc += v * test_fn.coeff(neg);
    });
    return acc;
}

}  // namespace noiselab
