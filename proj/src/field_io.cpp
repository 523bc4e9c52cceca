#include "noiselab/field_io.hpp"

#include <json.hpp>

#include "noiselab/besov.hpp"
#include "noiselab/fourier_besov.hpp"

namespace noiselab {

using nlohmann::json;

std::string field_to_json(const SpectralField& field) {
    json coeffs = json::array();
    field.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
        if (v == std::complex<double>{0.0, 0.0}) return;
        json kk = json::array();
        for (int i = 0; i < k.dim; ++i) kk.push_back(k.k[i]);
        coeffs.push_back(json::array({kk, v.real(), v.imag()}));
    });
    json out{{"d", field.dim()}, {"N", field.cutoff()}, {"coefficients", std::move(coeffs)}};
    if (field.has_rng_provenance()) {
        out["provenance"] = {{"seed", field.provenance()->seed},
                             {"trial", field.provenance()->trial}};
    } else {
        out["provenance"] = "deterministic";
    }
    return out.dump(2) + "\n";
}

SpectralField field_from_json(const std::string& text, std::int64_t coeff_budget) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("field JSON parse error: ") + e.what());
    }
    if (!in.contains("d") || !in.contains("N") || !in.contains("coefficients"))
        throw ConfigError("field JSON must contain d, N and coefficients");
    const int d = in["d"].get<int>();
    const int N = in["N"].get<int>();
    SpectralField f(d, N, coeff_budget);
    for (const auto& entry : in["coefficients"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_array())
            throw ConfigError("field JSON coefficient entries must be [[k...], re, im]");
        const auto& kk = entry[0];
        if (static_cast<int>(kk.size()) != d)
            throw ConfigError("field JSON coefficient index has wrong dimension");
        FreqIndex k = FreqIndex::zero(d);
        for (int i = 0; i < d; ++i) k.k[i] = kk[static_cast<std::size_t>(i)].get<std::int32_t>();
        if (k.norm_sq() > static_cast<std::int64_t>(N) * N)
            throw ConfigError("field JSON coefficient outside the cutoff ball");
        f.set_coeff(k, {entry[1].get<double>(), entry[2].get<double>()});
    }
    return f;
}

namespace {

json extended_real(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

}  // namespace

std::string norm_report_to_json(const NormReport& report) {
    json levels = json::array();
    for (const auto& e : report.levels) {
        levels.push_back({{"j", e.j},
                          {"block_norm", e.block_norm},
                          {"weighted", e.weighted},
                          {"complete", e.complete},
                          {"converged", e.converged},
                          {"approximate", e.approximate},
                          {"grid_M", e.grid_M}});
    }
    json out{{"value", report.value},
             {"s", report.s},
             {"p", extended_real(report.p)},
             {"q", extended_real(report.q)},
             {"profile", report.profile == ProfileKind::Sharp ? "sharp" : "smooth"},
             {"osf", report.osf},
             {"levels", std::move(levels)}};
    return out.dump(2) + "\n";
}

std::string fb_triple_to_json(const FBNormTriple& triple) {
    json levels = json::array();
    for (const auto& e : triple.levels) {
        levels.push_back({{"j", e.j},
                          {"sharp", e.sharp},
                          {"smooth", e.smooth},
                          {"dyadic", e.dyadic},
                          {"complete", e.complete}});
    }
    json out{{"sharp_value", triple.sharp_value},
             {"smooth_value", triple.smooth_value},
             {"dyadic_value", triple.dyadic_value},
             {"s", triple.s},
             {"p", extended_real(triple.p)},
             {"q", extended_real(triple.q)},
             {"levels", std::move(levels)}};
    return out.dump(2) + "\n";
}

}  // namespace noiselab
