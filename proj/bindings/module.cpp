#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noiselab/besov.hpp"
#include "noiselab/config.hpp"
#include "noiselab/field_io.hpp"
#include "noiselab/fourier_besov.hpp"
#include "noiselab/manifest.hpp"
#include "noiselab/orlicz.hpp"

namespace py = pybind11;
using namespace noiselab;

namespace {

PartitionProfile profile_from_name(const std::string& name, double a, double b) {
    if (name == "sharp") return PartitionProfile::sharp();
    if (name == "smooth") return PartitionProfile::smooth(a, b);
    throw ConfigError("partition must be sharp or smooth");
}

FreqIndex index_from_list(const std::vector<std::int32_t>& comps) {
    if (comps.empty() || comps.size() > static_cast<std::size_t>(kMaxDim))
        throw ConfigError("frequency index must have 1..4 components");
    FreqIndex k;
    k.dim = static_cast<int>(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) k.k[i] = comps[i];
    return k;
}

py::dict level_to_dict(const LevelEntry& e) {
    py::dict d;
    d["j"] = e.j;
    d["block_norm"] = e.block_norm;
    d["weighted"] = e.weighted;
    d["complete"] = e.complete;
    d["converged"] = e.converged;
    d["approximate"] = e.approximate;
    d["grid_M"] = e.grid_M;
    return d;
}

py::dict report_to_dict(const NormReport& rep) {
    py::dict d;
    d["value"] = rep.value;
    d["s"] = rep.s;
    d["p"] = rep.p;
    d["q"] = rep.q;
    py::list levels;
    for (const auto& e : rep.levels) levels.append(level_to_dict(e));
    d["levels"] = levels;
    return d;
}

py::dict summary_to_dict(const ExperimentSummary& sum) {
    py::dict d;
    d["experiment"] = sum.experiment;
    d["overall"] = to_string(sum.overall());
    py::list asserts;
    for (const auto& a : sum.assertions) {
        py::dict ad;
        ad["id"] = a.id;
        ad["description"] = a.description;
        ad["observed"] = a.observed;
        ad["reference"] = a.reference;
        ad["tolerance"] = a.tolerance;
        ad["verdict"] = to_string(a.verdict);
        asserts.append(ad);
    }
    d["assertions"] = asserts;
    py::dict scalars;
    for (const auto& [k, v] : sum.scalars) scalars[py::str(k)] = v;
    d["scalars"] = scalars;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Truncated Gaussian white noise on the torus: sampling, Besov and "
              "Fourier-Besov norms, Orlicz bounds, Monte Carlo experiments.";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<PreconditionError>(m, "PreconditionError");
    py::register_exception<QuadratureError>(m, "QuadratureError");
    py::register_exception<ResourceError>(m, "ResourceError");
    py::register_exception<DivergenceError>(m, "DivergenceError");

    py::class_<SpectralField>(m, "SpectralField")
        .def(py::init<int, int, std::int64_t>(), py::arg("d"), py::arg("N"),
             py::arg("coeff_budget") = kDefaultCoeffBudget)
        .def_property_readonly("d", &SpectralField::dim)
        .def_property_readonly("N", &SpectralField::cutoff)
        .def("coeff",
             [](const SpectralField& f, const std::vector<std::int32_t>& k) {
                 return f.coeff(index_from_list(k));
             })
        .def("set_coeff",
             [](SpectralField& f, const std::vector<std::int32_t>& k, std::complex<double> v) {
                 f.set_coeff(index_from_list(k), v);
             })
        .def("coefficients",
             [](const SpectralField& f) {
                 py::list out;
                 f.for_each_in_ball([&](const FreqIndex& k, const std::complex<double>& v) {
                     if (v == std::complex<double>{0.0, 0.0}) return;
                     py::list kk;
                     for (int i = 0; i < k.dim; ++i) kk.append(k.k[i]);
                     out.append(py::make_tuple(kk, v));
                 });
                 return out;
             })
        .def("to_json", &field_to_json);

    m.def("sample_white_noise",
          [](int d, int N, std::uint64_t seed, std::uint64_t trial, bool real_noise) {
              return sample_white_noise(d, N, {seed, trial}, real_noise);
          },
          py::arg("d"), py::arg("N"), py::arg("seed") = 0, py::arg("trial") = 0,
          py::arg("real_noise") = false);
    m.def("field_from_json", [](const std::string& text) { return field_from_json(text); });
    m.def("gamma_moment", &gamma_moment, py::arg("p"));
    m.def("log_sup_statistic", &log_sup_statistic);

    m.def("enumerate_ball_count",
          [](int d, double radius) { return static_cast<std::int64_t>(enumerate_ball(d, radius).size()); },
          py::arg("d"), py::arg("radius"));
    m.def("shell_count",
          [](int d, int j, const std::string& kind) {
              return shell_count(d, {j, kind == "width1" ? ShellKind::WidthOne
                                                         : ShellKind::HalfWidthHalf});
          },
          py::arg("d"), py::arg("j"), py::arg("kind") = "half");
    m.def("ball_volume", &ball_volume, py::arg("d"));
    m.def("shell_count_limit",
          [](int d, const std::string& kind) {
              return shell_count_limit(d, kind == "width1" ? ShellKind::WidthOne
                                                           : ShellKind::HalfWidthHalf);
          },
          py::arg("d"), py::arg("kind") = "half");

    m.def("phi",
          [](double r, const std::string& partition, double a, double b) {
              return phi(profile_from_name(partition, a, b), r);
          },
          py::arg("r"), py::arg("partition") = "sharp", py::arg("a") = 1.4142135623730951,
          py::arg("b") = 2.0);
    m.def("phi_j",
          [](int j, const std::vector<std::int32_t>& k, const std::string& partition, double a,
             double b) { return phi_j(profile_from_name(partition, a, b), j, index_from_list(k)); },
          py::arg("j"), py::arg("k"), py::arg("partition") = "sharp",
          py::arg("a") = 1.4142135623730951, py::arg("b") = 2.0);
    m.def("phi_sq_sum",
          [](int j, int d, const std::string& partition, double a, double b) {
              return phi_sq_sum(profile_from_name(partition, a, b), j, d);
          },
          py::arg("j"), py::arg("d"), py::arg("partition") = "sharp",
          py::arg("a") = 1.4142135623730951, py::arg("b") = 2.0);

    m.def("besov_norm",
          [](const SpectralField& f, double s, double p, double q, const std::string& partition,
             double a, double b, int osf, double tol) {
              QuadratureOptions opts;
              opts.osf = osf;
              opts.tol = tol;
              return report_to_dict(besov_norm(f, s, p, q, profile_from_name(partition, a, b), opts));
          },
          py::arg("field"), py::arg("s"), py::arg("p"), py::arg("q"),
          py::arg("partition") = "sharp", py::arg("a") = 1.4142135623730951, py::arg("b") = 2.0,
          py::arg("osf") = 4, py::arg("tol") = 1e-6);
    m.def("sobolev_h2_norm", &sobolev_h2_norm, py::arg("field"), py::arg("s"));
    m.def("fb_norms",
          [](const SpectralField& f, double s, double p, double q) {
              const auto tri = fb_norms(f, s, p, q);
              py::dict d;
              d["sharp"] = tri.sharp_value;
              d["smooth"] = tri.smooth_value;
              d["dyadic"] = tri.dyadic_value;
              py::list levels;
              for (const auto& e : tri.levels) {
                  py::dict le;
                  le["j"] = e.j;
                  le["sharp"] = e.sharp;
                  le["smooth"] = e.smooth;
                  le["dyadic"] = e.dyadic;
                  le["complete"] = e.complete;
                  levels.append(le);
              }
              d["levels"] = levels;
              return d;
          },
          py::arg("field"), py::arg("s"), py::arg("p"), py::arg("q"));
    m.def("w_stat", &w_stat, py::arg("field"), py::arg("j"), py::arg("p"));

    m.def("theta", &theta, py::arg("x"));
    m.def("luxemburg_rho",
          [](const std::vector<double>& entries, double tail_l2_sq, double tol) {
              return luxemburg_rho({entries, tail_l2_sq}, tol);
          },
          py::arg("entries"), py::arg("tail_l2_sq") = 0.0, py::arg("tol") = 1e-10);
    m.def("hv_upper_bound",
          [](double mean_bound, const std::vector<double>& entries, double tail_l2_sq) {
              return hv_upper_bound(mean_bound, {entries, tail_l2_sq});
          },
          py::arg("m"), py::arg("entries"), py::arg("tail_l2_sq") = 0.0);

    m.def("run_experiment",
          [](const std::string& config_text, const std::string& out_dir) {
              auto cfg = parse_config_text(config_text);
              cfg.validate();
              const auto sum = run_experiment(cfg);
              if (!out_dir.empty()) persist_summary(sum, out_dir);
              return summary_to_dict(sum);
          },
          py::arg("config_text"), py::arg("out_dir") = "");

    m.attr("__version__") = kVersion;
}
