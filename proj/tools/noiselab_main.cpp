#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "noiselab/config.hpp"
#include "noiselab/field_io.hpp"
#include "noiselab/manifest.hpp"

namespace {

// Exit codes: 0 pass, 1 fail, 2 validation error, 3 inconclusive,
// 4 resource guard, 5 missing file, 6 schema violation.
enum ExitCode {
    kExitPass = 0,
    kExitFail = 1,
    kExitValidation = 2,
    kExitInconclusive = 3,
    kExitResource = 4,
    kExitMissingFile = 5,
    kExitSchema = 6,
};

struct CommonFlags {
    std::string config_path;
    std::vector<std::string> overrides;  // key=value pairs collected from flags
};

void add_override(CommonFlags& flags, const std::string& key, const std::string& value) {
    flags.overrides.push_back(key + "=" + value);
}

noiselab::ExperimentConfig build_config(const CommonFlags& flags) {
    noiselab::ExperimentConfig cfg;
    if (!flags.config_path.empty()) cfg = noiselab::parse_config_file(flags.config_path);
    for (const auto& kv : flags.overrides) {
        const auto eq = kv.find('=');
        noiselab::apply_config_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (cfg.out_dir.empty()) {
        if (const char* env = std::getenv("NOISELAB_OUT"))
            cfg.out_dir = env;
        else
            cfg.out_dir = "./out";
    }
    return cfg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw noiselab::MissingFileError("input file not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noiselab: spectral white-noise fields on the torus and their norm statistics"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string experiment, space, partition, s_list, p_list, q_list;
    std::vector<std::string> tol_overrides;

    auto* run = app.add_subcommand("run", "run an experiment and persist CSVs + manifest");
    run->add_option("--config,-c", flags.config_path, "config file (key = value lines)");
    run->add_option("--experiment,-e", experiment, "experiment name");
    run->add_option("--space", space, "besov | fourier_besov");
    std::string opt_d, opt_p, opt_q, opt_s, opt_jmax, opt_cutoff, opt_trials, opt_seed, opt_osf,
        opt_threads, opt_out, opt_real, opt_qtol;
    run->add_option("--d", opt_d, "dimension");
    run->add_option("--p", opt_p, "integrability index (or inf)");
    run->add_option("--q", opt_q, "summability index (or inf)");
    run->add_option("--s", opt_s, "smoothness index");
    run->add_option("--jmax", opt_jmax, "deepest complete level");
    run->add_option("--cutoff", opt_cutoff, "coefficient cutoff N");
    run->add_option("--trials", opt_trials, "Monte Carlo trials");
    run->add_option("--seed", opt_seed, "rng seed");
    run->add_option("--partition", partition, "sharp | smooth");
    run->add_option("--osf", opt_osf, "grid oversampling factor (power of two)");
    run->add_option("--threads", opt_threads, "worker threads");
    run->add_option("--out", opt_out, "output root (default $NOISELAB_OUT or ./out)");
    run->add_option("--real-noise", opt_real, "true for the Hermitian real-valued variant");
    run->add_option("--quadrature-tol", opt_qtol, "grid quadrature relative tolerance");
    run->add_option("--tol", tol_overrides, "assertion tolerance override name=value")
        ->take_all();
    run->add_option("--s-list", s_list, "comma separated s sweep");
    run->add_option("--p-list", p_list, "comma separated p sweep");
    run->add_option("--q-list", q_list, "comma separated q sweep");

    std::string norm_input, norm_space = "besov";
    std::string norm_s = "-0.5", norm_p = "2", norm_q = "inf", norm_partition = "sharp";
    auto* norm = app.add_subcommand("norm", "one-shot norm of a field file, JSON to stdout");
    norm->add_option("--input", norm_input, "field JSON file")->required();
    norm->add_option("--s", norm_s, "smoothness index");
    norm->add_option("--p", norm_p, "integrability index (or inf)");
    norm->add_option("--q", norm_q, "summability index (or inf)");
    norm->add_option("--space", norm_space, "besov | fourier_besov");
    norm->add_option("--partition", norm_partition, "sharp | smooth");

    std::string sample_out;
    std::string sample_d = "1", sample_cutoff = "16", sample_seed = "0", sample_trial = "0",
                sample_real = "false";
    auto* sample = app.add_subcommand("sample", "emit a white-noise field file");
    sample->add_option("--d", sample_d, "dimension");
    sample->add_option("--cutoff", sample_cutoff, "coefficient cutoff N");
    sample->add_option("--seed", sample_seed, "rng seed");
    sample->add_option("--trial", sample_trial, "trial index");
    sample->add_option("--real-noise", sample_real, "true for the Hermitian variant");
    sample->add_option("--out", sample_out, "output path (default stdout)");

    std::string report_dir;
    auto* report = app.add_subcommand("report", "re-summarize a run directory");
    report->add_option("--dir", report_dir, "run directory containing manifest.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return e.get_exit_code() == 0 ? kExitPass : kExitSchema;
    }

    try {
        if (run->parsed()) {
            if (!experiment.empty()) add_override(flags, "experiment", experiment);
            if (!space.empty()) add_override(flags, "space", space);
            if (!opt_d.empty()) add_override(flags, "d", opt_d);
            if (!opt_p.empty()) add_override(flags, "p", opt_p);
            if (!opt_q.empty()) add_override(flags, "q", opt_q);
            if (!opt_s.empty()) add_override(flags, "s", opt_s);
            if (!opt_jmax.empty()) add_override(flags, "jmax", opt_jmax);
            if (!opt_cutoff.empty()) add_override(flags, "cutoff", opt_cutoff);
            if (!opt_trials.empty()) add_override(flags, "trials", opt_trials);
            if (!opt_seed.empty()) add_override(flags, "seed", opt_seed);
            if (!partition.empty()) add_override(flags, "partition", partition);
            if (!opt_osf.empty()) add_override(flags, "osf", opt_osf);
            if (!opt_threads.empty()) add_override(flags, "threads", opt_threads);
            if (!opt_out.empty()) add_override(flags, "out", opt_out);
            if (!opt_real.empty()) add_override(flags, "real_noise", opt_real);
            if (!opt_qtol.empty()) add_override(flags, "quadrature_tol", opt_qtol);
            if (!s_list.empty()) add_override(flags, "s_list", s_list);
            if (!p_list.empty()) add_override(flags, "p_list", p_list);
            if (!q_list.empty()) add_override(flags, "q_list", q_list);
            for (const auto& kv : tol_overrides) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw noiselab::SchemaError("--tol expects name=value, got " + kv);
                add_override(flags, "tol." + kv.substr(0, eq), kv.substr(eq + 1));
            }
            const auto cfg = build_config(flags);
            cfg.validate();
            const auto summary = noiselab::run_experiment(cfg);
            const auto output = noiselab::persist_summary(summary, cfg.out_dir);
            for (const auto& a : summary.assertions)
                std::cout << "[" << to_string(a.verdict) << "] " << a.id
                          << " observed=" << a.observed << " reference=" << a.reference << "\n";
            std::cout << "run_dir: " << output.run_dir << "\n";
            return noiselab::exit_code_for(summary);
        }

        if (norm->parsed()) {
            const auto field = noiselab::field_from_json(read_file(norm_input));
            noiselab::ExperimentConfig tmp;  // reuse the parsers for the flag values
            noiselab::apply_config_override(tmp, "s", norm_s);
            noiselab::apply_config_override(tmp, "p", norm_p);
            noiselab::apply_config_override(tmp, "q", norm_q);
            noiselab::apply_config_override(tmp, "partition", norm_partition);
            if (norm_space == "besov") {
                const auto rep = noiselab::besov_norm(field, *tmp.s, tmp.p, tmp.q, tmp.profile);
                std::cout << noiselab::norm_report_to_json(rep);
            } else if (norm_space == "fourier_besov") {
                const auto tri = noiselab::fb_norms(field, *tmp.s, tmp.p, tmp.q);
                std::cout << noiselab::fb_triple_to_json(tri);
            } else {
                throw noiselab::SchemaError("space must be besov or fourier_besov");
            }
            return kExitPass;
        }

        if (sample->parsed()) {
            noiselab::ExperimentConfig tmp;
            noiselab::apply_config_override(tmp, "d", sample_d);
            noiselab::apply_config_override(tmp, "cutoff", sample_cutoff);
            noiselab::apply_config_override(tmp, "seed", sample_seed);
            noiselab::apply_config_override(tmp, "real_noise", sample_real);
            const auto trial = static_cast<std::uint64_t>(std::stoll(sample_trial));
            const auto field = noiselab::sample_white_noise(
                tmp.d, static_cast<int>(tmp.cutoff), {tmp.seed, trial}, tmp.real_noise);
            const std::string body = noiselab::field_to_json(field);
            if (sample_out.empty())
                std::cout << body;
            else
                noiselab::write_file_atomic(sample_out, body);
            return kExitPass;
        }

        if (report->parsed()) {
            std::string rendered;
            const int code = noiselab::report_run_dir(report_dir, rendered);
            std::cout << rendered;
            return code;
        }
    } catch (const noiselab::MissingFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingFile;
    } catch (const noiselab::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const noiselab::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const noiselab::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const noiselab::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitPass;
}
