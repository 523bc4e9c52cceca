#include "noiselab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace noiselab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_extended_real(const std::string& v, const std::string& key) {
    if (v == "inf" || v == "Inf" || v == "INF")
        return std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw SchemaError("trailing characters in value for " + key);
        return x;
    } catch (const SchemaError&) {
        throw;
    } catch (...) {
        throw SchemaError("cannot parse numeric value '" + v + "' for key " + key);
    }
}

std::int64_t parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        const std::int64_t x = std::stoll(v, &used);
        if (used != v.size()) throw SchemaError("trailing characters in value for " + key);
        return x;
    } catch (const SchemaError&) {
        throw;
    } catch (...) {
        throw SchemaError("cannot parse integer value '" + v + "' for key " + key);
    }
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw SchemaError("cannot parse boolean value '" + v + "' for key " + key);
}

std::vector<double> parse_list(const std::string& v, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_extended_real(item, key));
    }
    return out;
}

const std::vector<std::string>& known_experiments() {
    static const std::vector<std::string> names = {
        "lln_besov", "lln_fb",     "frontier", "mean_identity", "hv",
        "tail",      "divergence", "logsup",   "equivalence"};
    return names;
}

}  // namespace

void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value) {
    if (key == "experiment") {
        const auto& names = known_experiments();
        if (std::find(names.begin(), names.end(), value) == names.end())
            throw SchemaError("unknown experiment '" + value + "'");
        cfg.experiment = value;
    } else if (key == "space") {
        if (value != "besov" && value != "fourier_besov")
            throw SchemaError("space must be besov or fourier_besov");
        cfg.space = value;
    } else if (key == "d" || key == "dimension") {
        cfg.d = static_cast<int>(parse_int(value, key));
    } else if (key == "p") {
        cfg.p = parse_extended_real(value, key);
    } else if (key == "q") {
        cfg.q = parse_extended_real(value, key);
    } else if (key == "s") {
        cfg.s = parse_extended_real(value, key);
    } else if (key == "jmax") {
        cfg.jmax = static_cast<int>(parse_int(value, key));
    } else if (key == "cutoff" || key == "N") {
        cfg.cutoff = parse_int(value, key);
    } else if (key == "trials") {
        cfg.trials = parse_int(value, key);
    } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_int(value, key));
    } else if (key == "partition") {
        if (value == "sharp")
            cfg.profile = PartitionProfile::sharp();
        else if (value == "smooth")
            cfg.profile = PartitionProfile::smooth(cfg.profile.smooth_a, cfg.profile.smooth_b);
        else
            throw SchemaError("partition must be sharp or smooth");
    } else if (key == "smooth.a") {
        cfg.profile.smooth_a = parse_extended_real(value, key);
        if (cfg.profile.kind == ProfileKind::Smooth)
            cfg.profile = PartitionProfile::smooth(cfg.profile.smooth_a, cfg.profile.smooth_b);
    } else if (key == "smooth.b") {
        cfg.profile.smooth_b = parse_extended_real(value, key);
        if (cfg.profile.kind == ProfileKind::Smooth)
            cfg.profile = PartitionProfile::smooth(cfg.profile.smooth_a, cfg.profile.smooth_b);
    } else if (key == "osf") {
        cfg.osf = static_cast<int>(parse_int(value, key));
    } else if (key == "quadrature_tol") {
        cfg.quadrature_tol = parse_extended_real(value, key);
    } else if (key == "threads") {
        cfg.threads = static_cast<int>(parse_int(value, key));
    } else if (key == "real_noise") {
        cfg.real_noise = parse_bool(value, key);
    } else if (key == "coeff_budget") {
        cfg.coeff_budget = parse_int(value, key);
    } else if (key == "grid_budget") {
        cfg.grid_budget = parse_int(value, key);
    } else if (key == "out") {
        cfg.out_dir = value;
    } else if (key == "s_list") {
        cfg.s_list = parse_list(value, key);
    } else if (key == "p_list") {
        cfg.p_list = parse_list(value, key);
    } else if (key == "q_list") {
        cfg.q_list = parse_list(value, key);
    } else if (key.rfind("tol.", 0) == 0) {
        cfg.tolerances[key.substr(4)] = parse_extended_real(value, key);
    } else {
        throw SchemaError("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw SchemaError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SchemaError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!section.empty()) key = section + "." + key;
        apply_config_override(cfg, key, value);
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError("config file not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string config_to_string(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    os << "experiment=" << cfg.experiment << "\nspace=" << cfg.space << "\nd=" << cfg.d
       << "\np=" << cfg.p << "\nq=" << cfg.q << "\ns=";
    if (cfg.s)
        os << *cfg.s;
    else
        os << "critical";
    os << "\njmax=" << cfg.jmax << "\ncutoff=" << cfg.cutoff << "\ntrials=" << cfg.trials
       << "\nseed=" << cfg.seed
       << "\npartition=" << (cfg.profile.kind == ProfileKind::Sharp ? "sharp" : "smooth")
       << "\nsmooth.a=" << cfg.profile.smooth_a << "\nsmooth.b=" << cfg.profile.smooth_b
       << "\nosf=" << cfg.osf << "\nquadrature_tol=" << cfg.quadrature_tol
       << "\nreal_noise=" << (cfg.real_noise ? "true" : "false")
       << "\ncoeff_budget=" << cfg.coeff_budget << "\ngrid_budget=" << cfg.grid_budget;
    auto list = [&os](const char* name, const std::vector<double>& xs) {
        os << "\n" << name << "=";
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    };
    list("s_list", cfg.s_list);
    list("p_list", cfg.p_list);
    list("q_list", cfg.q_list);
    for (const auto& [k, v] : cfg.tolerances) os << "\ntol." << k << "=" << v;
    os << "\n";
    return os.str();
}

}  // namespace noiselab
