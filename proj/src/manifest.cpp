#include "noiselab/manifest.hpp"

#include <json.hpp>

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "noiselab/config.hpp"

namespace noiselab {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

namespace {

std::string cell_to_string(const CsvValue& v) {
    if (std::holds_alternative<std::int64_t>(v)) return std::to_string(std::get<std::int64_t>(v));
    if (std::holds_alternative<double>(v)) {
        const double x = std::get<double>(v);
        if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return buf;
    }
    return std::get<std::string>(v);
}

std::string iso_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string csv_to_string(const CsvTable& table) {
    std::ostringstream os;
    os << "# schema_version=" << kSchemaVersion << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_to_string(row[i]);
        os << "\n";
    }
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open for writing: " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

std::string run_id_for(const ExperimentConfig& cfg) {
    return cfg.experiment + "-" + fnv1a_hex(config_to_string(cfg)).substr(0, 8);
}

RunOutput persist_summary(const ExperimentSummary& summary, const std::string& out_root) {
    RunOutput out;
    const fs::path dir = fs::path(out_root) / run_id_for(summary.config);
    out.run_dir = dir.string();
    const std::string started = iso_now();

    json inventory = json::array();
    for (const auto& table : summary.tables) {
        const std::string body = csv_to_string(table);
        const fs::path p = dir / (table.name + ".csv");
        write_file_atomic(p.string(), body);
        inventory.push_back({{"path", table.name + ".csv"},
                             {"bytes", body.size()},
                             {"checksum", fnv1a_hex(body)}});
        out.csv_paths.push_back(p.string());
    }

    json asserts = json::array();
    for (const auto& a : summary.assertions) {
        asserts.push_back({{"id", a.id},
                           {"description", a.description},
                           {"observed", a.observed},
                           {"reference", a.reference},
                           {"tolerance", a.tolerance},
                           {"verdict", to_string(a.verdict)}});
    }
    json scalars = json::object();
    for (const auto& [k, v] : summary.scalars) scalars[k] = v;

    json manifest{{"experiment", summary.experiment},
                  {"version", kVersion},
                  {"schema_version", kSchemaVersion},
                  {"run_id", run_id_for(summary.config)},
                  {"seed", summary.config.seed},
                  {"config", config_to_string(summary.config)},
                  {"started", started},
                  {"finished", iso_now()},
                  {"overall", to_string(summary.overall())},
                  {"assertions", std::move(asserts)},
                  {"scalars", std::move(scalars)},
                  {"outputs", std::move(inventory)}};
    const fs::path mpath = dir / "manifest.json";
    write_file_atomic(mpath.string(), manifest.dump(2) + "\n");
    out.manifest_path = mpath.string();
    return out;
}

int exit_code_for(const ExperimentSummary& summary) {
    switch (summary.overall()) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return 1;
        default: return 3;
    }
}

int report_run_dir(const std::string& run_dir, std::string& rendered) {
    const fs::path mpath = fs::path(run_dir) / "manifest.json";
    std::ifstream in(mpath, std::ios::binary);
    if (!in) throw MissingFileError("manifest not found: " + mpath.string());
    json manifest;
    try {
        in >> manifest;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("manifest parse error: ") + e.what());
    }

    std::ostringstream os;
    os << "experiment: " << manifest.value("experiment", std::string("?")) << "\n";
    os << "run_id:     " << manifest.value("run_id", std::string("?")) << "\n";
    bool files_ok = true;
    for (const auto& entry : manifest["outputs"]) {
        const fs::path p = fs::path(run_dir) / entry["path"].get<std::string>();
        std::ifstream f(p, std::ios::binary);
        if (!f) {
            os << "missing output: " << p.string() << "\n";
            files_ok = false;
            continue;
        }
        std::ostringstream body;
        body << f.rdbuf();
        const std::string sum = fnv1a_hex(body.str());
        const bool ok = sum == entry["checksum"].get<std::string>();
        files_ok = files_ok && ok;
        os << (ok ? "ok " : "CHECKSUM MISMATCH ") << entry["path"].get<std::string>() << "\n";
    }
    bool any_fail = !files_ok, any_inconclusive = false;
    for (const auto& a : manifest["assertions"]) {
        const std::string v = a["verdict"].get<std::string>();
        os << "[" << v << "] " << a["id"].get<std::string>() << " observed="
           << a["observed"].dump() << " reference=" << a["reference"].dump() << "\n";
        if (v == "fail") any_fail = true;
        if (v == "inconclusive") any_inconclusive = true;
    }
    rendered = os.str();
    if (any_fail) return 1;
    if (any_inconclusive) return 3;
    return 0;
}

}  // namespace noiselab
