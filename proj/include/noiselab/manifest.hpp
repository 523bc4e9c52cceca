#pragma once

#include <string>
#include <vector>

#include "noiselab/experiments.hpp"

namespace noiselab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

/// FNV-1a 64-bit, hex-encoded; the output inventory checksum.
std::string fnv1a_hex(const std::string& bytes);

/// Serialize one table; stable formatting so identical runs are bit-identical.
std::string csv_to_string(const CsvTable& table);

/// write-temp-then-rename
void write_file_atomic(const std::string& path, const std::string& content);

struct RunOutput {
    std::string run_dir;
    std::string manifest_path;
    std::vector<std::string> csv_paths;
};

/// Deterministic run id from the experiment name and the canonical config.
std::string run_id_for(const ExperimentConfig& cfg);

/// Write all CSVs plus the manifest under out_root/run_id; returns the paths.
RunOutput persist_summary(const ExperimentSummary& summary, const std::string& out_root);

/// 0 all pass, 1 any fail, 3 inconclusive only.
int exit_code_for(const ExperimentSummary& summary);

/// Re-read a manifest, verify the checksum inventory, and return the exit
/// code its verdicts imply (1 on checksum mismatch or missing files).
int report_run_dir(const std::string& run_dir, std::string& rendered);

}  // namespace noiselab
