#pragma once

#include "minifab/dataset.hpp"
#include "minifab/devs/trace.hpp"
#include "minifab/factory.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace minifab {

/// Incremental FNV-1a 64-bit checksum; used to compare dataset bytes
/// across runs, not for security.
class Fnv1a64 {
public:
    void update(const void* data, std::size_t size);
    std::uint64_t digest() const { return hash_; }

private:
    std::uint64_t hash_ = 14695981039346656037ULL;
};

std::uint64_t fnv1a64_of_file(const std::string& path);
std::string checksum_hex(std::uint64_t checksum);

struct ManifestFile {
    std::string relative_path; // "<scenario>/<file>"
    std::uint64_t size = 0;
    std::uint64_t checksum = 0;
};

struct RunManifest {
    std::string tool_version;
    std::uint64_t scenario_digest = 0; // checksum of the scenario list text
    std::vector<ManifestFile> files;   // sorted by relative path
};

std::string manifest_text(const RunManifest& manifest);
void write_manifest(const std::string& path, const RunManifest& manifest);

/// Builds the cascade for the scenario and simulates it to its horizon.
devs::EventTrace run_scenario(const ScenarioConfig& config);

/// Simulates every scenario (jobs-way parallel; each scenario owns its
/// output subtree) and writes `manifest.txt` into out_dir. Results are
/// independent of the job count. A failing scenario has its partial
/// output removed and aborts the suite. `progress` may be null.
RunManifest simulate_suite(const std::vector<ScenarioConfig>& scenarios,
                           const std::string& out_dir, int jobs, std::ostream* progress = nullptr);

} // namespace minifab
