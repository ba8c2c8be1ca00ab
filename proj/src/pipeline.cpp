#include "minifab/pipeline.hpp"

#include "minifab/devs/simulator.hpp"
#include "minifab/errors.hpp"
#include "minifab/scenario_io.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

namespace minifab {

void Fnv1a64::update(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        hash_ ^= bytes[i];
        hash_ *= 1099511628211ULL;
    }
}

std::uint64_t fnv1a64_of_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for checksumming");
    Fnv1a64 sum;
    char buffer[1 << 16];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        sum.update(buffer, static_cast<std::size_t>(in.gcount()));
    }
    return sum.digest();
}

std::string checksum_hex(std::uint64_t checksum) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[checksum & 0xF];
        checksum >>= 4;
    }
    return out;
}

std::string manifest_text(const RunManifest& manifest) {
    std::string text;
    text += "tool_version=" + manifest.tool_version + "\n";
    text += "scenario_digest=" + checksum_hex(manifest.scenario_digest) + "\n";
    text += "files=" + std::to_string(manifest.files.size()) + "\n";
    for (const ManifestFile& file : manifest.files) {
        text += checksum_hex(file.checksum);
        text += ' ';
        text += std::to_string(file.size);
        text += ' ';
        text += file.relative_path;
        text += '\n';
    }
    return text;
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open manifest '" + path + "' for writing");
    out << manifest_text(manifest);
    if (!out) throw IoError("write failed for manifest '" + path + "'");
}

devs::EventTrace run_scenario(const ScenarioConfig& config) {
    validate_scenario(config);
    const devs::CoupledSpec cascade = build_cascade(config);
    return devs::simulate(cascade, static_cast<devs::VirtualTime>(config.horizon_minutes),
                          config.seed);
}

RunManifest simulate_suite(const std::vector<ScenarioConfig>& scenarios,
                           const std::string& out_dir, int jobs, std::ostream* progress) {
    if (scenarios.empty()) throw ContractError("scenario list is empty");
    for (const ScenarioConfig& scenario : scenarios) validate_scenario(scenario);
    {
        // duplicate names would collide on disk
        std::vector<std::string> names;
        names.reserve(scenarios.size());
        for (const ScenarioConfig& scenario : scenarios) names.push_back(scenario.name);
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
            throw ContractError("duplicate scenario names in suite");
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

    const int worker_count = std::max(1, jobs);
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::vector<ManifestFile> files;
    std::string failure;

    auto worker = [&] {
        while (true) {
            const std::size_t index = next.fetch_add(1);
            if (index >= scenarios.size()) return;
            {
                std::lock_guard<std::mutex> lock(mutex);
                if (!failure.empty()) return;
            }
            const ScenarioConfig& scenario = scenarios[index];
            const std::string scenario_dir = out_dir + "/" + scenario.name;
            try {
                const devs::EventTrace trace = run_scenario(scenario);
                const std::vector<std::string> names =
                    export_scenario(trace, scenario, scenario_dir);
                std::vector<ManifestFile> local;
                local.reserve(names.size());
                for (const std::string& name : names) {
                    ManifestFile entry;
                    entry.relative_path = scenario.name + "/" + name;
                    const std::string full = scenario_dir + "/" + name;
                    entry.size = std::filesystem::file_size(full);
                    entry.checksum = fnv1a64_of_file(full);
                    local.push_back(std::move(entry));
                }
                std::lock_guard<std::mutex> lock(mutex);
                files.insert(files.end(), std::make_move_iterator(local.begin()),
                             std::make_move_iterator(local.end()));
                if (progress != nullptr) {
                    *progress << scenario.name << " done\n";
                }
            } catch (const std::exception& error) {
                std::error_code cleanup;
                std::filesystem::remove_all(scenario_dir, cleanup);
                std::lock_guard<std::mutex> lock(mutex);
                if (failure.empty()) {
                    failure = "scenario '" + scenario.name + "' failed: " + error.what();
                }
                return;
            }
        }
    };

    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int i = 0; i < worker_count; ++i) pool.emplace_back(worker);
        for (std::thread& thread : pool) thread.join();
    }

    if (!failure.empty()) throw ModelError(failure);

    RunManifest manifest;
    manifest.tool_version = std::string(kToolVersion);
    Fnv1a64 digest;
    const std::string scenario_text = scenario_file_text(scenarios);
    digest.update(scenario_text.data(), scenario_text.size());
    manifest.scenario_digest = digest.digest();
    std::sort(files.begin(), files.end(), [](const ManifestFile& a, const ManifestFile& b) {
        return a.relative_path < b.relative_path;
    });
    manifest.files = std::move(files);

    write_manifest(out_dir + "/manifest.txt", manifest);
    return manifest;
}

} // namespace minifab
