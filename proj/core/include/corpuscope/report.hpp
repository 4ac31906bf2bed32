#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace corpuscope {

// Writes run outputs under the output directory, refusing to overwrite
// existing files unless forced, and keeps the manifest of (path, sha256).
// Content is assembled in memory first, so a failed write never leaves a
// partial table behind.
class OutputWriter {
public:
    OutputWriter(std::filesystem::path out_dir, bool force);

    // rel_path is relative to the output directory, e.g. "tables/phi.csv"
    void write_file(const std::string& rel_path, const std::string& content);
    bool exists(const std::string& rel_path) const;
    std::filesystem::path resolve(const std::string& rel_path) const;

    struct ManifestEntry {
        std::string path;  // relative
        std::string sha256;
    };
    const std::vector<ManifestEntry>& manifest() const { return manifest_; }
    const std::filesystem::path& out_dir() const { return out_dir_; }

private:
    std::filesystem::path out_dir_;
    bool force_;
    std::vector<ManifestEntry> manifest_;
};

struct StageOutcome {
    std::string name;
    std::string status;  // ok | failed | skipped | disabled
    std::string detail;  // error text or skip reason
    double seconds = 0.0;
    bool from_cache = false;
};

struct AnalysisReport {
    std::vector<OutputWriter::ManifestEntry> files;
    std::vector<StageOutcome> stages;
    std::vector<std::string> warnings;
    std::string config_echo;  // canonical config JSON

    bool ok() const {
        for (const auto& s : stages) {
            if (s.status == "failed") return false;
        }
        return true;
    }
    std::string to_json() const;
};

}  // namespace corpuscope
