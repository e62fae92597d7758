#pragma once

#include <string>
#include <vector>

namespace texsrc {

/// Dataset manifest: per-sample image path and class label.
/// Classes are kept in first-appearance order; entry paths are stored as
/// written and resolved against the manifest's directory.
struct DatasetManifest {
    struct Entry {
        std::string path;   // as written in the manifest (relative)
        std::string label;
        int class_index = -1;
    };

    std::vector<Entry> entries;
    std::vector<std::string> classes;
    std::vector<int> counts;      // samples per class
    std::string base_dir;

    int class_count() const { return static_cast<int>(classes.size()); }
    int sample_count() const { return static_cast<int>(entries.size()); }
    std::string resolved_path(int i) const;
};

/// Reads a CSV manifest with mandatory header `path,label`, one
/// `relative_path,label` line per sample, LF line endings.
/// Errors: missing/invalid header, duplicate path, missing label, empty file.
DatasetManifest load_manifest(const std::string& path);

void save_manifest(const DatasetManifest& m, const std::string& path);

} // namespace texsrc
