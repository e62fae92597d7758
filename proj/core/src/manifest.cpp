#include "texsrc/manifest.hpp"
#include "texsrc/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace texsrc {

std::string DatasetManifest::resolved_path(int i) const {
    const std::string& p = entries[static_cast<std::size_t>(i)].path;
    if (p.empty()) return p;
    if (p.front() == '/' || base_dir.empty()) return p;
    return base_dir + "/" + p;
}

DatasetManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open manifest: " + path);

    DatasetManifest m;
    const auto slash = path.find_last_of('/');
    m.base_dir = slash == std::string::npos ? std::string(".") : path.substr(0, slash);

    std::string line;
    if (!std::getline(in, line)) throw DataError("empty manifest: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "path,label") {
        throw DataError("manifest must start with header 'path,label': " + path);
    }

    std::unordered_set<std::string> seen_paths;
    std::unordered_map<std::string, int> class_index;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto comma = line.find(',');
        if (comma == std::string::npos || comma + 1 >= line.size()) {
            throw DataError("manifest line " + std::to_string(line_no) + " is missing a label: " + path);
        }
        DatasetManifest::Entry e;
        e.path = line.substr(0, comma);
        e.label = line.substr(comma + 1);
        if (e.path.empty()) {
            throw DataError("manifest line " + std::to_string(line_no) + " has an empty path: " + path);
        }
        if (!seen_paths.insert(e.path).second) {
            throw DataError("duplicate path '" + e.path + "' in manifest: " + path);
        }

        auto it = class_index.find(e.label);
        if (it == class_index.end()) {
            it = class_index.emplace(e.label, static_cast<int>(m.classes.size())).first;
            m.classes.push_back(e.label);
            m.counts.push_back(0);
        }
        e.class_index = it->second;
        ++m.counts[static_cast<std::size_t>(e.class_index)];
        m.entries.push_back(std::move(e));
    }

    if (m.entries.empty()) throw DataError("manifest has no samples: " + path);
    return m;
}

void save_manifest(const DatasetManifest& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write manifest: " + path);
    out << "path,label\n";
    for (const auto& e : m.entries) out << e.path << "," << e.label << "\n";
    if (!out) throw DataError("write failed: " + path);
}

} // namespace texsrc
