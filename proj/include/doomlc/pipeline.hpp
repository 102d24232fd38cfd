#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <vector>

#include "doomlc/converter.hpp"
#include "doomlc/emit.hpp"
#include "doomlc/emit_api.hpp"
#include "doomlc/emit_classes.hpp"
#include "doomlc/emit_dot.hpp"
#include "doomlc/emit_sql.hpp"

namespace doomlc {

/// Every artifact of a build, rendered in memory: SQL, class skeletons, the
/// API document and the diagram. Throws Error on the first emission failure,
/// before anything touches the disk.
inline std::vector<EmittedFile> render_outputs(const Model& model, const EmitConfig& config) {
    if (find_class_profile(config.class_profile) == nullptr) {
        throw Error(codes::kConfig, "unknown class profile '" + config.class_profile + "'");
    }
    std::vector<EmittedFile> files = emit_sql(to_schema_ir(model), config);
    for (auto& f : emit_classes(to_class_ir(model), config)) files.push_back(std::move(f));
    files.push_back(emit_api(to_api_ir(model), config));
    files.push_back(emit_dot(model));
    return files;
}

/// Writes one file through a temporary sibling and a rename, so a reader
/// never observes a half-written file.
inline void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".doomlc-tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

inline void write_outputs(const std::vector<EmittedFile>& files, const std::filesystem::path& dir) {
    for (const auto& f : files) write_file_atomically(dir / f.relative_path, f.contents);
}

}  // namespace doomlc
