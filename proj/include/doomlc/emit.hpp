#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "doomlc/converter.hpp"

namespace doomlc {

struct EmitConfig {
    SqlDialect sql_dialect = SqlDialect::MySql;
    std::string class_profile = "java-like";
    std::filesystem::path output_dir = "out";
    bool emit_assert_queries = false;
};

/// 64-bit FNV-1a over the bytes, as 16 lowercase hex digits.
inline std::string content_checksum(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct EmittedFile {
    std::filesystem::path relative_path;  // relative to EmitConfig::output_dir
    std::string contents;
    std::string checksum;

    EmittedFile() = default;
    EmittedFile(std::filesystem::path path, std::string text)
        : relative_path(std::move(path)), contents(std::move(text)), checksum(content_checksum(contents)) {}

    friend bool operator==(const EmittedFile&, const EmittedFile&) = default;
};

inline std::string_view to_string(SqlDialect d) { return d == SqlDialect::MySql ? "mysql" : "ansi"; }

inline std::optional<SqlDialect> dialect_from_string(std::string_view s) {
    if (iequals(s, "mysql")) return SqlDialect::MySql;
    if (iequals(s, "ansi")) return SqlDialect::Ansi;
    return std::nullopt;
}

}  // namespace doomlc
