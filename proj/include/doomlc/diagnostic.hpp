#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace doomlc {

/// Location of a token or element in one input source. Lines and columns are
/// 1-based; offset is a byte offset into the source text.
struct SourceSpan {
    std::uint32_t file = 0;
    std::uint32_t line = 1;
    std::uint32_t column = 1;
    std::size_t offset = 0;
    std::size_t length = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Error, Warning };

inline std::string_view to_string(Severity s) {
    return s == Severity::Error ? "error" : "warning";
}

// Stable diagnostic codes. S* are syntax errors from the parser, E* and W*
// are semantic findings (the parser also raises E003 for duplicates it sees),
// C* come from emission settings.
namespace codes {
inline constexpr std::string_view kSyntax = "S001";
inline constexpr std::string_view kBadClassifier = "S002";
inline constexpr std::string_view kMissingColon = "S003";
inline constexpr std::string_view kMalformedType = "S004";
inline constexpr std::string_view kBadParticipation = "S005";
inline constexpr std::string_view kBadCharacter = "S006";

inline constexpr std::string_view kUnresolved = "E001";
inline constexpr std::string_view kNoPrimaryKey = "E002";
inline constexpr std::string_view kDuplicate = "E003";
inline constexpr std::string_view kKeyLifeline = "E004";
inline constexpr std::string_view kTernaryCardinality = "E005";
inline constexpr std::string_view kUnknownEnd = "E006";
inline constexpr std::string_view kMultiplePrimaryKeys = "E007";
inline constexpr std::string_view kBadForeignKey = "E008";
inline constexpr std::string_view kBadShape = "E009";
inline constexpr std::string_view kNoTable = "E010";

inline constexpr std::string_view kConfig = "C001";
inline constexpr std::string_view kUnmappableType = "C002";

inline constexpr std::string_view kNonKeyTarget = "W001";
inline constexpr std::string_view kMissingDbType = "W002";
inline constexpr std::string_view kMissingCodeType = "W003";
inline constexpr std::string_view kDraftRelationship = "W004";
inline constexpr std::string_view kKindMismatch = "W005";
}  // namespace codes

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceSpan span;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline Diagnostic make_error(std::string_view code, std::string message, SourceSpan span) {
    return {Severity::Error, std::string(code), std::move(message), span};
}

inline Diagnostic make_warning(std::string_view code, std::string message, SourceSpan span) {
    return {Severity::Warning, std::string(code), std::move(message), span};
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

/// Orders by (file, line, column, code), then message for a total order.
inline void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.span.file, a.span.line, a.span.column, a.code, a.message) <
               std::tie(b.span.file, b.span.line, b.span.column, b.code, b.message);
    });
}

/// Renders `severity[code] file:line:col message`.
inline std::string format_diagnostic(const Diagnostic& d, std::string_view file_name) {
    std::string out;
    out += to_string(d.severity);
    out += '[';
    out += d.code;
    out += "] ";
    out += file_name;
    out += ':' + std::to_string(d.span.line) + ':' + std::to_string(d.span.column) + ' ';
    out += d.message;
    return out;
}

/// Thrown by the converter and emitters when a precondition the validator
/// normally guarantees does not hold.
class Error : public std::runtime_error {
public:
    explicit Error(Diagnostic diag)
        : std::runtime_error(diag.message), diag_(std::move(diag)) {}
    Error(std::string_view code, std::string message, SourceSpan span = {})
        : Error(make_error(code, std::move(message), span)) {}

    const Diagnostic& diagnostic() const noexcept { return diag_; }
    const std::string& code() const noexcept { return diag_.code; }

private:
    Diagnostic diag_;
};

}  // namespace doomlc
