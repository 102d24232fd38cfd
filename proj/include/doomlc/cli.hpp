#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "doomlc/converter.hpp"
#include "doomlc/emit.hpp"
#include "doomlc/ir_json.hpp"
#include "doomlc/parser.hpp"
#include "doomlc/pipeline.hpp"
#include "doomlc/printer.hpp"
#include "doomlc/validator.hpp"

namespace doomlc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailed = 1,
    kUsageError = 2,
};

struct RunOptions {
    bool color = false;
    std::filesystem::path working_dir = ".";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `key = value` lines; `#` starts a comment, string values may be quoted.
/// Recognized keys: dialect, profile, out_dir, emit_assertions.
inline std::map<std::string, std::string> parse_config(std::string_view text, const std::string& name) {
    static const std::set<std::string> known = {"dialect", "profile", "out_dir", "emit_assertions"};
    std::map<std::string, std::string> values;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(name + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        if (!known.count(key)) {
            throw UsageError(name + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        values[key] = value;
    }
    return values;
}

namespace detail {

struct Inputs {
    std::vector<std::string> paths;
    std::vector<std::string> sources;
};

inline Inputs read_inputs(const std::vector<std::string>& paths) {
    Inputs in;
    for (const auto& p : paths) {
        std::ifstream f(p, std::ios::binary);
        if (!f) throw UsageError("cannot read input file '" + p + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        in.paths.push_back(p);
        in.sources.push_back(ss.str());
    }
    return in;
}

class Reporter {
public:
    Reporter(std::ostream& out, std::ostream& err, bool json, bool color, std::vector<std::string> files)
        : out_(out), err_(err), json_(json), color_(color), files_(std::move(files)) {}

    void report(const std::vector<Diagnostic>& diags) {
        for (const auto& d : diags) report(d);
    }

    void report(const Diagnostic& d) {
        const std::string file = d.span.file < files_.size() ? files_[d.span.file] : std::string("<output>");
        if (json_) {
            out_ << to_json(d, file).dump() << '\n';
            return;
        }
        std::string line = format_diagnostic(d, file);
        if (color_) {
            const char* c = d.severity == Severity::Error ? "\x1b[31m" : "\x1b[33m";
            line = c + line + "\x1b[0m";
        }
        err_ << line << '\n';
    }

    void info(const std::string& msg) {
        if (!json_) out_ << msg << '\n';
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    bool json_;
    bool color_;
    std::vector<std::string> files_;
};

// Parses every input into one model namespace; nullopt when any file has
// syntax errors (already reported).
inline std::optional<Model> parse_all(const Inputs& in, Reporter& rep) {
    std::vector<Model> parts;
    bool failed = false;
    for (std::size_t i = 0; i < in.sources.size(); ++i) {
        ParseResult r = parse_model(in.sources[i], static_cast<std::uint32_t>(i));
        rep.report(r.diagnostics);
        failed = failed || !r.ok();
        parts.push_back(std::move(r.model));
    }
    if (failed) return std::nullopt;
    return merge_models(std::move(parts));
}

inline std::string plural(std::size_t n, const std::string& word) {
    return std::to_string(n) + ' ' + word + (n == 1 ? "" : "s");
}

}  // namespace detail

/// Runs one doomlc invocation. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 model errors, 2 usage or I/O errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const RunOptions& options = {}) {
    CLI::App app{"doomlc: compiler for DooML archetype diagrams", "doomlc"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string dialect_flag, profile_flag, out_flag, format = "text", config_path, ir_kind = "schema";
    bool emit_assertions_flag = false;
    bool fmt_check = false;

    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("inputs", inputs, "DooML source files")->required()->check(CLI::ExistingFile);
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Diagnostic format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_emit_flags = [&](CLI::App* sub) {
        sub->add_option("--dialect", dialect_flag, "SQL dialect")->check(CLI::IsMember({"ansi", "mysql"}));
        sub->add_option("--profile", profile_flag, "Class skeleton profile");
        sub->add_option("--out", out_flag, "Output directory");
        sub->add_flag("--emit-assertions", emit_assertions_flag, "Write sql/assertions.sql");
        sub->add_option("--config", config_path, "Config file (default: dooml.toml if present)");
    };

    auto* check = app.add_subcommand("check", "Parse and validate");
    add_inputs(check);
    add_format(check);
    auto* build = app.add_subcommand("build", "Parse, validate, convert and write every artifact");
    add_inputs(build);
    add_format(build);
    add_emit_flags(build);
    auto* diagram = app.add_subcommand("diagram", "Write the DOT diagram only");
    add_inputs(diagram);
    add_format(diagram);
    diagram->add_option("--out", out_flag, "Output directory");
    diagram->add_option("--config", config_path, "Config file (default: dooml.toml if present)");
    auto* fmt = app.add_subcommand("fmt", "Rewrite sources in canonical form");
    add_inputs(fmt);
    add_format(fmt);
    fmt->add_flag("--check", fmt_check, "Report files that are not formatted; write nothing");
    auto* dump = app.add_subcommand("dump-ir", "Print an intermediate representation as JSON");
    add_inputs(dump);
    add_format(dump);
    dump->add_option("--ir", ir_kind, "Which IR")->check(CLI::IsMember({"model", "class", "schema", "api"}));
    dump->add_option("--dialect", dialect_flag, "SQL dialect for the schema key profile")
        ->check(CLI::IsMember({"ansi", "mysql"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "doomlc: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        EmitConfig config;
        config.output_dir = options.working_dir / "out";
        std::filesystem::path cfg = config_path.empty() ? options.working_dir / "dooml.toml" : std::filesystem::path(config_path);
        if (!config_path.empty() || std::filesystem::exists(cfg)) {
            std::ifstream f(cfg);
            if (!f) throw UsageError("cannot read config file '" + cfg.string() + "'");
            std::ostringstream ss;
            ss << f.rdbuf();
            for (const auto& [key, value] : parse_config(ss.str(), cfg.string())) {
                if (key == "dialect") {
                    auto d = dialect_from_string(value);
                    if (!d) throw UsageError("config: dialect must be ansi or mysql");
                    config.sql_dialect = *d;
                } else if (key == "profile") {
                    config.class_profile = value;
                } else if (key == "out_dir") {
                    config.output_dir = options.working_dir / value;
                } else if (key == "emit_assertions") {
                    if (value != "true" && value != "false") {
                        throw UsageError("config: emit_assertions must be true or false");
                    }
                    config.emit_assert_queries = value == "true";
                }
            }
        }
        if (!dialect_flag.empty()) config.sql_dialect = *dialect_from_string(dialect_flag);
        if (!profile_flag.empty()) config.class_profile = profile_flag;
        if (!out_flag.empty()) config.output_dir = options.working_dir / out_flag;
        if (emit_assertions_flag) config.emit_assert_queries = true;
        if (find_class_profile(config.class_profile) == nullptr) {
            std::string known;
            for (const auto& p : class_profiles()) known += (known.empty() ? "" : ", ") + p.name;
            throw UsageError("unknown class profile '" + config.class_profile + "' (known: " + known + ")");
        }

        const detail::Inputs in = detail::read_inputs(inputs);
        detail::Reporter rep(out, err, format == "json", options.color, in.paths);

        if (fmt->parsed()) {
            std::vector<std::string> formatted;
            bool failed = false;
            for (std::size_t i = 0; i < in.sources.size(); ++i) {
                ParseResult r = parse_model(in.sources[i], static_cast<std::uint32_t>(i));
                rep.report(r.diagnostics);
                failed = failed || !r.ok();
                formatted.push_back(pretty_print(r.model));
            }
            if (failed) return kValidationFailed;
            std::size_t changed = 0;
            for (std::size_t i = 0; i < formatted.size(); ++i) {
                if (formatted[i] == in.sources[i]) continue;
                ++changed;
                if (fmt_check) {
                    rep.info(in.paths[i] + ": not formatted");
                } else {
                    write_file_atomically(in.paths[i], formatted[i]);
                }
            }
            if (fmt_check) return changed == 0 ? kSuccess : kValidationFailed;
            rep.info("formatted " + detail::plural(changed, "file"));
            return kSuccess;
        }

        std::optional<Model> model = detail::parse_all(in, rep);
        if (!model) return kValidationFailed;

        if (diagram->parsed()) {
            const EmittedFile dot = emit_dot(*model);
            write_file_atomically(config.output_dir / dot.relative_path, dot.contents);
            rep.info("wrote " + (config.output_dir / dot.relative_path).string());
            return kSuccess;
        }
        if (dump->parsed() && ir_kind == "model") {
            out << to_json(*model).dump(2) << '\n';
            return kSuccess;
        }

        const ValidationReport report = validate(*model);
        rep.report(report.diagnostics);

        if (check->parsed()) {
            rep.info(detail::plural(model->archetypes.size(), "archetype") + ", " +
                     detail::plural(model->relationships.size(), "relationship") + ": " +
                     detail::plural(report.error_count(), "error") + ", " +
                     detail::plural(report.warning_count(), "warning"));
            return report.ok() ? kSuccess : kValidationFailed;
        }
        if (!report.ok()) return kValidationFailed;

        if (dump->parsed()) {
            Json j;
            if (ir_kind == "class") j = to_json(to_class_ir(*model));
            if (ir_kind == "schema") {
                const SchemaIR schema = to_schema_ir(*model);
                j = to_json(dialect_flag.empty() ? schema : apply_pk_profile(schema, config.sql_dialect));
            }
            if (ir_kind == "api") j = to_json(to_api_ir(*model));
            out << j.dump(2) << '\n';
            return kSuccess;
        }

        // build: render everything first so a failure leaves the output tree untouched
        std::vector<EmittedFile> files;
        try {
            files = render_outputs(*model, config);
        } catch (const Error& e) {
            rep.report(e.diagnostic());
            return kValidationFailed;
        }
        write_outputs(files, config.output_dir);
        rep.info("wrote " + detail::plural(files.size(), "file") + " to " + config.output_dir.string());
        return kSuccess;
    } catch (const UsageError& e) {
        err << "doomlc: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "doomlc: " << e.what() << '\n';
        return kValidationFailed;
    } catch (const std::exception& e) {
        err << "doomlc: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace doomlc::cli
