#pragma once

#include <sqlite3.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "doomlc/converter.hpp"

// Executes generated DDL, seed rows and assertion queries on a real engine.

namespace doomlc::acceptance {

class Engine {
public:
    virtual ~Engine() = default;
    virtual std::string name() const = 0;
    /// Drops everything created so far.
    virtual void reset() = 0;
    /// Runs a multi-statement script; throws std::runtime_error on failure.
    virtual void exec(const std::string& script) = 0;
    /// Number of rows produced by a single SELECT.
    virtual long count_rows(const std::string& select) = 0;
    /// Statement that turns off foreign key enforcement for the session.
    virtual std::string foreign_keys_off() const = 0;
};

class SqliteEngine : public Engine {
public:
    SqliteEngine() { reset(); }
    ~SqliteEngine() override { close(); }

    std::string name() const override { return std::string("SQLite ") + sqlite3_libversion(); }

    void reset() override {
        close();
        if (sqlite3_open(":memory:", &db_) != SQLITE_OK) throw std::runtime_error("sqlite3_open failed");
        exec("PRAGMA foreign_keys = ON;");
    }

    void exec(const std::string& script) override {
        char* msg = nullptr;
        if (sqlite3_exec(db_, script.c_str(), nullptr, nullptr, &msg) != SQLITE_OK) {
            const std::string what = msg ? msg : "unknown error";
            sqlite3_free(msg);
            throw std::runtime_error(what);
        }
    }

    std::string foreign_keys_off() const override { return "PRAGMA foreign_keys = OFF;\n"; }

    long count_rows(const std::string& select) override {
        long rows = 0;
        char* msg = nullptr;
        auto cb = [](void* n, int, char**, char**) -> int {
            ++*static_cast<long*>(n);
            return 0;
        };
        if (sqlite3_exec(db_, select.c_str(), cb, &rows, &msg) != SQLITE_OK) {
            const std::string what = msg ? msg : "unknown error";
            sqlite3_free(msg);
            throw std::runtime_error(what);
        }
        return rows;
    }

private:
    void close() {
        if (db_ != nullptr) sqlite3_close(db_);
        db_ = nullptr;
    }

    sqlite3* db_ = nullptr;
};

/// Talks to a MySQL-compatible server through a client command line, e.g.
/// `mysql -N -B -h 127.0.0.1 -u root`. Scripts are fed on stdin.
class MysqlCommandEngine : public Engine {
public:
    explicit MysqlCommandEngine(std::string command, std::string database = "doomlc_acceptance")
        : command_(std::move(command)), database_(std::move(database)) {}

    std::string name() const override { return "MySQL via '" + command_ + "'"; }

    void reset() override {
        run("DROP DATABASE IF EXISTS `" + database_ + "`;\nCREATE DATABASE `" + database_ + "`;\n", false);
    }

    void exec(const std::string& script) override { run(script, true); }

    std::string foreign_keys_off() const override { return "SET FOREIGN_KEY_CHECKS = 0;\n"; }

    long count_rows(const std::string& select) override {
        std::string q = select;
        while (!q.empty() && (q.back() == ';' || q.back() == '\n' || q.back() == ' ')) q.pop_back();
        const std::string out = run("SELECT CONCAT('doomlc_rows=', COUNT(*)) FROM (" + q + ") AS v;\n", true);
        static const std::regex marker(R"(doomlc_rows=(\d+))");
        std::smatch m;
        if (!std::regex_search(out, m, marker)) throw std::runtime_error("no row count in output: " + out);
        return std::stol(m[1].str());
    }

    /// Quick probe so a missing server is reported once, not per fixture.
    std::optional<std::string> unreachable() {
        try {
            run("SELECT 1;\n", false);
            return std::nullopt;
        } catch (const std::exception& e) {
            return e.what();
        }
    }

private:
    std::string run(const std::string& script, bool use_db) {
        const auto dir = std::filesystem::temp_directory_path();
        const auto in = dir / "doomlc-mysql-in.sql";
        const auto out = dir / "doomlc-mysql-out.txt";
        {
            std::ofstream f(in, std::ios::binary | std::ios::trunc);
            if (use_db) f << "USE `" << database_ << "`;\n";
            f << script;
        }
        const std::string cmd = command_ + " < '" + in.string() + "' > '" + out.string() + "' 2>&1";
        const int status = std::system(cmd.c_str());
        std::ifstream r(out, std::ios::binary);
        std::string text((std::istreambuf_iterator<char>(r)), std::istreambuf_iterator<char>());
        if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
            throw std::runtime_error("client exited with status " + std::to_string(status) + ": " + text);
        }
        return text;
    }

    std::string command_;
    std::string database_;
};

/// A literal that every column of the given database type accepts. Foreign
/// key columns share the type of the key they reference, so one row per
/// table filled this way satisfies every reference.
inline std::string seed_literal(const std::optional<std::string>& db_type) {
    const std::string t = to_lower(db_type.value_or("varchar(64)"));
    auto starts = [&](const char* p) { return t.rfind(p, 0) == 0; };
    if (starts("datetime") || starts("timestamp")) return "'2024-01-01 00:00:00'";
    if (starts("date")) return "'2024-01-01'";
    if (starts("time")) return "'00:00:00'";
    if (starts("bool")) return "1";
    if (starts("decimal") || starts("numeric") || starts("float") || starts("double") || starts("real")) return "1.5";
    if (t.find("int") != std::string::npos) return "1";
    return "'k1'";
}

inline std::string quote_ident(const std::string& id, SqlDialect d) {
    return d == SqlDialect::MySql ? "`" + id + "`" : "\"" + id + "\"";
}

/// One INSERT per table, parents first. Tables caught in a reference cycle
/// are left out; no fixture has one.
inline std::string seed_script(const SchemaIR& schema, SqlDialect d) {
    std::string out;
    std::set<std::string> done;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& t : schema.tables) {
            if (done.count(t.name)) continue;
            bool ready = true;
            for (const auto& fk : t.foreign_keys) {
                if (fk.target_table != t.name && !done.count(fk.target_table)) ready = false;
            }
            if (!ready) continue;
            std::string cols, vals;
            for (const auto& c : t.columns) {
                if (!cols.empty()) {
                    cols += ", ";
                    vals += ", ";
                }
                cols += quote_ident(c.name, d);
                vals += seed_literal(c.db_type);
            }
            out += "INSERT INTO " + quote_ident(t.name, d) + " (" + cols + ") VALUES (" + vals + ");\n";
            done.insert(t.name);
            progress = true;
        }
    }
    return out;
}

/// The individual queries of an assertions.sql file.
inline std::vector<std::string> assertion_queries(const std::string& assertions_sql) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < assertions_sql.size()) {
        std::size_t end = assertions_sql.find('\n', pos);
        if (end == std::string::npos) end = assertions_sql.size();
        const std::string line = assertions_sql.substr(pos, end - pos);
        if (line.rfind("SELECT", 0) == 0) out.push_back(line);
        pos = end + 1;
    }
    return out;
}

}  // namespace doomlc::acceptance
