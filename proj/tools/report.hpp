#pragma once

// Tabular output shared by all subcommands: CSV with a single header row, or
// a JSON document assembled by the caller.

#include <json.hpp>

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Bad flags, unusable input, or an error reported by the library.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::string, double, long>;

inline std::string format_cell(const Cell& cell)
{
    if (const auto* d = std::get_if<double>(&cell))
        return fmt::format("{:.17g}", *d + 0.0); // -0 prints as 0
    if (const auto* n = std::get_if<long>(&cell))
        return std::to_string(*n);
    return std::get<std::string>(cell);
}

struct Report {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
    // Lines after the data rows that do not follow the header layout.
    std::vector<std::vector<Cell>> trailer;
    nlohmann::ordered_json json;

    void write_csv(std::ostream& out) const
    {
        auto line = [&out](const auto& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                out << (i ? "," : "") << format_cell(cells[i]);
            out << '\n';
        };
        std::vector<Cell> head(header.begin(), header.end());
        line(head);
        for (const auto& r : rows)
            line(r);
        for (const auto& r : trailer)
            line(r);
    }

    void write_json(std::ostream& out) const { out << json.dump(2) << '\n'; }
};

struct OutputOptions {
    std::string format = "csv";
    std::string path; // empty: standard output
};

/// Relative output paths are placed under $CYCLIC_SPLIT_OUTPUT_DIR when it is set.
inline std::filesystem::path resolve_output(const std::string& path)
{
    std::filesystem::path p(path);
    if (p.is_relative())
        if (const char* dir = std::getenv("CYCLIC_SPLIT_OUTPUT_DIR"); dir && *dir)
            p = std::filesystem::path(dir) / p;
    return p;
}

inline void emit(const Report& report, const OutputOptions& opts)
{
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opts.path.empty()) {
        const auto target = resolve_output(opts.path);
        file.open(target);
        if (!file)
            throw UsageError("cannot open output file " + target.string());
        out = &file;
    }
    if (opts.format == "json")
        report.write_json(*out);
    else
        report.write_csv(*out);
    out->flush();
    if (!*out)
        throw UsageError("write failed");
}

} // namespace cli
