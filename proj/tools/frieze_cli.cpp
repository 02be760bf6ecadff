// frieze: command line front end over the libfrieze C API.

#include "frieze/frieze.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

int exit_code(frz_status st) {
    switch (st) {
        case FRZ_OK: return kExitOk;
        case FRZ_E_VERIFICATION: return kExitVerify;
        case FRZ_E_INVALID_ARGUMENT:
        case FRZ_E_PARSE: return kExitUsage;
        case FRZ_E_LIMIT:
        case FRZ_E_UNSUPPORTED:
        case FRZ_E_INTERNAL: return kExitLimit;
    }
    return kExitLimit;
}

int report_failure(frz_status st) {
    std::cerr << "frieze: " << frz_status_string(st);
    if (*frz_last_error()) std::cerr << ": " << frz_last_error();
    std::cerr << "\n";
    return exit_code(st);
}

struct CatalogDeleter {
    void operator()(frz_catalog c) const { frz_catalog_free(c); }
};
using CatalogPtr = std::unique_ptr<frz_catalog_s, CatalogDeleter>;

struct StringDeleter {
    void operator()(char* s) const { frz_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::optional<frz_kind> kind_of(const std::string& s) {
    if (s == "y") return FRZ_KIND_Y;
    if (s == "coxeter") return FRZ_KIND_COXETER;
    return std::nullopt;
}

std::optional<frz_format> format_of(const std::string& s) {
    if (s == "json") return FRZ_FORMAT_JSON;
    if (s == "csv") return FRZ_FORMAT_CSV;
    if (s == "table") return FRZ_FORMAT_TABLE;
    return std::nullopt;
}

bool write_output(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::fputs(text, stdout);
        return true;
    }
    std::ofstream os(path, std::ios::binary);
    os << text;
    if (!os) {
        std::cerr << "frieze: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::optional<std::string> read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    buf << is.rdbuf();
    return buf.str();
}

struct Common {
    std::string kind = "y";
    int width = 0;
    std::string format;
    std::string output;
    unsigned parallelism = 1;
    std::vector<std::int64_t> bounds;
    std::string input;
    std::size_t index = 0;
    bool all = false;
    std::vector<std::string> first_row;
};

frz_options options_of(const Common& c) {
    frz_options o{};
    o.bounds = c.bounds.empty() ? nullptr : c.bounds.data();
    o.n_bounds = c.bounds.size();
    o.parallelism = c.parallelism;
    return o;
}

// Loads a catalog from --input / positional file, or generates one from
// --kind/--width (and --first-row for a single pattern).
frz_status load_catalog(const Common& c, CatalogPtr& out) {
    frz_catalog raw = nullptr;
    frz_status st;
    if (!c.input.empty()) {
        const auto text = read_input(c.input);
        if (!text) {
            std::cerr << "frieze: cannot read " << c.input << "\n";
            return FRZ_E_PARSE;
        }
        st = frz_catalog_parse(text->data(), text->size(), &raw);
    } else {
        const auto kind = kind_of(c.kind);
        if (!kind) {
            std::cerr << "frieze: --kind must be y or coxeter\n";
            return FRZ_E_INVALID_ARGUMENT;
        }
        if (!c.first_row.empty()) {
            std::vector<const char*> ptrs;
            for (const auto& s : c.first_row) ptrs.push_back(s.c_str());
            st = frz_pattern_from_first_row(*kind, c.width, ptrs.data(), ptrs.size(), &raw);
        } else {
            const frz_options o = options_of(c);
            st = frz_enumerate(*kind, c.width, &o, &raw);
        }
    }
    out.reset(raw);
    return st;
}

int run_enumerate(const Common& c) {
    const auto kind = kind_of(c.kind);
    const auto format = format_of(c.format.empty() ? "table" : c.format);
    if (!kind || !format) {
        std::cerr << "frieze: --kind must be y|coxeter and --format json|csv|table\n";
        return kExitUsage;
    }
    const frz_options o = options_of(c);
    frz_catalog raw = nullptr;
    if (auto st = frz_enumerate(*kind, c.width, &o, &raw); st != FRZ_OK) return report_failure(st);
    CatalogPtr cat(raw);
    char* text = nullptr;
    if (auto st = frz_catalog_serialize(cat.get(), *format, &text); st != FRZ_OK) return report_failure(st);
    OwnedString owned(text);
    return write_output(c.output, owned.get()) ? kExitOk : kExitLimit;
}

int run_verify(const Common& c) {
    CatalogPtr cat;
    if (auto st = load_catalog(c, cat); st != FRZ_OK) return report_failure(st);
    char* report = nullptr;
    std::size_t failed = 0;
    const frz_status st = frz_catalog_verify(cat.get(), &report, &failed);
    OwnedString owned(report);
    if (report) std::fputs(report, stdout);
    if (st != FRZ_OK && st != FRZ_E_VERIFICATION) return report_failure(st);
    return exit_code(st);
}

int run_map(const Common& c) {
    const auto format = format_of(c.format.empty() ? "table" : c.format);
    if (!format || *format == FRZ_FORMAT_CSV) {
        std::cerr << "frieze: map supports --format table|json\n";
        return kExitUsage;
    }
    const frz_options o = options_of(c);
    char* text = nullptr;
    if (auto st = frz_map_report(c.width, &o, *format, &text); st != FRZ_OK) return report_failure(st);
    OwnedString owned(text);
    return write_output(c.output, owned.get()) ? kExitOk : kExitLimit;
}

int run_render(const Common& c) {
    CatalogPtr cat;
    if (auto st = load_catalog(c, cat); st != FRZ_OK) return report_failure(st);
    const std::size_t n = frz_catalog_size(cat.get());
    std::string out;
    const std::size_t first = c.all ? 0 : c.index;
    const std::size_t last = c.all ? n : c.index + 1;
    for (std::size_t i = first; i < last; ++i) {
        char* text = nullptr;
        if (auto st = frz_catalog_render(cat.get(), i, &text); st != FRZ_OK) return report_failure(st);
        OwnedString owned(text);
        if (i != first) out += "\n";
        out += owned.get();
    }
    return write_output(c.output, out.c_str()) ? kExitOk : kExitLimit;
}

int run_orbits(const Common& c) {
    CatalogPtr cat;
    if (auto st = load_catalog(c, cat); st != FRZ_OK) return report_failure(st);
    char* text = nullptr;
    if (auto st = frz_catalog_orbits(cat.get(), &text); st != FRZ_OK) return report_failure(st);
    OwnedString owned(text);
    return write_output(c.output, owned.get()) ? kExitOk : kExitLimit;
}

void add_generation_flags(CLI::App* cmd, Common& c, bool with_kind) {
    if (with_kind) cmd->add_option("--kind", c.kind, "Pattern kind: y or coxeter")->default_val("y");
    cmd->add_option("--width", c.width, "Pattern width n");
    cmd->add_option("--parallelism", c.parallelism, "Worker threads")->default_val(1);
    cmd->add_option("--bounds", c.bounds, "First-row upper bounds, one value or width+3 values")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic Y-frieze and Coxeter frieze patterns"};
    app.require_subcommand(1);
    Common c;

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate all patterns of a width");
    add_generation_flags(enumerate, c, true);
    enumerate->get_option("--width")->required();
    enumerate->add_option("--format", c.format, "json, csv or table")->default_val("table");
    enumerate->add_option("--output,-o", c.output, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check every pattern of a catalog or pattern file");
    verify->add_option("input", c.input, "JSON or CSV file, - for stdin")->required();

    auto* map = app.add_subcommand("map", "Correspondence table and verdict for p_n");
    add_generation_flags(map, c, false);
    map->get_option("--width")->required();
    map->add_option("--format", c.format, "table or json")->default_val("table");
    map->add_option("--output,-o", c.output, "Output file (default stdout)");

    auto* render = app.add_subcommand("render", "Draw patterns in staggered layout");
    render->add_option("input", c.input, "JSON or CSV file");
    add_generation_flags(render, c, true);
    render->add_option("--first-row", c.first_row, "First interior row (Y) or quiddity (coxeter)")->delimiter(',');
    render->add_option("--index", c.index, "Pattern index within the catalog")->default_val(0);
    render->add_flag("--all", c.all, "Render every pattern");
    render->add_option("--output,-o", c.output, "Output file (default stdout)");

    auto* orbits = app.add_subcommand("orbits", "Cyclic-shift orbits of a catalog");
    orbits->add_option("input", c.input, "JSON or CSV file");
    add_generation_flags(orbits, c, true);
    orbits->add_option("--output,-o", c.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    if (*enumerate) return run_enumerate(c);
    if (*verify) return run_verify(c);
    if (*map) return run_map(c);
    if (*render) return run_render(c);
    return run_orbits(c);
}
