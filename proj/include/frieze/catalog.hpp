#pragma once

// Catalog model, serialization (JSON / CSV / table), ASCII rendering, and the
// report builders behind the CLI subcommands.

#include "frieze/closed_form.hpp"
#include "frieze/enumerator.hpp"
#include "frieze/pattern.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frieze {

inline constexpr std::string_view kSchema = "frieze/1";

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested width has no enumeration (or no bounds were supplied for it).
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::size_t id = 0;
    PeriodicPattern pattern;
    std::size_t orbit = 0;
    std::size_t orbit_size = 1;
};

struct Catalog {
    PatternKind kind = PatternKind::Y;
    int width = 0;
    std::map<std::string, std::string> parameters;
    std::vector<CatalogEntry> entries;

    std::vector<PeriodicPattern> patterns() const;
};

/// Assigns ids in list order and orbit metadata from orbit_decomposition.
Catalog make_catalog(PatternKind kind, int width, std::vector<PeriodicPattern> patterns,
                     std::map<std::string, std::string> parameters = {});

enum class Format { Json, Csv, Table };
std::optional<Format> parse_format(std::string_view text);

std::string to_json(const Catalog& c);
std::string to_csv(const Catalog& c);
std::string to_table(const Catalog& c);
std::string serialize(const Catalog& c, Format f);

/// Accepts a catalog or a single {"schema","kind","width","rows"} pattern.
Catalog catalog_from_json(std::string_view text);
Catalog catalog_from_csv(std::string_view text);
/// JSON when the first non-blank character is '{', CSV otherwise.
Catalog parse_catalog(std::string_view text);

/// Column names for the CSV domain encoding of a width.
std::vector<std::string> csv_header(PatternKind kind, int width);

/// Interior rows assembled from a glide domain, no diamond validation.
PeriodicPattern assemble_domain(const FundamentalDomain& dom, PatternKind kind);

/// Staggered layout: row m is indented m half-cells, two periods per row.
std::string render_ascii(const PeriodicPattern& p);

struct VerifyReport {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string text;
};

/// Checks boundary rows, diamonds, arithmeticity and the glide reflection of
/// every entry, reporting the first violation of each.
VerifyReport verify_catalog(const Catalog& c);

struct GenerationRequest {
    PatternKind kind = PatternKind::Y;
    int width = 0;
    std::optional<SearchBox> bounds;
    EnumerateOptions options;
};

/// Drives the enumerators. Throws std::invalid_argument, Unsupported or BoxTooLarge.
Catalog enumerate_catalog(const GenerationRequest& req);

/// Correspondence table, fibers and verdict for p_n. Json or Table only.
std::string map_report(const GenerationRequest& req, Format f);

std::string orbits_report(const Catalog& c);

std::string tuple_string(std::span<const Rational> xs);

}  // namespace frieze
