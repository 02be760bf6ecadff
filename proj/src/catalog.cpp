#include "frieze/catalog.hpp"

#include "frieze/coxeter.hpp"
#include "frieze/ymap.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace frieze {

using ordered_json = nlohmann::ordered_json;

std::vector<PeriodicPattern> Catalog::patterns() const {
    std::vector<PeriodicPattern> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.pattern);
    return out;
}

Catalog make_catalog(PatternKind kind, int width, std::vector<PeriodicPattern> patterns,
                     std::map<std::string, std::string> parameters) {
    Catalog c;
    c.kind = kind;
    c.width = width;
    c.parameters = std::move(parameters);
    const auto orbits = orbit_decomposition(patterns);
    std::vector<std::pair<std::size_t, std::size_t>> meta(patterns.size());
    for (std::size_t o = 0; o < orbits.size(); ++o)
        for (auto i : orbits[o]) meta[i] = {o, orbits[o].size()};
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (patterns[i].kind() != kind || patterns[i].width() != width)
            throw std::invalid_argument("catalog patterns must share kind and width");
        c.entries.push_back(CatalogEntry{i, std::move(patterns[i]), meta[i].first, meta[i].second});
    }
    return c;
}

std::optional<Format> parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "table") return Format::Table;
    return std::nullopt;
}

std::string tuple_string(std::span<const Rational> xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += xs[i].str();
    }
    return out + ")";
}

namespace {

ordered_json value_json(const Rational& x) {
    if (auto v = x.to_int64()) return *v;
    return x.str();
}

Rational value_from_json(const ordered_json& v) {
    if (v.is_number_integer()) return v.is_number_unsigned() ? Rational(BigInt(std::to_string(v.get<std::uint64_t>())))
                                                             : Rational(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad entry: ") + e.what());
        }
    }
    throw ParseError("entries must be integers or \"p/q\" strings, got " + v.dump());
}

ordered_json rows_json(const PeriodicPattern& p) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : p.rows()) {
        ordered_json row = ordered_json::array();
        for (const auto& x : r) row.push_back(value_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

PeriodicPattern pattern_from_json(PatternKind kind, int width, const ordered_json& rows) {
    if (!rows.is_array()) throw ParseError("\"rows\" must be an array");
    std::vector<Row> out;
    for (const auto& r : rows) {
        if (!r.is_array()) throw ParseError("each row must be an array");
        Row row;
        for (const auto& v : r) row.push_back(value_from_json(v));
        out.push_back(std::move(row));
    }
    try {
        return PeriodicPattern(kind, width, std::move(out));
    } catch (const ShapeError& e) {
        throw ParseError(e.what());
    }
}

std::string rational_field(const Rational& x) { return x.str(); }

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    for (auto& s : out) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t\r");
        s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    }
    return out;
}

std::vector<Rational> table_tuple(const Catalog& c, const PeriodicPattern& p) {
    if (c.kind == PatternKind::Coxeter) return p.row(p.interior_row(1));
    if (c.width == 4) return domain_of(p).column_major();
    return first_diagonal(p);
}

std::string cell_text(const Cell& cell) {
    return "row " + std::to_string(cell.row) + ", column " + std::to_string(cell.col);
}

}  // namespace

std::string to_json(const Catalog& c) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"schema\": " << ordered_json(kSchema).dump() << ",\n";
    os << "  \"kind\": " << ordered_json(kind_name(c.kind)).dump() << ",\n";
    os << "  \"width\": " << c.width << ",\n";
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : c.parameters) params[k] = v;
    os << "  \"parameters\": " << params.dump() << ",\n";
    os << "  \"patterns\": [";
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const auto& e = c.entries[i];
        ordered_json j;
        j["id"] = e.id;
        j["orbit"] = e.orbit;
        j["orbit_size"] = e.orbit_size;
        j["rows"] = rows_json(e.pattern);
        os << (i ? ",\n    " : "\n    ") << j.dump();
    }
    os << (c.entries.empty() ? "]\n" : "\n  ]\n");
    os << "}\n";
    return os.str();
}

Catalog catalog_from_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
    if (doc.value("schema", "") != kSchema) throw ParseError("missing or unknown \"schema\" (expected frieze/1)");
    if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError("missing \"kind\"");
    const auto kind = parse_kind(doc["kind"].get<std::string>());
    if (!kind) throw ParseError("unknown kind " + doc["kind"].dump());
    if (!doc.contains("width") || !doc["width"].is_number_integer() || doc["width"].get<std::int64_t>() < 1 ||
        doc["width"].get<std::int64_t>() > 1000)
        throw ParseError("\"width\" must be a positive integer");
    const int width = doc["width"].get<int>();

    std::map<std::string, std::string> params;
    if (doc.contains("parameters")) {
        if (!doc["parameters"].is_object()) throw ParseError("\"parameters\" must be an object");
        for (const auto& [k, v] : doc["parameters"].items())
            params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }

    std::vector<PeriodicPattern> patterns;
    if (doc.contains("patterns")) {
        if (!doc["patterns"].is_array()) throw ParseError("\"patterns\" must be an array");
        for (const auto& p : doc["patterns"]) {
            if (!p.is_object() || !p.contains("rows")) throw ParseError("each pattern needs \"rows\"");
            patterns.push_back(pattern_from_json(*kind, width, p["rows"]));
        }
    } else if (doc.contains("rows")) {
        patterns.push_back(pattern_from_json(*kind, width, doc["rows"]));
    } else {
        throw ParseError("expected \"patterns\" or \"rows\"");
    }
    return make_catalog(*kind, width, std::move(patterns), std::move(params));
}

std::vector<std::string> csv_header(PatternKind kind, int width) {
    const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(width + 3) / 2;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
        if (kind == PatternKind::Coxeter)
            names.push_back("c" + std::to_string(i + 1));
        else if (count <= 26)
            names.emplace_back(1, static_cast<char>('a' + i));
        else
            names.push_back("y" + std::to_string(i + 1));
    }
    return names;
}

PeriodicPattern assemble_domain(const FundamentalDomain& dom, PatternKind kind) {
    const int n = dom.width();
    const auto period = static_cast<std::size_t>(n + 3);
    std::vector<Row> rows;
    rows.emplace_back(period, Rational(0));
    if (kind == PatternKind::Coxeter) rows.emplace_back(period, Rational(1));
    for (int m = 1; m <= n; ++m) {
        Row r = dom.row(m);
        const Row& tail = dom.row(n + 1 - m);
        r.insert(r.end(), tail.begin(), tail.end());
        rows.push_back(std::move(r));
    }
    if (kind == PatternKind::Coxeter) rows.emplace_back(period, Rational(1));
    rows.emplace_back(period, Rational(0));
    return PeriodicPattern(kind, n, std::move(rows));
}

std::string to_csv(const Catalog& c) {
    std::ostringstream os;
    const auto header = csv_header(c.kind, c.width);
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& e : c.entries) {
        const FundamentalDomain dom = domain_of(e.pattern);
        if (assemble_domain(dom, c.kind) != e.pattern)
            throw std::invalid_argument("pattern " + std::to_string(e.id) +
                                        " is not determined by its glide domain; use JSON");
        const auto values = dom.column_major();
        for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << rational_field(values[i]);
        os << "\n";
    }
    return os.str();
}

Catalog catalog_from_csv(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream is{std::string(text)};
    for (std::string line; std::getline(is, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty CSV");
    const auto header = split(lines.front(), ',');
    const PatternKind kind = !header.empty() && !header.front().empty() && header.front()[0] == 'c'
                                 ? PatternKind::Coxeter
                                 : PatternKind::Y;
    int width = 0;
    for (int n = 1; n <= 1000; ++n) {
        const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 3) / 2;
        if (count == header.size()) width = n;
        if (count >= header.size()) break;
    }
    if (width == 0 || header != csv_header(kind, width))
        throw ParseError("unrecognized CSV header '" + lines.front() + "'");

    std::vector<PeriodicPattern> patterns;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto fields = split(lines[li], ',');
        if (fields.size() != header.size())
            throw ParseError("line " + std::to_string(li + 1) + ": expected " + std::to_string(header.size()) +
                             " fields");
        std::vector<Rational> values;
        for (const auto& f : fields) {
            try {
                values.push_back(Rational::parse(f));
            } catch (const std::exception& e) {
                throw ParseError("line " + std::to_string(li + 1) + ": " + e.what());
            }
        }
        patterns.push_back(assemble_domain(FundamentalDomain::from_column_major(width, values), kind));
    }
    return make_catalog(kind, width, std::move(patterns));
}

Catalog parse_catalog(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty input");
    return text[first] == '{' ? catalog_from_json(text) : catalog_from_csv(text);
}

std::string to_table(const Catalog& c) {
    std::string out;
    for (const auto& e : c.entries) out += tuple_string(table_tuple(c, e.pattern)) + "\n";
    return out;
}

std::string serialize(const Catalog& c, Format f) {
    switch (f) {
        case Format::Json: return to_json(c);
        case Format::Csv: return to_csv(c);
        case Format::Table: return to_table(c);
    }
    return {};
}

std::string render_ascii(const PeriodicPattern& p) {
    std::size_t widest = 1;
    for (const auto& r : p.rows())
        for (const auto& x : r) widest = std::max(widest, x.str().size());
    std::size_t cell = widest + 1;
    if (cell % 2) ++cell;

    std::string out;
    for (int m = 0; m < p.row_count(); ++m) {
        std::string line(static_cast<std::size_t>(m) * cell / 2, ' ');
        for (int k = 0; k < 2 * p.period(); ++k) {
            std::string s = p.at(m, k).str();
            s.resize(cell, ' ');
            line += s;
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    return out;
}

VerifyReport verify_catalog(const Catalog& c) {
    VerifyReport r;
    std::ostringstream os;
    for (const auto& e : c.entries) {
        ++r.checked;
        const PeriodicPattern& p = e.pattern;
        std::string problem;
        if (auto cell = first_boundary_violation(p))
            problem = "closure violation at " + cell_text(*cell);
        else if (auto d = first_diamond_violation(p))
            problem = "diamond violation at " + cell_text(*d);
        else if (auto a = first_non_arithmetic(p))
            problem = "non-arithmetic entry " + p.at(a->row, a->col).str() + " at " + cell_text(*a);
        auto glide = problem.empty() ? glide_shift(p) : std::nullopt;
        if (problem.empty() && !glide) problem = "no glide reflection";

        os << "pattern " << e.id << ": ";
        if (problem.empty()) {
            os << "ok (glide shift " << *glide << ")\n";
        } else {
            ++r.failed;
            os << problem << "\n";
        }
    }
    os << "checked " << r.checked << " pattern" << (r.checked == 1 ? "" : "s") << ", " << r.failed << " failed\n";
    r.text = os.str();
    return r;
}

namespace {

std::string bounds_text(const SearchBox& b) {
    std::string out;
    for (std::size_t i = 0; i < b.upper.size(); ++i) out += (i ? "," : "") + std::to_string(b.upper[i]);
    return out;
}

std::vector<PeriodicPattern> y_patterns(const GenerationRequest& req, std::map<std::string, std::string>& params) {
    if (req.bounds) {
        params["method"] = "first-row-search";
        params["bounds"] = bounds_text(*req.bounds);
        return enumerate_generic(req.width, *req.bounds, req.options).patterns();
    }
    switch (req.width) {
        case 1:
        case 2:
            params["method"] = "first-row-search";
            params["bounds"] = req.width == 1 ? "10" : "30";
            return yfrieze_catalog(req.width, req.options.parallelism);
        case 3:
        case 4:
            params["method"] = "closed-form";
            return yfrieze_catalog(req.width, req.options.parallelism);
        default:
            throw Unsupported("no search bounds known for Y-friezes of width " + std::to_string(req.width) +
                              "; pass --bounds");
    }
}

}  // namespace

Catalog enumerate_catalog(const GenerationRequest& req) {
    if (req.width < 1) throw std::invalid_argument("width must be at least 1");
    std::map<std::string, std::string> params;
    std::vector<PeriodicPattern> patterns;
    if (req.kind == PatternKind::Coxeter) {
        if (req.bounds) throw std::invalid_argument("bounds only apply to Y-frieze enumeration");
        if (req.width > kMaxCoxeterWidth)
            throw Unsupported("Coxeter enumeration is limited to width " + std::to_string(kMaxCoxeterWidth));
        params["method"] = "triangulations";
        patterns = enumerate_frieze(req.width);
    } else {
        patterns = y_patterns(req, params);
    }
    return make_catalog(req.kind, req.width, std::move(patterns), std::move(params));
}

std::string map_report(const GenerationRequest& req, Format f) {
    if (req.width < 1) throw std::invalid_argument("width must be at least 1");
    if (req.width < 2) throw Unsupported("p_1 is undefined: width 1 has no second interior row");
    if (req.width > kMaxCoxeterWidth)
        throw Unsupported("Coxeter enumeration is limited to width " + std::to_string(kMaxCoxeterWidth));
    if (f == Format::Csv) throw std::invalid_argument("map supports json and table formats");

    GenerationRequest yreq = req;
    yreq.kind = PatternKind::Y;
    const Catalog ycat = enumerate_catalog(yreq);
    const auto friezes = enumerate_frieze(req.width);
    const auto ys = ycat.patterns();
    const FiberReport fibers = fiber_analysis(friezes, ys);
    const auto records = correspondence_table(friezes, ys);
    const bool complete = !req.bounds && has_complete_enumeration(req.width);

    if (f == Format::Json) {
        ordered_json j;
        j["width"] = req.width;
        j["friezes"] = fibers.frieze_count;
        j["yfriezes"] = fibers.yfrieze_count;
        j["y_enumeration_complete"] = complete;
        ordered_json recs = ordered_json::array();
        for (const auto& r : records) {
            ordered_json rec;
            rec["frieze_id"] = r.frieze_id;
            rec["yfrieze_id"] = r.yfrieze_id;
            rec["s"] = r.frieze_orbit_size;
            rec["t"] = r.y_orbit_size;
            const auto& fp = friezes[r.frieze_id];
            ordered_json q = ordered_json::array(), y = ordered_json::array();
            for (const auto& x : fp.row(fp.interior_row(1))) q.push_back(value_json(x));
            for (const auto& x : ys[r.yfrieze_id].row(1)) y.push_back(value_json(x));
            rec["quiddity"] = q;
            rec["y_first_row"] = y;
            recs.push_back(std::move(rec));
        }
        j["records"] = recs;
        j["fiber_sizes"] = fibers.fiber_sizes;
        j["image_size"] = fibers.image_size;
        j["mismatches"] = fibers.mismatches;
        j["surjective"] = fibers.surjective;
        j["injective"] = fibers.injective;
        j["verdict"] = fibers.verdict();
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "width " << req.width << ": " << fibers.frieze_count << " friezes, " << fibers.yfrieze_count
       << " Y-friezes" << (complete ? "" : " (bounded search, completeness not claimed)") << "\n";
    for (const auto& r : records) {
        const auto& fp = friezes[r.frieze_id];
        os << tuple_string(fp.row(fp.interior_row(1))) << " -> " << tuple_string(ys[r.yfrieze_id].row(1)) << "  "
           << r.frieze_orbit_size << ":" << r.y_orbit_size << "\n";
    }
    os << "fiber sizes:";
    for (auto s : fibers.fiber_sizes) os << " " << s;
    os << "\nimage size: " << fibers.image_size << "\n";
    os << "mismatches: " << fibers.mismatches << "\n";
    os << "verdict: " << fibers.verdict() << "\n";
    return os.str();
}

std::string orbits_report(const Catalog& c) {
    const auto orbits = orbit_decomposition(c.patterns());
    std::ostringstream os;
    os << orbits.size() << " orbit" << (orbits.size() == 1 ? "" : "s") << " of " << c.entries.size() << " "
       << kind_name(c.kind) << " pattern" << (c.entries.size() == 1 ? "" : "s") << " (width " << c.width << ")\n";
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        const auto& rep = c.entries[orbits[o].front()].pattern;
        os << "orbit " << o << ": size " << orbits[o].size() << ", ids";
        for (auto i : orbits[o]) os << " " << i;
        os << ", representative " << tuple_string(table_tuple(c, rep)) << "\n";
    }
    return os.str();
}

}  // namespace frieze
