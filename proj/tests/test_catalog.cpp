#include <doctest.h>

#include "frieze/catalog.hpp"
#include "frieze/coxeter.hpp"
#include "frieze/ymap.hpp"

#include <fstream>
#include <sstream>

using namespace frieze;

namespace {

Row ints(std::initializer_list<long> xs) {
    Row r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

// Width 1 closes whenever consecutive entries multiply to 1.
PeriodicPattern half_pattern() {
    const auto half = Rational::parse("1/2");
    return propagate_y(Row{Rational(2), half, Rational(2), half}, 1);
}

std::vector<Catalog> sample_catalogs() {
    std::vector<Catalog> out;
    for (int n = 1; n <= 4; ++n) out.push_back(enumerate_catalog({PatternKind::Coxeter, n, {}, {}}));
    for (int n = 1; n <= 4; ++n) out.push_back(enumerate_catalog({PatternKind::Y, n, {}, {}}));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("JSON and CSV round-trips") {
    for (const auto& c : sample_catalogs()) {
        CAPTURE(c.width);
        const auto from_json = catalog_from_json(to_json(c));
        CHECK(from_json.kind == c.kind);
        CHECK(from_json.width == c.width);
        CHECK(from_json.patterns() == c.patterns());
        CHECK(to_json(from_json) == to_json(c));

        const auto from_csv = catalog_from_csv(to_csv(c));
        CHECK(from_csv.kind == c.kind);
        CHECK(from_csv.width == c.width);
        CHECK(from_csv.patterns() == c.patterns());
        CHECK(to_csv(from_csv) == to_csv(c));

        CHECK(parse_catalog(to_json(c)).patterns() == c.patterns());
        CHECK(parse_catalog(to_csv(c)).patterns() == c.patterns());
    }
}

TEST_CASE("rational entries survive serialization") {
    const auto p = half_pattern();
    REQUIRE_FALSE(is_arithmetic(p));
    const auto c = make_catalog(PatternKind::Y, 1, {p});
    CHECK(to_json(c).find('"') != std::string::npos);
    CHECK(catalog_from_json(to_json(c)).patterns() == c.patterns());
    CHECK(catalog_from_csv(to_csv(c)).patterns() == c.patterns());
}

TEST_CASE("CSV headers") {
    CHECK(csv_header(PatternKind::Y, 3) == std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g", "h", "i"});
    const auto h4 = csv_header(PatternKind::Y, 4);
    CHECK(h4.size() == 14);
    CHECK(h4.front() == "a");
    CHECK(h4.back() == "n");
    CHECK(csv_header(PatternKind::Coxeter, 1) == std::vector<std::string>{"c1", "c2"});
    CHECK(csv_header(PatternKind::Y, 6).front() == "y1");
}

TEST_CASE("CSV data rows are the column-major domain") {
    const auto c = enumerate_catalog({PatternKind::Y, 3, {}, {}});
    std::istringstream in(to_csv(c));
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "a,b,c,d,e,f,g,h,i");
    CHECK(first == "1,1,2,2,9,5,5,4,1");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(catalog_from_json("{"), ParseError);
    CHECK_THROWS_AS(catalog_from_json(R"({"schema":"other/1","kind":"y","width":1,"patterns":[]})"), ParseError);
    CHECK_THROWS_AS(catalog_from_json(R"({"schema":"frieze/1","kind":"z","width":1,"patterns":[]})"), ParseError);
    CHECK_THROWS_AS(catalog_from_json(R"({"schema":"frieze/1","kind":"y","width":1,"rows":[[0,0,0,0],[1,1]]})"),
                    ParseError);
    CHECK_THROWS_AS(catalog_from_json(R"({"schema":"frieze/1","kind":"y","width":1,"rows":[[0,0,0,0],[1,1,1,true],[0,0,0,0]]})"),
                    ParseError);
    CHECK_THROWS_AS(catalog_from_csv("a,b,c\n1,2,3\n"), ParseError);
    CHECK_THROWS_AS(catalog_from_csv("a,b,c,d,e,f,g,h,i\n1,1,2\n"), ParseError);
    CHECK_THROWS_AS(catalog_from_csv("a,b,c,d,e,f,g,h,i\n1,1,2,2,x,5,5,4,1\n"), ParseError);
    CHECK_THROWS_AS(catalog_from_csv("a,b,c,d,e,f,g,h,i\n1,1,2,2,9,5,5,4,1/0\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog(""), ParseError);
}

TEST_CASE("single-pattern JSON form") {
    const auto c = catalog_from_json(
        R"({"schema":"frieze/1","kind":"y","width":1,"rows":[[0,0,0,0],[1,1,1,1],[0,0,0,0]]})");
    REQUIRE(c.entries.size() == 1);
    CHECK(c.entries.front().pattern.row(1) == ints({1, 1, 1, 1}));
    CHECK(verify_catalog(c).failed == 0);
}

TEST_CASE("verify passes on generated catalogs") {
    for (const auto& c : sample_catalogs()) {
        const auto r = verify_catalog(c);
        CHECK(r.checked == c.entries.size());
        CHECK(r.failed == 0);
        CHECK(r.text.find("ok (glide shift") != std::string::npos);
    }
}

TEST_CASE("verify reports the first diamond violation") {
    std::string csv = to_csv(enumerate_catalog({PatternKind::Y, 3, {}, {}}));
    // Fourth data row is (2,1,1,...) with e = 1; bump the first domain entry 2 -> 3.
    const auto pos = csv.find("\n2,1,1,");
    REQUIRE(pos != std::string::npos);
    csv[pos + 1] = '3';
    const auto r = verify_catalog(catalog_from_csv(csv));
    CHECK(r.checked == 10);
    CHECK(r.failed == 1);
    CHECK(r.text.find("pattern 3: diamond violation at row") != std::string::npos);
    CHECK(r.text.find("checked 10 patterns, 1 failed") != std::string::npos);
}

TEST_CASE("verify reports non-arithmetic and boundary failures") {
    const auto rational = make_catalog(PatternKind::Y, 1, {half_pattern()});
    const auto r = verify_catalog(rational);
    CHECK(r.failed == 1);
    CHECK(r.text.find("pattern 0: non-arithmetic entry 1/2 at row 1, column 1") != std::string::npos);

    const PeriodicPattern bad(PatternKind::Y, 1, {ints({0, 0, 0, 0}), ints({1, 1, 1, 1}), ints({0, 0, 1, 0})});
    const auto b = verify_catalog(make_catalog(PatternKind::Y, 1, {bad}));
    CHECK(b.failed == 1);
    CHECK(b.text.find("pattern 0: closure violation at row 2, column 2") != std::string::npos);
}

TEST_CASE("render_ascii") {
    CHECK(render_ascii(propagate_y(ints({1, 1, 1, 1}), 1)) ==
          "0 0 0 0 0 0 0 0\n"
          " 1 1 1 1 1 1 1 1\n"
          "  0 0 0 0 0 0 0 0\n");
    CHECK(render_ascii(propagate_y(ints({2, 2, 2, 2, 2, 2}), 3)) ==
          "0 0 0 0 0 0 0 0 0 0 0 0\n"
          " 2 2 2 2 2 2 2 2 2 2 2 2\n"
          "  3 3 3 3 3 3 3 3 3 3 3 3\n"
          "   2 2 2 2 2 2 2 2 2 2 2 2\n"
          "    0 0 0 0 0 0 0 0 0 0 0 0\n");
    // Three-digit entries widen the cell to four characters.
    const auto w4 = enumerate_catalog({PatternKind::Y, 4, {}, {}});
    const auto wide = render_ascii(w4.entries.back().pattern);
    std::istringstream lines(wide);
    std::string line;
    int m = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find_first_not_of(' ') == static_cast<std::size_t>(2 * m));
        ++m;
    }
    CHECK(m == 6);
    CHECK(wide.rfind("0   0   ", 0) == 0);
}

TEST_CASE("table output") {
    const auto w3 = to_table(enumerate_catalog({PatternKind::Y, 3, {}, {}}));
    CHECK(w3.rfind("(1, 1, 2)\n", 0) == 0);
    CHECK(w3.size() >= 10);
    CHECK(w3.substr(w3.size() - 10) == "(5, 9, 2)\n");
    const auto w4 = to_table(enumerate_catalog({PatternKind::Y, 4, {}, {}}));
    CHECK(w4 == slurp(std::string(FRIEZE_GOLDEN_DIR) + "/yfrieze_w4.txt"));
    const auto cox = to_table(enumerate_catalog({PatternKind::Coxeter, 1, {}, {}}));
    CHECK(cox == "(1, 2, 1, 2)\n(2, 1, 2, 1)\n");
}

TEST_CASE("enumerate_catalog request validation") {
    CHECK_THROWS_AS(enumerate_catalog({PatternKind::Y, 0, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_catalog({PatternKind::Y, 5, {}, {}}), Unsupported);
    CHECK_THROWS_AS(enumerate_catalog({PatternKind::Coxeter, 3, SearchBox{{5}}, {}}), std::invalid_argument);
    const auto bounded = enumerate_catalog({PatternKind::Y, 3, SearchBox{{11}}, {}});
    CHECK(bounded.parameters.at("method") == "first-row-search");
    CHECK(bounded.patterns() == enumerate_catalog({PatternKind::Y, 3, {}, {}}).patterns());
}

TEST_CASE("map_report") {
    const auto table = map_report({PatternKind::Coxeter, 3, {}, {}}, Format::Table);
    CHECK(table.find("surjective, not injective") != std::string::npos);
    const auto json = map_report({PatternKind::Coxeter, 4, {}, {}}, Format::Json);
    CHECK(json.find("\"verdict\": \"bijective\"") != std::string::npos);
    CHECK_THROWS_AS(map_report({PatternKind::Coxeter, 1, {}, {}}, Format::Table), Unsupported);
    CHECK_THROWS_AS(map_report({PatternKind::Coxeter, 3, {}, {}}, Format::Csv), std::invalid_argument);
}

TEST_CASE("orbits_report") {
    const auto r = orbits_report(enumerate_catalog({PatternKind::Coxeter, 3, {}, {}}));
    CHECK(r.rfind("4 orbits of 14 coxeter patterns (width 3)\n", 0) == 0);
    CHECK(r.find("orbit 3: size 2, ids 2 11, representative (1, 3, 1, 3, 1, 3)") != std::string::npos);
}
