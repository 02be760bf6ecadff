// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Every bound is exact except the wall-clock limits, which are pinned below.

#include "frieze/catalog.hpp"
#include "frieze/closed_form.hpp"
#include "frieze/coxeter.hpp"
#include "frieze/enumerator.hpp"
#include "frieze/ymap.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace frieze;

namespace {

constexpr double kAc1Seconds = 1.0;
constexpr double kAc2Seconds = 60.0;
constexpr double kAc7Seconds = 5.0;
constexpr int kRandomCases = 1000;
constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << " s";
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<FirstDiagonal> golden_diagonals(const std::string& file, int width) {
    std::vector<FirstDiagonal> out;
    std::istringstream in(slurp(std::string(FRIEZE_GOLDEN_DIR) + "/" + file));
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::int64_t> v;
        std::string digits;
        for (char ch : line) {
            if (ch >= '0' && ch <= '9') {
                digits += ch;
            } else if (!digits.empty()) {
                v.push_back(std::stoll(digits));
                digits.clear();
            }
        }
        v.resize(static_cast<std::size_t>(width));
        out.emplace_back(v);
    }
    return out;
}

std::multiset<std::size_t> orbit_sizes(const std::vector<PeriodicPattern>& ps) {
    std::multiset<std::size_t> out;
    for (const auto& o : orbit_decomposition(ps)) out.insert(o.size());
    return out;
}

bool pattern_ok(const PeriodicPattern& p) {
    return !first_diamond_violation(p) && !first_boundary_violation(p) && glide_shift(p).has_value();
}

FirstDiagonal random_diagonal(std::mt19937_64& rng, int width, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(1, hi);
    std::vector<std::int64_t> v(static_cast<std::size_t>(width));
    for (auto& x : v) x = dist(rng);
    return FirstDiagonal(v);
}

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = "\"" FRIEZE_CLI "\" " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Verdict ac1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto set = enumerate_w3();
    const double dt = seconds_since(t0);
    const auto expected = golden_diagonals("yfrieze_w3.txt", 3);
    const auto got = set.diagonals();
    const bool sorted = std::is_sorted(got.begin(), got.end());
    const bool exact = got == expected && expected.size() == 10;
    return {exact && sorted && dt < kAc1Seconds,
            std::to_string(got.size()) + " triples, exact " + (exact ? "yes" : "no") + ", sorted " +
                (sorted ? "yes" : "no") + ", " + fmt_seconds(dt) + " (limit " + fmt_seconds(kAc1Seconds) + ")"};
}

Verdict ac2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto set = enumerate_w4(EnumerateOptions{1, kDefaultMaxCandidates});
    const double dt = seconds_since(t0);
    std::string table;
    for (const auto& s : set.solutions) table += tuple_string(s.tuple) + "\n";
    const bool exact = table == slurp(std::string(FRIEZE_GOLDEN_DIR) + "/yfrieze_w4.txt");
    return {exact && set.size() == 42 && dt < kAc2Seconds,
            std::to_string(set.size()) + " tuples, byte-exact " + (exact ? "yes" : "no") + ", single-threaded " +
                fmt_seconds(dt) + " (limit " + fmt_seconds(kAc2Seconds) + ")"};
}

Verdict ac3() {
    const std::array<std::pair<int, std::size_t>, 4> want{{{3, 14}, {4, 42}, {1, 2}, {2, 5}}};
    bool ok = true;
    std::string detail;
    for (auto [n, count] : want) {
        const auto got = enumerate_frieze(n).size();
        ok = ok && got == count;
        detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " -> " + std::to_string(got);
    }
    return {ok, detail};
}

Verdict ac4() {
    const auto r = fiber_analysis(3);
    std::multiset<std::size_t> fibers(r.fiber_sizes.begin(), r.fiber_sizes.end());
    const std::multiset<std::size_t> want{2, 2, 2, 2, 1, 1, 1, 1, 1, 1};
    const bool ok = r.image_size == 10 && r.surjective && fibers == want && r.max_fiber() == 2 && r.mismatches == 0;
    return {ok, "image " + std::to_string(r.image_size) + ", " + r.verdict() + ", max fiber " +
                    std::to_string(r.max_fiber())};
}

Verdict ac5() {
    const auto r = fiber_analysis(4);
    const bool ok = r.surjective && r.injective && r.frieze_count == 42 && r.yfrieze_count == 42 && r.mismatches == 0;
    return {ok, std::to_string(r.frieze_count) + " friezes, " + std::to_string(r.yfrieze_count) + " Y-friezes, " +
                    std::to_string(r.mismatches) + " mismatches, " + r.verdict()};
}

Verdict ac6() {
    const auto f3 = orbit_sizes(enumerate_frieze(3));
    const auto y3 = orbit_sizes(yfrieze_catalog(3));
    std::multiset<std::pair<std::size_t, std::size_t>> st;
    for (const auto& rec : correspondence_table(3)) st.emplace(rec.frieze_orbit_size, rec.y_orbit_size);
    const bool ok = f3 == std::multiset<std::size_t>{6, 3, 3, 2} && y3 == std::multiset<std::size_t>{3, 3, 3, 1} &&
                    st == std::multiset<std::pair<std::size_t, std::size_t>>{{3, 3}, {3, 3}, {6, 3}, {2, 1}};
    std::string detail = "s:t";
    for (auto [s, t] : st) detail += " " + std::to_string(s) + ":" + std::to_string(t);
    return {ok, detail};
}

Verdict ac7() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto oracle = oracle_box_check(3, 60);
    const double dt = seconds_since(t0);
    const bool same = oracle.diagonals() == enumerate_w3().diagonals();
    return {same && dt < kAc7Seconds, "216000 candidates, " + std::to_string(oracle.size()) + " solutions, equal " +
                                          (same ? "yes" : "no") + ", " + fmt_seconds(dt) + " (limit " +
                                          fmt_seconds(kAc7Seconds) + ")"};
}

Verdict ac8() {
    std::mt19937_64 rng(kSeed);
    std::size_t a = 0, b = 0, c = 0, d = 0;
    std::size_t fa = 0, fb = 0, fc = 0, fd = 0;

    // (a) closed-form entries satisfy the equation systems, large random inputs.
    for (int i = 0; i < kRandomCases; ++i) {
        const auto d3 = random_diagonal(rng, 3, 1'000'000'000);
        const auto e3 = w3_equations_hold(d3, w3_entries(d3));
        fa += !std::all_of(e3.begin(), e3.end(), [](bool x) { return x; });
        const auto d4 = random_diagonal(rng, 4, 1'000'000'000);
        const auto e4 = w4_equations_hold(d4, w4_entries(d4));
        fa += !std::all_of(e4.begin(), e4.end(), [](bool x) { return x; });
        a += 2;
    }

    // (b) propagation from the first row agrees with domain expansion: every
    // enumerated solution, then random (rational) diagonals.
    auto agree = [&](const FundamentalDomain& dom) {
        const auto expanded = expand_domain(dom, PatternKind::Y);
        const auto& first = expanded.row(1);
        ++b;
        if (!(propagate_y(first, dom.width()) == expanded)) ++fb;
        return expanded;
    };
    std::vector<PeriodicPattern> checked;
    for (const auto& s : enumerate_w3().solutions) checked.push_back(agree(w3_domain(s.diagonal)));
    for (const auto& s : enumerate_w4().solutions) checked.push_back(agree(w4_domain(s.diagonal)));
    for (int i = 0; i < kRandomCases; ++i) {
        checked.push_back(agree(w3_domain(random_diagonal(rng, 3, 50))));
        checked.push_back(agree(w4_domain(random_diagonal(rng, 4, 50))));
    }

    // (c) diamonds, boundary rows and glide on everything enumerated or built.
    for (int n = 1; n <= 7; ++n)
        for (auto& f : enumerate_frieze(n)) checked.push_back(std::move(f));
    for (int n = 1; n <= 2; ++n)
        for (auto& y : yfrieze_catalog(n)) checked.push_back(std::move(y));
    for (const auto& p : checked) {
        ++c;
        fc += !pattern_ok(p);
    }

    // (d) p_n commutes with every cyclic shift.
    for (int n = 3; n <= 5; ++n)
        for (const auto& f : enumerate_frieze(n))
            for (int s = 0; s < f.period(); ++s) {
                ++d;
                fd += !(apply_p(cyclic_shift(f, s)) == cyclic_shift(apply_p(f), s));
            }

    const bool ok = fa + fb + fc + fd == 0 && std::min({a, b, c, d}) >= static_cast<std::size_t>(kRandomCases);
    return {ok, "(a) " + std::to_string(fa) + "/" + std::to_string(a) + " (b) " + std::to_string(fb) + "/" +
                    std::to_string(b) + " (c) " + std::to_string(fc) + "/" + std::to_string(c) + " (d) " +
                    std::to_string(fd) + "/" + std::to_string(d) + " failures"};
}

Verdict ac9() {
    constexpr std::int64_t kW3MaxB = 500;
    constexpr std::int64_t kW4MaxBC = 80;
    std::size_t n3 = 0, n4 = 0, held = 0;
    // Width 3: b >= max(a,c) - 1 from (i) and (vi).
    for (std::int64_t a = 5; a <= 20; ++a)
        for (std::int64_t c = 5; c <= 20; ++c)
            for (std::int64_t b = std::max(a, c) - 1; b <= kW3MaxB; ++b) {
                ++n3;
                held += w3_inequalities(FirstDiagonal({a, b, c}))[2];
            }
    // Width 4: b >= a - 1 and c >= d - 1 from (i) and (x).
    for (std::int64_t a = 6; a <= 20; ++a)
        for (std::int64_t dd = 6; dd <= 20; ++dd)
            for (std::int64_t b = a - 1; b <= kW4MaxBC; ++b)
                for (std::int64_t c = dd - 1; c <= kW4MaxBC; ++c) {
                    ++n4;
                    held += w4_inequalities(FirstDiagonal({a, b, c, dd}))[3];
                }
    return {held == 0, "width 3: " + std::to_string(n3) + " points (b <= " + std::to_string(kW3MaxB) +
                           "), width 4: " + std::to_string(n4) + " points (b, c <= " + std::to_string(kW4MaxBC) +
                           "), " + std::to_string(held) + " exceptions"};
}

Verdict ac10() {
    std::size_t entries = 0, lost = 0;
    std::vector<Catalog> catalogs;
    for (int n = 1; n <= 6; ++n) catalogs.push_back(enumerate_catalog({PatternKind::Coxeter, n, {}, {}}));
    for (int n = 1; n <= 4; ++n) catalogs.push_back(enumerate_catalog({PatternKind::Y, n, {}, {}}));
    for (const auto& c : catalogs) {
        const auto from_json = catalog_from_json(to_json(c)).patterns();
        const auto from_csv = catalog_from_csv(to_csv(c)).patterns();
        const auto orig = c.patterns();
        for (std::size_t i = 0; i < orig.size(); ++i) {
            ++entries;
            lost += !(i < from_json.size() && from_json[i] == orig[i] && i < from_csv.size() && from_csv[i] == orig[i]);
        }
        lost += (from_json.size() != orig.size()) + (from_csv.size() != orig.size());
    }

    std::size_t cli_diff = 0;
    const std::array<std::string, 4> commands{"enumerate --kind y --width 4 --format json",
                                              "enumerate --kind y --width 3 --bounds 11 --format csv",
                                              "enumerate --kind y --width 2 --format table",
                                              "map --width 4 --format json"};
    for (const auto& cmd : commands) {
        const auto one = run_cli(cmd + " --parallelism 1");
        const auto eight = run_cli(cmd + " --parallelism 8");
        cli_diff += one.first != 0 || eight.first != 0 || one.second != eight.second || one.second.empty();
    }
    return {lost == 0 && cli_diff == 0, std::to_string(entries) + " entries, " + std::to_string(lost) +
                                            " lost in JSON/CSV; CLI parallelism 1 vs 8: " +
                                            std::to_string(commands.size() - cli_diff) + "/" +
                                            std::to_string(commands.size()) + " identical"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"AC1 enumerate_w3", ac1},           {"AC2 enumerate_w4", ac2},
        {"AC3 Coxeter counts", ac3},         {"AC4 fibers of p_3", ac4},
        {"AC5 fibers of p_4", ac5},          {"AC6 orbits and s:t", ac6},
        {"AC7 oracle box 60", ac7},          {"AC8 property suite", ac8},
        {"AC9 falsification grids", ac9},    {"AC10 round-trips and parallelism", ac10},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
