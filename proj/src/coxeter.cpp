#include "frieze/coxeter.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace frieze {

bool diagonals_cross(Diagonal a, Diagonal b) {
    auto strictly_inside = [](int x, Diagonal d) { return d.first < x && x < d.second; };
    if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) return false;
    return strictly_inside(b.first, a) != strictly_inside(b.second, a);
}

Triangulation::Triangulation(int vertices, std::vector<Diagonal> diagonals)
    : vertices_(vertices), diagonals_(std::move(diagonals)) {
    if (vertices_ < 3) throw std::invalid_argument("a polygon needs at least 3 vertices");
    for (auto& d : diagonals_) {
        if (d.first > d.second) std::swap(d.first, d.second);
        if (d.first < 0 || d.second >= vertices_) throw std::invalid_argument("diagonal vertex out of range");
        if (d.second - d.first < 2 || (d.first == 0 && d.second == vertices_ - 1))
            throw std::invalid_argument("polygon edge is not a diagonal");
    }
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
        throw std::invalid_argument("duplicate diagonal");
    if (static_cast<int>(diagonals_.size()) != vertices_ - 3)
        throw std::invalid_argument("a triangulation of a " + std::to_string(vertices_) + "-gon has " +
                                    std::to_string(vertices_ - 3) + " diagonals");
    for (std::size_t i = 0; i < diagonals_.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
            if (diagonals_cross(diagonals_[i], diagonals_[j])) throw std::invalid_argument("diagonals cross");
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
    std::set<Diagonal> edges(diagonals_.begin(), diagonals_.end());
    for (int i = 0; i < vertices_; ++i) edges.insert(std::minmax(i, (i + 1) % vertices_));
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < vertices_; ++i)
        for (int j = i + 1; j < vertices_; ++j)
            for (int k = j + 1; k < vertices_; ++k)
                if (edges.count({i, j}) && edges.count({j, k}) && edges.count({i, k})) out.push_back({i, j, k});
    return out;
}

namespace {

// Triangulations of the sub-polygon lo, lo+1, ..., hi. The edge (lo, hi) lies
// in exactly one triangle (lo, apex, hi); recurse on both sides of it.
std::vector<std::vector<Diagonal>> triangulate_range(int lo, int hi, int vertices) {
    if (hi - lo < 2) return {{}};
    std::vector<std::vector<Diagonal>> out;
    for (int apex = lo + 1; apex < hi; ++apex) {
        const auto left = triangulate_range(lo, apex, vertices);
        const auto right = triangulate_range(apex, hi, vertices);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Diagonal> ds = l;
                ds.insert(ds.end(), r.begin(), r.end());
                if (apex - lo >= 2) ds.emplace_back(lo, apex);
                if (hi - apex >= 2) ds.emplace_back(apex, hi);
                out.push_back(std::move(ds));
            }
    }
    return out;
}

}  // namespace

std::vector<Triangulation> all_triangulations(int vertices) {
    if (vertices < 3) throw std::invalid_argument("a polygon needs at least 3 vertices");
    std::vector<Triangulation> out;
    for (auto& ds : triangulate_range(0, vertices - 1, vertices)) out.emplace_back(vertices, std::move(ds));
    std::sort(out.begin(), out.end());
    return out;
}

Quiddity quiddity_of(const Triangulation& t) {
    // A vertex with k incident diagonals touches k + 1 triangles.
    Quiddity q(static_cast<std::size_t>(t.vertices()), 1);
    for (const auto& [i, j] : t.diagonals()) {
        ++q[static_cast<std::size_t>(i)];
        ++q[static_cast<std::size_t>(j)];
    }
    return q;
}

PeriodicPattern frieze_from_quiddity(const Quiddity& q) {
    const int period = static_cast<int>(q.size());
    if (period < 4) throw std::invalid_argument("quiddity of a frieze needs at least 4 entries");
    const int n = period - 3;
    auto at = [period](const Row& r, int k) -> const Rational& { return r[static_cast<std::size_t>(k % period)]; };

    std::vector<Row> rows;
    rows.emplace_back(static_cast<std::size_t>(period), Rational(0));
    rows.emplace_back(static_cast<std::size_t>(period), Rational(1));
    rows.emplace_back();
    for (auto v : q) rows.back().emplace_back(v);
    for (int m = 2; m <= n + 2; ++m) {
        const Row& cur = rows[static_cast<std::size_t>(m)];
        const Row& up = rows[static_cast<std::size_t>(m - 1)];
        Row next;
        next.reserve(static_cast<std::size_t>(period));
        for (int k = 0; k < period; ++k) {
            const Rational& north = at(up, k + 1);
            if (north.is_zero())
                throw NotClosed("zero entry at row " + std::to_string(m - 1) + ", column " +
                                std::to_string((k + 1) % period) + " before the closing rows");
            next.push_back(coxeter_south(at(cur, k), at(cur, k + 1), north));
        }
        rows.push_back(std::move(next));
    }

    PeriodicPattern p(PatternKind::Coxeter, n, std::move(rows));
    if (auto bad = first_boundary_violation(p))
        throw NotClosed("quiddity does not close: row " + std::to_string(bad->row) + ", column " +
                        std::to_string(bad->col));
    if (auto bad = first_non_arithmetic(p))
        throw NonPositive("entry " + p.at(bad->row, bad->col).str() + " at row " + std::to_string(bad->row) +
                          ", column " + std::to_string(bad->col) + " is not a positive integer");
    return p;
}

std::vector<PeriodicPattern> enumerate_frieze(int width) {
    if (width < 1 || width > kMaxCoxeterWidth)
        throw std::invalid_argument("Coxeter enumeration supports widths 1.." + std::to_string(kMaxCoxeterWidth));
    std::vector<PeriodicPattern> out;
    for (const auto& t : all_triangulations(width + 3)) out.push_back(frieze_from_quiddity(quiddity_of(t)));
    std::sort(out.begin(), out.end(), pattern_less);
    return out;
}

}  // namespace frieze
