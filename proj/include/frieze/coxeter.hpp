#pragma once

// Coxeter friezes of width n from triangulations of a convex (n+3)-gon.

#include "frieze/pattern.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace frieze {

using Diagonal = std::pair<int, int>;

class Triangulation {
public:
    /// Diagonals are normalized to i < j and sorted. Throws std::invalid_argument
    /// unless they form a maximal non-crossing set of the v-gon.
    Triangulation(int vertices, std::vector<Diagonal> diagonals);

    int vertices() const { return vertices_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    /// Triangles as sorted vertex triples.
    std::vector<std::array<int, 3>> triangles() const;

    friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

private:
    int vertices_;
    std::vector<Diagonal> diagonals_;
};

bool diagonals_cross(Diagonal a, Diagonal b);

/// All C_{v-2} triangulations, ordered by their sorted diagonal lists.
std::vector<Triangulation> all_triangulations(int vertices);

using Quiddity = std::vector<std::int64_t>;

/// Number of triangles incident to each vertex.
Quiddity quiddity_of(const Triangulation& t);

class NotClosed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPositive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coxeter pattern with row 2 = q, built downward with the unimodular rule.
PeriodicPattern frieze_from_quiddity(const Quiddity& q);

/// Frieze(n): one pattern per triangulation of the (n+3)-gon, sorted.
std::vector<PeriodicPattern> enumerate_frieze(int width);

inline constexpr int kMaxCoxeterWidth = 12;

}  // namespace frieze
