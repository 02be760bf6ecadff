#pragma once

// Closed Y-frieze and Coxeter frieze patterns stored over one column period.
//
// Diamond convention, columns taken mod period = width + 3:
//
//          N = (m-1, k+1)
//   W = (m, k)        E = (m, k+1)
//          S = (m+1, k)
//
// Y rule:        W*E = (1+N)(1+S)
// Coxeter rule:  W*E - N*S = 1

#include "frieze/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frieze {

enum class PatternKind { Y, Coxeter };

std::string_view kind_name(PatternKind kind);
std::optional<PatternKind> parse_kind(std::string_view text);

using Row = std::vector<Rational>;

/// Raised when rows cannot form a pattern of the requested shape.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InconsistentDomain : public std::runtime_error {
public:
    InconsistentDomain(int row, int col);
    int row;
    int col;
};

/// First offending cell of a failed Y propagation.
class ClosureFailure : public std::runtime_error {
public:
    ClosureFailure(int row, int col, Rational value);
    int row;
    int col;
    Rational value;
};

class PeriodicPattern {
public:
    /// Rows 0..width+1 (Y) or 0..width+3 (Coxeter), each of length width+3.
    /// Only the shape is checked here; see first_diamond_violation() and friends.
    PeriodicPattern(PatternKind kind, int width, std::vector<Row> rows);

    PatternKind kind() const { return kind_; }
    int width() const { return width_; }
    int period() const { return width_ + 3; }
    int row_count() const { return static_cast<int>(rows_.size()); }

    const std::vector<Row>& rows() const { return rows_; }
    const Row& row(int m) const { return rows_.at(static_cast<std::size_t>(m)); }
    /// Entry at row m, column k (k reduced mod period).
    const Rational& at(int m, int k) const;

    /// Row index of the first interior row and the number of interior rows.
    int first_interior_row() const { return kind_ == PatternKind::Y ? 1 : 2; }
    int interior_row(int i) const { return first_interior_row() + i - 1; }

    friend bool operator==(const PeriodicPattern&, const PeriodicPattern&) = default;

private:
    PatternKind kind_;
    int width_;
    std::vector<Row> rows_;
};

/// Lexicographic order over (kind, width, rows); used for canonical sorting.
bool pattern_less(const PeriodicPattern& a, const PeriodicPattern& b);

/// Triangular glide-symmetry domain: row m (1..n) holds n+2-m entries.
class FundamentalDomain {
public:
    FundamentalDomain(int width, std::vector<Row> rows);

    int width() const { return width_; }
    const std::vector<Row>& rows() const { return rows_; }
    /// Row m, 1-based.
    const Row& row(int m) const { return rows_.at(static_cast<std::size_t>(m - 1)); }

    std::size_t entry_count() const;
    /// Entries read column by column, top to bottom (a, b, c, d, ... ordering).
    std::vector<Rational> column_major() const;
    static FundamentalDomain from_column_major(int width, std::span<const Rational> entries);

private:
    int width_;
    std::vector<Row> rows_;
};

struct Cell {
    int row;
    int col;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Diamond rules.
Rational y_south(const Rational& w, const Rational& e, const Rational& n);
Rational y_east(const Rational& w, const Rational& n, const Rational& s);
Rational coxeter_east(const Rational& w, const Rational& n, const Rational& s);
Rational coxeter_south(const Rational& w, const Rational& e, const Rational& n);

/// Builds a closed Y-frieze of the given width from its first row.
/// Throws ClosureFailure (first offending cell, row-major) when it does not close.
PeriodicPattern propagate_y(std::span<const Rational> first_row, int width);
std::optional<PeriodicPattern> try_propagate_y(std::span<const Rational> first_row, int width);

/// Full pattern from a glide domain: interior row m is D_m followed by D_{n+1-m}.
PeriodicPattern expand_domain(const FundamentalDomain& dom, PatternKind kind);
FundamentalDomain domain_of(const PeriodicPattern& p);
std::vector<Rational> first_diagonal(const PeriodicPattern& p);

bool is_arithmetic(const PeriodicPattern& p);

/// Rotates every row so that new column k holds old column k+s.
PeriodicPattern cyclic_shift(const PeriodicPattern& p, std::int64_t s);

/// Smallest d dividing the period with cyclic_shift(p, d) == p.
int intrinsic_period(const PeriodicPattern& p);

// Structural checks, each returning the first offending cell in row-major order.
std::optional<Cell> first_diamond_violation(const PeriodicPattern& p);
std::optional<Cell> first_boundary_violation(const PeriodicPattern& p);
std::optional<Cell> first_non_arithmetic(const PeriodicPattern& p);

/// Glide reflection check. Reflecting rows m <-> top-m (top = row_count-1) must equal
/// the stagger-aware translation R[top-m][k] = R[m][k + s - m]. Returns the
/// smallest such s in [0, period), if any.
std::optional<int> glide_shift(const PeriodicPattern& p);

}  // namespace frieze
