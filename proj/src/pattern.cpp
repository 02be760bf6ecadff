#include "frieze/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace frieze {

namespace {

std::string cell_message(std::string_view what, int row, int col) {
    std::ostringstream os;
    os << what << " at row " << row << ", column " << col;
    return os.str();
}

int wrap(std::int64_t k, int period) {
    const auto r = k % period;
    return static_cast<int>(r < 0 ? r + period : r);
}

int expected_rows(PatternKind kind, int width) {
    return kind == PatternKind::Y ? width + 2 : width + 4;
}

Row constant_row(int length, long value) { return Row(static_cast<std::size_t>(length), Rational(value)); }

bool all_zero(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

std::string_view kind_name(PatternKind kind) { return kind == PatternKind::Y ? "y" : "coxeter"; }

std::optional<PatternKind> parse_kind(std::string_view text) {
    if (text == "y" || text == "Y") return PatternKind::Y;
    if (text == "coxeter" || text == "Coxeter") return PatternKind::Coxeter;
    return std::nullopt;
}

InconsistentDomain::InconsistentDomain(int r, int c)
    : std::runtime_error(cell_message("diamond relation violated", r, c)), row(r), col(c) {}

ClosureFailure::ClosureFailure(int r, int c, Rational v)
    : std::runtime_error(cell_message("pattern does not close (value " + v.str() + ")", r, c)),
      row(r), col(c), value(std::move(v)) {}

PeriodicPattern::PeriodicPattern(PatternKind kind, int width, std::vector<Row> rows)
    : kind_(kind), width_(width), rows_(std::move(rows)) {
    if (width_ < 1) throw ShapeError("pattern width must be at least 1");
    if (static_cast<int>(rows_.size()) != expected_rows(kind_, width_))
        throw ShapeError("width " + std::to_string(width_) + " " + std::string(kind_name(kind_)) +
                         " pattern needs " + std::to_string(expected_rows(kind_, width_)) + " rows, got " +
                         std::to_string(rows_.size()));
    for (std::size_t m = 0; m < rows_.size(); ++m)
        if (static_cast<int>(rows_[m].size()) != period())
            throw ShapeError("row " + std::to_string(m) + " has " + std::to_string(rows_[m].size()) +
                             " entries, period is " + std::to_string(period()));
}

const Rational& PeriodicPattern::at(int m, int k) const {
    return rows_.at(static_cast<std::size_t>(m))[static_cast<std::size_t>(wrap(k, period()))];
}

bool pattern_less(const PeriodicPattern& a, const PeriodicPattern& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.width() != b.width()) return a.width() < b.width();
    return a.rows() < b.rows();
}

FundamentalDomain::FundamentalDomain(int width, std::vector<Row> rows) : width_(width), rows_(std::move(rows)) {
    if (width_ < 1) throw ShapeError("domain width must be at least 1");
    if (static_cast<int>(rows_.size()) != width_)
        throw ShapeError("domain of width " + std::to_string(width_) + " needs " + std::to_string(width_) + " rows");
    for (int m = 1; m <= width_; ++m)
        if (static_cast<int>(row(m).size()) != width_ + 2 - m)
            throw ShapeError("domain row " + std::to_string(m) + " must hold " + std::to_string(width_ + 2 - m) +
                             " entries");
}

std::size_t FundamentalDomain::entry_count() const {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(width_ + 3) / 2;
}

std::vector<Rational> FundamentalDomain::column_major() const {
    std::vector<Rational> out;
    out.reserve(entry_count());
    for (int k = 0; k <= width_; ++k)
        for (int m = 1; m <= width_; ++m)
            if (k < width_ + 2 - m) out.push_back(row(m)[static_cast<std::size_t>(k)]);
    return out;
}

FundamentalDomain FundamentalDomain::from_column_major(int width, std::span<const Rational> entries) {
    if (width < 1) throw ShapeError("domain width must be at least 1");
    const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(width + 3) / 2;
    if (entries.size() != count)
        throw ShapeError("width " + std::to_string(width) + " domain needs " + std::to_string(count) + " entries");
    std::vector<Row> rows(static_cast<std::size_t>(width));
    std::size_t next = 0;
    for (int k = 0; k <= width; ++k)
        for (int m = 1; m <= width; ++m)
            if (k < width + 2 - m) rows[static_cast<std::size_t>(m - 1)].push_back(entries[next++]);
    return FundamentalDomain(width, std::move(rows));
}

Rational y_south(const Rational& w, const Rational& e, const Rational& n) {
    const Rational denom = Rational(1) + n;
    if (denom.is_zero()) throw DivisionByZero("Y diamond: 1 + N = 0");
    return w * e / denom - Rational(1);
}

Rational y_east(const Rational& w, const Rational& n, const Rational& s) {
    if (w.is_zero()) throw DivisionByZero("Y diamond: W = 0");
    return (Rational(1) + n) * (Rational(1) + s) / w;
}

Rational coxeter_east(const Rational& w, const Rational& n, const Rational& s) {
    if (w.is_zero()) throw DivisionByZero("Coxeter diamond: W = 0");
    return (Rational(1) + n * s) / w;
}

Rational coxeter_south(const Rational& w, const Rational& e, const Rational& n) {
    if (n.is_zero()) throw DivisionByZero("Coxeter diamond: N = 0");
    return (w * e - Rational(1)) / n;
}

namespace {

// Shared by propagate_y / try_propagate_y. Returns the pattern, or fills `failure`.
std::optional<PeriodicPattern> propagate_impl(std::span<const Rational> first_row, int width,
                                              std::optional<ClosureFailure>& failure) {
    if (width < 1) throw ShapeError("width must be at least 1");
    const int period = width + 3;
    if (static_cast<int>(first_row.size()) != period)
        throw ShapeError("first row must have " + std::to_string(period) + " entries");

    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(width + 2));
    rows.push_back(constant_row(period, 0));
    rows.emplace_back(first_row.begin(), first_row.end());
    for (int m = 1; m <= width; ++m) {
        const Row& cur = rows[static_cast<std::size_t>(m)];
        if (all_zero(cur)) {
            failure.emplace(m, 0, Rational(0));
            return std::nullopt;
        }
        const Row& up = rows[static_cast<std::size_t>(m - 1)];
        Row next(static_cast<std::size_t>(period));
        for (int k = 0; k < period; ++k) {
            const auto k1 = static_cast<std::size_t>(wrap(k + 1, period));
            const Rational& north = up[k1];
            if ((Rational(1) + north).is_zero()) {
                failure.emplace(m + 1, k, north);
                return std::nullopt;
            }
            next[static_cast<std::size_t>(k)] = y_south(cur[static_cast<std::size_t>(k)], cur[k1], north);
        }
        rows.push_back(std::move(next));
    }
    const Row& last = rows.back();
    for (int k = 0; k < period; ++k) {
        if (!last[static_cast<std::size_t>(k)].is_zero()) {
            failure.emplace(width + 1, k, last[static_cast<std::size_t>(k)]);
            return std::nullopt;
        }
    }
    return PeriodicPattern(PatternKind::Y, width, std::move(rows));
}

}  // namespace

PeriodicPattern propagate_y(std::span<const Rational> first_row, int width) {
    std::optional<ClosureFailure> failure;
    auto p = propagate_impl(first_row, width, failure);
    if (!p) throw *failure;
    return std::move(*p);
}

std::optional<PeriodicPattern> try_propagate_y(std::span<const Rational> first_row, int width) {
    std::optional<ClosureFailure> failure;
    return propagate_impl(first_row, width, failure);
}

PeriodicPattern expand_domain(const FundamentalDomain& dom, PatternKind kind) {
    const int n = dom.width();
    const int period = n + 3;
    std::vector<Row> rows;
    rows.push_back(constant_row(period, 0));
    if (kind == PatternKind::Coxeter) rows.push_back(constant_row(period, 1));
    for (int m = 1; m <= n; ++m) {
        Row r = dom.row(m);
        const Row& tail = dom.row(n + 1 - m);
        r.insert(r.end(), tail.begin(), tail.end());
        rows.push_back(std::move(r));
    }
    if (kind == PatternKind::Coxeter) rows.push_back(constant_row(period, 1));
    rows.push_back(constant_row(period, 0));

    PeriodicPattern p(kind, n, std::move(rows));
    if (auto bad = first_diamond_violation(p)) throw InconsistentDomain(bad->row, bad->col);
    return p;
}

FundamentalDomain domain_of(const PeriodicPattern& p) {
    const int n = p.width();
    std::vector<Row> rows;
    for (int m = 1; m <= n; ++m) {
        const Row& full = p.row(p.interior_row(m));
        rows.emplace_back(full.begin(), full.begin() + (n + 2 - m));
    }
    return FundamentalDomain(n, std::move(rows));
}

std::vector<Rational> first_diagonal(const PeriodicPattern& p) {
    std::vector<Rational> out;
    for (int m = 1; m <= p.width(); ++m) out.push_back(p.row(p.interior_row(m)).front());
    return out;
}

bool is_arithmetic(const PeriodicPattern& p) { return !first_non_arithmetic(p).has_value(); }

PeriodicPattern cyclic_shift(const PeriodicPattern& p, std::int64_t s) {
    const int period = p.period();
    const int shift = wrap(s, period);
    std::vector<Row> rows;
    rows.reserve(p.rows().size());
    for (const Row& r : p.rows()) {
        Row out(r.size());
        for (int k = 0; k < period; ++k)
            out[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(wrap(k + shift, period))];
        rows.push_back(std::move(out));
    }
    return PeriodicPattern(p.kind(), p.width(), std::move(rows));
}

int intrinsic_period(const PeriodicPattern& p) {
    const int period = p.period();
    for (int d = 1; d < period; ++d)
        if (period % d == 0 && cyclic_shift(p, d) == p) return d;
    return period;
}

std::optional<Cell> first_diamond_violation(const PeriodicPattern& p) {
    const int last = p.row_count() - 2;
    for (int m = 1; m <= last; ++m) {
        for (int k = 0; k < p.period(); ++k) {
            const Rational& w = p.at(m, k);
            const Rational& e = p.at(m, k + 1);
            const Rational& n = p.at(m - 1, k + 1);
            const Rational& s = p.at(m + 1, k);
            const bool ok = p.kind() == PatternKind::Y
                                ? w * e == (Rational(1) + n) * (Rational(1) + s)
                                : w * e - n * s == Rational(1);
            if (!ok) return Cell{m, k};
        }
    }
    return std::nullopt;
}

std::optional<Cell> first_boundary_violation(const PeriodicPattern& p) {
    const int top = p.row_count() - 1;
    const bool coxeter = p.kind() == PatternKind::Coxeter;
    for (int m = 0; m <= top; ++m) {
        const Row& r = p.row(m);
        const bool zero_row = m == 0 || m == top;
        const bool one_row = coxeter && (m == 1 || m == top - 1);
        for (int k = 0; k < p.period(); ++k) {
            const Rational& x = r[static_cast<std::size_t>(k)];
            if (zero_row && !x.is_zero()) return Cell{m, k};
            if (one_row && x != Rational(1)) return Cell{m, k};
        }
        if (!zero_row && !one_row && all_zero(r)) return Cell{m, 0};
    }
    return std::nullopt;
}

std::optional<Cell> first_non_arithmetic(const PeriodicPattern& p) {
    for (int i = 1; i <= p.width(); ++i) {
        const int m = p.interior_row(i);
        for (int k = 0; k < p.period(); ++k)
            if (!p.at(m, k).is_positive_integer()) return Cell{m, k};
    }
    return std::nullopt;
}

std::optional<int> glide_shift(const PeriodicPattern& p) {
    const int top = p.row_count() - 1;
    const int period = p.period();
    for (int s = 0; s < period; ++s) {
        bool ok = true;
        for (int m = 0; m <= top && ok; ++m)
            for (int k = 0; k < period && ok; ++k)
                ok = p.at(top - m, k) == p.at(m, k + s - m);
        if (ok) return s;
    }
    return std::nullopt;
}

}  // namespace frieze
