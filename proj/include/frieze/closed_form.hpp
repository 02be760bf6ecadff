#pragma once

// Closed-form entries of the width-3 and width-4 glide domains in terms of the
// first diagonal, the positivity inequalities they imply, and the search boxes
// those inequalities bound.

#include "frieze/pattern.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace frieze {

/// First diagonal of a glide domain; every value is at least 1.
class FirstDiagonal {
public:
    explicit FirstDiagonal(std::vector<std::int64_t> values);
    int width() const { return static_cast<int>(values_.size()); }
    const std::vector<std::int64_t>& values() const { return values_; }
    std::int64_t operator[](std::size_t i) const { return values_[i]; }
    friend auto operator<=>(const FirstDiagonal&, const FirstDiagonal&) = default;

private:
    std::vector<std::int64_t> values_;
};

struct W3Entries {
    Rational d, e, f, g, h, i;
    friend bool operator==(const W3Entries&, const W3Entries&) = default;
};

struct W4Entries {
    Rational e, f, g, h, i, j, k, l, m, n;
    friend bool operator==(const W4Entries&, const W4Entries&) = default;
};

W3Entries w3_entries(const FirstDiagonal& diag);
W4Entries w4_entries(const FirstDiagonal& diag);

/// The domain built from the diagonal and its closed-form entries.
FundamentalDomain w3_domain(const FirstDiagonal& diag);
FundamentalDomain w4_domain(const FirstDiagonal& diag);

/// Equation systems relating the domain entries, one flag per equation.
///   width 3: ad=1+b, be=(1+d)(1+c), cf=1+e, dg=1+e, eh=(1+g)(1+f), gi=1+h
///   width 4: ae=1+b, bf=(1+e)(1+c), cg=(1+f)(1+d), dh=1+g, ei=1+f,
///            fj=(1+i)(1+g), gk=(1+j)(1+h), il=1+j, jm=(1+l)(1+k), ln=1+m
std::array<bool, 6> w3_equations_hold(const FirstDiagonal& diag, const W3Entries& x);
std::array<bool, 10> w4_equations_hold(const FirstDiagonal& diag, const W4Entries& x);

/// Numerator >= denominator for each closed-form entry, cross-multiplied over
/// exact integers. Component j is inequality (j+1) in the order d..i / e..n.
std::array<bool, 6> w3_inequalities(const FirstDiagonal& diag);
std::array<bool, 10> w4_inequalities(const FirstDiagonal& diag);

// Equivalent product forms of the two key inequalities.
bool w3_product_form(std::int64_t a, std::int64_t b, std::int64_t c);  // (a+1)(b+1)(c+1) >= 2abc
bool w4_product_form(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

// Intermediate bounds used while narrowing the boxes.
bool w3_b_quadratic(std::int64_t b);       // b^2 - 15b - 60 <= 0
bool w4_side_quadratic(std::int64_t x);    // x^2 - 143x - 4326 <= 0
bool w4_vi_reduced(std::int64_t b, std::int64_t c);  // (b+c+1)(47bc+247b+247c+247) >= b(b+1)c(c+1)

/// Inclusive upper bounds per variable; lower bound is 1 everywhere.
struct SearchBox {
    std::vector<std::int64_t> upper;

    bool contains(std::span<const std::int64_t> point) const;
    /// Number of lattice points, saturating at UINT64_MAX.
    std::uint64_t volume() const;
    friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

std::vector<SearchBox> w3_boxes();
std::vector<SearchBox> w4_boxes();

bool in_any_box(const std::vector<SearchBox>& boxes, std::span<const std::int64_t> point);

}  // namespace frieze
