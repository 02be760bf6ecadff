#include "frieze/closed_form.hpp"

#include <algorithm>
#include <limits>

namespace frieze {

FirstDiagonal::FirstDiagonal(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("first diagonal must not be empty");
    for (auto v : values_)
        if (v < 1) throw std::invalid_argument("first diagonal values must be >= 1");
}

namespace {

BigInt big(std::int64_t v) { return BigInt(std::to_string(v)); }

Rational frac(const BigInt& num, const BigInt& den) { return Rational(num, den); }

void require_width(const FirstDiagonal& diag, int width) {
    if (diag.width() != width)
        throw std::invalid_argument("expected a first diagonal of width " + std::to_string(width));
}

struct W3Poly {
    BigInt a, b, c, s;  // s = ab + ac + bc + a + b + c + 1 = (a+1)(b+1)(c+1) - abc
    explicit W3Poly(const FirstDiagonal& diag)
        : a(big(diag[0])), b(big(diag[1])), c(big(diag[2])) {
        s = a * b + a * c + b * c + a + b + c + 1;
    }
};

struct W4Poly {
    BigInt a, b, c, d;
    BigInt s_abc;  // ab + ac + bc + a + b + c + 1
    BigInt s_bcd;  // bc + bd + cd + b + c + d + 1
    BigInt p4;     // (a+1)(b+1)(c+1)(d+1) - abcd
    explicit W4Poly(const FirstDiagonal& diag)
        : a(big(diag[0])), b(big(diag[1])), c(big(diag[2])), d(big(diag[3])) {
        s_abc = a * b + a * c + b * c + a + b + c + 1;
        s_bcd = b * c + b * d + c * d + b + c + d + 1;
        p4 = a * b * c + a * b * d + a * c * d + b * c * d + a * b + a * c + a * d + b * c + b * d + c * d + a + b +
             c + d + 1;
    }
};

}  // namespace

W3Entries w3_entries(const FirstDiagonal& diag) {
    require_width(diag, 3);
    const W3Poly x(diag);
    return W3Entries{
        frac(x.b + 1, x.a),
        frac((x.c + 1) * (x.a + x.b + 1), x.a * x.b),
        frac(x.s, x.a * x.b * x.c),
        frac(x.s, x.b * (x.b + 1)),
        frac((x.a + 1) * (x.b + x.c + 1), x.b * x.c),
        frac(x.b + 1, x.c),
    };
}

W4Entries w4_entries(const FirstDiagonal& diag) {
    require_width(diag, 4);
    const W4Poly x(diag);
    return W4Entries{
        frac(x.b + 1, x.a),
        frac((x.c + 1) * (x.a + x.b + 1), x.a * x.b),
        frac((x.d + 1) * x.s_abc, x.a * x.b * x.c),
        frac(x.p4, x.a * x.b * x.c * x.d),
        frac(x.s_abc, x.b * (x.b + 1)),
        frac((x.b + x.c + 1) * x.p4, x.b * (x.b + 1) * x.c * (x.c + 1)),
        frac((x.a + 1) * x.s_bcd, x.b * x.c * x.d),
        frac(x.s_bcd, x.c * (x.c + 1)),
        frac((x.b + 1) * (x.c + x.d + 1), x.c * x.d),
        frac(x.c + 1, x.d),
    };
}

FundamentalDomain w3_domain(const FirstDiagonal& diag) {
    const auto x = w3_entries(diag);
    const Rational a(diag[0]), b(diag[1]), c(diag[2]);
    return FundamentalDomain(3, {{a, x.d, x.g, x.i}, {b, x.e, x.h}, {c, x.f}});
}

FundamentalDomain w4_domain(const FirstDiagonal& diag) {
    const auto x = w4_entries(diag);
    const Rational a(diag[0]), b(diag[1]), c(diag[2]), d(diag[3]);
    return FundamentalDomain(4, {{a, x.e, x.i, x.l, x.n}, {b, x.f, x.j, x.m}, {c, x.g, x.k}, {d, x.h}});
}

std::array<bool, 6> w3_equations_hold(const FirstDiagonal& diag, const W3Entries& x) {
    require_width(diag, 3);
    const Rational a(diag[0]), b(diag[1]), c(diag[2]), one(1);
    return {
        a * x.d == one + b,
        b * x.e == (one + x.d) * (one + c),
        c * x.f == one + x.e,
        x.d * x.g == one + x.e,
        x.e * x.h == (one + x.g) * (one + x.f),
        x.g * x.i == one + x.h,
    };
}

std::array<bool, 10> w4_equations_hold(const FirstDiagonal& diag, const W4Entries& x) {
    require_width(diag, 4);
    const Rational a(diag[0]), b(diag[1]), c(diag[2]), d(diag[3]), one(1);
    return {
        a * x.e == one + b,
        b * x.f == (one + x.e) * (one + c),
        c * x.g == (one + x.f) * (one + d),
        d * x.h == one + x.g,
        x.e * x.i == one + x.f,
        x.f * x.j == (one + x.i) * (one + x.g),
        x.g * x.k == (one + x.j) * (one + x.h),
        x.i * x.l == one + x.j,
        x.j * x.m == (one + x.l) * (one + x.k),
        x.l * x.n == one + x.m,
    };
}

std::array<bool, 6> w3_inequalities(const FirstDiagonal& diag) {
    require_width(diag, 3);
    const W3Poly x(diag);
    return {
        x.b + 1 >= x.a,
        (x.c + 1) * (x.a + x.b + 1) >= x.a * x.b,
        x.s >= x.a * x.b * x.c,
        x.s >= x.b * (x.b + 1),
        (x.a + 1) * (x.b + x.c + 1) >= x.b * x.c,
        x.b + 1 >= x.c,
    };
}

std::array<bool, 10> w4_inequalities(const FirstDiagonal& diag) {
    require_width(diag, 4);
    const W4Poly x(diag);
    return {
        x.b + 1 >= x.a,
        (x.c + 1) * (x.a + x.b + 1) >= x.a * x.b,
        (x.d + 1) * x.s_abc >= x.a * x.b * x.c,
        x.p4 >= x.a * x.b * x.c * x.d,
        x.s_abc >= x.b * (x.b + 1),
        (x.b + x.c + 1) * x.p4 >= x.b * (x.b + 1) * x.c * (x.c + 1),
        (x.a + 1) * x.s_bcd >= x.b * x.c * x.d,
        x.s_bcd >= x.c * (x.c + 1),
        (x.b + 1) * (x.c + x.d + 1) >= x.c * x.d,
        x.c + 1 >= x.d,
    };
}

bool w3_product_form(std::int64_t a, std::int64_t b, std::int64_t c) {
    const BigInt A = big(a), B = big(b), C = big(c);
    return (A + 1) * (B + 1) * (C + 1) >= 2 * A * B * C;
}

bool w4_product_form(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    const BigInt A = big(a), B = big(b), C = big(c), D = big(d);
    return (A + 1) * (B + 1) * (C + 1) * (D + 1) >= 2 * A * B * C * D;
}

bool w3_b_quadratic(std::int64_t b) {
    const BigInt B = big(b);
    return B * B - 15 * B - 60 <= 0;
}

bool w4_side_quadratic(std::int64_t x) {
    const BigInt X = big(x);
    return X * X - 143 * X - 4326 <= 0;
}

bool w4_vi_reduced(std::int64_t b, std::int64_t c) {
    const BigInt B = big(b), C = big(c);
    return (B + C + 1) * (47 * B * C + 247 * B + 247 * C + 247) >= B * (B + 1) * C * (C + 1);
}

bool SearchBox::contains(std::span<const std::int64_t> point) const {
    if (point.size() != upper.size()) return false;
    for (std::size_t i = 0; i < point.size(); ++i)
        if (point[i] < 1 || point[i] > upper[i]) return false;
    return true;
}

std::uint64_t SearchBox::volume() const {
    std::uint64_t v = 1;
    for (auto u : upper) {
        if (u < 1) return 0;
        const auto uu = static_cast<std::uint64_t>(u);
        if (v > std::numeric_limits<std::uint64_t>::max() / uu) return std::numeric_limits<std::uint64_t>::max();
        v *= uu;
    }
    return v;
}

std::vector<SearchBox> w3_boxes() { return {SearchBox{{4, 18, 11}}, SearchBox{{11, 18, 4}}}; }

std::vector<SearchBox> w4_boxes() {
    return {
        SearchBox{{5, 102, 168, 41}},
        SearchBox{{5, 168, 102, 41}},
        SearchBox{{41, 102, 168, 5}},
        SearchBox{{41, 168, 102, 5}},
    };
}

bool in_any_box(const std::vector<SearchBox>& boxes, std::span<const std::int64_t> point) {
    return std::any_of(boxes.begin(), boxes.end(), [&](const SearchBox& b) { return b.contains(point); });
}

}  // namespace frieze
