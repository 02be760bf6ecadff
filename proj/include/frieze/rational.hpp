#pragma once

// Exact rational numbers over arbitrary-precision integers (GMP backed).
// Values are always in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frieze {

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long long v) : q_(BigInt(std::to_string(v))) {}
    explicit Rational(BigInt v) : q_(std::move(v)) {}
    Rational(BigInt num, BigInt den);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
    /// and DivisionByZero on a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_positive_integer() const { return is_integer() && is_positive(); }

    /// The value as int64 when it is an integer in range.
    std::optional<std::int64_t> to_int64() const;

    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_{0};
};

std::string to_string(const BigInt& v);

}  // namespace frieze
