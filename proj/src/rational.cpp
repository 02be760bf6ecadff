#include "frieze/rational.hpp"

#include <limits>

namespace frieze {

Rational::Rational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!valid_integer(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
        throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

std::optional<std::int64_t> Rational::to_int64() const {
    if (!is_integer()) return std::nullopt;
    const BigInt& n = q_.get_num();
    static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    if (n < lo || n > hi) return std::nullopt;
    return std::stoll(n.get_str());
}

std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace frieze
