#include "cayley/rational.hpp"

#include <cctype>
#include <ostream>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw Error("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) throw ParseError("bad rational denominator: '" + std::string(text) + "'");
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw ParseError("bad rational: '" + std::string(text) + "'");

    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d(den.empty() ? std::string("1") : std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cayley
