#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cayley {

// Exact rational number. Always stored in lowest terms with a positive
// denominator; every arithmetic result is canonical.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    // Accepts "p/q" or "p"; the sign belongs to the numerator and q > 0.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }
    std::string to_string() const;

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cayley
