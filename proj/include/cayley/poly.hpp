#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

// Fixed global variable table. The first six are the parameters of two
// family members, `u` is the affine curve parameter (u1), `u0` the
// homogenizing / expansion variable, and g_ij are the lower-triangular
// entries of an indeterminate 4x4 matrix.
enum class Var : std::uint8_t {
    alpha, beta, gamma,
    alpha_bar, beta_bar, gamma_bar,
    u, u0,
    g00, g10, g11, g20, g21, g22, g30, g31, g32, g33,
};

inline constexpr std::size_t kVarCount = 18;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

// Lower-triangular indeterminate g_ij (i >= j).
Var g_var(int i, int j);

using Exponents = std::array<std::uint8_t, kVarCount>;

// Sparse polynomial over Q in the variables of `Var`. Terms are kept in a
// std::map keyed by exponent vector, so the representation is canonical and
// operator== is structural equality. No stored coefficient is zero.
class Poly {
public:
    using Terms = std::map<Exponents, Rational>;

    Poly() = default;
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static Poly var(Var v, unsigned power = 1);
    static Poly monomial(const Rational& coeff, std::initializer_list<std::pair<Var, unsigned>> powers);
    static Poly term(const Exponents& exponents, const Rational& coeff);

    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value; throws if the polynomial is not constant.
    Rational constant_value() const;

    unsigned degree_in(Var v) const;
    unsigned total_degree() const;
    bool contains(Var v) const { return degree_in(v) > 0; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);

    Terms terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

Poly pow(const Poly& base, unsigned exponent);

// Partial bindings; unbound variables stay symbolic.
using Bindings = std::map<Var, Rational>;

Poly evaluate(const Poly& p, const Bindings& bindings);
// Full evaluation; throws cayley::Error if a variable of p is unbound.
Rational evaluate_rational(const Poly& p, const Bindings& bindings);

// Substitutes a polynomial for one variable (ring homomorphism).
Poly substitute(const Poly& p, Var v, const Poly& replacement);
Poly substitute(const Poly& p, const std::vector<std::pair<Var, Poly>>& replacements);

// Coefficients c_0..c_d with p = sum c_m v^m; empty for the zero polynomial.
std::vector<Poly> coeffs_in(const Poly& p, Var v);

Poly derivative(const Poly& p, Var v);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace cayley
