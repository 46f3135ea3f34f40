#pragma once

// Independent contact oracle: compares jets of the two curves in an affine
// chart around the common point (primal, chart x3 != 0 around U) or around
// the common osculating plane (dual, chart y0 != 0 around omega), allowing an
// arbitrary regular reparametrization.

#include <array>

#include "cayley/contact.hpp"
#include "cayley/family.hpp"

namespace cayley {

// Power series in t truncated after t^kJetOrder.
class Jet {
public:
    static constexpr int kJetOrder = 6;
    static constexpr int kLength = kJetOrder + 1;

    Jet() { c_.fill(Rational(0)); }
    Jet(const Rational& constant) : Jet() { c_[0] = constant; }  // NOLINT(google-explicit-constructor)
    Jet(long constant) : Jet(Rational(constant)) {}               // NOLINT(google-explicit-constructor)
    static Jet t();

    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    bool is_zero() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend bool operator==(const Jet&, const Jet&) = default;

    // 1 / a; requires a[0] != 0.
    Jet reciprocal() const;
    // this(s(t)) for s with s[0] == 0.
    Jet compose(const Jet& s) const;

private:
    std::array<Rational, kLength> c_;
};

inline bool is_zero(const Jet& j) { return j.is_zero(); }

// Affine jet of the curve (primal) or of its dual curve (dual) at the
// parameter u = (t, 1), t -> 0, in the chart around U resp. omega.
std::array<Jet, 3> curve_jet(const CurveParams& c, Mode mode);

// Largest k <= max_k (max_k <= 6) such that the k-jets agree after a regular
// reparametrization. Agreement through max_k >= 5 is reported as Identical,
// since twisted cubics with contact of order five coincide.
ContactOrder jet_contact_order(const CurveParams& c, const CurveParams& d, Mode mode,
                               int max_k = Jet::kJetOrder);

}  // namespace cayley
