#pragma once

#include <array>
#include <compare>
#include <string>

#include "cayley/family.hpp"
#include "cayley/proj.hpp"

namespace cayley {

// Order of contact of two family members: a finite k, or Identical when the
// curves coincide.
class ContactOrder {
public:
    static ContactOrder finite(int k) { return ContactOrder(k); }
    static ContactOrder identical() { return ContactOrder(kIdentical); }

    bool is_identical() const { return k_ == kIdentical; }
    // Finite order; throws for Identical.
    int order() const;
    std::string to_string() const;

    friend bool operator==(const ContactOrder&, const ContactOrder&) = default;
    friend auto operator<=>(const ContactOrder&, const ContactOrder&) = default;

private:
    static constexpr int kIdentical = 1000;
    explicit ContactOrder(int k) : k_(k) {}
    int k_;
};

enum class Mode { primal, dual };
std::string_view mode_name(Mode m);

// h[n-1][m] is the coefficient of u0^m in H_n(u0) = (Q_n o G o Phi_{0,2,0})((u0, 1)).
template <class S>
struct HCoeffTable {
    std::array<std::array<S, 7>, 2> h{};

    const S& operator()(int n, int m) const { return h[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)]; }
    S& operator()(int n, int m) { return h[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)]; }
};

namespace detail {

template <class S>
std::array<S, 7> series_mul(const std::array<S, 7>& a, const std::array<S, 7>& b) {
    std::array<S, 7> c;
    c.fill(S(0));
    for (int i = 0; i < 7; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; i + j < 7; ++j) {
            if (!is_zero(b[j])) c[i + j] = c[i + j] + a[i] * b[j];
        }
    }
    return c;
}

}  // namespace detail

// Full degree-6 expansions of H_1, H_2 for a lower-triangular G with nonzero
// diagonal. Over Poly with indeterminate g_ij this yields the closed forms of
// the individual coefficients.
template <class S>
HCoeffTable<S> h_coefficients(const Mat4<S>& g) {
    if (!g.is_lower_triangular()) throw NotLowerTriangular();
    for (int i = 0; i < 4; ++i) {
        if (is_zero(g(i, i))) throw SingularMatrix();
    }
    using Series = std::array<S, 7>;
    auto zero = [] {
        Series s;
        s.fill(S(0));
        return s;
    };
    // Phi_{0,2,0}((u0, 1)) = (u0^3, u0^2, u0 / 2, 1 / 6).
    std::array<Series, 4> x{zero(), zero(), zero(), zero()};
    x[0][3] = S(1);
    x[1][2] = S(1);
    x[2][1] = S(Rational(1, 2));
    x[3][0] = S(Rational(1, 6));

    std::array<Series, 4> y{zero(), zero(), zero(), zero()};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k <= i; ++k) {
            if (is_zero(g(i, k))) continue;
            for (int m = 0; m < 7; ++m) {
                if (!is_zero(x[k][m])) y[i][m] = y[i][m] + g(i, k) * x[k][m];
            }
        }
    }

    using detail::series_mul;
    Series q1 = series_mul(y[0], y[3]);
    Series t1 = series_mul(y[1], y[2]);
    Series q2 = series_mul(y[2], y[2]);
    Series t2 = series_mul(y[1], y[3]);
    HCoeffTable<S> out;
    for (int m = 0; m < 7; ++m) {
        out.h[0][m] = S(6) * q1[m] - S(2) * t1[m];
        out.h[1][m] = S(4) * q2[m] - S(6) * t2[m];
    }
    return out;
}

// Contact order read off an h-table: contact of order k iff h_{n0..nk}
// vanish for n = 1, 2.
template <class S>
ContactOrder order_from_table(const HCoeffTable<S>& t) {
    for (int m = 0; m < 7; ++m) {
        if (!is_zero(t(1, m)) || !is_zero(t(2, m))) return ContactOrder::finite(m - 1);
    }
    return ContactOrder::identical();
}

// 2 beta_bar (beta_bar - 3) M(c)^-1 M(d): the collineation that plays the role
// of G for the pair (c, d).
template <class S>
Mat4<S> contact_matrix_body(const Params<S>& c, const Params<S>& d) {
    return (matrix_M_inv_body(c) * matrix_M_body(d)).scaled(S(Rational(1, 9)));
}

// 2 beta (beta - 3) N0^-1 M(c)^T (M(d)^T)^-1 N0; N0^-1 = -N0.
template <class S>
Mat4<S> dual_contact_matrix_body(const Params<S>& c, const Params<S>& d) {
    Mat4<S> n0 = null_polarity_N0<S>();
    Mat4<S> n0_inv = n0.scaled(S(-1));
    Mat4<S> m = n0_inv * matrix_M_body(c).transpose() * matrix_M_inv_body(d).transpose() * n0;
    return m.scaled(S(Rational(1, 9))).with_role(MatRole::collineation);
}

Mat4<Rational> contact_matrix(const CurveParams& c, const CurveParams& d);
Mat4<Rational> dual_contact_matrix(const CurveParams& c, const CurveParams& d);

ContactOrder contact_order(const CurveParams& c, const CurveParams& d);
ContactOrder dual_contact_order(const CurveParams& c, const CurveParams& d);
ContactOrder contact_order(const CurveParams& c, const CurveParams& d, Mode mode);

// Order implied by the parameter predicate tables alone.
ContactOrder predicted_order(const CurveParams& c, const CurveParams& d, Mode mode);

}  // namespace cayley
