#pragma once

// The Cayley surface F: 3 x0 x1 x2 - x1^3 - 3 x3 x0^2 = 0, and the family of
// cubic parabolas c(alpha, beta, gamma) on it. All of them pass through
// U = (0,0,0,1), touch t: x0 = x1 = 0 there and osculate omega: x0 = 0.

#include <iosfwd>

#include "cayley/poly.hpp"
#include "cayley/proj.hpp"
#include "cayley/rational.hpp"

namespace cayley {

template <class S>
struct Params {
    S alpha;
    S beta;
    S gamma;
};

// One cubic parabola. beta is never 0 or 3.
class CurveParams {
public:
    CurveParams(Rational alpha, Rational beta, Rational gamma);

    // Parses "alpha,beta,gamma" with each component in rational syntax.
    static CurveParams parse(std::string_view text);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const Rational& gamma() const { return gamma_; }

    Params<Rational> triple() const { return {alpha_, beta_, gamma_}; }
    std::string to_string() const;

    friend bool operator==(const CurveParams&, const CurveParams&) = default;

private:
    Rational alpha_, beta_, gamma_;
};

std::ostream& operator<<(std::ostream& os, const CurveParams& c);

// The beta = 3 member: only its affine part (u0 != 0) is a parabola on F.
struct ParabolaParams {
    Rational alpha;
    Rational gamma;
};

// (alpha, beta, gamma) and (alpha_bar, beta_bar, gamma_bar) as indeterminates.
Params<Poly> symbolic_params();
Params<Poly> symbolic_params_bar();

// --- generic formulas -------------------------------------------------------

// 3 * beta_num * Phi(u0, u1) for beta = beta_num / beta_den, with every
// denominator cleared so the result is polynomial in all inputs.
template <class S>
Vec4<S> phi_cleared(const S& alpha, const S& beta_num, const S& beta_den, const S& gamma, const S& u0,
                    const S& u1) {
    S w = u1 - gamma * u0;
    S q = u1 * u1 + alpha * u0 * u0;
    S three(3);
    return {three * beta_num * u0 * u0 * u0, three * beta_num * u0 * u0 * w, three * beta_den * u0 * q,
            w * (three * beta_den * q - beta_num * w * w)};
}

template <class S>
Vec4<S> phi_cleared(const Params<S>& p, const S& u0, const S& u1) {
    return phi_cleared(p.alpha, p.beta, S(1), p.gamma, u0, u1);
}

template <class S>
S cayley_form(const Vec4<S>& x) {
    return S(3) * x[0] * x[1] * x[2] - x[1] * x[1] * x[1] - S(3) * x[3] * x[0] * x[0];
}

// Parabolic cylinder alpha x0^2 - beta x0 x2 + (x1 + gamma x0)^2.
template <class S>
S cylinder_form(const Params<S>& p, const Vec4<S>& x) {
    S s = x[1] + p.gamma * x[0];
    return p.alpha * x[0] * x[0] - p.beta * x[0] * x[2] + s * s;
}

// Dual Cayley surface 3 y0 y3^2 - 3 y1 y2 y3 + y2^3 (tangent planes of F).
template <class S>
S dual_cayley_form(const Vec4<S>& y) {
    return S(3) * y[0] * y[3] * y[3] - S(3) * y[1] * y[2] * y[3] + y[2] * y[2] * y[2];
}

// M(alpha,beta,gamma) = matrix_M_body / (18 beta (beta - 3)).
template <class S>
Mat4<S> matrix_M_body(const Params<S>& p) {
    const S& a = p.alpha;
    const S& b = p.beta;
    const S& g = p.gamma;
    S z(0);
    return Mat4<S>({{
        {S(3) * b, z, z, z},
        {S(-3) * b * g, S(3) * b, z, z},
        {S(3) * a, z, S(6), z},
        {g * (S(-3) * a + b * g * g), S(3) * (a - b * g * g), S(6) * g * (b - S(1)), S(-6) * (b - S(3))},
    }});
}

template <class S>
S matrix_M_scale(const Params<S>& p) {
    return S(18) * p.beta * (p.beta - S(3));
}

// Exact inverse of M(alpha,beta,gamma); polynomial in the parameters.
template <class S>
Mat4<S> matrix_M_inv_body(const Params<S>& p) {
    const S& a = p.alpha;
    const S& b = p.beta;
    const S& g = p.gamma;
    S z(0);
    S bm3 = b - S(3);
    return Mat4<S>({{
        {S(6) * bm3, z, z, z},
        {S(6) * g * bm3, S(6) * bm3, z, z},
        {S(-3) * a * bm3, z, S(3) * b * bm3, z},
        {g * (S(3) * a - S(3) * a * b - S(2) * b * g * g), S(3) * (a - b * g * g), S(3) * b * g * (b - S(1)),
         S(-3) * b},
    }});
}

// Null polarity of c(0,2,0): x -> (N0 x)^T.
template <class S>
Mat4<S> null_polarity_N0() {
    S z(0), one(1), m1(-1);
    return Mat4<S>({{
                       {z, z, z, one},
                       {z, z, m1, z},
                       {z, one, z, z},
                       {m1, z, z, z},
                   }},
                   MatRole::duality);
}

// (M^-1)^T N0 M^-1: the null polarity taking each point of c(alpha,beta,gamma)
// to its osculating plane.
template <class S>
Mat4<S> null_polarity_body(const Params<S>& p) {
    Mat4<S> inv = matrix_M_inv_body(p);
    return (inv.transpose().with_role(MatRole::collineation) * null_polarity_N0<S>() * inv)
        .with_role(MatRole::duality);
}

// --- Rational API -------------------------------------------------------------

HPoint<Rational> phi_map(const CurveParams& c, const Rational& u0, const Rational& u1);
HPoint<Rational> phi_map(const ParabolaParams& c, const Rational& u0, const Rational& u1);

bool on_surface(const HPoint<Rational>& x);
bool on_cylinder(const CurveParams& c, const HPoint<Rational>& x);

Mat4<Rational> matrix_M(const CurveParams& c);
Mat4<Rational> matrix_M_inv(const CurveParams& c);

Mat4<Rational> null_polarity(const CurveParams& c);
HPlane<Rational> osculating_plane(const CurveParams& c, const Rational& u0, const Rational& u1);

// Gradient of the Cayley form; F's tangent plane at a smooth point.
HPlane<Rational> tangent_plane_F(const HPoint<Rational>& x);

// Point at infinity of the tangent at Phi((1, u1)); traces the isotropic
// circle p(alpha,beta,gamma) in omega.
HPoint<Rational> isotropic_circle_point(const CurveParams& c, const Rational& u1);

// Conic in omega swept by isotropic_circle_point, evaluated at x (x0 must be 0).
Rational isotropic_circle_form(const CurveParams& c, const HPoint<Rational>& x);

Rational isotropic_curvature(const Rational& beta);

// diag(1, (3-beta)/beta, (3-beta)/beta, (3-beta)/beta); maps c(0,beta,0) onto c(0,3-beta,0).
Mat4<Rational> homothety_B(const Rational& beta);

}  // namespace cayley
