#include "cayley/family.hpp"

#include <ostream>
#include <string>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void require_cubic_beta(const Rational& beta) {
    if (beta.is_zero() || beta == Rational(3)) {
        throw DegenerateParameter("beta must differ from 0 and 3 (got " + beta.to_string() + ")");
    }
}

}  // namespace

CurveParams::CurveParams(Rational alpha, Rational beta, Rational gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    require_cubic_beta(beta_);
}

CurveParams CurveParams::parse(std::string_view text) {
    auto c1 = text.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
        text.find(',', c2 + 1) != std::string_view::npos) {
        throw ParseError("expected 'alpha,beta,gamma', got '" + std::string(text) + "'");
    }
    return CurveParams(Rational::parse(text.substr(0, c1)), Rational::parse(text.substr(c1 + 1, c2 - c1 - 1)),
                       Rational::parse(text.substr(c2 + 1)));
}

std::string CurveParams::to_string() const {
    return alpha_.to_string() + "," + beta_.to_string() + "," + gamma_.to_string();
}

std::ostream& operator<<(std::ostream& os, const CurveParams& c) { return os << "c(" << c.to_string() << ")"; }

Params<Poly> symbolic_params() {
    return {Poly::var(Var::alpha), Poly::var(Var::beta), Poly::var(Var::gamma)};
}

Params<Poly> symbolic_params_bar() {
    return {Poly::var(Var::alpha_bar), Poly::var(Var::beta_bar), Poly::var(Var::gamma_bar)};
}

HPoint<Rational> phi_map(const CurveParams& c, const Rational& u0, const Rational& u1) {
    if (u0.is_zero() && u1.is_zero()) throw ZeroVector();
    Vec4<Rational> v = phi_cleared(c.triple(), u0, u1);
    Rational scale = (Rational(3) * c.beta()).inverse();
    for (auto& x : v) x *= scale;
    return HPoint<Rational>(v);
}

HPoint<Rational> phi_map(const ParabolaParams& c, const Rational& u0, const Rational& u1) {
    if (u0.is_zero() && u1.is_zero()) throw ZeroVector();
    if (u0.is_zero()) throw DegenerateParameter("beta = 3 parabola has no point at u0 = 0");
    Params<Rational> p{c.alpha, Rational(3), c.gamma};
    Vec4<Rational> v = phi_cleared(p, u0, u1);
    for (auto& x : v) x *= Rational(1, 9);
    return HPoint<Rational>(v);
}

bool on_surface(const HPoint<Rational>& x) { return cayley_form(x.coords).is_zero(); }

bool on_cylinder(const CurveParams& c, const HPoint<Rational>& x) {
    return cylinder_form(c.triple(), x.coords).is_zero();
}

Mat4<Rational> matrix_M(const CurveParams& c) {
    return matrix_M_body(c.triple()).scaled(matrix_M_scale(c.triple()).inverse());
}

Mat4<Rational> matrix_M_inv(const CurveParams& c) { return matrix_M_inv_body(c.triple()); }

Mat4<Rational> null_polarity(const CurveParams& c) { return null_polarity_body(c.triple()); }

HPlane<Rational> osculating_plane(const CurveParams& c, const Rational& u0, const Rational& u1) {
    return apply_dual(null_polarity(c), phi_map(c, u0, u1));
}

HPlane<Rational> tangent_plane_F(const HPoint<Rational>& p) {
    if (!on_surface(p)) throw NotOnSurface();
    const auto& x = p.coords;
    HPlane<Rational> grad(Rational(3) * x[1] * x[2] - Rational(6) * x[0] * x[3],
                          Rational(3) * x[0] * x[2] - Rational(3) * x[1] * x[1], Rational(3) * x[0] * x[1],
                          Rational(-3) * x[0] * x[0]);
    if (grad.is_zero()) throw SingularPoint();
    return grad.canonical();
}

HPoint<Rational> isotropic_circle_point(const CurveParams& c, const Rational& u1) {
    const Rational& a = c.alpha();
    const Rational& b = c.beta();
    const Rational& g = c.gamma();
    return HPoint<Rational>(Rational(0), Rational(1), Rational(2) * u1 / b,
                            (Rational(3) - b) / b * u1 * u1 + Rational(2) * g * (b - Rational(1)) / b * u1 + a / b -
                                g * g);
}

Rational isotropic_circle_form(const CurveParams& c, const HPoint<Rational>& p) {
    if (!p[0].is_zero()) throw Error("isotropic_circle_form: point is not in omega");
    const Rational& a = c.alpha();
    const Rational& b = c.beta();
    const Rational& g = c.gamma();
    const Rational& s = p[1];
    const Rational& x = p[2];
    const Rational& y = p[3];
    // With u = beta x / 2 (x1 = 1) the circle reads
    // y = (3 - beta) beta x^2 / 4 + gamma (beta - 1) x + alpha / beta - gamma^2.
    return y * s - (Rational(3) - b) * b / Rational(4) * x * x - g * (b - Rational(1)) * x * s -
           (a / b - g * g) * s * s;
}

Rational isotropic_curvature(const Rational& beta) {
    require_cubic_beta(beta);
    return Rational(1, 2) * beta * (Rational(3) - beta);
}

Mat4<Rational> homothety_B(const Rational& beta) {
    require_cubic_beta(beta);
    Rational k = (Rational(3) - beta) / beta;
    return Mat4<Rational>::diagonal(Rational(1), k, k, k);
}

}  // namespace cayley
