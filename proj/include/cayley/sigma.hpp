#pragma once

// The map Sigma on the affine part of F: a point of c(alpha, beta, 0) goes to
// the osculating plane of that curve there (beta fixed). Its image is a dual
// Cayley surface for beta != 8/3 and a hyperbolic paraboloid for beta = 8/3.

#include <optional>
#include <variant>

#include "cayley/family.hpp"
#include "cayley/proj.hpp"
#include "cayley/report.hpp"

namespace cayley {

// Row vector of the Sigma-image of Phi_{alpha,beta,0}((1, u)) at reference scale.
template <class S>
Vec4<S> sigma_row(const S& alpha, const S& beta, const S& u) {
    S bm3 = beta - S(3);
    S lead = S(6) * bm3;
    return {lead * bm3 * (u * u - S(3) * alpha) * u, lead * (S(-3) * bm3 * u * u - S(3) * alpha),
            lead * S(3) * beta * bm3 * u, lead * S(3) * beta};
}

// D_beta = 18 / (beta - 3) * duality_D_body(beta).
template <class S>
Mat4<S> duality_D_body(const S& beta) {
    S z(0);
    S k = -(S(3) * beta - S(8));
    S m = beta * (beta - S(3)) * (beta - S(3));
    return Mat4<S>({{
                       {z, z, z, k},
                       {z, z, k, z},
                       {z, m, z, z},
                       {m, z, z, z},
                   }},
                   MatRole::duality);
}

HPlane<Rational> sigma_plane(const Rational& alpha, const Rational& beta, const Rational& u);

// Lambda(xi) = (3 xi - 8) / (xi - 3); std::nullopt stands for infinity (xi = 3).
std::optional<Rational> lambda_involution(const Rational& xi);

struct CayleySurfaceImage {
    Rational beta_prime;
    // alpha' = alpha_scale * alpha.
    Rational alpha_scale;
    Rational alpha_prime(const Rational& alpha) const { return alpha_scale * alpha; }
};

struct HyperbolicParaboloidImage {};

using SigmaClass = std::variant<CayleySurfaceImage, HyperbolicParaboloidImage>;

SigmaClass sigma_classify(const Rational& beta);

// Is the plane tangent to F (dual Cayley equation)?
bool dual_cayley_membership(const HPlane<Rational>& plane);

Report verify_sigma_identity();

}  // namespace cayley
