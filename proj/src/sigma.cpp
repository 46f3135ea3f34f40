#include "cayley/sigma.hpp"

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void require_cubic_beta(const Rational& beta) {
    if (beta.is_zero() || beta == Rational(3)) {
        throw DegenerateParameter("beta must differ from 0 and 3 (got " + beta.to_string() + ")");
    }
}

bool vec_is_zero(const Vec4<Poly>& v) { return is_zero_vec(v); }

}  // namespace

HPlane<Rational> sigma_plane(const Rational& alpha, const Rational& beta, const Rational& u) {
    require_cubic_beta(beta);
    return HPlane<Rational>(sigma_row(alpha, beta, u)).canonical();
}

std::optional<Rational> lambda_involution(const Rational& xi) {
    if (xi == Rational(3)) return std::nullopt;
    return (Rational(3) * xi - Rational(8)) / (xi - Rational(3));
}

SigmaClass sigma_classify(const Rational& beta) {
    require_cubic_beta(beta);
    if (beta == Rational(8, 3)) return HyperbolicParaboloidImage{};
    return CayleySurfaceImage{*lambda_involution(beta), beta - Rational(3)};
}

bool dual_cayley_membership(const HPlane<Rational>& plane) { return dual_cayley_form(plane.coords).is_zero(); }

Report verify_sigma_identity() {
    const Poly a = Poly::var(Var::alpha);
    const Poly b = Poly::var(Var::beta);
    const Poly u = Poly::var(Var::u);
    const Poly bm3 = b - Poly(3);
    Report report;
    auto add = [&](std::string name, std::string subst, bool pass) {
        report.push_back({std::move(name), "sigma", std::move(subst), pass});
    };

    const Vec4<Poly> row = sigma_row(a, b, u);

    // Route 1: null polarity of c(alpha,beta,0) applied to Phi((1,u)).
    {
        Params<Poly> p{a, b, Poly(0)};
        Vec4<Poly> via_polarity = null_polarity_body(p) * phi_cleared(p, Poly(1), u);
        add("sigma_row_equals_null_polarity_image", "gamma:=0", proportional(via_polarity, row));
    }

    // Route 2: D_beta o Phi_{alpha',beta',0}((1, (beta-3) u)) with
    // alpha' = alpha (beta - 3), beta' = (3 beta - 8) / (beta - 3).
    const Mat4<Poly> d = duality_D_body(b);
    {
        Vec4<Poly> x = phi_cleared(a * bm3, Poly(3) * b - Poly(8), bm3, Poly(0), Poly(1), bm3 * u);
        add("sigma_row_equals_D_beta_image", "alpha':=alpha(beta-3), beta':=(3beta-8)/(beta-3)",
            proportional(Vec4<Poly>(d * x), row));
    }

    // Pulling the row back through D_beta lands on F.
    {
        Vec4<Poly> pulled = adjugate(d) * row;
        add("sigma_row_pulls_back_onto_F", "x:=adj(D_beta) y^T", !vec_is_zero(pulled) && cayley_form(pulled).is_zero());
    }

    // beta = 8/3: image on the quadric y0 y3 - y1 y2 = 0.
    {
        Vec4<Poly> r = sigma_row(a, Poly(Rational(8, 3)), u);
        add("sigma_beta_8_3_on_ruled_quadric", "beta:=8/3", (r[0] * r[3] - r[1] * r[2]).is_zero());
    }

    // beta = 2: image consists of tangent planes of F itself.
    {
        Vec4<Poly> r = sigma_row(a, Poly(2), u);
        add("sigma_beta_2_on_dual_cayley", "beta:=2", dual_cayley_form(r).is_zero());
        Params<Poly> p{a, Poly(2), Poly(0)};
        Vec4<Poly> x = phi_cleared(p, Poly(1), u);
        Vec4<Poly> grad{Poly(3) * x[1] * x[2] - Poly(6) * x[0] * x[3], Poly(3) * x[0] * x[2] - Poly(3) * x[1] * x[1],
                        Poly(3) * x[0] * x[1], Poly(-3) * x[0] * x[0]};
        add("sigma_beta_2_equals_tangent_plane_F", "beta:=2", proportional(grad, r));
    }

    // Closed form of the null polarity of c(alpha,beta,0), up to 18(beta-3).
    {
        Params<Poly> p{a, b, Poly(0)};
        Poly z(0);
        Poly k = a * (b - Poly(4));
        Poly m = b * bm3;
        Mat4<Poly> reference({{
            {z, -k, z, -b},
            {k, z, -m, z},
            {z, m, z, z},
            {b, z, z, z},
        }});
        add("null_polarity_alpha_beta_0_matches_closed_form", "gamma:=0",
            proportional(null_polarity_body(p), reference.scaled(Poly(18) * bm3)));
    }

    // beta = 4: N_{alpha,4,0} is free of alpha.
    {
        Mat4<Poly> n4 = null_polarity_body(Params<Poly>{a, Poly(4), Poly(0)});
        bool free = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) free = free && !n4(i, j).contains(Var::alpha);
        add("null_polarity_beta_4_alpha_independent", "beta:=4,gamma:=0", free && !n4.is_zero());
    }

    // Lambda o Lambda = id and Fix(Lambda) = {2, 4}, as rational functions of xi.
    {
        const Poly& xi = b;
        Poly num = Poly(3) * xi - Poly(8);
        Poly den = xi - Poly(3);
        Poly num2 = Poly(3) * num - Poly(8) * den;
        Poly den2 = num - Poly(3) * den;
        add("lambda_is_involution", "xi:=beta", !den2.is_zero() && num2 == xi * den2);
        add("lambda_fixed_points_2_and_4", "xi:=beta", num - xi * den == -((xi - Poly(2)) * (xi - Poly(4))));
    }
    return report;
}

}  // namespace cayley
