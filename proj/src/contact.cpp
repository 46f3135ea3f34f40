#include "cayley/contact.hpp"

#include "cayley/errors.hpp"

namespace cayley {

int ContactOrder::order() const {
    if (is_identical()) throw Error("ContactOrder: identical curves have no finite order");
    return k_;
}

std::string ContactOrder::to_string() const { return is_identical() ? "identical" : std::to_string(k_); }

std::string_view mode_name(Mode m) { return m == Mode::primal ? "primal" : "dual"; }

Mat4<Rational> contact_matrix(const CurveParams& c, const CurveParams& d) {
    return contact_matrix_body(c.triple(), d.triple());
}

Mat4<Rational> dual_contact_matrix(const CurveParams& c, const CurveParams& d) {
    return dual_contact_matrix_body(c.triple(), d.triple());
}

ContactOrder contact_order(const CurveParams& c, const CurveParams& d) {
    if (c == d) return ContactOrder::identical();
    return order_from_table(h_coefficients(contact_matrix(c, d)));
}

ContactOrder dual_contact_order(const CurveParams& c, const CurveParams& d) {
    if (c == d) return ContactOrder::identical();
    return order_from_table(h_coefficients(dual_contact_matrix(c, d)));
}

ContactOrder contact_order(const CurveParams& c, const CurveParams& d, Mode mode) {
    return mode == Mode::primal ? contact_order(c, d) : dual_contact_order(c, d);
}

ContactOrder predicted_order(const CurveParams& c, const CurveParams& d, Mode mode) {
    if (c == d) return ContactOrder::identical();
    const bool same_beta = c.beta() == d.beta();
    const bool same_gamma = c.gamma() == d.gamma();
    // Exceptional beta values: 3/2 primally, 5/2 and 7/3 dually.
    auto both = [&](const Rational& v) { return same_beta && c.beta() == v; };

    int k = 1;
    if (mode == Mode::primal) {
        if (same_beta || c.beta() == Rational(3) - d.beta()) k = 2;
        if ((same_beta && same_gamma) || both(Rational(3, 2))) k = 3;
        if (both(Rational(3, 2)) && same_gamma) k = 4;
    } else {
        if (same_beta) k = 2;
        if ((same_beta && same_gamma) || both(Rational(5, 2))) k = 3;
        if (both(Rational(7, 3)) && same_gamma) k = 4;
    }
    return ContactOrder::finite(k);
}

}  // namespace cayley
