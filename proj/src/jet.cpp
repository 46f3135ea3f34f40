#include "cayley/jet.hpp"

#include <algorithm>

#include "cayley/errors.hpp"

namespace cayley {

Jet Jet::t() {
    Jet j;
    j.c_[1] = Rational(1);
    return j;
}

bool Jet::is_zero() const {
    for (const auto& x : c_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k < Jet::kLength; ++k) r[k] = a[k] + b[k];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k < Jet::kLength; ++k) r[k] = a[k] - b[k];
    return r;
}

Jet operator-(const Jet& a) {
    Jet r;
    for (int k = 0; k < Jet::kLength; ++k) r[k] = -a[k];
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i < Jet::kLength; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < Jet::kLength; ++j) {
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Jet Jet::reciprocal() const {
    if (c_[0].is_zero()) throw Error("Jet::reciprocal: zero constant term");
    Jet r;
    Rational inv0 = c_[0].inverse();
    r[0] = inv0;
    for (int k = 1; k < kLength; ++k) {
        Rational sum(0);
        for (int j = 1; j <= k; ++j) sum += c_[static_cast<std::size_t>(j)] * r[k - j];
        r[k] = -sum * inv0;
    }
    return r;
}

Jet Jet::compose(const Jet& s) const {
    if (!s[0].is_zero()) throw Error("Jet::compose: inner series must vanish at 0");
    Jet r(c_[kLength - 1]);
    for (int k = kLength - 2; k >= 0; --k) r = r * s + Jet(c_[static_cast<std::size_t>(k)]);
    return r;
}

std::array<Jet, 3> curve_jet(const CurveParams& c, Mode mode) {
    Params<Jet> p{Jet(c.alpha()), Jet(c.beta()), Jet(c.gamma())};
    Vec4<Jet> x = phi_cleared(p, Jet::t(), Jet(1));

    Vec4<Jet> v = x;
    int chart = 3;
    if (mode == Mode::dual) {
        Mat4<Rational> n = null_polarity(c);
        for (int i = 0; i < 4; ++i) {
            Jet sum;
            for (int k = 0; k < 4; ++k) sum = sum + Jet(n(i, k)) * x[static_cast<std::size_t>(k)];
            v[static_cast<std::size_t>(i)] = sum;
        }
        chart = 0;
    }
    if (v[static_cast<std::size_t>(chart)][0].is_zero()) {
        throw ChartFailure("curve " + c.to_string() + " leaves the affine chart at the contact parameter");
    }
    Jet inv = v[static_cast<std::size_t>(chart)].reciprocal();
    std::array<Jet, 3> out;
    for (int i = 0, k = 0; i < 4; ++i) {
        if (i == chart) continue;
        out[static_cast<std::size_t>(k++)] = v[static_cast<std::size_t>(i)] * inv;
    }
    return out;
}

ContactOrder jet_contact_order(const CurveParams& c, const CurveParams& d, Mode mode, int max_k) {
    if (max_k < 0 || max_k > Jet::kJetOrder) throw Error("jet_contact_order: max_k must lie in 0..6");
    const auto a = curve_jet(c, mode);
    const auto b = curve_jet(d, mode);

    for (int i = 0; i < 3; ++i) {
        if (a[i][0] != b[i][0]) throw ChartFailure("curves do not share the chart origin");
    }
    if (max_k == 0) return ContactOrder::finite(0);

    // A coordinate along the common tangent drives the reparametrization.
    int lead = -1;
    for (int i = 0; i < 3; ++i) {
        if (!a[i][1].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead < 0) throw ChartFailure("curve " + c.to_string() + " is singular at the contact parameter");
    if (b[lead][1].is_zero()) return ContactOrder::finite(0);

    // Solve b_lead(s(t)) = a_lead(t) order by order; the system is triangular
    // with pivot b_lead[1].
    Jet s;
    const Rational pivot = b[lead][1].inverse();
    for (int j = 1; j <= max_k; ++j) {
        Jet trial = s;
        trial[j] = Rational(0);
        Rational rest = b[lead].compose(trial)[j];
        s[j] = (a[lead][j] - rest) * pivot;
    }
    // Discard terms beyond max_k so they cannot leak into the comparison.
    for (int j = max_k + 1; j < Jet::kLength; ++j) s[j] = Rational(0);

    int first_mismatch = max_k + 1;
    for (int i = 0; i < 3; ++i) {
        Jet bs = b[i].compose(s);
        for (int j = 1; j <= max_k; ++j) {
            if (bs[j] != a[i][j]) {
                first_mismatch = std::min(first_mismatch, j);
                break;
            }
        }
    }
    if (first_mismatch <= max_k) return ContactOrder::finite(first_mismatch - 1);
    return max_k >= 5 ? ContactOrder::identical() : ContactOrder::finite(max_k);
}

}  // namespace cayley
