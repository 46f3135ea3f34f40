#include "cayley/figure.hpp"

#include <iomanip>
#include <sstream>

#include "cayley/contact.hpp"
#include "cayley/errors.hpp"

namespace cayley {

namespace {

// n evenly spaced rationals on [lo, hi].
std::vector<Rational> grid(const Rational& lo, const Rational& hi, std::size_t n) {
    std::vector<Rational> out;
    out.reserve(n);
    const Rational step = (hi - lo) / Rational(static_cast<long>(n - 1));
    for (std::size_t k = 0; k < n; ++k) out.push_back(lo + step * Rational(static_cast<long>(k)));
    return out;
}

Vec4<Rational> curve_point(const CurveParams& c, const Rational& t, Chart chart) {
    // Around U in the x3 chart, along the affine part in the x0 chart.
    if (chart == Chart::x3) return phi_map(c, t, Rational(1)).coords;
    return phi_map(c, Rational(1), t).coords;
}

class Builder {
public:
    Builder(int id, std::size_t n) : n_(n) { fig_.id = id; }

    void push(FigureRecord r, const std::vector<Vec4<Rational>>& points) {
        for (const auto& x : points) {
            if (!sample_valid(r, x)) throw Error("figure sample fails its defining equation: " + r.label);
            if (auto p = chart_project(x, r.chart)) r.samples.push_back(*p);
        }
        // A generator in x3 = 0 has nothing to show in the x3 chart.
        if (!r.samples.empty()) fig_.records.push_back(std::move(r));
    }

    void surface_patch(Chart chart) {
        std::vector<Vec4<Rational>> pts;
        for (const auto& a : grid(Rational(-3), Rational(3), n_)) {
            CurveParams c(a, Rational(3, 2), Rational(0));
            for (const auto& t : grid(Rational(-2), Rational(2), n_)) pts.push_back(curve_point(c, t, chart));
        }
        push({"patch", FigureKind::surface_patch, chart, std::nullopt, std::nullopt, {}}, pts);
    }

    void generators(Chart chart) {
        for (long k = -3; k <= 3; ++k) {
            const Rational a(k, 2);
            std::vector<Vec4<Rational>> pts;
            for (const auto& v : grid(Rational(-2), Rational(2), n_)) {
                // (r, s) = (1, v) in the x0 chart, (v, 1) otherwise.
                const Rational r = chart == Chart::x0 ? Rational(1) : v;
                const Rational s = chart == Chart::x0 ? v : Rational(1);
                pts.push_back({r, a * r, s, a * s - a * a * a * r / Rational(3)});
            }
            push({"generator a=" + a.to_string(), FigureKind::generator, chart, std::nullopt, a, {}}, pts);
        }
    }

    void curve(const CurveParams& c, Chart chart, const Rational& lo, const Rational& hi) {
        std::vector<Vec4<Rational>> pts;
        for (const auto& t : grid(lo, hi, n_)) pts.push_back(curve_point(c, t, chart));
        push({"curve " + c.to_string(), FigureKind::curve, chart, c, std::nullopt, {}}, pts);
    }

    void cylinder(const CurveParams& c, Chart chart) {
        std::vector<Vec4<Rational>> pts;
        for (const auto& x1 : grid(Rational(-2), Rational(2), n_)) {
            const Rational s = x1 + c.gamma();
            const Rational x2 = (c.alpha() + s * s) / c.beta();
            for (const auto& x3 : grid(Rational(-2), Rational(2), n_)) pts.push_back({Rational(1), x1, x2, x3});
        }
        push({"cylinder " + c.to_string(), FigureKind::cylinder, chart, c, std::nullopt, {}}, pts);
    }

    void dual_curve(const CurveParams& c, Chart chart) {
        const Mat4<Rational> n = null_polarity(c);
        std::vector<Vec4<Rational>> planes;
        for (const auto& t : grid(Rational(-2), Rational(2), n_)) planes.push_back(n * curve_point(c, t, chart));
        push({"dual " + c.to_string(), FigureKind::dual_curve, chart, c, std::nullopt, {}}, planes);
    }

    void isotropic_circle(const CurveParams& c) {
        std::vector<Vec4<Rational>> pts;
        for (const auto& u : grid(Rational(-2), Rational(2), n_)) pts.push_back(isotropic_circle_point(c, u).coords);
        push({"circle " + c.to_string(), FigureKind::isotropic_circle, Chart::omega, c, std::nullopt, {}}, pts);
    }

    FigureData take() { return std::move(fig_); }

private:
    std::size_t n_;
    FigureData fig_;
};

void require_order(const CurveParams& c, const CurveParams& d, int k) {
    if (contact_order(c, d) != ContactOrder::finite(k)) {
        throw Error("contact order check failed for " + c.to_string() + " and " + d.to_string());
    }
}

}  // namespace

std::string_view kind_name(FigureKind k) {
    switch (k) {
        case FigureKind::surface_patch: return "surface-patch";
        case FigureKind::generator: return "generator";
        case FigureKind::curve: return "curve";
        case FigureKind::cylinder: return "cylinder";
        case FigureKind::dual_curve: return "dual-curve";
        case FigureKind::isotropic_circle: return "isotropic-circle";
    }
    return "?";
}

std::string_view chart_name(Chart c) {
    switch (c) {
        case Chart::x0: return "x0";
        case Chart::x3: return "x3";
        case Chart::omega: return "omega";
    }
    return "?";
}

Chart parse_chart(std::string_view text) {
    if (text == "x0") return Chart::x0;
    if (text == "x3") return Chart::x3;
    if (text == "omega") return Chart::omega;
    throw ParseError("unknown chart '" + std::string(text) + "' (expected x0, x3 or omega)");
}

std::optional<std::array<Rational, 3>> chart_project(const Vec4<Rational>& x, Chart chart) {
    switch (chart) {
        case Chart::x0:
            if (x[0].is_zero()) return std::nullopt;
            return std::array{x[1] / x[0], x[2] / x[0], x[3] / x[0]};
        case Chart::x3:
            if (x[3].is_zero()) return std::nullopt;
            return std::array{x[0] / x[3], x[1] / x[3], x[2] / x[3]};
        case Chart::omega:
            if (!x[0].is_zero() || x[1].is_zero()) return std::nullopt;
            return std::array{x[2] / x[1], x[3] / x[1], Rational(0)};
    }
    return std::nullopt;
}

Vec4<Rational> chart_lift(const std::array<Rational, 3>& c, Chart chart) {
    switch (chart) {
        case Chart::x0: return {Rational(1), c[0], c[1], c[2]};
        case Chart::x3: return {c[0], c[1], c[2], Rational(1)};
        case Chart::omega: return {Rational(0), Rational(1), c[0], c[1]};
    }
    return {};
}

bool sample_valid(const FigureRecord& r, const Vec4<Rational>& x) {
    if (is_zero_vec(x)) return false;
    switch (r.kind) {
        case FigureKind::surface_patch: return cayley_form(x).is_zero();
        case FigureKind::generator: {
            if (!r.generator_slope || !cayley_form(x).is_zero()) return false;
            // On the line spanned by (1, a, 0, -a^3/3) and (0, 0, 1, a).
            const Rational& a = *r.generator_slope;
            return (x[1] - a * x[0]).is_zero() && (x[3] - a * x[2] + a * a * a * x[0] / Rational(3)).is_zero();
        }
        case FigureKind::curve:
            return r.curve && cayley_form(x).is_zero() && cylinder_form(r.curve->triple(), x).is_zero();
        case FigureKind::cylinder: return r.curve && cylinder_form(r.curve->triple(), x).is_zero();
        case FigureKind::dual_curve: {
            if (!r.curve) return false;
            const Vec4<Rational> pole = mat_inverse(null_polarity(*r.curve)) * x;
            return cayley_form(pole).is_zero() && cylinder_form(r.curve->triple(), pole).is_zero();
        }
        case FigureKind::isotropic_circle:
            return r.curve && x[0].is_zero() && isotropic_circle_form(*r.curve, HPoint<Rational>(x)).is_zero();
    }
    return false;
}

bool revalidate(const FigureRecord& r) {
    for (const auto& s : r.samples) {
        if (!sample_valid(r, chart_lift(s, r.chart))) return false;
    }
    return true;
}

FigureData build_figure(int id, std::optional<Chart> chart, std::size_t samples) {
    if (samples < 2) throw Error("at least 2 samples are required");
    Builder b(id, samples);
    switch (id) {
        case 1: {
            const Chart ch = chart.value_or(Chart::x3);
            b.surface_patch(ch);
            b.generators(ch);
            break;
        }
        case 2: {
            const Chart ch = chart.value_or(Chart::x0);
            b.generators(ch);
            for (const Rational& a : {Rational(-3, 2), Rational(-3, 4), Rational(0), Rational(3, 4), Rational(3, 2)}) {
                CurveParams c(a, Rational(3, 2), Rational(0));
                b.curve(c, ch, Rational(-2), Rational(2));
                b.cylinder(c, ch);
                b.isotropic_circle(c);
            }
            break;
        }
        case 3: {
            const Chart ch = chart.value_or(Chart::x3);
            CurveParams c(Rational(0), Rational(1, 10), Rational(0));
            CurveParams d(Rational(1), Rational(29, 10), Rational(1, 10));
            require_order(c, d, 2);
            for (const auto& e : {c, d}) {
                b.curve(e, ch, Rational(-2), Rational(2));
                b.dual_curve(e, ch);
            }
            break;
        }
        case 4: {
            const Chart ch = chart.value_or(Chart::x3);
            std::vector<CurveParams> family;
            for (long a = -3; a <= 3; ++a) family.emplace_back(Rational(a), Rational(3, 2), Rational(0));
            for (std::size_t i = 0; i < family.size(); ++i)
                for (std::size_t j = i + 1; j < family.size(); ++j) require_order(family[i], family[j], 4);
            for (const auto& c : family) b.curve(c, ch, Rational(-2), Rational(2));
            break;
        }
        default: throw Error("figure id must be 1, 2, 3 or 4");
    }
    return b.take();
}

std::string figure_csv(const FigureData& fig, bool as_float) {
    std::ostringstream os;
    os << "label,kind,chart,c1,c2,c3\n";
    if (as_float) os << std::setprecision(17);
    for (const auto& r : fig.records) {
        for (const auto& s : r.samples) {
            os << '"' << r.label << "\"," << kind_name(r.kind) << ',' << chart_name(r.chart);
            for (const auto& v : s) {
                os << ',';
                if (as_float) {
                    os << v.to_double();
                } else {
                    os << v.to_string();
                }
            }
            os << '\n';
        }
    }
    return os.str();
}

nlohmann::json figure_manifest(const FigureData& fig, const std::string& csv_name, bool as_float) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : fig.records) {
        nlohmann::json j{{"label", r.label},
                         {"kind", kind_name(r.kind)},
                         {"chart", chart_name(r.chart)},
                         {"samples", r.samples.size()}};
        if (r.curve) {
            j["params"] = {r.curve->alpha().to_string(), r.curve->beta().to_string(), r.curve->gamma().to_string()};
        }
        if (r.generator_slope) j["slope"] = r.generator_slope->to_string();
        records.push_back(std::move(j));
    }
    return {{"schema", 1},
            {"figure", fig.id},
            {"csv", csv_name},
            {"values", as_float ? "float" : "exact"},
            {"records", records}};
}

}  // namespace cayley
