#include <doctest.h>

#include <sstream>

#include "cayley/errors.hpp"
#include "cayley/figure.hpp"

using namespace cayley;

namespace {
std::size_t count_kind(const FigureData& f, FigureKind k) {
    std::size_t n = 0;
    for (const auto& r : f.records) n += r.kind == k;
    return n;
}
}  // namespace

TEST_CASE("every figure re-validates after export") {
    for (int id = 1; id <= 4; ++id) {
        for (auto chart : {std::optional<Chart>{}, std::optional<Chart>{Chart::x0}, std::optional<Chart>{Chart::x3}}) {
            FigureData f = build_figure(id, chart, 7);
            CHECK(f.id == id);
            for (const auto& r : f.records) {
                CAPTURE(r.label);
                CHECK(!r.samples.empty());
                CHECK(revalidate(r));
            }
        }
    }
}

TEST_CASE("figure contents") {
    FigureData f1 = build_figure(1, std::nullopt, 5);
    CHECK(count_kind(f1, FigureKind::surface_patch) == 1);
    CHECK(f1.records.front().chart == Chart::x3);

    FigureData f2 = build_figure(2, std::nullopt, 5);
    CHECK(count_kind(f2, FigureKind::curve) == 5);
    CHECK(count_kind(f2, FigureKind::cylinder) == 5);
    CHECK(count_kind(f2, FigureKind::isotropic_circle) == 5);
    for (const auto& r : f2.records) {
        if (r.kind == FigureKind::curve) {
            CHECK(r.chart == Chart::x0);
            CHECK(r.curve->beta() == Rational(3, 2));
        }
        if (r.kind == FigureKind::isotropic_circle) CHECK(r.chart == Chart::omega);
    }

    FigureData f3 = build_figure(3, std::nullopt, 5);
    CHECK(count_kind(f3, FigureKind::curve) == 2);
    CHECK(count_kind(f3, FigureKind::dual_curve) == 2);

    FigureData f4 = build_figure(4, std::nullopt, 5);
    CHECK(count_kind(f4, FigureKind::curve) == 7);
    CHECK(f4.records.front().curve->alpha() == Rational(-3));
    CHECK(f4.records.back().curve->alpha() == Rational(3));
}

TEST_CASE("figure errors") {
    CHECK_THROWS(build_figure(5, std::nullopt, 5));
    CHECK_THROWS(build_figure(1, std::nullopt, 1));
    CHECK(parse_chart("omega") == Chart::omega);
    CHECK_THROWS_AS(parse_chart("x1"), ParseError);
}

TEST_CASE("tampered samples fail validation") {
    FigureData f = build_figure(4, std::nullopt, 5);
    FigureRecord r = f.records.front();
    r.samples.front()[0] += Rational(1, 7);
    CHECK_FALSE(revalidate(r));
    FigureRecord wrong = f.records.front();
    wrong.curve = CurveParams(99, Rational(3, 2), 0);
    CHECK_FALSE(revalidate(wrong));
}

TEST_CASE("chart projection round trip") {
    Vec4<Rational> x{2, 4, 6, 8};
    CHECK(chart_lift(*chart_project(x, Chart::x0), Chart::x0) == Vec4<Rational>{1, 2, 3, 4});
    CHECK(chart_lift(*chart_project(x, Chart::x3), Chart::x3) == Vec4<Rational>{Rational(1, 4), Rational(1, 2), Rational(3, 4), 1});
    CHECK_FALSE(chart_project(Vec4<Rational>{0, 1, 0, 0}, Chart::x0).has_value());
    CHECK_FALSE(chart_project(x, Chart::omega).has_value());
    CHECK(chart_lift(*chart_project(Vec4<Rational>{0, 2, 4, 6}, Chart::omega), Chart::omega) == Vec4<Rational>{0, 1, 2, 3});
}

TEST_CASE("CSV and manifest") {
    FigureData f = build_figure(3, std::nullopt, 3);
    std::string csv = figure_csv(f, false);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "label,kind,chart,c1,c2,c3");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find('.') == std::string::npos);
    }
    std::size_t total = 0;
    for (const auto& r : f.records) total += r.samples.size();
    CHECK(rows == total);
    CHECK(csv.find("\"curve 0,1/10,0\",curve,x3,-24/29,12/29,-60/29") != std::string::npos);
    CHECK(figure_csv(f, true).find("-0.827") != std::string::npos);

    nlohmann::json m = figure_manifest(f, "fig3.csv", false);
    CHECK(m["schema"] == 1);
    CHECK(m["figure"] == 3);
    CHECK(m["records"].size() == f.records.size());
}
