#pragma once

// Point data for the four illustrations: surface patches, generators, curves,
// their cylinders, dual curves and isotropic circles. Samples are exact and
// validated against their defining equation before chart projection.
//
// Charts: x0 and x3 set that homogeneous coordinate to 1 and keep the other
// three in order; omega is the plane x0 = 0 with x1 = 1, written (x2, x3, 0).
// Dual curves are planes; their chart normalizes the same coordinate index.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cayley/family.hpp"

namespace cayley {

enum class FigureKind { surface_patch, generator, curve, cylinder, dual_curve, isotropic_circle };
enum class Chart { x0, x3, omega };

std::string_view kind_name(FigureKind k);
std::string_view chart_name(Chart c);
Chart parse_chart(std::string_view text);

struct FigureRecord {
    std::string label;
    FigureKind kind;
    Chart chart;
    // Curve the record belongs to (curves, cylinders, dual curves, circles).
    std::optional<CurveParams> curve;
    // Slope a of the generator (r, a r, s, a s - a^3 r / 3).
    std::optional<Rational> generator_slope;
    std::vector<std::array<Rational, 3>> samples;
};

struct FigureData {
    int id = 0;
    std::vector<FigureRecord> records;
};

// Projects to the chart; std::nullopt when the chart coordinate vanishes.
std::optional<std::array<Rational, 3>> chart_project(const Vec4<Rational>& x, Chart chart);
Vec4<Rational> chart_lift(const std::array<Rational, 3>& c, Chart chart);

// Checks the defining equation of the record's kind at one homogeneous sample.
bool sample_valid(const FigureRecord& r, const Vec4<Rational>& x);
// Lifts every exported sample back and re-checks it.
bool revalidate(const FigureRecord& r);

// Figure 1..4. `chart` overrides the figure's default chart for everything
// except isotropic circles; `samples` >= 2 per curve parameter direction.
FigureData build_figure(int id, std::optional<Chart> chart, std::size_t samples);

std::string figure_csv(const FigureData& fig, bool as_float);
nlohmann::json figure_manifest(const FigureData& fig, const std::string& csv_name, bool as_float);

}  // namespace cayley
