#include <doctest.h>

#include <cmath>
#include <numbers>

#include "discs.hpp"
#include "simploc/error.hpp"
#include "simploc/generators.hpp"
#include "simploc/metric.hpp"

using namespace simploc;

namespace {

// Isosceles triangle with apex angle 2pi/k and unit base, by coordinates:
// base from (-1/2, 0) to (1/2, 0), apex at (0, h).
struct Planar {
    double apex, base, leg, area;
};

Planar planar_triangle(int k)
{
    const double h = 0.5 / std::tan(std::numbers::pi / k);
    const double leg = std::hypot(0.5, h);
    const double base = std::atan2(h, 0.5);
    return {std::numbers::pi - 2 * base, base, leg, 0.5 * h};
}

} // namespace

TEST_CASE("triangle shapes agree with planar trigonometry")
{
    for (int k : {4, 5, 6}) {
        const TriangleShape s = triangle_shape_for(k);
        const Planar p = planar_triangle(k);
        CHECK(std::abs(s.apex.radians() - p.apex) < 1e-12);
        CHECK(std::abs(s.base.radians() - p.base) < 1e-12);
        CHECK(std::abs(s.leg_length - p.leg) < 1e-12);
        CHECK(std::abs(s.area() - p.area) < 1e-12);
        CHECK(s.apex.units + 2 * s.base.units == ExactAngle::kUnitsPerPi);
    }
    CHECK(triangle_shape_for(4).apex.units == 30);
    CHECK(triangle_shape_for(4).base.units == 15);
    CHECK(triangle_shape_for(5).apex.units == 24);
    CHECK(triangle_shape_for(5).base.units == 18);
    CHECK(triangle_shape_for(6).apex.units == 20);
    CHECK(std::abs(triangle_shape_for(4).leg_length - 1 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(triangle_shape_for(4).area() - 0.25) < 1e-12);
    CHECK(std::abs(triangle_shape_for(5).area() - std::tan(3 * std::numbers::pi / 10) / 4) < 1e-12);
    CHECK(std::abs(triangle_shape_for(6).area() - std::sqrt(3.0) / 4) < 1e-12);
    CHECK_THROWS_AS(triangle_shape_for(3), InputError);
    CHECK_THROWS_AS(triangle_shape_for(7), InputError);
}

TEST_CASE("area floor is T4")
{
    double least = 1e9;
    for (int k : {4, 5, 6})
        least = std::min(least, triangle_shape_for(k).area());
    CHECK(std::abs(least - 0.25) < 1e-12);
}

TEST_CASE("hexagonal discs are flat")
{
    const auto M = metrize(hex_disc(3));
    CHECK(M.flattened_wheels().empty());
    for (VertexId v : M.disc().interior_vertices())
        CHECK(angle_sum(M, v).units == 120);
    CHECK(is_cat0(M).cat0);
    CHECK(std::abs(metric_area(M) - 54 * std::sqrt(3.0) / 4) < 1e-9);
    CHECK_THROWS_AS(angle_sum(M, M.disc().boundary().vertices[0]), InputError);
}

TEST_CASE("one flattened 5-wheel")
{
    const auto M = metrize(fixtures::wheel_disc(5));
    REQUIRE(M.flattened_wheels().size() == 1);
    CHECK(angle_sum(M, 0).units == 120);
    CHECK(std::abs(metric_area(M) - 5 * std::tan(3 * std::numbers::pi / 10) / 4) < 1e-12);
    CHECK(std::abs(metric_area(M) - 1.7205) < 1e-4);
    for (const auto& t : M.shapes()) {
        CHECK(t.shape.k == 5);
        CHECK(t.apex == 0);
    }
}

TEST_CASE("degree 7 next to degree 5")
{
    const auto M = metrize(fixtures::seven_next_to_five());
    const ExactAngle at_seven = angle_sum(M, 0);
    CHECK(at_seven.units == 2 * 18 + 5 * 20);
    CHECK(at_seven.units >= 126);
    CHECK(angle_sum(M, 1).units == 120);
    CHECK(is_cat0(M).cat0);
}

TEST_CASE("overlapping flattened wheels leave the metric undefined")
{
    try {
        metrize(fixtures::two_five_wheels());
        FAIL("expected MetricUndefined");
    } catch (const MetricUndefined& e) {
        CHECK(e.first_center == 0);
        CHECK(e.second_center == 1);
    }
    // Degree-3 interior vertex.
    const auto A = SimplicialDisc::build({{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 1, 2});
    CHECK_THROWS_AS(metrize(A), MetricUndefined);
}

TEST_CASE("a 4-wheel flattens to a square")
{
    const auto M = metrize(fixtures::wheel_disc(4));
    CHECK(angle_sum(M, 0).units == 120);
    CHECK(std::abs(metric_area(M) - 1.0) < 1e-12);
}

TEST_CASE("isoperimetric bound")
{
    CHECK(isoperimetric_bound(3).triangles == 2);
    CHECK(isoperimetric_bound(6).triangles == 11);
    CHECK(isoperimetric_bound(10).triangles == 31);
    CHECK(std::abs(isoperimetric_bound(7).value - 49 / std::numbers::pi) < 1e-12);
    CHECK_THROWS_AS(isoperimetric_bound(2), InputError);
}

TEST_CASE("svg export")
{
    const std::string svg = export_svg(metrize(fixtures::seven_next_to_five()));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t polygons = 0;
    for (std::size_t pos = svg.find("<polygon"); pos != std::string::npos; pos = svg.find("<polygon", pos + 1))
        ++polygons;
    CHECK(polygons == 10);
    CHECK(svg.find("nan") == std::string::npos);
}
