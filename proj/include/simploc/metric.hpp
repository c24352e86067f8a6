#pragma once

#include <compare>
#include <string>
#include <vector>

#include "simploc/disc.hpp"

namespace simploc {

/// An angle stored as an integer count of pi/60. Every corner angle of the
/// T4/T5/T6 shapes is such a multiple, so curvature verdicts are exact.
struct ExactAngle {
    int units = 0;

    static constexpr int kUnitsPerPi = 60;
    static constexpr int kFullTurn = 2 * kUnitsPerPi;

    double radians() const;
    /// Multiple of pi as a double (units / 60).
    double pi_multiple() const { return static_cast<double>(units) / kUnitsPerPi; }

    friend ExactAngle operator+(ExactAngle a, ExactAngle b) { return {a.units + b.units}; }
    friend ExactAngle operator*(int k, ExactAngle a) { return {k * a.units}; }
    friend bool operator==(ExactAngle, ExactAngle) = default;
    friend auto operator<=>(ExactAngle, ExactAngle) = default;
};

/// Isosceles triangle of the regular k-gon fan: apex angle 2pi/k at the
/// wheel center, base edge of length 1.
struct TriangleShape {
    int k = 6;
    ExactAngle apex;
    ExactAngle base;
    double base_length = 1.0;
    double leg_length = 1.0;

    double area() const;
};

/// k in {4, 5, 6}; throws InputError otherwise.
TriangleShape triangle_shape_for(int k);

struct TriangleMetric {
    TriangleShape shape;
    VertexId apex = -1; // -1 for the equilateral T6
};

class MetrizedDisc {
public:
    MetrizedDisc(SimplicialDisc disc, std::vector<TriangleMetric> shapes,
                 std::vector<WheelWitness> flattened)
        : disc_(std::move(disc)), shapes_(std::move(shapes)), flattened_(std::move(flattened))
    {
    }

    const SimplicialDisc& disc() const { return disc_; }
    const std::vector<TriangleMetric>& shapes() const { return shapes_; }
    const std::vector<WheelWitness>& flattened_wheels() const { return flattened_; }

    /// Angle of triangle `t` at its vertex `v`.
    ExactAngle corner(std::size_t t, VertexId v) const;

private:
    SimplicialDisc disc_;
    std::vector<TriangleMetric> shapes_;
    std::vector<WheelWitness> flattened_;
};

/// Flattened wheel metric: the star of each interior vertex of degree k < 6
/// becomes a regular k-gon, every other triangle a unit equilateral one.
/// Throws MetricUndefined when two flattened wheels overlap outside their
/// boundaries (adjacent centers) or an interior vertex has degree 3.
MetrizedDisc metrize(const SimplicialDisc& D);

/// Throws InputError for a boundary vertex.
ExactAngle angle_sum(const MetrizedDisc& M, VertexId v);

struct Cat0Verdict {
    bool cat0 = true;
    std::vector<VertexId> deficient; // interior vertices with angle sum < 2pi
};

/// Angle criterion: every interior vertex has angle sum >= 2pi. Exact.
Cat0Verdict is_cat0(const MetrizedDisc& M);

double metric_area(const MetrizedDisc& M);

struct IsoperimetricBound {
    double value;        // n^2 / pi
    long long triangles; // floor(n^2 / pi)
};

/// Triangle-count bound for a 7-located disc of boundary length n >= 3.
IsoperimetricBound isoperimetric_bound(int n);

/// Combinatorial (non-isometric) drawing: Tutte embedding with the boundary
/// on a regular polygon, triangles colored by shape.
std::string export_svg(const MetrizedDisc& M);

} // namespace simploc
