#include "simploc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "simploc/error.hpp"

namespace simploc {

double ExactAngle::radians() const
{
    return std::numbers::pi * units / kUnitsPerPi;
}

double TriangleShape::area() const
{
    // Base 1, height = 1 / (2 tan(pi/k)).
    return base_length * base_length / (4.0 * std::tan(std::numbers::pi / k));
}

TriangleShape triangle_shape_for(int k)
{
    if (k < 4 || k > 6)
        throw InputError("flattened wheel shapes exist for k in {4, 5, 6}, got " + std::to_string(k));
    TriangleShape s;
    s.k = k;
    s.apex = {ExactAngle::kFullTurn / k};
    s.base = {ExactAngle::kUnitsPerPi * (k - 2) / (2 * k)};
    s.base_length = 1.0;
    s.leg_length = 1.0 / (2.0 * std::sin(std::numbers::pi / k));
    return s;
}

ExactAngle MetrizedDisc::corner(std::size_t t, VertexId v) const
{
    const auto& m = shapes_.at(t);
    return m.apex == v ? m.shape.apex : m.shape.base;
}

MetrizedDisc metrize(const SimplicialDisc& D)
{
    std::vector<VertexId> centers;
    for (VertexId v : D.interior_vertices()) {
        if (D.degree(v) == 3)
            throw MetricUndefined("interior vertex " + std::to_string(v) +
                                      " has degree 3; no flattened 3-wheel exists",
                                  v, -1);
        if (D.degree(v) < 6)
            centers.push_back(v);
    }
    // Two flattened wheels meet outside their boundaries exactly when their
    // centers are adjacent.
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (D.adjacent(centers[i], centers[j]))
                throw MetricUndefined("flattened wheels centered at " + std::to_string(centers[i]) +
                                          " and " + std::to_string(centers[j]) + " share a triangle",
                                      centers[i], centers[j]);

    std::vector<bool> is_center(D.vertex_count(), false);
    for (VertexId c : centers)
        is_center[c] = true;

    const TriangleShape equilateral = triangle_shape_for(6);
    std::vector<TriangleMetric> shapes;
    shapes.reserve(D.triangle_count());
    for (const auto& tri : D.triangles()) {
        TriangleMetric m{equilateral, -1};
        for (VertexId v : tri)
            if (is_center[v])
                m = {triangle_shape_for(D.degree(v)), v};
        shapes.push_back(m);
    }
    std::vector<WheelWitness> wheels;
    for (VertexId c : centers)
        wheels.push_back(D.wheel_at(c));
    return MetrizedDisc(D, std::move(shapes), std::move(wheels));
}

ExactAngle angle_sum(const MetrizedDisc& M, VertexId v)
{
    const auto& D = M.disc();
    if (v < 0 || v >= D.vertex_count())
        throw InputError("vertex " + std::to_string(v) + " is not in the disc");
    if (!D.is_interior(v))
        throw InputError("vertex " + std::to_string(v) + " is on the boundary");
    ExactAngle sum;
    for (std::size_t t = 0; t < D.triangles().size(); ++t) {
        const auto& tri = D.triangles()[t];
        if (std::find(tri.begin(), tri.end(), v) != tri.end())
            sum = sum + M.corner(t, v);
    }
    return sum;
}

Cat0Verdict is_cat0(const MetrizedDisc& M)
{
    Cat0Verdict verdict;
    for (VertexId v : M.disc().interior_vertices())
        if (angle_sum(M, v).units < ExactAngle::kFullTurn)
            verdict.deficient.push_back(v);
    verdict.cat0 = verdict.deficient.empty();
    return verdict;
}

double metric_area(const MetrizedDisc& M)
{
    double total = 0.0;
    for (const auto& m : M.shapes())
        total += m.shape.area();
    return total;
}

IsoperimetricBound isoperimetric_bound(int n)
{
    if (n < 3)
        throw InputError("boundary length must be at least 3");
    const double value = static_cast<double>(n) * n / std::numbers::pi;
    return {value, static_cast<long long>(std::floor(value))};
}

std::string export_svg(const MetrizedDisc& M)
{
    const auto& D = M.disc();
    const int n = D.vertex_count();
    const auto& rim = D.boundary().vertices;
    const int b = static_cast<int>(rim.size());

    std::vector<double> x(n, 0.0), y(n, 0.0);
    for (int i = 0; i < b; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / b;
        x[rim[i]] = std::cos(phi);
        y[rim[i]] = std::sin(phi);
    }

    const auto inner = D.interior_vertices();
    if (!inner.empty()) {
        std::vector<int> slot(n, -1);
        for (std::size_t i = 0; i < inner.size(); ++i)
            slot[inner[i]] = static_cast<int>(i);
        const int m = static_cast<int>(inner.size());
        std::vector<Eigen::Triplet<double>> entries;
        Eigen::VectorXd rx = Eigen::VectorXd::Zero(m), ry = Eigen::VectorXd::Zero(m);
        for (int i = 0; i < m; ++i) {
            const VertexId v = inner[i];
            entries.emplace_back(i, i, static_cast<double>(D.degree(v)));
            for (VertexId w : D.rotation(v)) {
                if (slot[w] >= 0) {
                    entries.emplace_back(i, slot[w], -1.0);
                } else {
                    rx[i] += x[w];
                    ry[i] += y[w];
                }
            }
        }
        Eigen::SparseMatrix<double> L(m, m);
        L.setFromTriplets(entries.begin(), entries.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
        solver.compute(L);
        const Eigen::VectorXd sx = solver.solve(rx), sy = solver.solve(ry);
        for (int i = 0; i < m; ++i) {
            x[inner[i]] = sx[i];
            y[inner[i]] = sy[i];
        }
    }

    auto px = [&](VertexId v) { return 200.0 + 180.0 * x[v]; };
    auto py = [&](VertexId v) { return 200.0 - 180.0 * y[v]; };
    auto fill = [](int k) {
        switch (k) {
        case 4:
            return "#e07a5f";
        case 5:
            return "#f2cc8f";
        default:
            return "#81b29a";
        }
    };

    std::ostringstream svg;
    svg.precision(6);
    svg << std::fixed;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
           "viewBox=\"0 0 400 400\">\n"
        << "  <title>flattened wheel metric (combinatorial layout, not isometric)</title>\n";
    for (std::size_t t = 0; t < D.triangles().size(); ++t) {
        const auto& tri = D.triangles()[t];
        const auto& m = M.shapes()[t];
        svg << "  <polygon class=\"T" << m.shape.k << "\" points=\"";
        for (int i = 0; i < 3; ++i)
            svg << (i ? " " : "") << px(tri[i]) << "," << py(tri[i]);
        svg << "\" fill=\"" << fill(m.shape.k) << "\" stroke=\"#3d405b\" stroke-width=\"1\"/>\n";
    }
    for (VertexId v = 0; v < n; ++v)
        svg << "  <circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"3\" fill=\""
            << (D.is_interior(v) ? "#3d405b" : "#ffffff") << "\" stroke=\"#3d405b\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace simploc
