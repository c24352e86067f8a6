#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "simploc/conditions.hpp"
#include "simploc/flag_complex.hpp"

namespace simploc {

using Triangle = std::array<VertexId, 3>;

struct DiscValidation {
    /// Also require every 3-clique of the 1-skeleton to be a triangle.
    bool flag = false;
};

/**
 * A triangulated disc given by its triangles and boundary cycle.
 *
 * Construction validates: distinct triangles on distinct vertices, every
 * vertex used, every edge in one or two triangles with the one-triangle
 * edges forming exactly `boundary`, every vertex star a single fan (a cycle
 * of triangles for interior vertices, a path for boundary vertices),
 * connectedness and V - E + F = 1. Vertex ids are 0..vertex_count()-1.
 */
class SimplicialDisc {
public:
    SimplicialDisc() = default;

    /// Throws InvalidDisc with a diagnostic.
    static SimplicialDisc build(std::vector<Triangle> triangles, std::vector<VertexId> boundary,
                                DiscValidation options = {});

    /// Empty string when (triangles, boundary) is a valid disc, else the
    /// first problem found.
    static std::string diagnose(const std::vector<Triangle>& triangles,
                                const std::vector<VertexId>& boundary, DiscValidation options = {});

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    const Cycle& boundary() const { return boundary_; }

    bool is_interior(VertexId v) const { return !on_boundary_[v]; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
    /// Neighbors in cyclic order around v; for boundary vertices the order
    /// runs from one boundary neighbor to the other.
    const std::vector<VertexId>& rotation(VertexId v) const { return rotation_[v]; }
    bool adjacent(VertexId u, VertexId v) const;

    std::vector<VertexId> interior_vertices() const;
    std::vector<Edge> edges() const;
    /// 1-skeleton as a flag complex (vertex i keeps id i).
    FlagComplex skeleton() const;
    bool is_flag() const;

    /// Star of an interior vertex as a wheel (boundary = rotation).
    WheelWitness wheel_at(VertexId v) const;

    /// Graph distance in the 1-skeleton (-1 if unreachable).
    int distance(VertexId from, VertexId to) const;

private:
    std::vector<Triangle> triangles_;
    Cycle boundary_;
    std::vector<std::vector<VertexId>> rotation_;
    std::vector<bool> on_boundary_;
    std::size_t edge_count_ = 0;
};

/// Vertex ids 0..n-1 cover every triangle; triangles given up to orientation.
struct Subdisc {
    SimplicialDisc disc;
    std::vector<VertexId> original_ids;      // subdisc vertex -> parent vertex
    std::vector<std::size_t> triangle_indices; // into the parent's triangle list
};

/// Indices of the triangles of D lying in the region bounded by the simple
/// cycle c (all of D when c is the boundary). Throws InputError when c is
/// not an embedded cycle of D or bounds no region.
std::vector<std::size_t> region_bounded_by(const SimplicialDisc& D, const Cycle& c);

Subdisc subdisc_bounded_by(const SimplicialDisc& D, const Cycle& c);

/// Interior edges {v, w} with deg(v) + deg(w) < 12.
std::vector<Edge> check_degree_sums(const SimplicialDisc& D);

/// m-location (m = 7) of the disc's 1-skeleton. Throws InvalidDisc when the
/// disc is not flag.
DwheelReport check_disc_7_located(const SimplicialDisc& D);

/**
 * A nondegenerate simplicial map from a disc into a flag complex whose
 * restriction to the boundary is a cyclic-order-preserving bijection onto
 * target_loop (either direction, any rotation).
 */
struct DiscDiagram {
    SimplicialDisc disc;
    std::shared_ptr<const FlagComplex> target;
    std::vector<VertexId> vertex_map;
    Cycle target_loop;
};

/// Empty string when d is a valid diagram, else the first problem found.
std::string diagnose_diagram(const DiscDiagram& d);
/// Throws InputError.
void validate_diagram(const DiscDiagram& d);

inline int area(const DiscDiagram& d) { return d.disc.triangle_count(); }

} // namespace simploc
