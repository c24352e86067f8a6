#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace simploc {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

/**
 * A flag simplicial complex stored through its 1-skeleton.
 *
 * Simplices are exactly the cliques of the graph, so no higher-dimensional
 * data is kept. Vertex ids are dense (0..size()-1); every vertex also carries
 * a string label used by the file formats. Instances are immutable after
 * construction.
 */
class FlagComplex {
public:
    FlagComplex() = default;

    /// Unlabeled complex; vertex i gets the label "i".
    FlagComplex(int vertex_count, std::span<const Edge> edges);

    /// Labels must be unique. Self-loops, duplicate edges and unknown
    /// endpoints throw InputError naming the offending pair.
    FlagComplex(std::vector<std::string> labels, std::span<const Edge> edges);

    static FlagComplex from_labeled_edges(
        std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& edges);

    int size() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    bool contains(VertexId v) const { return v >= 0 && v < size(); }
    bool adjacent(VertexId u, VertexId v) const
    {
        return matrix_[static_cast<std::size_t>(u) * adjacency_.size() + v] != 0;
    }

    /// Sorted ascending.
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }

    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find(std::string_view label) const;
    /// Throws InputError for an unknown label.
    VertexId id_of(std::string_view label) const;

    std::vector<Edge> edges() const;

    /// Induced subcomplex on `vertices`; vertex i of the result is vertices[i]
    /// and keeps its label.
    FlagComplex induced(std::span<const VertexId> vertices) const;

    /// True iff every pair in `vertices` is adjacent (a simplex of X).
    bool is_clique(std::span<const VertexId> vertices) const;

private:
    void build(std::span<const Edge> edges);

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::size_t edge_count_ = 0;
};

/// A cycle (v1, ..., vk), k >= 3, consecutive vertices adjacent (cyclically).
struct Cycle {
    std::vector<VertexId> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool contains(VertexId v) const;
    /// Index of v in the cycle or -1.
    int position(VertexId v) const;
    VertexId at(int i) const
    {
        const int n = length();
        return vertices[((i % n) + n) % n];
    }
    std::vector<Edge> edges() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Lexicographically least rotation/reflection of `cycle`.
Cycle canonical_cycle(std::span<const VertexId> cycle);

/// True when `cycle` has distinct vertices, length >= 3 and consecutive
/// vertices adjacent in X.
bool is_cycle_in(const FlagComplex& X, std::span<const VertexId> cycle);

struct WheelWitness {
    VertexId center = -1;
    Cycle boundary;
    bool is_full = false;

    int size() const { return boundary.length(); }
    std::vector<VertexId> vertices() const;

    friend bool operator==(const WheelWitness&, const WheelWitness&) = default;
    friend auto operator<=>(const WheelWitness&, const WheelWitness&) = default;
};

/// True iff {center} + boundary is a wheel of X (center adjacent to all
/// boundary vertices and not on it, boundary a cycle).
bool is_wheel_in(const FlagComplex& X, VertexId center, std::span<const VertexId> boundary);

/// Same as is_wheel_in plus fullness: the boundary cycle has no chords.
bool is_full_wheel_in(const FlagComplex& X, VertexId center, std::span<const VertexId> boundary);

/**
 * Union of two full wheels W1 = (c1; v1..vk) and W2 = (c2; w1..wl) with
 * c2 = v2, c1 = wl and v3 = w(l-1). Planar when v1 = w1, nonplanar when
 * v1 ~ w1. Normalized so that wheel1.size() <= wheel2.size().
 */
struct DwheelWitness {
    WheelWitness wheel1;
    WheelWitness wheel2;
    bool planar = true;
    Cycle boundary;

    /// Centers first, then the boundary vertices, ascending.
    std::vector<VertexId> vertices() const;
    int expected_boundary_length() const
    {
        return wheel1.size() + wheel2.size() - (planar ? 4 : 3);
    }

    friend bool operator==(const DwheelWitness&, const DwheelWitness&) = default;
    friend auto operator<=>(const DwheelWitness&, const DwheelWitness&) = default;
};

/// Induced subgraph on the neighbors of v. Vertex i of the result is
/// X.neighbors(v)[i]. Throws InputError for an unknown vertex.
FlagComplex link_graph(const FlagComplex& X, VertexId v);

/// True iff the induced subgraph of X on S has exactly the edge set H.
/// Throws InputError when H mentions a vertex outside S.
bool is_full(const FlagComplex& X, std::span<const VertexId> S, std::span<const Edge> H);

/// Calls visit(cycle) for every full (chordless, length >= 4) cycle with
/// length in [jmin, jmax], once per cycle, in canonical form. Enumeration
/// stops early when visit returns false.
void for_each_induced_cycle(const FlagComplex& X, int jmin, int jmax,
                            const std::function<bool(std::span<const VertexId>)>& visit);

/// All full cycles with length in [jmin, jmax], canonical, sorted by
/// (length, vertices). Length-3 cycles are never full in a flag complex.
std::vector<Cycle> enumerate_induced_cycles(const FlagComplex& X, int jmin, int jmax);

/// Full k-wheels for 4 <= k <= kmax, sorted.
std::vector<WheelWitness> enumerate_full_wheels(const FlagComplex& X, int kmax);

/// Dwheels with both wheels full and boundary length <= max_boundary.
std::vector<DwheelWitness> enumerate_dwheels(const FlagComplex& X, int max_boundary);

/// Dwheel built from two full wheels, or nullopt if they do not match the
/// dwheel incidence pattern.
std::optional<DwheelWitness> make_dwheel(const FlagComplex& X, const WheelWitness& a,
                                         const WheelWitness& b);

} // namespace simploc
