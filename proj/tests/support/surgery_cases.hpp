#pragma once

// Builds surgery inputs from a plain flag disc D: identifying two disc
// vertices u, v in the target (the quotient graph D/(u~v)) turns the disc
// into a non-injective diagram on which the cycle surgeries apply.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <set>

#include "simploc/disc.hpp"
#include "simploc/surgery.hpp"

namespace cases {

using namespace simploc;

/// D as a diagram into the flag complex of D/(u~v); u, v non-adjacent and
/// not both on the boundary.
inline DiscDiagram quotient_diagram(const SimplicialDisc& D, VertexId u, VertexId v)
{
    const int n = D.vertex_count();
    auto id = [&](VertexId w) {
        if (w == v)
            w = u;
        return w < v ? w : w - 1;
    };
    std::set<Edge> edges;
    for (auto [a, b] : D.edges())
        edges.insert(std::minmax(id(a), id(b)));
    auto X = std::make_shared<const FlagComplex>(n - 1, std::vector<Edge>(edges.begin(), edges.end()));
    std::vector<VertexId> map(n);
    for (VertexId w = 0; w < n; ++w)
        map[w] = id(w);
    Cycle loop;
    for (VertexId w : D.boundary().vertices)
        loop.vertices.push_back(map[w]);
    return DiscDiagram{D, X, map, loop};
}

/// D into its skeleton plus the diagonal {p, q}.
inline DiscDiagram diagonal_diagram(const SimplicialDisc& D, VertexId p, VertexId q)
{
    auto edges = D.edges();
    edges.emplace_back(std::min(p, q), std::max(p, q));
    auto X = std::make_shared<const FlagComplex>(D.vertex_count(), edges);
    std::vector<VertexId> map(D.vertex_count());
    for (VertexId w = 0; w < D.vertex_count(); ++w)
        map[w] = w;
    return DiscDiagram{D, X, map, D.boundary()};
}

struct Application {
    SurgeryKind kind;
    int area_before;
    SurgeryResult result;
};

inline std::vector<VertexId> common(const SimplicialDisc& D, VertexId a, VertexId b)
{
    std::vector<VertexId> x = D.rotation(a), y = D.rotation(b), out;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

/// Calls `sink` for every successful surgery found on quotients of D (and
/// 4-wheel replacements on D plus a diagonal). Stops when sink returns false.
inline void for_each_application(const SimplicialDisc& D, const std::function<bool(Application)>& sink)
{
    auto attempt = [&](SurgeryKind kind, const DiscDiagram& d, auto&& move) {
        try {
            return sink(Application{kind, area(d), move()});
        } catch (const SurgeryError&) {
            return true;
        }
    };
    const int n = D.vertex_count();
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            if (D.adjacent(u, v) || (!D.is_interior(u) && !D.is_interior(v)))
                continue;
            const int dist = D.distance(u, v);
            if (dist > 3)
                continue;
            const DiscDiagram d = quotient_diagram(D, u, v);
            const auto uv = common(D, u, v);
            for (std::size_t i = 0; i < uv.size(); ++i)
                for (std::size_t j = i + 1; j < uv.size(); ++j)
                    if (!attempt(SurgeryKind::FourCycle, d,
                                 [&] { return surgery_4cycle(d, u, uv[i], v, uv[j]); }))
                        return;
            for (auto [p, q] : {Edge{u, v}, Edge{v, u}})
                for (VertexId a : uv)
                    for (VertexId b : D.rotation(q)) {
                        if (b == a || b == p)
                            continue;
                        for (VertexId c : common(D, b, p)) {
                            if (c == a || c == q)
                                continue;
                            if (!attempt(SurgeryKind::FiveCycle, d,
                                         [&] { return surgery_5cycle(d, a, q, b, c, p); }))
                                return;
                        }
                    }
            if (dist != 3)
                continue;
            std::vector<std::pair<VertexId, VertexId>> paths;
            for (VertexId a : D.rotation(u))
                for (VertexId b : common(D, a, v))
                    paths.emplace_back(a, b);
            for (const auto& [a, b] : paths)
                for (const auto& [dd, c] : paths) {
                    if (dd == a || c == b)
                        continue;
                    if (!attempt(SurgeryKind::SixCycle, d,
                                 [&] { return surgery_6cycle(d, u, a, b, v, c, dd); }))
                        return;
                }
        }
    for (VertexId x : D.interior_vertices()) {
        if (D.degree(x) != 4)
            continue;
        const auto& p = D.rotation(x);
        for (int i : {0, 1}) {
            if (D.adjacent(p[i], p[i + 2]))
                continue;
            const DiscDiagram d = diagonal_diagram(D, p[i], p[i + 2]);
            if (!attempt(SurgeryKind::FourWheel, d, [&] { return replace_4wheel(d, D.wheel_at(x)); }))
                return;
        }
    }
}

} // namespace cases
