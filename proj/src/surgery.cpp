#include "simploc/surgery.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "simploc/error.hpp"

namespace simploc {

std::string to_string(SurgeryKind kind)
{
    switch (kind) {
    case SurgeryKind::FourCycle:
        return "FOUR_CYCLE";
    case SurgeryKind::FiveCycle:
        return "FIVE_CYCLE";
    case SurgeryKind::SixCycle:
        return "SIX_CYCLE";
    case SurgeryKind::FourWheel:
        return "FOUR_WHEEL";
    }
    return "UNKNOWN";
}

SurgeryKind surgery_kind_from_string(const std::string& name)
{
    for (auto k : {SurgeryKind::FourCycle, SurgeryKind::FiveCycle, SurgeryKind::SixCycle,
                   SurgeryKind::FourWheel})
        if (to_string(k) == name)
            return k;
    throw InputError("unknown surgery kind \"" + name + "\"");
}

namespace {

void require_vertices(const DiscDiagram& d, std::initializer_list<VertexId> vs)
{
    for (VertexId v : vs)
        if (v < 0 || v >= d.disc.vertex_count())
            throw SurgeryError("vertex " + std::to_string(v) + " is not in the disc");
}

// Replaces the disc by `triangles` (old ids, with `merged_away` renamed to
// `keep`), compacts ids and revalidates the diagram.
DiscDiagram rebuild(const DiscDiagram& d, const std::vector<Triangle>& triangles,
                    VertexId merged_away, VertexId keep)
{
    auto rename = [&](VertexId x) { return x == merged_away ? keep : x; };
    std::map<VertexId, VertexId> ids;
    for (const auto& t : triangles)
        for (VertexId x : t)
            ids.emplace(rename(x), 0);
    std::vector<VertexId> new_map;
    for (auto& [old_id, new_id] : ids) {
        new_id = static_cast<VertexId>(new_map.size());
        new_map.push_back(d.vertex_map[old_id]);
    }
    std::vector<Triangle> tris;
    tris.reserve(triangles.size());
    for (const auto& t : triangles)
        tris.push_back({ids.at(rename(t[0])), ids.at(rename(t[1])), ids.at(rename(t[2]))});
    std::vector<VertexId> boundary;
    for (VertexId x : d.disc.boundary().vertices) {
        auto it = ids.find(rename(x));
        if (it == ids.end())
            throw SurgeryError("surgery would delete boundary vertex " + std::to_string(x));
        boundary.push_back(it->second);
    }

    if (auto problem = SimplicialDisc::diagnose(tris, boundary); !problem.empty())
        throw SurgeryError("gluing would not give a disc: " + problem);
    DiscDiagram out{SimplicialDisc::build(std::move(tris), std::move(boundary)), d.target,
                    std::move(new_map), d.target_loop};
    if (auto problem = diagnose_diagram(out); !problem.empty())
        throw SurgeryError("gluing would not give a disc diagram: " + problem);
    return out;
}

SurgeryResult excise_and_glue(const DiscDiagram& d, const Cycle& cycle, VertexId u, VertexId v,
                              const std::vector<Triangle>& inserted, SurgeryKind kind,
                              std::vector<VertexId> locus)
{
    const auto& D = d.disc;
    if (d.vertex_map[u] != d.vertex_map[v])
        throw SurgeryError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                           " have different images");
    if (!D.is_interior(u) && !D.is_interior(v))
        throw SurgeryError("gluing two boundary vertices would pinch the disc");

    std::vector<std::size_t> region;
    try {
        region = region_bounded_by(D, cycle);
    } catch (const InputError& e) {
        throw SurgeryError(e.what());
    }
    const auto boundary_edges = D.boundary().edges();
    const std::set<Edge> rim(boundary_edges.begin(), boundary_edges.end());
    std::vector<bool> doomed(D.triangle_count(), false);
    for (std::size_t t : region) {
        doomed[t] = true;
        const auto& tri = D.triangles()[t];
        for (int i = 0; i < 3; ++i)
            if (rim.contains(std::minmax(tri[i], tri[(i + 1) % 3])))
                throw SurgeryError("subdisc to delete contains a boundary edge of the disc");
    }

    std::vector<Triangle> kept;
    for (int t = 0; t < D.triangle_count(); ++t)
        if (!doomed[t])
            kept.push_back(D.triangles()[t]);
    kept.insert(kept.end(), inserted.begin(), inserted.end());

    DiscDiagram out = rebuild(d, kept, v, u);
    SurgeryCertificate cert{kind, std::move(locus), area(d), area(out)};
    return {std::move(out), std::move(cert)};
}

} // namespace

SurgeryResult surgery_4cycle(const DiscDiagram& d, VertexId u, VertexId a, VertexId v, VertexId b)
{
    require_vertices(d, {u, a, v, b});
    return excise_and_glue(d, Cycle{{u, a, v, b}}, u, v, {}, SurgeryKind::FourCycle, {u, a, v, b});
}

SurgeryResult surgery_5cycle(const DiscDiagram& d, VertexId a, VertexId v, VertexId b, VertexId c,
                             VertexId u)
{
    require_vertices(d, {a, v, b, c, u});
    return excise_and_glue(d, Cycle{{a, v, b, c, u}}, u, v, {Triangle{u, b, c}},
                           SurgeryKind::FiveCycle, {a, v, b, c, u});
}

SurgeryResult surgery_6cycle(const DiscDiagram& d, VertexId u, VertexId a, VertexId b, VertexId v,
                             VertexId c, VertexId dd)
{
    require_vertices(d, {u, a, b, v, c, dd});
    const int dist = d.disc.distance(u, v);
    if (dist != 3)
        throw SurgeryError("6-cycle surgery needs d(u, v) = 3 in the disc, found " +
                           std::to_string(dist));
    return excise_and_glue(d, Cycle{{u, a, b, v, c, dd}}, u, v, {Triangle{a, b, u}, Triangle{u, c, dd}},
                           SurgeryKind::SixCycle, {u, a, b, v, c, dd});
}

SurgeryResult replace_4wheel(const DiscDiagram& d, const WheelWitness& w)
{
    const auto& D = d.disc;
    const VertexId x = w.center;
    require_vertices(d, {x});
    if (!D.is_interior(x) || D.degree(x) != 4 || w.size() != 4)
        throw SurgeryError("vertex " + std::to_string(x) + " does not center a 4-wheel of the disc");
    const auto& p = D.rotation(x);
    {
        std::vector<VertexId> given = w.boundary.vertices, actual = p;
        std::sort(given.begin(), given.end());
        std::sort(actual.begin(), actual.end());
        if (given != actual)
            throw SurgeryError("wheel boundary does not match the link of its center");
    }
    const auto& f = d.vertex_map;
    if (f[p[0]] == f[p[2]])
        return surgery_4cycle(d, p[0], p[1], p[2], p[3]);
    if (f[p[1]] == f[p[3]])
        return surgery_4cycle(d, p[1], p[2], p[3], p[0]);

    std::string last_problem = "no antipodal pair of the 4-wheel has adjacent images "
                               "(target is not locally 5-large at this wheel)";
    for (int i : {0, 1}) {
        const VertexId s = p[i], t = p[i + 2];
        if (!d.target->adjacent(f[s], f[t]))
            continue;
        std::vector<Triangle> tris;
        for (const auto& tri : D.triangles())
            if (std::find(tri.begin(), tri.end(), x) == tri.end())
                tris.push_back(tri);
        tris.push_back({s, t, p[i + 1]});
        tris.push_back({s, t, p[(i + 3) % 4]});
        try {
            DiscDiagram out = rebuild(d, tris, -1, -1);
            SurgeryCertificate cert{SurgeryKind::FourWheel, {x, p[0], p[1], p[2], p[3]}, area(d),
                                    area(out)};
            return {std::move(out), std::move(cert)};
        } catch (const SurgeryError& e) {
            last_problem = e.what();
        }
    }
    throw SurgeryError(last_problem);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<VertexId> common_neighbors(const SimplicialDisc& D, VertexId u, VertexId v)
{
    std::vector<VertexId> a = D.rotation(u), b = D.rotation(v), out;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<VertexId> sorted_neighbors(const SimplicialDisc& D, VertexId v)
{
    std::vector<VertexId> out = D.rotation(v);
    std::sort(out.begin(), out.end());
    return out;
}

template <class Move>
std::optional<SurgeryResult> attempt(Move&& move)
{
    try {
        return move();
    } catch (const SurgeryError&) {
        return std::nullopt;
    }
}

std::optional<SurgeryResult> find_move(const DiscDiagram& d)
{
    const auto& D = d.disc;
    const auto& f = d.vertex_map;
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < D.vertex_count(); ++u)
        for (VertexId v = u + 1; v < D.vertex_count(); ++v)
            if (f[u] == f[v])
                pairs.emplace_back(u, v);

    for (auto [u, v] : pairs) {
        const auto common = common_neighbors(D, u, v);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (auto r = attempt([&] { return surgery_4cycle(d, u, common[i], v, common[j]); }))
                    return r;
    }

    for (VertexId c : D.interior_vertices())
        if (D.degree(c) == 4)
            if (auto r = attempt([&] { return replace_4wheel(d, D.wheel_at(c)); }))
                return r;

    for (auto [p, q] : pairs) {
        for (auto [u, v] : {Edge{p, q}, Edge{q, p}}) {
            for (VertexId a : common_neighbors(D, u, v))
                for (VertexId b : sorted_neighbors(D, v)) {
                    if (b == a || b == u)
                        continue;
                    for (VertexId c : common_neighbors(D, b, u)) {
                        if (c == a || c == v)
                            continue;
                        if (auto r = attempt([&] { return surgery_5cycle(d, a, v, b, c, u); }))
                            return r;
                    }
                }
        }
    }

    for (auto [u, v] : pairs) {
        if (D.distance(u, v) != 3)
            continue;
        std::vector<std::pair<VertexId, VertexId>> paths; // u - first - second - v
        for (VertexId a : sorted_neighbors(D, u))
            for (VertexId b : common_neighbors(D, a, v))
                if (b != u)
                    paths.emplace_back(a, b);
        for (const auto& [a, b] : paths)
            for (const auto& [dd, c] : paths) {
                if (dd == a || dd == b || c == a || c == b)
                    continue;
                if (auto r = attempt([&] { return surgery_6cycle(d, u, a, b, v, c, dd); }))
                    return r;
            }
    }
    return std::nullopt;
}

} // namespace

ReduceResult reduce(const DiscDiagram& d)
{
    validate_diagram(d);
    ReduceResult result{d, {}};
    while (auto step = find_move(result.diagram)) {
        result.trace.push_back(std::move(step->certificate));
        result.diagram = std::move(step->diagram);
    }
    return result;
}

} // namespace simploc
