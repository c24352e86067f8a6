#include "simploc/disc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "simploc/error.hpp"

namespace simploc {

namespace {

std::string edge_str(VertexId a, VertexId b)
{
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

Triangle sorted_triangle(Triangle t)
{
    std::sort(t.begin(), t.end());
    return t;
}

struct DiscData {
    int n = 0;
    std::vector<std::vector<VertexId>> rotation;
    std::vector<bool> on_boundary;
    std::size_t edge_count = 0;
};

// Walks a link graph (max degree 2) starting at `start`; returns the visit
// order or an empty vector if the walk does not cover every link vertex.
std::vector<VertexId> walk_link(const std::map<VertexId, std::vector<VertexId>>& link, VertexId start)
{
    std::vector<VertexId> order{start};
    VertexId prev = -1;
    VertexId cur = start;
    while (true) {
        const auto& nb = link.at(cur);
        VertexId next = -1;
        for (VertexId x : nb)
            if (x != prev) {
                next = x;
                break;
            }
        if (next == -1 || next == start)
            break;
        if (std::find(order.begin(), order.end(), next) != order.end())
            return {};
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (order.size() != link.size())
        return {};
    return order;
}

std::string analyse(const std::vector<Triangle>& triangles, const std::vector<VertexId>& boundary,
                    DiscValidation options, DiscData* out)
{
    if (triangles.empty())
        return "disc has no triangles";
    int n = 0;
    for (const auto& t : triangles) {
        for (VertexId v : t) {
            if (v < 0)
                return "negative vertex id " + std::to_string(v);
            n = std::max(n, v + 1);
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            return "triangle [" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                   std::to_string(t[2]) + "] repeats a vertex";
    }
    std::set<Triangle> unique;
    for (const auto& t : triangles)
        if (!unique.insert(sorted_triangle(t)).second)
            return "duplicate triangle [" + std::to_string(t[0]) + ", " + std::to_string(t[1]) +
                   ", " + std::to_string(t[2]) + "]";

    std::vector<bool> used(n, false);
    std::map<Edge, int> edge_tris;
    std::vector<std::map<VertexId, std::vector<VertexId>>> links(n);
    for (const auto& t : triangles) {
        for (int i = 0; i < 3; ++i) {
            const VertexId a = t[i], b = t[(i + 1) % 3], c = t[(i + 2) % 3];
            used[a] = true;
            ++edge_tris[std::minmax(a, b)];
            links[a][b].push_back(c);
            links[a][c].push_back(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (!used[v])
            return "vertex " + std::to_string(v) + " lies in no triangle";

    if (boundary.size() < 3)
        return "boundary cycle has fewer than 3 vertices";
    std::vector<bool> on_boundary(n, false);
    for (VertexId v : boundary) {
        if (v < 0 || v >= n)
            return "boundary vertex " + std::to_string(v) + " is not a disc vertex";
        if (on_boundary[v])
            return "boundary repeats vertex " + std::to_string(v);
        on_boundary[v] = true;
    }

    std::set<Edge> boundary_edges;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        const VertexId a = boundary[i], b = boundary[(i + 1) % boundary.size()];
        auto it = edge_tris.find(std::minmax(a, b));
        if (it == edge_tris.end())
            return "boundary edge " + edge_str(a, b) + " is not an edge of the disc";
        if (it->second != 1)
            return "boundary edge " + edge_str(a, b) + " lies in " + std::to_string(it->second) +
                   " triangles";
        boundary_edges.insert(std::minmax(a, b));
    }
    for (const auto& [e, count] : edge_tris) {
        if (count > 2)
            return "edge " + edge_str(e.first, e.second) + " lies in " + std::to_string(count) +
                   " triangles";
        if (count == 1 && !boundary_edges.contains(e))
            return "edge " + edge_str(e.first, e.second) +
                   " lies in one triangle but is not on the boundary";
    }

    std::vector<std::vector<VertexId>> rotation(n);
    for (int v = 0; v < n; ++v) {
        const auto& link = links[v];
        for (const auto& [x, nb] : link)
            if (nb.size() > 2)
                return "link of vertex " + std::to_string(v) + " branches at " + std::to_string(x);
        if (on_boundary[v]) {
            const std::size_t pos = std::find(boundary.begin(), boundary.end(), v) - boundary.begin();
            const VertexId first = boundary[(pos + 1) % boundary.size()];
            const VertexId last = boundary[(pos + boundary.size() - 1) % boundary.size()];
            if (link.at(first).size() != 1 || link.at(last).size() != 1)
                return "star of boundary vertex " + std::to_string(v) + " is not a fan";
            auto order = walk_link(link, first);
            if (order.empty() || order.back() != last)
                return "star of boundary vertex " + std::to_string(v) + " is not a single fan";
            rotation[v] = std::move(order);
        } else {
            for (const auto& [x, nb] : link)
                if (nb.size() != 2)
                    return "star of interior vertex " + std::to_string(v) + " is not closed";
            auto order = walk_link(link, link.begin()->first);
            if (order.empty())
                return "star of interior vertex " + std::to_string(v) + " is not a single cycle";
            rotation[v] = std::move(order);
        }
    }

    // Connectivity.
    std::vector<bool> seen(n, false);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId x : rotation[v])
            if (!seen[x]) {
                seen[x] = true;
                ++reached;
                q.push(x);
            }
    }
    if (reached != n)
        return "disc is not connected";

    const long euler = static_cast<long>(n) - static_cast<long>(edge_tris.size()) +
                       static_cast<long>(triangles.size());
    if (euler != 1)
        return "Euler characteristic is " + std::to_string(euler) + ", not 1";

    if (options.flag) {
        for (const auto& [e, count] : edge_tris) {
            (void)count;
            for (VertexId w : rotation[e.first]) {
                if (w == e.second)
                    continue;
                const auto& rw = rotation[e.second];
                if (std::find(rw.begin(), rw.end(), w) == rw.end())
                    continue;
                if (!unique.contains(sorted_triangle({e.first, e.second, w})))
                    return "3-clique {" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                           ", " + std::to_string(w) + "} is not a triangle (disc is not flag)";
            }
        }
    }

    if (out) {
        out->n = n;
        out->rotation = std::move(rotation);
        out->on_boundary = std::move(on_boundary);
        out->edge_count = edge_tris.size();
    }
    return {};
}

} // namespace

SimplicialDisc SimplicialDisc::build(std::vector<Triangle> triangles, std::vector<VertexId> boundary,
                                     DiscValidation options)
{
    DiscData data;
    if (auto problem = analyse(triangles, boundary, options, &data); !problem.empty())
        throw InvalidDisc(problem);
    SimplicialDisc d;
    d.triangles_ = std::move(triangles);
    d.boundary_ = Cycle{std::move(boundary)};
    d.rotation_ = std::move(data.rotation);
    d.on_boundary_ = std::move(data.on_boundary);
    d.edge_count_ = data.edge_count;
    return d;
}

std::string SimplicialDisc::diagnose(const std::vector<Triangle>& triangles,
                                     const std::vector<VertexId>& boundary, DiscValidation options)
{
    return analyse(triangles, boundary, options, nullptr);
}

bool SimplicialDisc::adjacent(VertexId u, VertexId v) const
{
    const auto& r = rotation_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

std::vector<VertexId> SimplicialDisc::interior_vertices() const
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (is_interior(v))
            out.push_back(v);
    return out;
}

std::vector<Edge> SimplicialDisc::edges() const
{
    std::vector<Edge> out;
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : rotation_[u])
            if (u < v)
                out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

FlagComplex SimplicialDisc::skeleton() const
{
    const auto e = edges();
    return FlagComplex(vertex_count(), e);
}

bool SimplicialDisc::is_flag() const
{
    return analyse(triangles_, boundary_.vertices, DiscValidation{true}, nullptr).empty();
}

WheelWitness SimplicialDisc::wheel_at(VertexId v) const
{
    if (!is_interior(v))
        throw InputError("vertex " + std::to_string(v) + " is on the boundary and centers no wheel");
    WheelWitness w{v, canonical_cycle(rotation_[v]), true};
    const auto& r = rotation_[v];
    const int k = static_cast<int>(r.size());
    for (int i = 0; i < k && w.is_full; ++i)
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1)
                continue;
            if (adjacent(r[i], r[j])) {
                w.is_full = false;
                break;
            }
        }
    return w;
}

int SimplicialDisc::distance(VertexId from, VertexId to) const
{
    std::vector<int> dist(vertex_count(), -1);
    std::queue<VertexId> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        if (v == to)
            return dist[v];
        for (VertexId x : rotation_[v])
            if (dist[x] < 0) {
                dist[x] = dist[v] + 1;
                q.push(x);
            }
    }
    return -1;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> region_bounded_by(const SimplicialDisc& D, const Cycle& c)
{
    const int len = c.length();
    if (len < 3)
        throw InputError("cycle must have at least 3 vertices");
    std::vector<VertexId> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("cycle is not embedded: it repeats a vertex");
    for (VertexId v : c.vertices)
        if (v < 0 || v >= D.vertex_count())
            throw InputError("cycle vertex " + std::to_string(v) + " is not in the disc");
    for (int i = 0; i < len; ++i)
        if (!D.adjacent(c.at(i), c.at(i + 1)))
            throw InputError("cycle is not embedded: " + edge_str(c.at(i), c.at(i + 1)) +
                             " is not a disc edge");

    const auto cut = c.edges();
    const std::set<Edge> cut_set(cut.begin(), cut.end());
    const auto& tris = D.triangles();

    std::map<Edge, std::vector<std::size_t>> edge_tris;
    for (std::size_t t = 0; t < tris.size(); ++t)
        for (int i = 0; i < 3; ++i)
            edge_tris[std::minmax(tris[t][i], tris[t][(i + 1) % 3])].push_back(t);

    std::vector<std::size_t> parent(tris.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [e, ts] : edge_tris)
        if (ts.size() == 2 && !cut_set.contains(e))
            parent[find(ts[0])] = find(ts[1]);

    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t t = 0; t < tris.size(); ++t)
        components[find(t)].push_back(t);

    for (const auto& [root, members] : components) {
        (void)root;
        std::map<Edge, int> count;
        for (std::size_t t : members)
            for (int i = 0; i < 3; ++i)
                ++count[std::minmax(tris[t][i], tris[t][(i + 1) % 3])];
        std::set<Edge> rim;
        for (const auto& [e, k] : count)
            if (k == 1)
                rim.insert(e);
        if (rim == cut_set)
            return members;
    }
    throw InputError("cycle bounds no region of the disc");
}

Subdisc subdisc_bounded_by(const SimplicialDisc& D, const Cycle& c)
{
    Subdisc out;
    out.triangle_indices = region_bounded_by(D, c);
    std::map<VertexId, VertexId> remap;
    for (std::size_t t : out.triangle_indices)
        for (VertexId v : D.triangles()[t])
            remap.emplace(v, 0);
    for (auto& [old_id, new_id] : remap) {
        new_id = static_cast<VertexId>(out.original_ids.size());
        out.original_ids.push_back(old_id);
    }
    std::vector<Triangle> tris;
    for (std::size_t t : out.triangle_indices) {
        const auto& tri = D.triangles()[t];
        tris.push_back({remap[tri[0]], remap[tri[1]], remap[tri[2]]});
    }
    std::vector<VertexId> boundary;
    for (VertexId v : c.vertices)
        boundary.push_back(remap.at(v));
    out.disc = SimplicialDisc::build(std::move(tris), std::move(boundary));
    return out;
}

std::vector<Edge> check_degree_sums(const SimplicialDisc& D)
{
    std::vector<Edge> out;
    for (auto [u, v] : D.edges())
        if (D.is_interior(u) && D.is_interior(v) && D.degree(u) + D.degree(v) < 12)
            out.emplace_back(u, v);
    return out;
}

DwheelReport check_disc_7_located(const SimplicialDisc& D)
{
    if (auto problem = SimplicialDisc::diagnose(D.triangles(), D.boundary().vertices, {true});
        !problem.empty())
        throw InvalidDisc(problem);
    auto report = is_m_located(D.skeleton(), 7);
    for (const auto& w : report.witnesses)
        if (!w.witness.planar)
            throw std::logic_error("nonplanar dwheel found in a flag disc");
    return report;
}

// ---------------------------------------------------------------------------

std::string diagnose_diagram(const DiscDiagram& d)
{
    if (!d.target)
        return "diagram has no target complex";
    const auto& X = *d.target;
    const auto& D = d.disc;
    if (static_cast<int>(d.vertex_map.size()) != D.vertex_count())
        return "vertex map covers " + std::to_string(d.vertex_map.size()) + " of " +
               std::to_string(D.vertex_count()) + " disc vertices";
    for (VertexId v = 0; v < D.vertex_count(); ++v)
        if (!X.contains(d.vertex_map[v]))
            return "disc vertex " + std::to_string(v) + " maps outside the target";
    for (auto [u, v] : D.edges()) {
        const VertexId fu = d.vertex_map[u], fv = d.vertex_map[v];
        if (fu == fv)
            return "edge " + edge_str(u, v) + " collapses to vertex " + X.label(fu);
        if (!X.adjacent(fu, fv))
            return "edge " + edge_str(u, v) + " maps to the non-edge {" + X.label(fu) + ", " +
                   X.label(fv) + "}";
    }
    if (!is_cycle_in(X, d.target_loop.vertices))
        return "target loop is not a cycle of the target";
    const auto& B = D.boundary().vertices;
    const int n = static_cast<int>(B.size());
    if (n != d.target_loop.length())
        return "boundary length " + std::to_string(n) + " differs from loop length " +
               std::to_string(d.target_loop.length());
    const int start = d.target_loop.position(d.vertex_map[B[0]]);
    if (start < 0)
        return "boundary vertex " + std::to_string(B[0]) + " maps off the target loop";
    for (int dir : {1, -1}) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = d.vertex_map[B[i]] == d.target_loop.at(start + dir * i);
        if (ok)
            return {};
    }
    return "boundary does not map isomorphically onto the target loop";
}

void validate_diagram(const DiscDiagram& d)
{
    if (auto problem = diagnose_diagram(d); !problem.empty())
        throw InputError("invalid disc diagram: " + problem);
}

} // namespace simploc
