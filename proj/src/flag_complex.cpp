#include "simploc/flag_complex.hpp"

#include <algorithm>
#include <set>

#include "simploc/error.hpp"

namespace simploc {

namespace {

std::vector<std::string> default_labels(int n)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

} // namespace

FlagComplex::FlagComplex(int vertex_count, std::span<const Edge> edges)
    : FlagComplex(default_labels(vertex_count), edges)
{
}

FlagComplex::FlagComplex(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels))
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], static_cast<VertexId>(i)).second)
            throw InputError("duplicate vertex label \"" + labels_[i] + "\"");
    }
    build(edges);
}

FlagComplex FlagComplex::from_labeled_edges(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges)
{
    std::unordered_map<std::string, VertexId> ids;
    for (std::size_t i = 0; i < labels.size(); ++i)
        ids.emplace(labels[i], static_cast<VertexId>(i));
    std::vector<Edge> id_edges;
    id_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = ids.find(a);
        auto ib = ids.find(b);
        if (ia == ids.end() || ib == ids.end())
            throw InputError("edge [\"" + a + "\", \"" + b + "\"] names an unknown vertex");
        id_edges.emplace_back(ia->second, ib->second);
    }
    try {
        return FlagComplex(std::move(labels), id_edges);
    } catch (const InputError&) {
        // Re-diagnose with labels instead of ids.
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& [a, b] : edges) {
            if (a == b)
                throw InputError("self-loop on vertex \"" + a + "\"");
            auto key = std::minmax(a, b);
            if (!seen.emplace(key.first, key.second).second)
                throw InputError("duplicate edge [\"" + a + "\", \"" + b + "\"]");
        }
        throw;
    }
}

void FlagComplex::build(std::span<const Edge> edges)
{
    const std::size_t n = labels_.size();
    adjacency_.assign(n, {});
    matrix_.assign(n * n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside the vertex set");
        if (u == v)
            throw InputError("self-loop on vertex \"" + labels_[u] + "\"");
        auto& cell = matrix_[static_cast<std::size_t>(u) * n + v];
        if (cell != 0)
            throw InputError("duplicate edge [\"" + labels_[u] + "\", \"" + labels_[v] + "\"]");
        cell = 1;
        matrix_[static_cast<std::size_t>(v) * n + u] = 1;
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());
    edge_count_ = edges.size();
}

std::optional<VertexId> FlagComplex::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VertexId FlagComplex::id_of(std::string_view label) const
{
    if (auto id = find(label))
        return *id;
    throw InputError("unknown vertex label \"" + std::string(label) + "\"");
}

std::vector<Edge> FlagComplex::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < size(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

FlagComplex FlagComplex::induced(std::span<const VertexId> vertices) const
{
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (VertexId v : vertices)
        labels.push_back(labels_.at(v));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return FlagComplex(std::move(labels), edges);
}

bool FlagComplex::is_clique(std::span<const VertexId> vertices) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

// ---------------------------------------------------------------------------

bool Cycle::contains(VertexId v) const
{
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int Cycle::position(VertexId v) const
{
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

std::vector<Edge> Cycle::edges() const
{
    std::vector<Edge> out;
    const int n = length();
    for (int i = 0; i < n; ++i)
        out.push_back(std::minmax(vertices[i], vertices[(i + 1) % n]));
    return out;
}

Cycle canonical_cycle(std::span<const VertexId> cycle)
{
    const int n = static_cast<int>(cycle.size());
    if (n == 0)
        return {};
    const int start = static_cast<int>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::vector<VertexId> forward(n), backward(n);
    for (int i = 0; i < n; ++i) {
        forward[i] = cycle[(start + i) % n];
        backward[i] = cycle[((start - i) % n + n) % n];
    }
    return Cycle{std::min(forward, backward)};
}

bool is_cycle_in(const FlagComplex& X, std::span<const VertexId> cycle)
{
    const int n = static_cast<int>(cycle.size());
    if (n < 3)
        return false;
    std::vector<VertexId> sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (VertexId v : cycle)
        if (!X.contains(v))
            return false;
    for (int i = 0; i < n; ++i)
        if (!X.adjacent(cycle[i], cycle[(i + 1) % n]))
            return false;
    return true;
}

std::vector<VertexId> WheelWitness::vertices() const
{
    std::vector<VertexId> out = boundary.vertices;
    out.push_back(center);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_wheel_in(const FlagComplex& X, VertexId center, std::span<const VertexId> boundary)
{
    if (!X.contains(center) || !is_cycle_in(X, boundary))
        return false;
    for (VertexId v : boundary)
        if (v == center || !X.adjacent(center, v))
            return false;
    return true;
}

bool is_full_wheel_in(const FlagComplex& X, VertexId center, std::span<const VertexId> boundary)
{
    if (!is_wheel_in(X, center, boundary))
        return false;
    const int n = static_cast<int>(boundary.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;
            if (X.adjacent(boundary[i], boundary[j]))
                return false;
        }
    return true;
}

std::vector<VertexId> DwheelWitness::vertices() const
{
    std::vector<VertexId> out = boundary.vertices;
    out.push_back(wheel1.center);
    out.push_back(wheel2.center);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

FlagComplex link_graph(const FlagComplex& X, VertexId v)
{
    if (!X.contains(v))
        throw InputError("unknown vertex id " + std::to_string(v));
    return X.induced(X.neighbors(v));
}

bool is_full(const FlagComplex& X, std::span<const VertexId> S, std::span<const Edge> H)
{
    std::vector<VertexId> verts(S.begin(), S.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (VertexId v : verts)
        if (!X.contains(v))
            throw InputError("vertex " + std::to_string(v) + " is not in the complex");

    std::set<Edge> wanted;
    for (auto [a, b] : H) {
        if (!std::binary_search(verts.begin(), verts.end(), a) ||
            !std::binary_search(verts.begin(), verts.end(), b))
            throw InputError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") has an endpoint outside S");
        wanted.insert(std::minmax(a, b));
    }
    std::set<Edge> induced;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (X.adjacent(verts[i], verts[j]))
                induced.emplace(verts[i], verts[j]);
    return induced == wanted;
}

namespace {

class InducedCycleSearch {
public:
    InducedCycleSearch(const FlagComplex& X, int jmin, int jmax,
                       const std::function<bool(std::span<const VertexId>)>& visit)
        : X_(X), jmin_(std::max(jmin, 4)), jmax_(jmax), visit_(visit)
    {
    }

    void run()
    {
        if (jmax_ < jmin_)
            return;
        for (VertexId s = 0; s < X_.size() && !stopped_; ++s) {
            path_.assign(1, s);
            for (VertexId p1 : X_.neighbors(s)) {
                if (p1 <= s)
                    continue;
                path_.push_back(p1);
                extend();
                path_.pop_back();
                if (stopped_)
                    return;
            }
        }
    }

private:
    // Path s = p0, p1, ..., pt is chordless and every pi > s. A candidate x
    // may only touch pt among p1..pt; touching s closes the cycle.
    void extend()
    {
        const VertexId s = path_.front();
        const VertexId last = path_.back();
        const int t = static_cast<int>(path_.size()) - 1;
        for (VertexId x : X_.neighbors(last)) {
            if (x <= s || std::find(path_.begin(), path_.end(), x) != path_.end())
                continue;
            bool chord = false;
            for (int i = 1; i < t && !chord; ++i)
                chord = X_.adjacent(x, path_[i]);
            if (chord)
                continue;
            if (X_.adjacent(x, s)) {
                const int len = t + 2;
                if (len >= jmin_ && len <= jmax_ && path_[1] < x) {
                    path_.push_back(x);
                    const bool keep_going = visit_(path_);
                    path_.pop_back();
                    if (!keep_going) {
                        stopped_ = true;
                        return;
                    }
                }
                continue;
            }
            if (t + 2 < jmax_) {
                path_.push_back(x);
                extend();
                path_.pop_back();
                if (stopped_)
                    return;
            }
        }
    }

    const FlagComplex& X_;
    int jmin_;
    int jmax_;
    const std::function<bool(std::span<const VertexId>)>& visit_;
    std::vector<VertexId> path_;
    bool stopped_ = false;
};

} // namespace

void for_each_induced_cycle(const FlagComplex& X, int jmin, int jmax,
                            const std::function<bool(std::span<const VertexId>)>& visit)
{
    InducedCycleSearch(X, jmin, jmax, visit).run();
}

std::vector<Cycle> enumerate_induced_cycles(const FlagComplex& X, int jmin, int jmax)
{
    if (jmin < 3 || jmax < jmin)
        throw InputError("cycle length range must satisfy 3 <= jmin <= jmax");
    std::vector<Cycle> out;
    for_each_induced_cycle(X, jmin, jmax, [&](std::span<const VertexId> c) {
        out.push_back(canonical_cycle(c));
        return true;
    });
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

std::vector<WheelWitness> enumerate_full_wheels(const FlagComplex& X, int kmax)
{
    if (kmax < 4)
        throw InputError("kmax must be at least 4");
    std::vector<WheelWitness> out;
    for (VertexId v = 0; v < X.size(); ++v) {
        const auto nbrs = X.neighbors(v);
        if (nbrs.size() < 4)
            continue;
        const FlagComplex link = X.induced(nbrs);
        for_each_induced_cycle(link, 4, kmax, [&](std::span<const VertexId> c) {
            std::vector<VertexId> mapped;
            mapped.reserve(c.size());
            for (VertexId i : c)
                mapped.push_back(nbrs[i]);
            out.push_back(WheelWitness{v, canonical_cycle(mapped), true});
            return true;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<DwheelWitness> make_dwheel(const FlagComplex& X, const WheelWitness& a,
                                         const WheelWitness& b)
{
    const VertexId c1 = a.center;
    const VertexId c2 = b.center;
    if (c1 == c2 || !X.adjacent(c1, c2))
        return std::nullopt;
    const int i = a.boundary.position(c2);
    const int j = b.boundary.position(c1);
    if (i < 0 || j < 0)
        return std::nullopt;

    // Orient a's boundary as (v1, v2 = c2, v3, ...) and b's as
    // (w1, ..., w(l-1), wl = c1); we need v3 = w(l-1).
    const int k = a.size();
    const int l = b.size();
    for (int a_dir : {1, -1}) {
        std::vector<VertexId> v(k);
        for (int t = 0; t < k; ++t)
            v[t] = a.boundary.at(i + a_dir * (t - 1));
        for (int b_dir : {1, -1}) {
            std::vector<VertexId> w(l);
            for (int t = 0; t < l; ++t)
                w[t] = b.boundary.at(j + b_dir * (t + 1));
            // w[l-1] == c1, v[1] == c2.
            if (v[2] != w[l - 2])
                continue;
            bool planar;
            if (v[0] == w[0])
                planar = true;
            else if (X.adjacent(v[0], w[0]))
                planar = false;
            else
                continue;

            std::vector<VertexId> boundary(w.begin(), w.end() - 1);
            for (int t = 3; t < k; ++t)
                boundary.push_back(v[t]);
            if (!planar)
                boundary.push_back(v[0]);

            std::vector<VertexId> sorted = boundary;
            sorted.push_back(c1);
            sorted.push_back(c2);
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                continue;

            DwheelWitness out;
            out.wheel1 = a;
            out.wheel2 = b;
            if (out.wheel2.size() < out.wheel1.size() ||
                (out.wheel2.size() == out.wheel1.size() && out.wheel2 < out.wheel1))
                std::swap(out.wheel1, out.wheel2);
            out.planar = planar;
            out.boundary = canonical_cycle(boundary);
            return out;
        }
    }
    return std::nullopt;
}

std::vector<DwheelWitness> enumerate_dwheels(const FlagComplex& X, int max_boundary)
{
    if (max_boundary < 4)
        throw InputError("max_boundary must be at least 4");
    // A wheel of size k sits in dwheels of boundary length >= k (l >= 4).
    const auto wheels = enumerate_full_wheels(X, max_boundary);
    std::vector<std::vector<std::size_t>> by_center(X.size());
    for (std::size_t w = 0; w < wheels.size(); ++w)
        by_center[wheels[w].center].push_back(w);

    std::vector<DwheelWitness> out;
    for (std::size_t ia = 0; ia < wheels.size(); ++ia) {
        const auto& a = wheels[ia];
        for (VertexId c2 : a.boundary.vertices) {
            for (std::size_t ib : by_center[c2]) {
                if (ib <= ia)
                    continue;
                const auto& b = wheels[ib];
                if (!b.boundary.contains(a.center))
                    continue;
                auto dw = make_dwheel(X, a, b);
                if (dw && dw->boundary.length() <= max_boundary)
                    out.push_back(std::move(*dw));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace simploc
