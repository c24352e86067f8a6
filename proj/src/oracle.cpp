#include "simploc/oracle.hpp"

#include <algorithm>
#include <map>

#include "simploc/error.hpp"

namespace simploc {

std::string to_string(OracleStatus status)
{
    switch (status) {
    case OracleStatus::Found:
        return "FOUND";
    case OracleStatus::Unsat:
        return "UNSAT";
    case OracleStatus::UnsatWithinCap:
        return "UNSAT_WITHIN_CAP";
    }
    return "UNKNOWN";
}

namespace {

// A filling of a boundary word of length n: ids 0..n-1 are the word
// positions, n + i is interior vertex i.
struct Filling {
    std::vector<Triangle> triangles;
    std::vector<VertexId> interior_images;
};

using Word = std::vector<VertexId>;
using Fillings = std::vector<Filling>;

class Search {
public:
    Search(const FlagComplex& X, int max_diagrams) : X_(X), max_diagrams_(max_diagrams) {}

    bool feasible(const Word& w, int area)
    {
        const int n = static_cast<int>(w.size());
        // n == 0 is the empty second half of a new-vertex option.
        if (n <= 2)
            return area == 0;
        if (area < n - 2 || (area - n) % 2 != 0)
            return false;
        auto key = w;
        key.push_back(area);
        if (auto it = feasible_.find(key); it != feasible_.end())
            return it->second;
        ++explored_;
        bool ok = false;
        for_each_option(w, area, [&](const Word& a, int area_a, const Word& b, int area_b) {
            ok = feasible(a, area_a) && feasible(b, area_b);
            return ok;
        });
        feasible_.emplace(std::move(key), ok);
        return ok;
    }

    const Fillings& fillings(const Word& w, int area)
    {
        auto key = w;
        key.push_back(area);
        if (auto it = fillings_.find(key); it != fillings_.end())
            return it->second;
        Fillings out;
        const int n = static_cast<int>(w.size());
        if (n == 2) {
            out.push_back({});
        } else if (feasible(w, area)) {
            for (int j = 2; j < n; ++j) {
                if (!spans_triangle(w[0], w[1], w[j]))
                    continue;
                const Word left(w.begin() + 1, w.begin() + j + 1);
                Word right(w.begin() + j, w.end());
                right.push_back(w[0]);
                for (int area_left = 0; area_left <= area - 1; ++area_left) {
                    const int area_right = area - 1 - area_left;
                    if (!feasible(left, area_left) || !feasible(right, area_right))
                        continue;
                    if (!room(out))
                        break;
                    combine_split(w, j, fillings(left, area_left), fillings(right, area_right), out);
                }
            }
            for (VertexId y : common_neighbors(w[0], w[1])) {
                Word grown = w;
                grown.insert(grown.begin() + 1, y);
                if (!feasible(grown, area - 1))
                    continue;
                if (!room(out))
                    break;
                for (const auto& child : fillings(grown, area - 1)) {
                    if (!room(out))
                        break;
                    out.push_back(extend(n, y, child));
                }
            }
        }
        return fillings_.emplace(std::move(key), std::move(out)).first->second;
    }

    long long explored() const { return explored_; }
    bool offered_new_vertex() const { return offered_new_vertex_; }
    bool truncated() const { return truncated_; }

private:
    bool spans_triangle(VertexId a, VertexId b, VertexId c) const
    {
        return c != a && c != b && X_.adjacent(a, c) && X_.adjacent(b, c);
    }

    std::vector<VertexId> common_neighbors(VertexId a, VertexId b)
    {
        std::vector<VertexId> out;
        auto na = X_.neighbors(a), nb = X_.neighbors(b);
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
        if (!out.empty())
            offered_new_vertex_ = true;
        return out;
    }

    bool full(const Fillings& out) const { return static_cast<int>(out.size()) >= max_diagrams_; }

    // Called only when another filling exists.
    bool room(const Fillings& out)
    {
        if (!full(out))
            return true;
        truncated_ = true;
        return false;
    }

    // Triangle (0, 1, j); left word = positions 1..j, right = j..n-1, 0.
    void combine_split(const Word& w, int j, const Fillings& left, const Fillings& right, Fillings& out)
    {
        const int n = static_cast<int>(w.size());
        const int nl = j, nr = n - j + 1;
        for (const auto& a : left)
            for (const auto& b : right) {
                if (!room(out))
                    return;
                Filling f;
                f.triangles.push_back({0, 1, j});
                const int shift_b = n + static_cast<int>(a.interior_images.size());
                for (auto t : a.triangles) {
                    for (auto& x : t)
                        x = x < nl ? x + 1 : x - nl + n;
                    f.triangles.push_back(t);
                }
                for (auto t : b.triangles) {
                    for (auto& x : t)
                        x = x < nr - 1 ? x + j : (x == nr - 1 ? 0 : x - nr + shift_b);
                    f.triangles.push_back(t);
                }
                f.interior_images = a.interior_images;
                f.interior_images.insert(f.interior_images.end(), b.interior_images.begin(),
                                         b.interior_images.end());
                out.push_back(std::move(f));
            }
    }

    // Triangle (0, 1, x) with x new; child word is (0, x, 1, 2, ..., n-1).
    static Filling extend(int n, VertexId image, const Filling& child)
    {
        const int m = n + 1;
        Filling f;
        f.triangles.push_back({0, 1, n});
        for (auto t : child.triangles) {
            for (auto& x : t) {
                if (x == 0)
                    continue;
                if (x == 1)
                    x = n;
                else if (x < m)
                    x = x - 1;
                else
                    x = x - m + n + 1;
            }
            f.triangles.push_back(t);
        }
        f.interior_images.push_back(image);
        f.interior_images.insert(f.interior_images.end(), child.interior_images.begin(),
                                 child.interior_images.end());
        return f;
    }

    template <class Visit>
    void for_each_option(const Word& w, int area, Visit&& visit)
    {
        const int n = static_cast<int>(w.size());
        for (int j = 2; j < n; ++j) {
            if (!spans_triangle(w[0], w[1], w[j]))
                continue;
            const Word left(w.begin() + 1, w.begin() + j + 1);
            Word right(w.begin() + j, w.end());
            right.push_back(w[0]);
            for (int area_left = 0; area_left <= area - 1; ++area_left)
                if (visit(left, area_left, right, area - 1 - area_left))
                    return;
        }
        for (VertexId y : common_neighbors(w[0], w[1])) {
            Word grown = w;
            grown.insert(grown.begin() + 1, y);
            if (visit(grown, area - 1, Word{}, 0))
                return;
        }
    }

    const FlagComplex& X_;
    int max_diagrams_;
    std::map<Word, bool> feasible_;
    std::map<Word, Fillings> fillings_;
    long long explored_ = 0;
    bool offered_new_vertex_ = false;
    bool truncated_ = false;
};

void check_inputs(const FlagComplex& X, const Cycle& loop, int area, const OracleOptions& options)
{
    if (loop.length() < 3)
        throw InputError("loop must have length >= 3");
    for (VertexId x : loop.vertices)
        if (!X.contains(x))
            throw InputError("loop vertex " + std::to_string(x) + " is not in the complex");
    if (!is_cycle_in(X, loop.vertices))
        throw InputError("loop is not a cycle of the complex");
    if (loop.length() > options.max_loop)
        throw InputError("loop length " + std::to_string(loop.length()) + " exceeds the guard " +
                         std::to_string(options.max_loop));
    if (area > options.max_cap)
        throw InputError("area cap " + std::to_string(area) + " exceeds the guard " +
                         std::to_string(options.max_cap));
}

void collect(Search& search, const std::shared_ptr<const FlagComplex>& X, const Cycle& loop, int area,
             OracleResult& result)
{
    const int n = loop.length();
    for (const auto& f : search.fillings(loop.vertices, area)) {
        std::vector<VertexId> rim(n);
        for (int i = 0; i < n; ++i)
            rim[i] = i;
        std::vector<VertexId> map = loop.vertices;
        map.insert(map.end(), f.interior_images.begin(), f.interior_images.end());
        // Fillings may glue edges into multi-edges; those are not simplicial.
        if (!SimplicialDisc::diagnose(f.triangles, rim).empty())
            continue;
        DiscDiagram d{SimplicialDisc::build(f.triangles, rim), X, std::move(map), loop};
        if (!diagnose_diagram(d).empty())
            continue;
        result.diagrams.push_back(std::move(d));
    }
    result.truncated = search.truncated();
}

} // namespace

OracleResult brute_force_min_diagram(std::shared_ptr<const FlagComplex> X, const Cycle& loop,
                                     int area_cap, const OracleOptions& options)
{
    if (!X)
        throw InputError("oracle needs a target complex");
    check_inputs(*X, loop, area_cap, options);
    Search search(*X, options.max_diagrams);
    OracleResult result;
    for (int area = loop.length() - 2; area <= area_cap; area += 2) {
        if (!search.feasible(loop.vertices, area))
            continue;
        collect(search, X, loop, area, result);
        if (result.diagrams.empty())
            continue;
        result.status = OracleStatus::Found;
        result.minimal_area = area;
        break;
    }
    if (result.status != OracleStatus::Found)
        result.status = search.offered_new_vertex() ? OracleStatus::UnsatWithinCap : OracleStatus::Unsat;
    result.explored = search.explored();
    return result;
}

OracleResult diagrams_of_area(std::shared_ptr<const FlagComplex> X, const Cycle& loop, int area,
                              const OracleOptions& options)
{
    if (!X)
        throw InputError("oracle needs a target complex");
    check_inputs(*X, loop, area, options);
    Search search(*X, options.max_diagrams);
    OracleResult result;
    if (search.feasible(loop.vertices, area))
        collect(search, X, loop, area, result);
    if (!result.diagrams.empty()) {
        result.status = OracleStatus::Found;
        result.minimal_area = area;
    }
    result.explored = search.explored();
    return result;
}

} // namespace simploc
