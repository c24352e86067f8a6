#include "simploc/generators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "simploc/error.hpp"

namespace simploc {

namespace {

// std distributions are implementation-defined; these are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % n;
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

std::string v(int i) { return "v" + std::to_string(i); }
std::string w(int i) { return "w" + std::to_string(i); }

} // namespace

FlagComplex wheel(int k)
{
    if (k < 4)
        throw InputError("wheel needs k >= 4");
    std::vector<std::string> labels{"c"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= k; ++i) {
        labels.push_back(v(i));
        edges.emplace_back("c", v(i));
        edges.emplace_back(v(i), v(i % k + 1));
    }
    return FlagComplex::from_labeled_edges(std::move(labels), edges);
}

FlagComplex dwheel(int k, int l, bool planar)
{
    if (k < 4 || l < 4)
        throw InputError("dwheel needs k, l >= 4");
    // Name of w_i after the identifications v3 = w(l-1) and, if planar, v1 = w1.
    auto W = [&](int i) {
        if (i == l - 1)
            return v(3);
        if (i == 1 && planar)
            return v(1);
        return w(i);
    };
    std::vector<std::string> labels;
    for (int i = 1; i <= k; ++i)
        labels.push_back(v(i));
    for (int i = 1; i <= l; ++i)
        if (W(i).front() == 'w')
            labels.push_back(W(i));

    std::set<std::pair<std::string, std::string>> edges;
    auto add = [&](std::string a, std::string b) {
        if (a > b)
            std::swap(a, b);
        edges.emplace(a, b);
    };
    for (int i = 1; i <= k; ++i) {
        add(W(l), v(i));
        add(v(i), v(i % k + 1));
    }
    for (int i = 1; i <= l; ++i) {
        add(v(2), W(i));
        add(W(i), W(i % l + 1));
    }
    if (!planar)
        add(v(1), w(1));
    return FlagComplex::from_labeled_edges(std::move(labels), {edges.begin(), edges.end()});
}

FlagComplex extended_five_wheel()
{
    const FlagComplex W = wheel(5);
    auto labels = W.labels();
    labels.push_back("a");
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [x, y] : W.edges())
        edges.emplace_back(W.label(x), W.label(y));
    edges.emplace_back("a", "v1");
    edges.emplace_back("a", "v2");
    return FlagComplex::from_labeled_edges(std::move(labels), edges);
}

FlagComplex cone(const FlagComplex& X)
{
    std::string apex = "apex";
    for (int i = 1; X.find(apex); ++i)
        apex = "apex" + std::to_string(i);
    auto labels = X.labels();
    labels.push_back(apex);
    auto edges = X.edges();
    for (VertexId x = 0; x < X.size(); ++x)
        edges.emplace_back(x, X.size());
    return FlagComplex(std::move(labels), edges);
}

SimplicialDisc hex_disc(int radius)
{
    if (radius < 1)
        throw InputError("hex disc needs radius >= 1");
    using Axial = std::pair<int, int>;
    auto inside = [&](Axial a) {
        return std::max({std::abs(a.first), std::abs(a.second), std::abs(a.first + a.second)}) <= radius;
    };
    std::map<Axial, VertexId> id;
    for (int q = -radius; q <= radius; ++q)
        for (int r = -radius; r <= radius; ++r)
            if (inside({q, r}))
                id.emplace(Axial{q, r}, 0);
    VertexId next = 0;
    for (auto& [a, i] : id)
        i = next++;

    std::vector<Triangle> tris;
    for (const auto& [a, i] : id) {
        const auto [q, r] = a;
        for (auto [b, c] : {std::pair{Axial{q + 1, r}, Axial{q, r + 1}},
                            std::pair{Axial{q + 1, r - 1}, Axial{q + 1, r}}})
            if (inside(b) && inside(c))
                tris.push_back({i, id.at(b), id.at(c)});
    }

    const Axial dirs[6] = {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
    std::vector<VertexId> rim;
    Axial h{-radius, radius};
    for (const auto& d : dirs)
        for (int j = 0; j < radius; ++j) {
            rim.push_back(id.at(h));
            h = {h.first + d.first, h.second + d.second};
        }
    return SimplicialDisc::build(std::move(tris), std::move(rim), {.flag = true});
}

FlagComplex random_flag(int n, double p, std::uint64_t seed)
{
    if (n < 0)
        throw InputError("random flag complex needs n >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw InputError("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (rng.unit() < p)
                edges.emplace_back(a, b);
    return FlagComplex(n, edges);
}

SimplicialDisc grow_random_disc(int moves, std::uint64_t seed,
                                const std::function<bool(const SimplicialDisc&)>& accept)
{
    if (moves < 0)
        throw InputError("disc size must be non-negative");
    Rng rng(seed);
    std::vector<Triangle> tris{{0, 1, 2}};
    std::vector<VertexId> rim{0, 1, 2};
    SimplicialDisc disc = SimplicialDisc::build(tris, rim);
    VertexId next = 3;

    const int max_attempts = 50 * moves + 50;
    int accepted = 0;
    for (int attempt = 0; attempt < max_attempts && accepted < moves; ++attempt) {
        const int n = static_cast<int>(rim.size());
        const int i = static_cast<int>(rng.below(n));
        auto cand_tris = tris;
        auto cand_rim = rim;
        VertexId cand_next = next;
        if (rng.below(2) == 0 || n < 4) {
            // Ear: a new vertex on the boundary edge (b_i, b_{i+1}).
            cand_tris.push_back({rim[i], rim[(i + 1) % n], next});
            cand_rim.insert(cand_rim.begin() + i + 1, next);
            ++cand_next;
        } else {
            // Fill the corner at b_i, making it interior.
            const VertexId a = rim[(i + n - 1) % n], b = rim[i], c = rim[(i + 1) % n];
            if (disc.adjacent(a, c))
                continue;
            cand_tris.push_back({a, b, c});
            cand_rim.erase(cand_rim.begin() + i);
        }
        if (!SimplicialDisc::diagnose(cand_tris, cand_rim).empty())
            continue;
        SimplicialDisc cand = SimplicialDisc::build(cand_tris, cand_rim);
        if (!accept(cand))
            continue;
        tris = std::move(cand_tris);
        rim = std::move(cand_rim);
        next = cand_next;
        disc = std::move(cand);
        ++accepted;
    }
    return disc;
}

SimplicialDisc random_flag_disc(int moves, std::uint64_t seed)
{
    return grow_random_disc(moves, seed, [](const SimplicialDisc& D) { return D.is_flag(); });
}

SimplicialDisc random_7_located_disc(int size, std::uint64_t seed)
{
    if (size < 1)
        throw InputError("disc size must be >= 1");
    return grow_random_disc(size, seed, [](const SimplicialDisc& D) {
        return D.is_flag() && check_disc_7_located(D).verdict;
    });
}

std::string to_string(GeneratorKind kind)
{
    switch (kind) {
    case GeneratorKind::Wheel:
        return "WHEEL";
    case GeneratorKind::Dwheel:
        return "DWHEEL";
    case GeneratorKind::ExtendedFiveWheel:
        return "EXTENDED_5WHEEL";
    case GeneratorKind::Cone:
        return "CONE";
    case GeneratorKind::HexDisc:
        return "HEX_DISC";
    case GeneratorKind::RandomDisc:
        return "RANDOM_DISC";
    case GeneratorKind::RandomFlag:
        return "RANDOM_FLAG";
    }
    return "UNKNOWN";
}

GeneratorKind generator_kind_from_string(const std::string& name)
{
    std::string key;
    for (char ch : name)
        key.push_back(ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    for (auto k : {GeneratorKind::Wheel, GeneratorKind::Dwheel, GeneratorKind::ExtendedFiveWheel,
                   GeneratorKind::Cone, GeneratorKind::HexDisc, GeneratorKind::RandomDisc,
                   GeneratorKind::RandomFlag})
        if (to_string(k) == key)
            return k;
    throw InputError("unknown generator kind \"" + name + "\"");
}

Generated generate(const GeneratorSpec& spec)
{
    auto need_seed = [&] {
        if (!spec.seed)
            throw InputError(to_string(spec.kind) + " needs an explicit seed");
        return *spec.seed;
    };
    switch (spec.kind) {
    case GeneratorKind::Wheel:
        return wheel(spec.k);
    case GeneratorKind::Dwheel:
        return dwheel(spec.k, spec.l, spec.planar);
    case GeneratorKind::ExtendedFiveWheel:
        return extended_five_wheel();
    case GeneratorKind::Cone: {
        if (!spec.base)
            return cone(FlagComplex{});
        Generated inner = generate(*spec.base);
        if (auto* D = std::get_if<SimplicialDisc>(&inner))
            return cone(D->skeleton());
        return cone(std::get<FlagComplex>(inner));
    }
    case GeneratorKind::HexDisc:
        return hex_disc(spec.radius);
    case GeneratorKind::RandomDisc: {
        const auto seed = need_seed();
        return spec.located ? random_7_located_disc(spec.size, seed) : random_flag_disc(spec.size, seed);
    }
    case GeneratorKind::RandomFlag:
        return random_flag(spec.size, spec.p, need_seed());
    }
    throw InputError("unknown generator kind");
}

} // namespace simploc
