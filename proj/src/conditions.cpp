#include "simploc/conditions.hpp"

#include <algorithm>

#include "simploc/error.hpp"

namespace simploc {

std::vector<VertexId> ExtendedFiveWheelWitness::vertices() const
{
    std::vector<VertexId> out = wheel.vertices();
    out.push_back(apex);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<VertexId> find_dominator(const FlagComplex& X, std::span<const VertexId> vertices)
{
    if (vertices.empty())
        return X.size() > 0 ? std::optional<VertexId>(0) : std::nullopt;
    // Scan the smallest neighborhood; neighbors() is sorted so the first hit
    // is the least id.
    VertexId pivot = vertices.front();
    for (VertexId v : vertices)
        if (X.degree(v) < X.degree(pivot))
            pivot = v;
    for (VertexId cand : X.neighbors(pivot)) {
        bool ok = true;
        for (VertexId v : vertices) {
            if (cand == v || !X.adjacent(cand, v)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return cand;
    }
    return std::nullopt;
}

bool is_k_large(const FlagComplex& X, int k)
{
    if (k < 4)
        throw InputError("k-largeness needs k >= 4");
    bool found = false;
    for_each_induced_cycle(X, 4, k - 1, [&](std::span<const VertexId>) {
        found = true;
        return false;
    });
    return !found;
}

bool is_locally_k_large(const FlagComplex& X, int k)
{
    if (k < 4)
        throw InputError("k-largeness needs k >= 4");
    for (VertexId v = 0; v < X.size(); ++v)
        if (!is_k_large(link_graph(X, v), k))
            return false;
    return true;
}

DwheelReport is_m_located(const FlagComplex& X, int m)
{
    if (m < 4)
        throw InputError("m-location needs m >= 4");
    DwheelReport report;
    for (auto& dw : enumerate_dwheels(X, m)) {
        auto dom = find_dominator(X, dw.vertices());
        if (!dom)
            report.verdict = false;
        report.witnesses.push_back({std::move(dw), dom});
    }
    return report;
}

std::vector<ExtendedFiveWheelWitness> enumerate_extended_five_wheels(const FlagComplex& X)
{
    std::vector<ExtendedFiveWheelWitness> out;
    for (const auto& wheel : enumerate_full_wheels(X, 5)) {
        if (wheel.size() != 5)
            continue;
        const auto members = wheel.vertices();
        const auto& cyc = wheel.boundary;
        for (int i = 0; i < 5; ++i) {
            const VertexId x = cyc.at(i);
            const VertexId y = cyc.at(i + 1);
            for (VertexId a : X.neighbors(x)) {
                if (!X.adjacent(a, y) || std::binary_search(members.begin(), members.end(), a))
                    continue;
                bool isolated = true;
                for (VertexId m : members) {
                    if (m != x && m != y && X.adjacent(a, m)) {
                        isolated = false;
                        break;
                    }
                }
                if (isolated)
                    out.push_back({wheel, std::min(x, y), std::max(x, y), a});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FiveWheelReport check_w5hat(const FlagComplex& X)
{
    FiveWheelReport report;
    for (auto& ew : enumerate_extended_five_wheels(X)) {
        auto dom = find_dominator(X, ew.vertices());
        if (!dom)
            report.verdict = false;
        report.witnesses.push_back({std::move(ew), dom});
    }
    return report;
}

bool is_locally_weakly_systolic(const FlagComplex& X)
{
    return is_k_large(X, 5) && check_w5hat(X).verdict;
}

} // namespace simploc
