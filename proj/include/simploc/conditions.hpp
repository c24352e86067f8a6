#pragma once

#include <optional>
#include <vector>

#include "simploc/flag_complex.hpp"

namespace simploc {

/// A full 5-wheel (c; v1..v5) plus an apex a spanning a triangle with the
/// boundary edge {v1, v2} and adjacent to no other wheel vertex.
struct ExtendedFiveWheelWitness {
    WheelWitness wheel;
    VertexId edge_first = -1;  // v1
    VertexId edge_second = -1; // v2
    VertexId apex = -1;

    std::vector<VertexId> vertices() const;

    friend bool operator==(const ExtendedFiveWheelWitness&, const ExtendedFiveWheelWitness&) = default;
    friend auto operator<=>(const ExtendedFiveWheelWitness&, const ExtendedFiveWheelWitness&) = default;
};

template <class Witness>
struct Located {
    Witness witness;
    std::optional<VertexId> dominator;
};

/// verdict is false iff some witness has no dominator.
template <class Witness>
struct LocationReport {
    bool verdict = true;
    std::vector<Located<Witness>> witnesses;

    std::vector<Witness> failures() const
    {
        std::vector<Witness> out;
        for (const auto& w : witnesses)
            if (!w.dominator)
                out.push_back(w.witness);
        return out;
    }
};

using DwheelReport = LocationReport<DwheelWitness>;
using FiveWheelReport = LocationReport<ExtendedFiveWheelWitness>;

/// Least vertex outside `vertices` adjacent to all of them.
std::optional<VertexId> find_dominator(const FlagComplex& X, std::span<const VertexId> vertices);

/// No full j-cycles for 4 <= j <= k-1.
bool is_k_large(const FlagComplex& X, int k);
bool is_locally_k_large(const FlagComplex& X, int k);

/// Every dwheel with full wheels and boundary length <= m lies in a link.
DwheelReport is_m_located(const FlagComplex& X, int m);

std::vector<ExtendedFiveWheelWitness> enumerate_extended_five_wheels(const FlagComplex& X);
FiveWheelReport check_w5hat(const FlagComplex& X);

/// 5-large and every extended 5-wheel lies in a link.
bool is_locally_weakly_systolic(const FlagComplex& X);

} // namespace simploc
