#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "simploc/disc.hpp"
#include "simploc/flag_complex.hpp"

namespace simploc {

/// Wheel (c; v1..vk), labels "c", "v1".."vk". k >= 4.
FlagComplex wheel(int k);

/// (k,l)-dwheel W1 = (wl; v1..vk) u W2 = (v2; w1..wl) with v3 = w(l-1), and
/// v1 = w1 (planar) or v1 ~ w1 (nonplanar). Identified vertices keep their
/// v-label. Both wheels are full. k, l >= 4.
FlagComplex dwheel(int k, int l, bool planar);

/// Full 5-wheel (c; v1..v5) plus apex "a" adjacent to v1 and v2 only.
FlagComplex extended_five_wheel();

/// Adds one vertex adjacent to every vertex of X, labeled "apex" (with a
/// numeric suffix if that label is taken).
FlagComplex cone(const FlagComplex& X);

/// Radius-r ball of the triangular lattice: 3r(r+1)+1 vertices, 6r^2
/// triangles. r >= 1.
SimplicialDisc hex_disc(int radius);

/// Erdos-Renyi graph G(n, p) read as a flag complex.
FlagComplex random_flag(int n, double p, std::uint64_t seed);

/// Grows a disc from one triangle by boundary attachment moves, keeping a
/// move only when `accept` holds for the grown disc. Stops after `moves`
/// accepted moves or when attempts run out.
SimplicialDisc grow_random_disc(int moves, std::uint64_t seed,
                                const std::function<bool(const SimplicialDisc&)>& accept);

/// grow_random_disc keeping the disc flag.
SimplicialDisc random_flag_disc(int moves, std::uint64_t seed);

/// grow_random_disc keeping the disc flag and 7-located.
SimplicialDisc random_7_located_disc(int size, std::uint64_t seed);

enum class GeneratorKind { Wheel, Dwheel, ExtendedFiveWheel, Cone, HexDisc, RandomDisc, RandomFlag };

std::string to_string(GeneratorKind kind);
/// Accepts the upper-case names (WHEEL, ..., RANDOM_FLAG), case-insensitive,
/// '-' and '_' interchangeable. Throws InputError.
GeneratorKind generator_kind_from_string(const std::string& name);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Wheel;
    int k = 5;
    int l = 5;
    bool planar = true;
    int radius = 1;
    int size = 10;       // accepted moves (RANDOM_DISC) or vertex count (RANDOM_FLAG)
    double p = 0.5;      // RANDOM_FLAG edge probability
    bool located = true; // RANDOM_DISC: require 7-location, not only flagness
    std::optional<std::uint64_t> seed;
    std::shared_ptr<const GeneratorSpec> base; // CONE
};

using Generated = std::variant<FlagComplex, SimplicialDisc>;

/// Throws InputError on invalid parameters (including a missing seed for the
/// random kinds).
Generated generate(const GeneratorSpec& spec);

} // namespace simploc
