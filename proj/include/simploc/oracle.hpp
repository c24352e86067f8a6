#pragma once

#include <memory>
#include <string>
#include <vector>

#include "simploc/disc.hpp"

namespace simploc {

enum class OracleStatus {
    Found,
    Unsat,          // no filling of any area exists
    UnsatWithinCap, // none up to the area cap; larger ones were not ruled out
};

std::string to_string(OracleStatus status);

struct OracleOptions {
    int max_loop = 10;
    int max_cap = 12;
    /// Stop collecting diagrams after this many (result.truncated is set).
    int max_diagrams = 10000;
};

struct OracleResult {
    OracleStatus status = OracleStatus::UnsatWithinCap;
    int minimal_area = -1;
    std::vector<DiscDiagram> diagrams;
    bool truncated = false;
    long long explored = 0; // boundary states evaluated
};

/**
 * Exhaustive search for the minimal-area disc diagrams of `loop` in X.
 *
 * Fillings are built by peeling the triangle on the first boundary edge:
 * its third vertex is either another boundary vertex (split into two
 * smaller boundary words) or a new interior vertex mapped to a common
 * neighbor of the edge's images. States are memoized on (image word, area).
 * Every filling of a boundary word is produced exactly once, so the
 * returned diagrams are pairwise distinct as labeled discs. Throws
 * InputError when loop is not a cycle of X or exceeds the guards.
 */
OracleResult brute_force_min_diagram(std::shared_ptr<const FlagComplex> X, const Cycle& loop,
                                     int area_cap, const OracleOptions& options = {});

/// All diagrams of exactly `area` triangles (same search, fixed area).
OracleResult diagrams_of_area(std::shared_ptr<const FlagComplex> X, const Cycle& loop, int area,
                              const OracleOptions& options = {});

} // namespace simploc
