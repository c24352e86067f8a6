#pragma once

#include <string>
#include <vector>

#include "simploc/disc.hpp"

namespace simploc {

enum class SurgeryKind { FourCycle, FiveCycle, SixCycle, FourWheel };

std::string to_string(SurgeryKind kind);
/// Inverse of to_string; throws InputError.
SurgeryKind surgery_kind_from_string(const std::string& name);

/// Audit record of one area-reducing move. `locus` lists disc vertex ids of
/// the input diagram in the order the move was given.
struct SurgeryCertificate {
    SurgeryKind kind = SurgeryKind::FourCycle;
    std::vector<VertexId> locus;
    int area_before = 0;
    int area_after = 0;
};

struct SurgeryResult {
    DiscDiagram diagram;
    SurgeryCertificate certificate;
};

/// Cycle (u, a, v, b) with f(u) = f(v): delete the bounded subdisc, glue u to
/// v and fold the hole shut. Throws SurgeryError (input untouched) when the
/// images differ, the subdisc touches the boundary, or the gluing would not
/// give a disc diagram.
SurgeryResult surgery_4cycle(const DiscDiagram& d, VertexId u, VertexId a, VertexId v, VertexId b);

/// Cycle (a, v, b, c, u) with f(u) = f(v): delete, glue u to v, insert <u, b, c>.
SurgeryResult surgery_5cycle(const DiscDiagram& d, VertexId a, VertexId v, VertexId b, VertexId c,
                             VertexId u);

/// Cycle (u, a, b, v, c, dd) with d(u, v) = 3 and f(u) = f(v): delete, glue u
/// to v, insert <a, b, u> and <u, c, dd>.
SurgeryResult surgery_6cycle(const DiscDiagram& d, VertexId u, VertexId a, VertexId b, VertexId v,
                             VertexId c, VertexId dd);

/// Removes the center of a disc 4-wheel and inserts a diagonal whose image
/// endpoints are adjacent in the target. If an antipodal pair has equal
/// images this defers to surgery_4cycle on the wheel boundary.
SurgeryResult replace_4wheel(const DiscDiagram& d, const WheelWitness& w);

struct ReduceResult {
    DiscDiagram diagram;
    std::vector<SurgeryCertificate> trace;
};

/// Applies the first applicable move (4-cycle, 4-wheel, 5-cycle, 6-cycle in
/// that priority, candidates in canonical order) until none applies. Does
/// not claim the result has minimal area.
ReduceResult reduce(const DiscDiagram& d);

} // namespace simploc
