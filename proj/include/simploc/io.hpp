#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "simploc/conditions.hpp"
#include "simploc/disc.hpp"
#include "simploc/metric.hpp"
#include "simploc/oracle.hpp"
#include "simploc/surgery.hpp"

namespace simploc {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become InputError with line and column.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source = "<input>");
void write_text_file(const std::string& path, const std::string& text);

/// Label as JSON: an integer when it is a plain decimal, else a string.
Json label_json(const std::string& label);

/**
 * Complex files: {"vertices": [...], "edges": [[a, b], ...]} with vertices
 * given as integers or strings. An optional "simplices" list must coincide
 * with the clique complex of the edges.
 */
FlagComplex complex_from_json(const Json& j);
Json complex_to_json(const FlagComplex& X);

/// Disc files: {"triangles": [[a, b, c], ...], "boundary": [...]} over ids 0..n-1.
SimplicialDisc disc_from_json(const Json& j, DiscValidation options = {});
Json disc_to_json(const SimplicialDisc& D);

/**
 * Diagram files: disc fields plus "map" (target label per disc vertex, as an
 * array or an object keyed by disc id), "loop" (target labels) and the
 * target complex under "target". `target` overrides the embedded one.
 */
DiscDiagram diagram_from_json(const Json& j, std::shared_ptr<const FlagComplex> target = nullptr);
Json diagram_to_json(const DiscDiagram& d, bool embed_target = true);

Json vertices_json(const FlagComplex& X, const std::vector<VertexId>& vs);
Json wheel_json(const FlagComplex& X, const WheelWitness& w);
Json dwheel_json(const FlagComplex& X, const DwheelWitness& w);
Json five_wheel_json(const FlagComplex& X, const ExtendedFiveWheelWitness& w);
Json dwheel_report_json(const FlagComplex& X, const DwheelReport& r);
Json five_wheel_report_json(const FlagComplex& X, const FiveWheelReport& r);

Json certificate_json(const SurgeryCertificate& c);
Json metric_report_json(const MetrizedDisc& M);
Json oracle_result_json(const OracleResult& r);

} // namespace simploc
