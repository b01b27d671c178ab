#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "eqwb/gkm.hpp"
#include "eqwb/nil_hecke.hpp"
#include "eqwb/workbench.hpp"

namespace eqwb {

using Json = nlohmann::json;

/// Stamped into every top-level document as "schema".
inline constexpr const char* kSchemaVersion = "eqwb/1";

enum class Format { Json, Text };
/// "json" or "text"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

// Rationals travel as decimal strings so arbitrarily large values survive.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json to_json(const RootDatum& datum);
RootDatum root_datum_from_json(const Json& j);

Json to_json(const GroupLaw& law);
GroupLaw group_law_from_json(const Json& j);

/// Build parameters plus the resulting vertices and edges. Parsing rebuilds
/// the graph from the parameters and throws if the stored vertices or edges
/// disagree with the rebuilt ones.
Json to_json(const MomentGraph& graph);
MomentGraph moment_graph_from_json(const Json& j);

/// Vertex id -> canonical polynomial text.
Json to_json(const GkmFunction& f);
GkmFunction gkm_function_from_json(std::shared_ptr<const MomentGraph> graph, const Json& j);

Json to_json(const ShiftContext& ctx);
std::shared_ptr<const ShiftContext> shift_context_from_json(const Json& j);
/// {law, base, param, terms: [{coweight, coeff}]}
Json to_json(const ShiftElement& e);
ShiftElement shift_element_from_json(const Json& j);
ShiftElement shift_element_from_json(std::shared_ptr<const ShiftContext> ctx, const Json& j);

Json to_json(const CoulombPresentation& p);
CoulombPresentation coulomb_presentation_from_json(const Json& j);

/// {case, relation, status: verified|mismatch, lhs_normal_form, rhs_normal_form}
Json to_json(const CheckResult& r);
Json to_json(const RelationReport& r);
Json to_json(const CentralizerSolution& s);

/// Text form of a polynomial is "vars: x,y\n<expression>\n".
std::string serialize(const LaurentPoly& p, Format format);
LaurentPoly parse_laurent(const std::string& bytes, Format format);
std::string serialize(const RatFunc& f, Format format);
RatFunc parse_ratfunc(const std::string& bytes, Format format);

/// JSON only: the text form of these objects is a report, not an interchange format.
std::string serialize(const MomentGraph& g, Format format);
MomentGraph parse_moment_graph(const std::string& bytes, Format format);
std::string serialize(const CoulombPresentation& p, Format format);
CoulombPresentation parse_coulomb_presentation(const std::string& bytes, Format format);

}  // namespace eqwb
