#ifndef FOURPAGE_SERIALIZE_HPP
#define FOURPAGE_SERIALIZE_HPP

#include "fourpage/binding.hpp"
#include "fourpage/diagram.hpp"
#include "fourpage/ribbon.hpp"
#include "fourpage/state_tree.hpp"
#include "json.hpp"

// JSON encodings; see docs/json_schema.md. Every top-level object except the
// plain diagram carries a "schema" tag with a version suffix.
namespace fourpage {

using Json = nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(Side, {{Side::inside, "inside"}, {Side::outside, "outside"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Pass, {{Pass::over, "over"}, {Pass::under, "under"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Turn, {{Turn::fold90, "fold90"}, {Turn::straight180, "straight180"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Diagonal, {{Diagonal::none, "none"},
                                        {Diagonal::rising, "rising"},
                                        {Diagonal::falling, "falling"}})

inline constexpr const char* kTaitSchema = "fourpage.tait/1";
inline constexpr const char* kTreeSchema = "fourpage.tree/1";
inline constexpr const char* kTourSchema = "fourpage.tour/1";
inline constexpr const char* kPresentationSchema = "fourpage.presentation/1";
inline constexpr const char* kVerifySchema = "fourpage.verify/1";
inline constexpr const char* kRibbonSchema = "fourpage.ribbon/1";
inline constexpr const char* kSchematicSchema = "fourpage.schematic/1";

void to_json(Json& j, Page page);
void from_json(const Json& j, Page& page);

void to_json(Json& j, const TaitGraph& g);
void to_json(Json& j, const SpanningTree& t);
void to_json(Json& j, const EulerTour& t);
void to_json(Json& j, const CutArc& a);
void to_json(Json& j, const CircularPresentation& p);
void to_json(Json& j, const VerifyReport& r);
void to_json(Json& j, const RibbonPlan& plan);
void to_json(Json& j, const RibbonBound& b);
void to_json(Json& j, const Schematic& s);

// Throws Error(InvalidPresentation) on a document that is not a presentation.
CircularPresentation presentation_from_json(const Json& j);

}  // namespace fourpage

#endif  // FOURPAGE_SERIALIZE_HPP
