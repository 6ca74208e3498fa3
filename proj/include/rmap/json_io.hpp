#ifndef RMAP_JSON_IO_HPP
#define RMAP_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "rmap/combmap.hpp"
#include "rmap/constellation.hpp"
#include "rmap/critical.hpp"
#include "rmap/jordan.hpp"
#include "rmap/labelling.hpp"
#include "rmap/trace.hpp"

namespace rmap {

using Json = nlohmann::json;

// Sphere points serialize as [re, im] with "inf" for infinity.
Json to_json(const SpherePoint& p);
SpherePoint sphere_from_json(const Json& j);

// {"num": [[re,im],...], "den": [[re,im],...]}, ascending degree.
Json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const Json& j);

// Report with points, values, multiplicities and the RH verdict.
Json to_json(const CriticalData& cd);

// Ordered vertex list plus the ray data of segments touching infinity.
Json to_json(const JordanPath& g);
JordanPath jordan_from_json(const Json& j);

// {"vertices":[{"id","rot"}], "half_edges":[{"id","twin","origin"}],
//  "labels":{id: residue}?, "labels_q"?, "blue_face_halfedge"?}
Json to_json(const CombinatorialMap& m);
CombinatorialMap map_from_json(const Json& j);

Json to_json(const QLabelling& L);
QLabelling labelling_from_json(const Json& j);

// {"n","q","sigmas":[[cycles]]} with 1-based sheets and explicit cycles.
Json to_json(const Constellation& c);
Constellation constellation_from_json(const Json& j);

Json to_json(const SurgeryPlan& p);

// Map JSON plus {"coords": {...}, "arcs": {forward half-edge: [[re,im],...]}}.
Json to_json(const EmbeddedRMap& em);
EmbeddedRMap embedded_from_json(const Json& j);

// Deterministic dump (sorted keys, two-space indent, trailing newline).
std::string dump(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
void save_text_file(const std::string& path, const std::string& text);

} // namespace rmap

#endif
