#ifndef FEWSPHERE_JSON_IO_HPP
#define FEWSPHERE_JSON_IO_HPP

// JSON documents exchanged by the command-line tool.  Vertex lists are
// sorted and 1-based; rationals are "p/q" strings in lowest terms.
//
//   complex   {"m": 6, "facets": [[1,3,5], ...]}
//   nonfaces  {"m": 6, "nonfaces": [[1,2], ...]}
//   points    {"dim": 3, "points": [["1/1", "-2/3", "0/1"], ...]}
//   betti     {"reduced_betti": [0, 0, 0, 1]}
//   verdict   {"verdict": "sphere", "d": 2, "certificate": {...}}
//   catalog   {"m": 6, "classes": [{"bracelet": [...], ...}, ...]}

#include "json.hpp"

#include "fewsphere/catalog.hpp"
#include "fewsphere/complex.hpp"
#include "fewsphere/oracle.hpp"
#include "fewsphere/rational.hpp"
#include "fewsphere/recognizer.hpp"

namespace fewsphere::json_io {

using Json = nlohmann::json;

// Every parser throws Error(InvalidInput) on malformed or invalid documents.

Json face_list(const std::vector<Face>& faces);
std::vector<Face> parse_face_list(const Json& j, int m);

Json to_json(const SimplicialComplex& c);
SimplicialComplex parse_complex(const Json& j);

Json to_json(const NonFaceFamily& f);
NonFaceFamily parse_nonfaces(const Json& j);

Json to_json(const PointConfiguration& pc);
PointConfiguration parse_points(const Json& j);

Json to_json(const BettiProfile& b);
BettiProfile parse_betti(const Json& j);

Json to_json(const Verdict& v);
Verdict parse_verdict(const Json& j, int m);

Json to_json(const CatalogReport& report);

/// Parses text, turning syntax errors into Error(InvalidInput).
Json parse_text(const std::string& text);

/// Stable rendering: two-space indent, trailing newline.
std::string render(const Json& j);

}  // namespace fewsphere::json_io

#endif
