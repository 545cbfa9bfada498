#include "fewsphere/json_io.hpp"

#include <string>

#include "fewsphere/error.hpp"

namespace fewsphere::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

int integer_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Json certificate_json(const SphereCertificate& cert) {
    return std::visit(
        [](const auto& c) -> Json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SimplexBoundary>) {
                return {{"kind", "simplex_boundary"}, {"ordering", face_list({c.vertices})}};
            } else if constexpr (std::is_same_v<T, TwoPartition>) {
                return {{"kind", "two_partition"}, {"ordering", face_list({c.first, c.second})}};
            } else {
                return {{"kind", "max_odd_cycle"},
                        {"ordering", face_list(c.ordering.sets())},
                        {"blocks", face_list(c.blocks)}};
            }
        },
        cert);
}

NotSphereReason parse_reason(const std::string& s) {
    for (auto r : {NotSphereReason::NonOddFamilySize, NotSphereReason::NoCyclicOrdering,
                   NotSphereReason::BlocksNotPartition, NotSphereReason::FullSimplex,
                   NotSphereReason::WrongFamilyShape}) {
        if (to_string(r) == s) return r;
    }
    bad("unknown reason \"" + s + "\"");
}

}  // namespace

Json face_list(const std::vector<Face>& faces) {
    Json out = Json::array();
    for (Face f : faces) out.push_back(f.vertices());
    return out;
}

std::vector<Face> parse_face_list(const Json& j, int m) {
    if (!j.is_array()) bad("expected an array of vertex lists");
    std::vector<Face> out;
    for (const Json& item : j) {
        if (!item.is_array()) bad("expected a vertex list");
        std::vector<int> vertices;
        for (const Json& v : item) {
            if (!v.is_number_integer()) bad("vertices must be integers");
            vertices.push_back(v.get<int>());
        }
        out.push_back(VertexSet::from_sorted(vertices, m));
    }
    return out;
}

Json to_json(const SimplicialComplex& c) {
    return {{"m", c.vertex_count()}, {"facets", face_list(c.facets())}};
}

SimplicialComplex parse_complex(const Json& j) {
    const int m = integer_field(j, "m");
    if (m < 1 || m > kMaxVertices) bad("\"m\" must lie in [1, 64]");
    return SimplicialComplex(m, parse_face_list(field(j, "facets"), m));
}

Json to_json(const NonFaceFamily& f) {
    return {{"m", f.vertex_count()}, {"nonfaces", face_list(f.members())}};
}

NonFaceFamily parse_nonfaces(const Json& j) {
    const int m = integer_field(j, "m");
    if (m < 1 || m > kMaxVertices) bad("\"m\" must lie in [1, 64]");
    return NonFaceFamily(m, parse_face_list(field(j, "nonfaces"), m));
}

Json to_json(const PointConfiguration& pc) {
    Json points = Json::array();
    for (const auto& x : pc.points) {
        Json row = Json::array();
        for (const auto& q : x) row.push_back(to_fraction_string(q));
        points.push_back(std::move(row));
    }
    return {{"dim", pc.dim}, {"points", std::move(points)}};
}

PointConfiguration parse_points(const Json& j) {
    const int dim = integer_field(j, "dim");
    if (dim < 1) bad("\"dim\" must be positive");
    const Json& points = field(j, "points");
    if (!points.is_array()) bad("\"points\" must be an array");
    PointConfiguration pc;
    pc.dim = static_cast<std::size_t>(dim);
    for (const Json& row : points) {
        if (!row.is_array() || row.size() != pc.dim) bad("every point needs exactly \"dim\" coordinates");
        RationalVector x;
        for (const Json& q : row) {
            if (!q.is_string()) bad("coordinates must be \"p/q\" strings");
            x.push_back(parse_fraction(q.get<std::string>()));
        }
        pc.points.push_back(std::move(x));
    }
    return pc;
}

Json to_json(const BettiProfile& b) { return {{"reduced_betti", b.reduced}}; }

BettiProfile parse_betti(const Json& j) {
    const Json& list = field(j, "reduced_betti");
    if (!list.is_array()) bad("\"reduced_betti\" must be an array");
    BettiProfile b;
    for (const Json& v : list) {
        if (!v.is_number_integer() || v.get<long>() < 0) bad("Betti numbers must be nonnegative integers");
        b.reduced.push_back(v.get<long>());
    }
    return b;
}

Json to_json(const Verdict& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Sphere>) {
                return {{"verdict", "sphere"}, {"d", x.dimension}, {"certificate", certificate_json(x.certificate)}};
            } else if constexpr (std::is_same_v<T, NotSphere>) {
                return {{"verdict", "not_sphere"}, {"reason", std::string(to_string(x.reason))}};
            } else {
                return {{"verdict", "out_of_scope"}, {"m", x.vertex_count}, {"d", x.dimension}};
            }
        },
        v);
}

Verdict parse_verdict(const Json& j, int m) {
    const Json& kind = field(j, "verdict");
    if (!kind.is_string()) bad("\"verdict\" must be a string");
    const std::string verdict = kind.get<std::string>();
    if (verdict == "not_sphere") {
        const Json& reason = field(j, "reason");
        if (!reason.is_string()) bad("\"reason\" must be a string");
        return NotSphere{parse_reason(reason.get<std::string>())};
    }
    if (verdict == "out_of_scope") return OutOfScope{integer_field(j, "m"), integer_field(j, "d")};
    if (verdict != "sphere") bad("unknown verdict \"" + verdict + "\"");

    const int d = integer_field(j, "d");
    const Json& cert = field(j, "certificate");
    const Json& cert_kind = field(cert, "kind");
    if (!cert_kind.is_string()) bad("certificate \"kind\" must be a string");
    const std::string name = cert_kind.get<std::string>();
    const std::vector<Face> ordering = parse_face_list(field(cert, "ordering"), m);
    if (name == "simplex_boundary" && ordering.size() == 1) return Sphere{d, SimplexBoundary{ordering[0]}};
    if (name == "two_partition" && ordering.size() == 2) return Sphere{d, TwoPartition{ordering[0], ordering[1]}};
    if (name == "max_odd_cycle") {
        MaxOddCycle c{CyclicOrdering(ordering), parse_face_list(field(cert, "blocks"), m)};
        if (!is_valid_certificate(c, m)) bad("certificate does not validate");
        return Sphere{d, std::move(c)};
    }
    bad("malformed certificate");
}

Json to_json(const CatalogReport& report) {
    Json classes = Json::array();
    for (const auto& c : report.classes) {
        classes.push_back({{"bracelet", c.bracelet},
                           {"f_vector", c.f_vector.counts},
                           {"facet_count", c.complex.facets().size()},
                           {"nonfaces", face_list(c.family.members())},
                           {"ordering", face_list(c.certificate.ordering.sets())},
                           {"blocks", face_list(c.certificate.blocks)}});
    }
    return {{"m", report.m}, {"class_count", report.classes.size()}, {"classes", std::move(classes)}};
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fewsphere::json_io
