#include "fewsphere/vertex_set.hpp"

#include "fewsphere/error.hpp"

namespace fewsphere {

VertexSet VertexSet::from_sorted(std::span<const int> vertices, int m) {
    VertexSet s;
    int prev = 0;
    for (int v : vertices) {
        if (v < 1 || v > m || v > kMaxVertices) {
            throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(m) + "]");
        }
        if (v <= prev) {
            throw Error(ErrorCode::InvalidInput, "vertex list is not strictly increasing");
        }
        s.insert(v);
        prev = v;
    }
    return s;
}

std::vector<int> VertexSet::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

VertexSet VertexSet::permuted(std::span<const int> perm) const {
    VertexSet out;
    for_each([&](int v) { out.insert(perm[static_cast<std::size_t>(v - 1)]); });
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

}  // namespace fewsphere
