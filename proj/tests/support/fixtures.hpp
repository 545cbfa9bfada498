#ifndef FEWSPHERE_TESTS_FIXTURES_HPP
#define FEWSPHERE_TESTS_FIXTURES_HPP

#include <vector>

#include "fewsphere/complex.hpp"

namespace fixtures {

using fewsphere::Face;
using fewsphere::NonFaceFamily;
using fewsphere::SimplicialComplex;

inline SimplicialComplex cycle_graph(int m) {
    std::vector<Face> edges;
    for (int v = 1; v <= m; ++v) edges.push_back(Face{v, v % m + 1});
    return SimplicialComplex(m, edges);
}

inline SimplicialComplex pentagon() { return cycle_graph(5); }

inline NonFaceFamily pentagon_nonfaces() { return NonFaceFamily(5, {{1, 4}, {2, 5}, {1, 3}, {2, 4}, {3, 5}}); }

inline SimplicialComplex octahedron() {
    return SimplicialComplex(6, {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}});
}

inline NonFaceFamily octahedron_nonfaces() { return NonFaceFamily(6, {{1, 2}, {3, 4}, {5, 6}}); }

/// All (d+1)-subsets of [d+2].
inline SimplicialComplex simplex_boundary(int d) {
    const int m = d + 2;
    std::vector<Face> facets;
    for (int skip = 1; skip <= m; ++skip) facets.push_back(fewsphere::VertexSet::range(m) - Face{skip});
    return SimplicialComplex(m, facets);
}

}  // namespace fixtures

#endif
