#ifndef FEWSPHERE_CATALOG_HPP
#define FEWSPHERE_CATALOG_HPP

#include <vector>

#include "fewsphere/complex.hpp"
#include "fewsphere/recognizer.hpp"

namespace fewsphere {

/// Block sizes around the polygon, read in slot order.
using Bracelet = std::vector<int>;

/// Lexicographic minimum over all rotations and reflections.
Bracelet canonical_bracelet(const Bracelet& b);

/// All canonical bracelets of odd length 3 <= n <= m summing to m, with
/// every part >= 2 when n = 3.  Ordered by length, then lexicographically.
std::vector<Bracelet> enumerate_bracelets(int m);

struct InstantiatedSphere {
    NonFaceFamily family;
    MaxOddCycle certificate;
};

/// Slot j receives the next b[j] labels as block B_{-2j}; non-faces follow
/// from the blocks.  Throws InvalidInput for an invalid bracelet.
InstantiatedSphere instantiate(const Bracelet& b);

/// Backtracking over vertex bijections, pruned by f-vectors and per-vertex
/// facet counts.
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

struct CatalogClass {
    Bracelet bracelet;
    SimplicialComplex complex;
    FVector f_vector;
    NonFaceFamily family;
    MaxOddCycle certificate;
};

struct CatalogReport {
    int m = 0;
    std::vector<CatalogClass> classes;  // sorted by canonical bracelet
};

inline constexpr int kDefaultCatalogBound = 10;

struct CatalogOptions {
    bool parallel = false;
    int max_vertices = kDefaultCatalogBound;
};

/**
 * Every d-sphere on m = d + 4 vertices up to isomorphism.  Each bracelet is
 * instantiated and cross-checked (recognizer, realization boundary, Gale
 * readback, pseudomanifold, mod-2 Betti numbers, Euler characteristic);
 * any disagreement throws CrossCheckFailed.
 */
CatalogReport catalog(int m, CatalogOptions options = {});

}  // namespace fewsphere

#endif
