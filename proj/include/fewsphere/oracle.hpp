#ifndef FEWSPHERE_ORACLE_HPP
#define FEWSPHERE_ORACLE_HPP

// Ground truth that does not go through minimal non-faces: exact hull
// facets, extremality, mod-2 homology and pseudomanifold checks.

#include <optional>
#include <vector>

#include "fewsphere/complex.hpp"
#include "fewsphere/rational.hpp"

namespace fewsphere {

/// Facets of the convex hull by brute force over D-subsets of labels.
/// Throws NotFullDimensional, or NonSimplicial when a supporting
/// hyperplane holds more than D points.
std::vector<Face> hull_facets(const PointConfiguration& pc);

/// Whether point `label` (1-based) is not a convex combination of the others.
bool is_vertex(const PointConfiguration& pc, int label);

/// The complex on [1, n] whose facets are the hull facets.  Throws
/// NonSimplicial or InteriorPoint.
SimplicialComplex boundary_complex(const PointConfiguration& pc);

/// Reduced Betti numbers over GF(2); reduced[0] is dimension -1.
struct BettiProfile {
    std::vector<long> reduced;

    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

BettiProfile betti_mod2(const SimplicialComplex& c);

/// (0, ..., 0, 1) over dimensions -1..d.
BettiProfile sphere_profile(int d);

bool is_pseudomanifold(const SimplicialComplex& c);

/**
 * Sphere ground truth where one is cheaply available: exact for d <= 2,
 * true when `realization` has boundary complex c, false when the homology
 * or pseudomanifold necessary conditions fail, and nothing otherwise.
 */
std::optional<bool> ground_truth_sphere(const SimplicialComplex& c, const PointConfiguration* realization = nullptr);

}  // namespace fewsphere

#endif
