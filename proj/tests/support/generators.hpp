#ifndef FEWSPHERE_TESTS_GENERATORS_HPP
#define FEWSPHERE_TESTS_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "fewsphere/complex.hpp"
#include "fewsphere/rational.hpp"

namespace gen {

using fewsphere::Face;
using fewsphere::Rational;
using fewsphere::RationalVector;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Face random_subset(Rng& rng, int m, int min_size, int max_size) {
    const int size = uniform(rng, min_size, max_size);
    std::vector<int> all(static_cast<std::size_t>(m));
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    Face s;
    for (int i = 0; i < size; ++i) s.insert(all[static_cast<std::size_t>(i)]);
    return s;
}

/// Keeps the inclusion-minimal sets, without duplicates.
inline std::vector<Face> minimal_sets(std::vector<Face> sets) {
    std::sort(sets.begin(), sets.end(), [](Face a, Face b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    std::vector<Face> out;
    for (Face s : sets) {
        if (std::none_of(out.begin(), out.end(), [&](Face t) { return t.subset_of(s); })) out.push_back(s);
    }
    return out;
}

inline std::vector<Face> maximal_sets(std::vector<Face> sets) {
    std::sort(sets.begin(), sets.end(), [](Face a, Face b) { return a.size() > b.size() || (a.size() == b.size() && a < b); });
    std::vector<Face> out;
    for (Face s : sets) {
        if (std::none_of(out.begin(), out.end(), [&](Face t) { return s.subset_of(t); })) out.push_back(s);
    }
    return out;
}

inline fewsphere::NonFaceFamily random_nonface_family(Rng& rng, int m) {
    const int count = uniform(rng, 0, m + 2);
    std::vector<Face> sets;
    for (int i = 0; i < count; ++i) sets.push_back(random_subset(rng, m, 2, std::max(2, m - uniform(rng, 0, m - 2))));
    return fewsphere::NonFaceFamily(m, minimal_sets(std::move(sets)));
}

inline fewsphere::SimplicialComplex random_complex(Rng& rng, int m) {
    const int count = uniform(rng, 1, 2 * m);
    std::vector<Face> sets;
    for (int i = 0; i < count; ++i) sets.push_back(random_subset(rng, m, 1, m));
    for (int v = 1; v <= m; ++v) sets.push_back(Face{v});
    return fewsphere::SimplicialComplex(m, maximal_sets(std::move(sets)));
}

inline std::vector<int> random_permutation(Rng& rng, int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline Rational random_rational(Rng& rng, int range, int max_den = 7) {
    Rational q(uniform(rng, -range, range), uniform(rng, 1, max_den));
    q.canonicalize();
    return q;
}

inline RationalVector random_vector(Rng& rng, std::size_t dim, int range, int max_den = 7) {
    RationalVector v;
    for (std::size_t i = 0; i < dim; ++i) v.push_back(random_rational(rng, range, max_den));
    return v;
}

inline fewsphere::PointConfiguration random_points(Rng& rng, std::size_t n, std::size_t dim, int range, int max_den = 7) {
    fewsphere::PointConfiguration pc;
    pc.dim = dim;
    for (std::size_t i = 0; i < n; ++i) pc.points.push_back(random_vector(rng, dim, range, max_den));
    return pc;
}

}  // namespace gen

#endif
