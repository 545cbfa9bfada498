#ifndef FEWSPHERE_COMPLEX_HPP
#define FEWSPHERE_COMPLEX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fewsphere/vertex_set.hpp"

namespace fewsphere {

using Face = VertexSet;

/**
 * A simplicial complex on the vertex set [1, m], stored by its facets.
 *
 * Invariants, checked on construction: 1 <= m <= 64, facets form an
 * antichain, and their union is [1, m].  Facets are kept in lexicographic
 * order.
 */
class SimplicialComplex {
public:
    SimplicialComplex(int m, std::vector<Face> facets);

    int vertex_count() const { return m_; }
    const std::vector<Face>& facets() const { return facets_; }

    /// (largest facet size) - 1
    int dimension() const;

    bool is_face(Face a) const;

    /// All faces, the empty face included, in no particular order.
    std::vector<Face> faces() const;

    SimplicialComplex permuted(std::span<const int> perm) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int m_;
    std::vector<Face> facets_;
};

/**
 * The inclusion-minimal non-faces of a complex on [1, m].  Members have
 * at least two elements and form an antichain; they are kept in
 * lexicographic order.  The empty family describes the full simplex.
 */
class NonFaceFamily {
public:
    NonFaceFamily(int m, std::vector<Face> members);

    int vertex_count() const { return m_; }
    const std::vector<Face>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    NonFaceFamily permuted(std::span<const int> perm) const;

    friend bool operator==(const NonFaceFamily&, const NonFaceFamily&) = default;

private:
    int m_;
    std::vector<Face> members_;
};

/// Face counts by dimension; counts[0] is f_{-1} = 1 for the empty face.
struct FVector {
    std::vector<std::int64_t> counts;

    /// f_i for i >= -1.
    std::int64_t operator()(int i) const { return counts.at(static_cast<std::size_t>(i + 1)); }
    int dimension() const { return static_cast<int>(counts.size()) - 2; }

    friend bool operator==(const FVector&, const FVector&) = default;
};

NonFaceFamily minimal_nonfaces(const SimplicialComplex& c);
SimplicialComplex complex_from_nonfaces(const NonFaceFamily& f);

FVector f_vector(const SimplicialComplex& c);
std::int64_t euler_characteristic(const SimplicialComplex& c);

/// Calls f(s) for each subset of `ground` with exactly `size` elements,
/// in lexicographic order.
template <typename F>
void for_each_subset_of_size(VertexSet ground, int size, F&& f);

/// Calls f(s) for every subset of `ground`, the empty set included.
template <typename F>
void for_each_subset(VertexSet ground, F&& f) {
    const VertexSet::Mask g = ground.mask();
    VertexSet::Mask s = 0;
    while (true) {
        f(VertexSet::from_mask(s));
        if (s == g) break;
        s = (s - g) & g;
    }
}

template <typename F>
void for_each_subset_of_size(VertexSet ground, int size, F&& f) {
    std::vector<int> elems = ground.vertices();
    const int n = static_cast<int>(elems.size());
    if (size < 0 || size > n) return;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s.insert(elems[static_cast<std::size_t>(i)]);
        f(s);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace fewsphere

#endif
