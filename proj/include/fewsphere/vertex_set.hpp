#ifndef FEWSPHERE_VERTEX_SET_HPP
#define FEWSPHERE_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fewsphere {

inline constexpr int kMaxVertices = 64;

/**
 * A finite set of vertices drawn from [1, 64], stored as a machine word.
 *
 * Vertex v occupies bit v - 1.  Ordering is lexicographic on the
 * increasing vertex sequence, so {1, 2} < {1, 2, 5} < {1, 3} < {2}.
 */
class VertexSet {
public:
    using Mask = std::uint64_t;

    constexpr VertexSet() = default;
    constexpr VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static constexpr VertexSet from_mask(Mask mask) {
        VertexSet s;
        s.mask_ = mask;
        return s;
    }

    /// The set [1, m].
    static constexpr VertexSet range(int m) {
        return from_mask(m >= 64 ? ~Mask{0} : ((Mask{1} << m) - 1));
    }

    /// Builds a set from a strictly increasing list of vertices in [1, m];
    /// throws Error(InvalidInput) otherwise.
    static VertexSet from_sorted(std::span<const int> vertices, int m);

    constexpr Mask mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }

    constexpr bool contains(int v) const { return (mask_ >> (v - 1)) & 1U; }
    constexpr void insert(int v) { mask_ |= Mask{1} << (v - 1); }
    constexpr void erase(int v) { mask_ &= ~(Mask{1} << (v - 1)); }

    /// Smallest and largest vertex; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(mask_) + 1; }
    constexpr int max() const { return 64 - std::countl_zero(mask_); }

    constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (mask_ & other.mask_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_mask(a.mask_ | b.mask_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_mask(a.mask_ & b.mask_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_mask(a.mask_ & ~b.mask_); }
    constexpr VertexSet& operator|=(VertexSet o) { mask_ |= o.mask_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { mask_ &= o.mask_; return *this; }

    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
        Mask diff = a.mask_ ^ b.mask_;
        if (diff == 0) return std::strong_ordering::equal;
        Mask low = diff & (~diff + 1);
        // Both sets agree below `low`.  The one holding `low` has the smaller
        // next element, unless the other has run out of elements entirely.
        bool a_has = (a.mask_ & low) != 0;
        Mask beyond = ~((low << 1) - 1) | low;
        if (a_has) {
            return (b.mask_ & beyond) == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return (a.mask_ & beyond) == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::vector<int> vertices() const;

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (Mask m = mask_; m != 0; m &= m - 1) f(std::countr_zero(m) + 1);
    }

    /// Image under a relabeling; perm[v - 1] is the image of vertex v.
    VertexSet permuted(std::span<const int> perm) const;

    /// "{1,3,5}"
    std::string to_string() const;

private:
    Mask mask_ = 0;
};

}  // namespace fewsphere

template <>
struct std::hash<fewsphere::VertexSet> {
    std::size_t operator()(fewsphere::VertexSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.mask());
    }
};

#endif
