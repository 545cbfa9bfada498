#ifndef FEWSPHERE_RECOGNIZER_HPP
#define FEWSPHERE_RECOGNIZER_HPP

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fewsphere/complex.hpp"

namespace fewsphere {

/**
 * A sequence A_0, ..., A_{n-1} of sets read cyclically, with every pair of
 * successive sets (A_{n-1}, A_0 included) disjoint.
 */
class CyclicOrdering {
public:
    explicit CyclicOrdering(std::vector<Face> sets);

    std::size_t size() const { return sets_.size(); }
    const std::vector<Face>& sets() const { return sets_; }

    /// A_i with i taken modulo n.
    Face operator[](long i) const;

    CyclicOrdering rotated(long shift) const;
    CyclicOrdering reversed() const;

    /// Representative of the dihedral orbit with A_0 the smallest set and
    /// A_1 < A_{n-1}.
    CyclicOrdering canonical() const;
    bool is_canonical() const;

    friend bool operator==(const CyclicOrdering&, const CyclicOrdering&) = default;

private:
    std::vector<Face> sets_;
};

/// B_i = A_i & A_{i+2} & ... & A_{i+n-3}.  Throws EvenLength or TooShort.
std::vector<Face> alternating_blocks(const CyclicOrdering& ordering);

struct SimplexBoundary {
    Face vertices;
    friend bool operator==(const SimplexBoundary&, const SimplexBoundary&) = default;
};

struct TwoPartition {
    Face first;
    Face second;
    friend bool operator==(const TwoPartition&, const TwoPartition&) = default;
};

struct MaxOddCycle {
    CyclicOrdering ordering;
    std::vector<Face> blocks;
    friend bool operator==(const MaxOddCycle&, const MaxOddCycle&) = default;
};

using SphereCertificate = std::variant<SimplexBoundary, TwoPartition, MaxOddCycle>;

/// Checks every MaxOddCycle invariant against [1, m]: odd n >= 3, successive
/// disjointness, blocks equal to the alternating intersections, blocks
/// nonempty and partitioning [1, m], and block sizes >= 2 when n = 3.
bool is_valid_certificate(const MaxOddCycle& cert, int m);

/// Builds the certificate for an ordering, throwing InvalidInput when the
/// result would not validate.
MaxOddCycle make_certificate(const CyclicOrdering& ordering, int m);

/// A_i = B_i | B_{i-2} | ... | B_{i-2(k-1)} for n = 2k + 1 blocks.
std::vector<Face> nonfaces_from_blocks(const std::vector<Face>& blocks);

/// The canonically smallest maximum odd cycle ordering of `f`, if any.
std::optional<MaxOddCycle> find_max_odd_cycle(const NonFaceFamily& f);

/// Every canonical maximum odd cycle ordering of `f`, in search order.
std::vector<MaxOddCycle> all_max_odd_cycles(const NonFaceFamily& f);

enum class NotSphereReason {
    NonOddFamilySize,
    NoCyclicOrdering,
    BlocksNotPartition,
    FullSimplex,
    WrongFamilyShape,
};

std::string_view to_string(NotSphereReason reason);

struct Sphere {
    int dimension;
    SphereCertificate certificate;
    friend bool operator==(const Sphere&, const Sphere&) = default;
};

struct NotSphere {
    NotSphereReason reason;
    friend bool operator==(const NotSphere&, const NotSphere&) = default;
};

struct OutOfScope {
    int vertex_count;
    int dimension;
    friend bool operator==(const OutOfScope&, const OutOfScope&) = default;
};

using Verdict = std::variant<Sphere, NotSphere, OutOfScope>;

/// Decides whether a complex on at most d + 4 vertices is a d-sphere.
Verdict recognize(const SimplicialComplex& c);

/// Same decision starting from the non-face family; the complex is
/// Sigma(f) and is built only to read off its dimension.
Verdict recognize(const NonFaceFamily& f);

inline bool is_sphere(const Verdict& v) { return std::holds_alternative<Sphere>(v); }

}  // namespace fewsphere

#endif
