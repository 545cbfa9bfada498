#ifndef FEWSPHERE_RATIONAL_HPP
#define FEWSPHERE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fewsphere {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Dense matrix stored as a list of rows.
using RationalMatrix = std::vector<RationalVector>;

/// "p/q" in lowest terms, always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

/// Accepts "p/q" or "p"; throws Error(InvalidInput) on malformed text or a
/// zero denominator.  The result is canonicalized.
Rational parse_fraction(const std::string& text);

Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);

/// Labeled points x_1, ..., x_n in Q^dim; label i is index i - 1.
struct PointConfiguration {
    std::size_t dim = 0;
    std::vector<RationalVector> points;

    std::size_t size() const { return points.size(); }
    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;
};

namespace linalg {

std::size_t rank(const RationalMatrix& a, std::size_t cols);

/**
 * Basis of { x : a x = 0 } computed by fraction-free (Bareiss) elimination
 * over integer-scaled rows.  Each pivot is the topmost nonzero entry of the
 * leftmost column that still has one, so the basis is reproducible.
 * Each basis vector is a primitive integer vector whose entry at its own
 * free column is positive; vectors are ordered by free column.
 */
RationalMatrix kernel_basis(const RationalMatrix& a, std::size_t cols);

/// Some x with a x = b, or nothing when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, std::size_t cols, const RationalVector& b);

RationalMatrix transpose(const RationalMatrix& a, std::size_t cols);

/**
 * Exact phase-one simplex with Bland's rule: finds w >= 0 with a w = b, or
 * reports infeasibility.  Used for convex-combination membership.
 */
std::optional<RationalVector> nonnegative_solution(const RationalMatrix& a, std::size_t cols, const RationalVector& b);

}  // namespace linalg

}  // namespace fewsphere

#endif
