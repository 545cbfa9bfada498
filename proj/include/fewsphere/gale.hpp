#ifndef FEWSPHERE_GALE_HPP
#define FEWSPHERE_GALE_HPP

#include <optional>
#include <span>
#include <vector>

#include "fewsphere/complex.hpp"
#include "fewsphere/rational.hpp"
#include "fewsphere/recognizer.hpp"

namespace fewsphere {

/**
 * Vectors y_1, ..., y_n in Q^dim that sum to zero and linearly span Q^dim.
 * Produced by gale_transform and realize_gale_vectors; the invariants are
 * checked by validate_gale().
 */
struct GaleConfiguration {
    std::size_t dim = 0;
    std::vector<RationalVector> vectors;

    std::size_t size() const { return vectors.size(); }
    friend bool operator==(const GaleConfiguration&, const GaleConfiguration&) = default;
};

bool is_valid_gale(const GaleConfiguration& g);

/// Throws InvalidConfiguration unless is_valid_gale(g).
void validate_gale(const GaleConfiguration& g);

/**
 * The open ray through a nonzero planar rational vector, held as the
 * primitive integer vector on it.  Two vectors share a direction exactly
 * when one is a positive multiple of the other, so this stands in for the
 * (irrational) unit vector.
 */
class DiagramDirection {
public:
    /// Nothing for the zero vector.
    static std::optional<DiagramDirection> of(const RationalVector& v);

    const mpz_class& x() const { return x_; }
    const mpz_class& y() const { return y_; }
    DiagramDirection opposite() const;
    RationalVector as_vector() const { return {Rational(x_), Rational(y_)}; }

    friend bool operator==(const DiagramDirection&, const DiagramDirection&) = default;

private:
    DiagramDirection(mpz_class x, mpz_class y) : x_(std::move(x)), y_(std::move(y)) {}
    mpz_class x_;
    mpz_class y_;
};

/// Strict order by polar angle in [0, 2 pi), decided by half-plane then
/// cross product.  Both vectors must be planar and nonzero.
bool angle_less(const RationalVector& a, const RationalVector& b);

/**
 * Placement of the vertices [1, m] on the 2k + 1 slots of an odd polygon.
 * slot[v - 1] is the slot of vertex v; slot j holds block B_{-2j}.
 */
struct CombinatorialDiagram {
    int k = 0;
    std::vector<int> slot;

    int slot_count() const { return 2 * k + 1; }
    int vertex_count() const { return static_cast<int>(slot.size()); }
    VertexSet slot_members(int j) const;

    friend bool operator==(const CombinatorialDiagram&, const CombinatorialDiagram&) = default;
};

CombinatorialDiagram diagram_from_certificate(const MaxOddCycle& cert);

/// True iff the slots of the vertices outside `a` fit in no arc of k + 1
/// consecutive slots, i.e. iff `a` spans a proper face of the realization.
bool coface_test(const CombinatorialDiagram& diag, Face a);

/// Default angular tolerance 1 / (16 (2k + 1)) of a turn.
Rational default_polygon_tolerance(int k);

/**
 * Rational points on the unit circle approximating the regular (2k+1)-gon
 * with vertex j at angle 2 pi j / (2k+1), each within tol of a full turn
 * of its target.  Requires 0 < tol < 1 / (8 (2k + 1)).
 *
 * A rational rotation w is found by Stern-Brocot search on the tangent
 * half-angle parameter; vertex j is then w^j, which stays on the circle
 * exactly.  The error bound is certified without trigonometry: if w^n has
 * x > 0 and |y| <= 4 tol, the angle of w is off by at most 2 pi tol / n.
 */
std::vector<RationalVector> rational_polygon(int k, const Rational& tol);

/// Subtracts the mean so that the vectors sum to zero.
std::vector<RationalVector> balanced(std::vector<RationalVector> vectors);

/// True iff the planar configuration reads back to exactly this diagram:
/// same slot partition into directions, same cyclic order, standard position.
bool has_diagram_combinatorics(const GaleConfiguration& g, const CombinatorialDiagram& diag);

/// y_i = v_{slot(i)} / |slot(i)|, then balanced.  Nothing if the result no
/// longer has the diagram's combinatorics.
std::optional<GaleConfiguration> gale_vectors_on_polygon(const CombinatorialDiagram& diag,
                                                         const std::vector<RationalVector>& polygon);

/// gale_vectors_on_polygon on rational_polygon(k, tol), halving tol on
/// failure.  Throws ToleranceExhausted after 32 halvings.
GaleConfiguration realize_gale_vectors(const CombinatorialDiagram& diag);
GaleConfiguration realize_gale_vectors(const CombinatorialDiagram& diag, Rational tol);

/// Rows of a kernel basis of the homogenized (D + 1) x n point matrix.
/// Throws NotAffinelySpanning.
GaleConfiguration gale_transform(const PointConfiguration& points);

/// Points in Q^{n - e - 1} whose Gale transform has the same column space
/// as g.  Throws InvalidConfiguration.
PointConfiguration reconstruct_points(const GaleConfiguration& g);

/// lambda_i = <alpha, y_i>.  Throws ZeroInput for alpha = 0.
RationalVector dependence_from_direction(const GaleConfiguration& g, const RationalVector& alpha);

/// The alpha with <alpha, y_i> = lambda_i.  Throws ZeroInput for lambda = 0
/// and InconsistentSystem when lambda is not such a dependence.
RationalVector direction_from_dependence(const GaleConfiguration& g, const RationalVector& lambda);

/// Whether the origin lies in the relative interior of the convex hull of
/// the given planar vectors.
bool relint_origin_test(std::span<const RationalVector> vectors);

struct RecoveredFamily {
    NonFaceFamily family;
    MaxOddCycle certificate;
};

/// Reads a planar configuration in standard position back into the
/// non-face family and certificate; nothing when it is not in that position.
std::optional<RecoveredFamily> recover_nonfaces(const GaleConfiguration& g);

/// Full construction: diagram, polygon, Gale vectors, point reconstruction.
/// Returns m points in Q^{m-3} whose hull has boundary complex Sigma(F).
PointConfiguration realize_polytope(const MaxOddCycle& cert);

}  // namespace fewsphere

#endif
