#include "fewsphere/gale.hpp"

#include <algorithm>
#include <string>

#include "fewsphere/error.hpp"

namespace fewsphere {

namespace {

void require_planar(const RationalVector& v) {
    if (v.size() != 2) throw Error(ErrorCode::InvalidInput, "expected a planar vector");
}

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_of(const Rational& x, const Rational& y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; }

Rational cross(const RationalVector& a, const RationalVector& b) { return a[0] * b[1] - a[1] * b[0]; }

RationalVector times(const RationalVector& a, const RationalVector& b) {
    return {a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
}

long wrap(long i, long n) {
    long r = i % n;
    return r < 0 ? r + n : r;
}

struct ClassedConfiguration {
    std::vector<DiagramDirection> directions;  // distinct, counterclockwise, starting at the class of vertex 1
    std::vector<VertexSet> members;            // members[j] are the vertices on directions[j]
};

// Groups a planar configuration into direction classes and checks standard
// position: no zero vector, no antipodal classes, an odd number 2k + 1 >= 3
// of classes, and at least k classes in every open half-plane.  Then each
// line through a class splits the others k to k, as for the regular polygon.
std::optional<ClassedConfiguration> read_standard_position(const GaleConfiguration& g) {
    if (g.dim != 2 || g.vectors.empty()) return std::nullopt;
    std::vector<DiagramDirection> dirs;
    std::vector<VertexSet> members;
    for (std::size_t i = 0; i < g.vectors.size(); ++i) {
        auto d = DiagramDirection::of(g.vectors[i]);
        if (!d) return std::nullopt;
        auto it = std::find(dirs.begin(), dirs.end(), *d);
        if (it == dirs.end()) {
            dirs.push_back(*d);
            members.push_back(VertexSet{static_cast<int>(i) + 1});
        } else {
            members[static_cast<std::size_t>(it - dirs.begin())].insert(static_cast<int>(i) + 1);
        }
    }
    const std::size_t count = dirs.size();
    if (count < 3 || count % 2 == 0) return std::nullopt;
    for (const auto& d : dirs) {
        if (std::find(dirs.begin(), dirs.end(), d.opposite()) != dirs.end()) return std::nullopt;
    }

    // The number of classes in an open half-plane only changes when its
    // boundary passes a class or the opposite of one; probe each gap.
    std::vector<RationalVector> breaks;
    for (const auto& d : dirs) {
        breaks.push_back(d.as_vector());
        breaks.push_back(d.opposite().as_vector());
    }
    std::sort(breaks.begin(), breaks.end(), angle_less);
    const std::size_t k = (count - 1) / 2;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        const auto& p = breaks[i];
        const auto& q = breaks[(i + 1) % breaks.size()];
        const RationalVector probe{p[0] + q[0], p[1] + q[1]};
        std::size_t inside = 0;
        for (const auto& d : dirs) {
            if (cross(probe, d.as_vector()) > 0) ++inside;
        }
        if (inside < k) return std::nullopt;
    }

    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return angle_less(dirs[a].as_vector(), dirs[b].as_vector()); });
    const auto first = std::find_if(order.begin(), order.end(), [&](std::size_t i) { return members[i].contains(1); });
    std::rotate(order.begin(), first, order.end());

    ClassedConfiguration out;
    for (std::size_t i : order) {
        out.directions.push_back(dirs[i]);
        out.members.push_back(members[i]);
    }
    return out;
}

}  // namespace

bool is_valid_gale(const GaleConfiguration& g) {
    RationalVector sum(g.dim, Rational(0));
    for (const auto& y : g.vectors) {
        if (y.size() != g.dim) return false;
        for (std::size_t j = 0; j < g.dim; ++j) sum[j] += y[j];
    }
    return is_zero(sum) && linalg::rank(g.vectors, g.dim) == g.dim;
}

void validate_gale(const GaleConfiguration& g) {
    if (!is_valid_gale(g)) {
        throw Error(ErrorCode::InvalidConfiguration, "vectors must sum to zero and span Q^" + std::to_string(g.dim));
    }
}

std::optional<DiagramDirection> DiagramDirection::of(const RationalVector& v) {
    require_planar(v);
    if (is_zero(v)) return std::nullopt;
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), v[0].get_den_mpz_t(), v[1].get_den_mpz_t());
    mpz_class x = v[0].get_num() * (den / v[0].get_den());
    mpz_class y = v[1].get_num() * (den / v[1].get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return DiagramDirection(x / g, y / g);
}

DiagramDirection DiagramDirection::opposite() const { return DiagramDirection(-x_, -y_); }

bool angle_less(const RationalVector& a, const RationalVector& b) {
    require_planar(a);
    require_planar(b);
    const int ha = half_of(a[0], a[1]);
    const int hb = half_of(b[0], b[1]);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

VertexSet CombinatorialDiagram::slot_members(int j) const {
    VertexSet out;
    for (std::size_t i = 0; i < slot.size(); ++i) {
        if (slot[i] == j) out.insert(static_cast<int>(i) + 1);
    }
    return out;
}

CombinatorialDiagram diagram_from_certificate(const MaxOddCycle& cert) {
    const long n = static_cast<long>(cert.blocks.size());
    int m = 0;
    for (Face b : cert.blocks) m += b.size();
    if (!is_valid_certificate(cert, m)) throw Error(ErrorCode::InvalidInput, "certificate does not validate");
    CombinatorialDiagram diag;
    diag.k = static_cast<int>((n - 1) / 2);
    diag.slot.assign(static_cast<std::size_t>(m), -1);
    for (long j = 0; j < n; ++j) {
        cert.blocks[static_cast<std::size_t>(wrap(-2 * j, n))].for_each(
            [&](int v) { diag.slot[static_cast<std::size_t>(v - 1)] = static_cast<int>(j); });
    }
    return diag;
}

bool coface_test(const CombinatorialDiagram& diag, Face a) {
    const int n = diag.slot_count();
    std::vector<bool> occupied(static_cast<std::size_t>(n), false);
    for (int v = 1; v <= diag.vertex_count(); ++v) {
        if (!a.contains(v)) occupied[static_cast<std::size_t>(diag.slot[static_cast<std::size_t>(v - 1)])] = true;
    }
    for (int start = 0; start < n; ++start) {
        bool escapes = false;
        // Slots start, ..., start + k form the arc; look at the other k.
        for (int t = diag.k + 1; t < n && !escapes; ++t) escapes = occupied[static_cast<std::size_t>((start + t) % n)];
        if (!escapes) return false;
    }
    return true;
}

Rational default_polygon_tolerance(int k) { return Rational(1, 16 * (2 * k + 1)); }

std::vector<RationalVector> rational_polygon(int k, const Rational& tol) {
    if (k < 1) throw Error(ErrorCode::InvalidInput, "polygon needs k >= 1");
    const int n = 2 * k + 1;
    if (tol <= 0 || tol >= Rational(1, 8 * n)) {
        throw Error(ErrorCode::InvalidInput, "tolerance must lie in (0, 1/(8(2k+1)))");
    }
    // Search t = p/q in the Stern-Brocot tree; hi starts at infinity.
    mpz_class lo_p = 0, lo_q = 1, hi_p = 1, hi_q = 0;
    for (int iter = 0; iter < 100000; ++iter) {
        const mpz_class p = lo_p + hi_p;
        const mpz_class q = lo_q + hi_q;
        const mpz_class r = p * p + q * q;
        RationalVector w{Rational(q * q - p * p, r), Rational(2 * p * q, r)};
        for (auto& c : w) c.canonicalize();

        std::vector<RationalVector> powers{RationalVector{Rational(1), Rational(0)}};
        int wraps = 0;
        for (int j = 1; j <= n; ++j) {
            powers.push_back(times(powers.back(), w));
            if (!angle_less(powers[static_cast<std::size_t>(j - 1)], powers.back())) ++wraps;
        }
        const RationalVector& last = powers.back();
        const Rational abs_y = abs(last[1]);
        const bool close = last[0] > 0 && abs_y <= 4 * tol;
        if (close && ((wraps == 0 && last[1] < 0) || (wraps == 1 && last[1] > 0))) {
            powers.pop_back();
            return powers;
        }
        if (wraps == 0) {
            lo_p = p;
            lo_q = q;
        } else {
            hi_p = p;
            hi_q = q;
        }
    }
    throw Error(ErrorCode::ToleranceExhausted, "no rational rotation found");
}

std::vector<RationalVector> balanced(std::vector<RationalVector> vectors) {
    if (vectors.empty()) return vectors;
    const std::size_t dim = vectors.front().size();
    RationalVector mean(dim, Rational(0));
    for (const auto& v : vectors) {
        for (std::size_t j = 0; j < dim; ++j) mean[j] += v[j];
    }
    for (auto& q : mean) q /= static_cast<long>(vectors.size());
    for (auto& v : vectors) {
        for (std::size_t j = 0; j < dim; ++j) v[j] -= mean[j];
    }
    return vectors;
}

bool has_diagram_combinatorics(const GaleConfiguration& g, const CombinatorialDiagram& diag) {
    if (static_cast<int>(g.size()) != diag.vertex_count()) return false;
    auto classed = read_standard_position(g);
    if (!classed || static_cast<int>(classed->members.size()) != diag.slot_count()) return false;
    const int n = diag.slot_count();
    const int start = diag.slot[0];
    for (int j = 0; j < n; ++j) {
        if (classed->members[static_cast<std::size_t>(j)] != diag.slot_members((start + j) % n)) return false;
    }
    return true;
}

std::optional<GaleConfiguration> gale_vectors_on_polygon(const CombinatorialDiagram& diag,
                                                         const std::vector<RationalVector>& polygon) {
    if (static_cast<int>(polygon.size()) != diag.slot_count()) {
        throw Error(ErrorCode::InvalidInput, "polygon size does not match the diagram");
    }
    std::vector<int> multiplicity(polygon.size(), 0);
    for (int s : diag.slot) ++multiplicity[static_cast<std::size_t>(s)];
    std::vector<RationalVector> ys;
    ys.reserve(diag.slot.size());
    for (int s : diag.slot) {
        const auto& v = polygon[static_cast<std::size_t>(s)];
        const long mult = multiplicity[static_cast<std::size_t>(s)];
        ys.push_back({v[0] / mult, v[1] / mult});
    }
    GaleConfiguration g{2, balanced(std::move(ys))};
    if (!is_valid_gale(g) || !has_diagram_combinatorics(g, diag)) return std::nullopt;
    return g;
}

GaleConfiguration realize_gale_vectors(const CombinatorialDiagram& diag) {
    return realize_gale_vectors(diag, default_polygon_tolerance(diag.k));
}

GaleConfiguration realize_gale_vectors(const CombinatorialDiagram& diag, Rational tol) {
    for (int attempt = 0; attempt <= 32; ++attempt) {
        if (auto g = gale_vectors_on_polygon(diag, rational_polygon(diag.k, tol))) return *g;
        tol /= 2;
    }
    throw Error(ErrorCode::ToleranceExhausted, "diagram combinatorics not preserved at any tolerance");
}

GaleConfiguration gale_transform(const PointConfiguration& points) {
    const std::size_t n = points.size();
    const std::size_t dim = points.dim;
    for (const auto& x : points.points) {
        if (x.size() != dim) throw Error(ErrorCode::InvalidInput, "point of the wrong dimension");
    }
    if (n < dim + 1) throw Error(ErrorCode::NotAffinelySpanning, "fewer than D + 1 points");
    RationalMatrix homogenized(dim + 1, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < dim; ++r) homogenized[r][i] = points.points[i][r];
        homogenized[dim][i] = 1;
    }
    if (linalg::rank(homogenized, n) != dim + 1) {
        throw Error(ErrorCode::NotAffinelySpanning, "points do not affinely span Q^" + std::to_string(dim));
    }
    const RationalMatrix basis = linalg::kernel_basis(homogenized, n);
    GaleConfiguration g{basis.size(), std::vector<RationalVector>(n, RationalVector(basis.size()))};
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) g.vectors[i][j] = basis[j][i];
    }
    return g;
}

PointConfiguration reconstruct_points(const GaleConfiguration& g) {
    validate_gale(g);
    const std::size_t n = g.size();
    if (n < g.dim + 2) throw Error(ErrorCode::InvalidConfiguration, "too few vectors for points of dimension >= 1");
    RationalMatrix complement = linalg::kernel_basis(linalg::transpose(g.vectors, g.dim), n);
    // The all-ones vector lies in the complement and has a nonzero coefficient
    // on every free-column basis vector, so it may replace the last one.
    complement.back() = RationalVector(n, Rational(1));
    const std::size_t dim = n - g.dim - 1;
    PointConfiguration pc{dim, std::vector<RationalVector>(n, RationalVector(dim))};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t i = 0; i < n; ++i) pc.points[i][r] = complement[r][i];
    }
    return pc;
}

RationalVector dependence_from_direction(const GaleConfiguration& g, const RationalVector& alpha) {
    if (alpha.size() != g.dim) throw Error(ErrorCode::InvalidInput, "direction has the wrong dimension");
    if (is_zero(alpha)) throw Error(ErrorCode::ZeroInput, "direction is zero");
    RationalVector lambda;
    lambda.reserve(g.size());
    for (const auto& y : g.vectors) lambda.push_back(dot(alpha, y));
    return lambda;
}

RationalVector direction_from_dependence(const GaleConfiguration& g, const RationalVector& lambda) {
    if (lambda.size() != g.size()) throw Error(ErrorCode::InvalidInput, "dependence has the wrong length");
    if (is_zero(lambda)) throw Error(ErrorCode::ZeroInput, "dependence is zero");
    auto alpha = linalg::solve(g.vectors, g.dim, lambda);
    if (!alpha) throw Error(ErrorCode::InconsistentSystem, "not an affine dependence of the points");
    return *alpha;
}

bool relint_origin_test(std::span<const RationalVector> vectors) {
    if (vectors.empty()) return false;
    std::vector<RationalVector> nonzero;
    for (const auto& v : vectors) {
        require_planar(v);
        if (!is_zero(v)) nonzero.push_back(v);
    }
    if (nonzero.empty()) return true;

    const RationalVector& ref = nonzero.front();
    const bool collinear = std::all_of(nonzero.begin(), nonzero.end(), [&](const auto& v) { return cross(ref, v) == 0; });
    if (collinear) {
        return std::any_of(nonzero.begin(), nonzero.end(), [&](const auto& v) { return dot(ref, v) < 0; });
    }

    // Positive spanning: every angular gap between consecutive directions is < pi.
    std::vector<RationalVector> dirs;
    for (const auto& v : nonzero) {
        auto d = DiagramDirection::of(v)->as_vector();
        if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(std::move(d));
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        if (cross(dirs[i], dirs[(i + 1) % dirs.size()]) <= 0) return false;
    }
    return true;
}

std::optional<RecoveredFamily> recover_nonfaces(const GaleConfiguration& g) {
    if (!is_valid_gale(g)) return std::nullopt;
    auto classed = read_standard_position(g);
    if (!classed) return std::nullopt;
    const long n = static_cast<long>(classed->members.size());
    const int m = static_cast<int>(g.size());
    std::vector<Face> blocks(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j) {
        blocks[static_cast<std::size_t>(wrap(-2 * j, n))] = classed->members[static_cast<std::size_t>(j)];
    }
    CyclicOrdering ordering(nonfaces_from_blocks(blocks));
    MaxOddCycle cert{ordering, blocks};
    if (!is_valid_certificate(cert, m)) return std::nullopt;
    return RecoveredFamily{NonFaceFamily(m, ordering.sets()), std::move(cert)};
}

PointConfiguration realize_polytope(const MaxOddCycle& cert) {
    return reconstruct_points(realize_gale_vectors(diagram_from_certificate(cert)));
}

}  // namespace fewsphere
