#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fewsphere/catalog.hpp"
#include "fewsphere/error.hpp"
#include "fewsphere/gale.hpp"
#include "fewsphere/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace fewsphere;

namespace {

RationalVector vsum(const std::vector<RationalVector>& vs, std::size_t dim) {
    RationalVector s(dim, Rational(0));
    for (const auto& v : vs) {
        for (std::size_t i = 0; i < dim; ++i) s[i] += v[i];
    }
    return s;
}

MaxOddCycle pentagon_certificate() {
    return make_certificate(CyclicOrdering({{1, 4}, {2, 5}, {1, 3}, {2, 4}, {3, 5}}), 5);
}

std::size_t direction_count(const GaleConfiguration& g) {
    std::vector<DiagramDirection> seen;
    for (const auto& v : g.vectors) {
        auto d = DiagramDirection::of(v);
        REQUIRE(d);
        if (std::find(seen.begin(), seen.end(), *d) == seen.end()) seen.push_back(*d);
    }
    return seen.size();
}

// Column space equality by exact ranks.
bool same_column_space(const GaleConfiguration& a, const GaleConfiguration& b) {
    if (a.size() != b.size()) return false;
    RationalMatrix joined;
    for (std::size_t i = 0; i < a.size(); ++i) {
        RationalVector row = a.vectors[i];
        row.insert(row.end(), b.vectors[i].begin(), b.vectors[i].end());
        joined.push_back(row);
    }
    const std::size_t ra = linalg::rank(a.vectors, a.dim);
    const std::size_t rb = linalg::rank(b.vectors, b.dim);
    return ra == rb && linalg::rank(joined, a.dim + b.dim) == ra;
}

}  // namespace

TEST_CASE("diagram of the pentagon certificate") {
    const auto cert = pentagon_certificate();
    CHECK(cert.blocks == std::vector<Face>{{1}, {2}, {3}, {4}, {5}});
    const auto diag = diagram_from_certificate(cert);
    CHECK(diag.k == 2);
    // Slots 0..4 read vertices 1, 4, 2, 5, 3.
    CHECK(diag.slot == std::vector<int>{0, 2, 4, 1, 3});
    CHECK(diag.slot_members(1) == Face{4});
}

TEST_CASE("diagram of the octahedron certificate") {
    const auto cert = *find_max_odd_cycle(fixtures::octahedron_nonfaces());
    const auto diag = diagram_from_certificate(cert);
    CHECK(diag.k == 1);
    CHECK(diag.slot_members(0) == Face{1, 2});
    CHECK(diag.slot_members(1) == Face{3, 4});
    CHECK(diag.slot_members(2) == Face{5, 6});
}

TEST_CASE("diagram slot multiplicities follow block sizes") {
    const auto inst = instantiate({2, 3, 4});
    const auto diag = diagram_from_certificate(inst.certificate);
    CHECK(diag.slot_members(0).size() == 2);
    CHECK(diag.slot_members(1).size() == 3);
    CHECK(diag.slot_members(2).size() == 4);
}

TEST_CASE("coface test on the pentagon") {
    const auto diag = diagram_from_certificate(pentagon_certificate());
    CHECK(coface_test(diag, {1, 2}));
    CHECK_FALSE(coface_test(diag, {1, 3}));
    CHECK_FALSE(coface_test(diag, VertexSet::range(5)));
    CHECK(coface_test(diag, {}));
}

TEST_CASE("rational polygons are exact and close to regular") {
    for (int k = 1; k <= 6; ++k) {
        const int n = 2 * k + 1;
        const Rational tol = default_polygon_tolerance(k);
        CHECK(tol == Rational(1, 16 * n));
        const auto poly = rational_polygon(k, tol);
        REQUIRE(poly.size() == static_cast<std::size_t>(n));
        const double tol_turn = tol.get_d();
        for (int j = 0; j < n; ++j) {
            const auto& p = poly[static_cast<std::size_t>(j)];
            CHECK(dot(p, p) == 1);
            // Floating point only to measure the angular error here.
            const double turns = std::atan2(p[1].get_d(), p[0].get_d()) / (2 * std::numbers::pi);
            double diff = turns - static_cast<double>(j) / n;
            diff -= std::round(diff);
            CHECK(std::fabs(diff) <= tol_turn + 1e-12);
        }
        for (int j = 0; j < n; ++j) {
            CHECK(angle_less(poly[static_cast<std::size_t>(j)], poly[static_cast<std::size_t>((j + 1) % n)]) == (j + 1 < n));
        }
    }
    CHECK_THROWS_AS(rational_polygon(2, Rational(1, 40)), Error);
    CHECK_THROWS_AS(rational_polygon(2, Rational(0)), Error);
}

TEST_CASE("three polygon points positively span the plane") {
    const auto tri = rational_polygon(1, Rational(1, 100));
    CHECK(relint_origin_test(tri));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            CHECK(*DiagramDirection::of(tri[i]) != DiagramDirection::of(tri[j])->opposite());
        }
    }
}

TEST_CASE("Gale vectors for the worked examples") {
    const auto oct = realize_gale_vectors(diagram_from_certificate(*find_max_odd_cycle(fixtures::octahedron_nonfaces())));
    CHECK(oct.size() == 6);
    CHECK(oct.dim == 2);
    CHECK(is_zero(vsum(oct.vectors, 2)));
    CHECK(direction_count(oct) == 3);

    const auto pent = realize_gale_vectors(diagram_from_certificate(pentagon_certificate()));
    CHECK(pent.size() == 5);
    CHECK(is_zero(vsum(pent.vectors, 2)));
    CHECK(direction_count(pent) == 5);
    CHECK(is_valid_gale(pent));
}

TEST_CASE("balancing is the identity on balanced input") {
    gen::Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        auto vs = balanced(std::vector<RationalVector>{gen::random_vector(rng, 2, 9), gen::random_vector(rng, 2, 9),
                                                       gen::random_vector(rng, 2, 9), gen::random_vector(rng, 2, 9)});
        CHECK(is_zero(vsum(vs, 2)));
        CHECK(balanced(vs) == vs);
    }
}

TEST_CASE("Gale transform of three collinear points") {
    PointConfiguration pc{1, {{0}, {1}, {2}}};
    const auto g = gale_transform(pc);
    REQUIRE(g.dim == 1);
    const Rational scale = g.vectors[0][0];
    REQUIRE(scale != 0);
    CHECK(g.vectors[1][0] == -2 * scale);
    CHECK(g.vectors[2][0] == scale);

    PointConfiguration simplex{3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    CHECK(gale_transform(simplex).dim == 0);

    PointConfiguration flat{2, {{0, 0}, {1, 1}, {2, 2}}};
    try {
        gale_transform(flat);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAffinelySpanning);
    }
}

TEST_CASE("reconstruction of three collinear points") {
    GaleConfiguration g{1, {{1}, {-2}, {1}}};
    const auto pc = reconstruct_points(g);
    REQUIRE(pc.dim == 1);
    REQUIRE(pc.size() == 3);
    // Middle point is the midpoint of the outer two.
    CHECK(pc.points[1][0] * 2 == pc.points[0][0] + pc.points[2][0]);
    CHECK(pc.points[0][0] != pc.points[2][0]);
    CHECK(same_column_space(gale_transform(pc), g));

    CHECK_THROWS_AS(reconstruct_points(GaleConfiguration{1, {{1}, {1}, {1}}}), Error);
    CHECK_THROWS_AS(reconstruct_points(GaleConfiguration{2, {{1, 0}, {-1, 0}, {0, 0}}}), Error);
}

TEST_CASE("reconstructions of the worked examples") {
    const auto pent = reconstruct_points(realize_gale_vectors(diagram_from_certificate(pentagon_certificate())));
    CHECK(pent.dim == 2);
    for (int i = 1; i <= 5; ++i) CHECK(is_vertex(pent, i));
    CHECK(boundary_complex(pent) == fixtures::pentagon());

    const auto oct = realize_polytope(*find_max_odd_cycle(fixtures::octahedron_nonfaces()));
    CHECK(oct.dim == 3);
    CHECK(boundary_complex(oct) == fixtures::octahedron());
}

TEST_CASE("transform and reconstruction preserve the column space") {
    gen::Rng rng(42);
    int tested = 0;
    while (tested < 120) {
        const std::size_t e = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, static_cast<int>(e) + 2, 10));
        std::vector<RationalVector> vs;
        for (std::size_t i = 0; i < n; ++i) vs.push_back(gen::random_vector(rng, e, 6));
        GaleConfiguration g{e, balanced(vs)};
        if (!is_valid_gale(g)) continue;
        const auto pc = reconstruct_points(g);
        CHECK(pc.dim == n - e - 1);
        const auto back = gale_transform(pc);
        CHECK(is_valid_gale(back));
        CHECK(same_column_space(back, g));
        ++tested;
    }
}

TEST_CASE("dependences and directions correspond") {
    GaleConfiguration g{1, {{1}, {-2}, {1}}};
    CHECK(dependence_from_direction(g, {1}) == RationalVector{1, -2, 1});
    CHECK(dependence_from_direction(g, {2}) == RationalVector{2, -4, 2});
    CHECK_THROWS_AS(dependence_from_direction(g, {0}), Error);
    CHECK_THROWS_AS(direction_from_dependence(g, {0, 0, 0}), Error);
    try {
        direction_from_dependence(g, {1, 1, -2});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentSystem);
    }

    gen::Rng rng(43);
    int tested = 0;
    while (tested < 150) {
        const std::size_t dim = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, static_cast<int>(dim) + 2, 10));
        if (n - dim - 1 > 3) continue;
        const auto pc = gen::random_points(rng, n, dim, 8);
        GaleConfiguration gc;
        try {
            gc = gale_transform(pc);
        } catch (const Error&) {
            continue;
        }
        RationalVector alpha = gen::random_vector(rng, gc.dim, 5);
        if (is_zero(alpha)) continue;
        const auto lambda = dependence_from_direction(gc, alpha);
        CHECK_FALSE(is_zero(lambda));
        Rational total = 0;
        RationalVector weighted(dim, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            total += lambda[i];
            for (std::size_t r = 0; r < dim; ++r) weighted[r] += lambda[i] * pc.points[i][r];
        }
        CHECK(total == 0);
        CHECK(is_zero(weighted));
        CHECK(direction_from_dependence(gc, lambda) == alpha);
        ++tested;
    }
}

TEST_CASE("origin in the relative interior") {
    using V = std::vector<RationalVector>;
    CHECK(relint_origin_test(V{{1, 0}, {-1, 1}, {-1, -1}}));
    CHECK_FALSE(relint_origin_test(V{{1, 0}, {0, 1}}));
    CHECK(relint_origin_test(V{{1, 0}, {-1, 0}}));
    CHECK(relint_origin_test(V{{0, 0}}));
    CHECK_FALSE(relint_origin_test(V{}));
    CHECK_FALSE(relint_origin_test(V{{1, 0}, {0, 0}}));
    CHECK_FALSE(relint_origin_test(V{{1, 0}, {2, 0}}));
    CHECK(relint_origin_test(V{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    CHECK_FALSE(relint_origin_test(V{{1, 0}, {0, 1}, {-1, 0}}));
    CHECK(relint_origin_test(V{{1, 0}, {0, 1}, {-1, 0}, {0, 0}, {1, -1}}));
}

TEST_CASE("direction order by angle") {
    const RationalVector e{1, 0}, n{0, 1}, w{-1, 0}, s{0, -1}, se{1, -1};
    CHECK(angle_less(e, n));
    CHECK(angle_less(n, w));
    CHECK(angle_less(w, s));
    CHECK(angle_less(s, se));
    CHECK_FALSE(angle_less(se, e));
    CHECK_FALSE(angle_less(e, RationalVector{2, 0}));
    CHECK(DiagramDirection::of({Rational(2, 3), Rational(4, 3)}) == DiagramDirection::of({1, 2}));
    CHECK_FALSE(DiagramDirection::of({0, 0}));
}

TEST_CASE("readback of realized diagrams") {
    const auto pent_cert = pentagon_certificate();
    const auto pent = realize_gale_vectors(diagram_from_certificate(pent_cert));
    const auto rec = recover_nonfaces(pent);
    REQUIRE(rec);
    CHECK(rec->family == fixtures::pentagon_nonfaces());

    for (int m = 5; m <= 9; ++m) {
        for (const auto& b : enumerate_bracelets(m)) {
            const auto inst = instantiate(b);
            const auto g = realize_gale_vectors(diagram_from_certificate(inst.certificate));
            CHECK(is_zero(vsum(g.vectors, 2)));
            const auto r = recover_nonfaces(g);
            REQUIRE(r);
            CHECK(r->family == inst.family);
            CHECK(is_valid_certificate(r->certificate, m));
        }
    }
}

TEST_CASE("readback rejects configurations out of standard position") {
    // Antipodal classes.
    CHECK_FALSE(recover_nonfaces(GaleConfiguration{2, {{1, 0}, {-1, 0}, {0, 1}, {1, -1}, {-1, 0}}}));
    // Four classes.
    CHECK_FALSE(recover_nonfaces(GaleConfiguration{2, {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}}));
    // A zero vector.
    CHECK_FALSE(recover_nonfaces(GaleConfiguration{2, {{1, 0}, {0, 0}, {-1, 1}, {0, -1}}}));
    // Five classes, but only one of them below the line x + y = 0.
    CHECK_FALSE(recover_nonfaces(GaleConfiguration{2, {{1, 0}, {2, 1}, {1, 2}, {0, 1}, {-4, -4}}}));
}

TEST_CASE("three face predicates agree") {
    gen::Rng rng(44);
    for (int m = 5; m <= 8; ++m) {
        for (const auto& b : enumerate_bracelets(m)) {
            const auto inst = instantiate(b);
            const auto perm = gen::random_permutation(rng, m);
            const auto family = inst.family.permuted(perm);
            const auto cert = *find_max_odd_cycle(family);
            const auto diag = diagram_from_certificate(cert);
            const auto g = realize_gale_vectors(diag);
            const auto complex = complex_from_nonfaces(family);
            for_each_subset(VertexSet::range(m), [&](Face a) {
                std::vector<RationalVector> outside;
                for (int v = 1; v <= m; ++v) {
                    if (!a.contains(v)) outside.push_back(g.vectors[static_cast<std::size_t>(v - 1)]);
                }
                const bool combinatorial = coface_test(diag, a);
                const bool geometric = relint_origin_test(outside);
                const bool member = complex.is_face(a) && a != VertexSet::range(m);
                CHECK(combinatorial == geometric);
                CHECK(combinatorial == member);
            });
        }
    }
}

TEST_CASE("every realized point is extremal") {
    for (int m = 5; m <= 8; ++m) {
        for (const auto& b : enumerate_bracelets(m)) {
            const auto pc = realize_polytope(instantiate(b).certificate);
            CHECK(pc.dim == static_cast<std::size_t>(m - 3));
            for (int i = 1; i <= m; ++i) CHECK(is_vertex(pc, i));
        }
    }
}

TEST_CASE("realization is reproducible") {
    const auto cert = instantiate({1, 1, 2, 1, 2}).certificate;
    CHECK(realize_polytope(cert) == realize_polytope(cert));
}
