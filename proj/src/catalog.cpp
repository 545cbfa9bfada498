#include "fewsphere/catalog.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <unordered_set>

#include "fewsphere/error.hpp"
#include "fewsphere/gale.hpp"
#include "fewsphere/oracle.hpp"

namespace fewsphere {

namespace {

void compositions(int remaining, int parts, int min_part, Bracelet& prefix, std::vector<Bracelet>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(prefix);
        return;
    }
    for (int p = min_part; p <= remaining - min_part * (parts - 1); ++p) {
        prefix.push_back(p);
        compositions(remaining - p, parts - 1, min_part, prefix, out);
        prefix.pop_back();
    }
}

std::string describe(const Bracelet& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

void check(bool ok, const Bracelet& b, const std::string& what) {
    if (!ok) throw Error(ErrorCode::CrossCheckFailed, "bracelet " + describe(b) + ": " + what);
}

struct VerifiedSphere {
    Bracelet bracelet;
    SimplicialComplex complex;
    NonFaceFamily family;
    MaxOddCycle certificate;
};

VerifiedSphere verify_bracelet(const Bracelet& b, int m) {
    InstantiatedSphere inst = instantiate(b);
    SimplicialComplex complex = complex_from_nonfaces(inst.family);
    const int d = m - 4;

    check(complex.dimension() == d, b, "dimension is not m - 4");
    check(minimal_nonfaces(complex) == inst.family, b, "minimal non-faces do not round trip");

    const Verdict verdict = recognize(complex);
    const auto* sphere = std::get_if<Sphere>(&verdict);
    check(sphere != nullptr && sphere->dimension == d && std::holds_alternative<MaxOddCycle>(sphere->certificate), b,
          "recognizer does not certify a maximum odd cycle");

    const CombinatorialDiagram diag = diagram_from_certificate(inst.certificate);
    const GaleConfiguration gale = realize_gale_vectors(diag);
    const PointConfiguration points = reconstruct_points(gale);
    check(points.dim == static_cast<std::size_t>(d + 1), b, "realization has the wrong dimension");
    check(boundary_complex(points) == complex, b, "hull boundary differs from the complex");

    const auto recovered = recover_nonfaces(gale);
    check(recovered && recovered->family == inst.family, b, "Gale readback does not recover the non-faces");

    check(is_pseudomanifold(complex), b, "not a pseudomanifold");
    check(betti_mod2(complex) == sphere_profile(d), b, "mod-2 Betti numbers differ from a sphere");
    check(euler_characteristic(complex) == 1 + (d % 2 == 0 ? 1 : -1), b, "wrong Euler characteristic");

    return VerifiedSphere{b, std::move(complex), std::move(inst.family), std::move(inst.certificate)};
}

std::vector<int> facet_counts_per_vertex(const SimplicialComplex& c) {
    std::vector<int> counts(static_cast<std::size_t>(c.vertex_count()), 0);
    for (Face f : c.facets()) f.for_each([&](int v) { ++counts[static_cast<std::size_t>(v - 1)]; });
    return counts;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const SimplicialComplex& a, const SimplicialComplex& b)
        : a_(a), b_facets_(b.facets().begin(), b.facets().end()),
          a_counts_(facet_counts_per_vertex(a)), b_counts_(facet_counts_per_vertex(b)) {
        const int m = a.vertex_count();
        image_.assign(static_cast<std::size_t>(m), 0);
        used_.assign(static_cast<std::size_t>(m), false);
        closing_.assign(static_cast<std::size_t>(m), {});
        for (Face f : a.facets()) closing_[static_cast<std::size_t>(f.max() - 1)].push_back(f);
    }

    bool run() { return assign(1); }

private:
    bool assign(int v) {
        const int m = a_.vertex_count();
        if (v > m) return true;
        const auto vi = static_cast<std::size_t>(v - 1);
        for (int w = 1; w <= m; ++w) {
            const auto wi = static_cast<std::size_t>(w - 1);
            if (used_[wi] || a_counts_[vi] != b_counts_[wi]) continue;
            image_[vi] = w;
            used_[wi] = true;
            const bool consistent = std::all_of(closing_[vi].begin(), closing_[vi].end(), [&](Face f) {
                return b_facets_.count(f.permuted(image_)) > 0;
            });
            if (consistent && assign(v + 1)) return true;
            used_[wi] = false;
        }
        return false;
    }

    const SimplicialComplex& a_;
    std::unordered_set<Face> b_facets_;
    std::vector<int> a_counts_;
    std::vector<int> b_counts_;
    std::vector<int> image_;
    std::vector<bool> used_;
    std::vector<std::vector<Face>> closing_;  // facets of a whose largest vertex is v
};

}  // namespace

Bracelet canonical_bracelet(const Bracelet& b) {
    Bracelet best = b;
    const std::size_t n = b.size();
    for (int reflect = 0; reflect < 2; ++reflect) {
        Bracelet base = b;
        if (reflect) std::reverse(base.begin(), base.end());
        for (std::size_t s = 0; s < n; ++s) {
            Bracelet r(n);
            for (std::size_t i = 0; i < n; ++i) r[i] = base[(i + s) % n];
            best = std::min(best, r);
        }
    }
    return best;
}

std::vector<Bracelet> enumerate_bracelets(int m) {
    std::vector<Bracelet> out;
    for (int n = 3; n <= m; n += 2) {
        std::vector<Bracelet> all;
        Bracelet prefix;
        compositions(m, n, n == 3 ? 2 : 1, prefix, all);
        for (const auto& b : all) {
            if (canonical_bracelet(b) == b) out.push_back(b);
        }
    }
    return out;
}

InstantiatedSphere instantiate(const Bracelet& b) {
    const long n = static_cast<long>(b.size());
    if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidInput, "bracelet length must be odd and >= 3");
    int m = 0;
    for (int part : b) {
        if (part < 1 || (n == 3 && part < 2)) throw Error(ErrorCode::InvalidInput, "bracelet part too small");
        m += part;
    }
    if (m > kMaxVertices) throw Error(ErrorCode::InvalidInput, "bracelet sums past 64 vertices");

    std::vector<Face> blocks(static_cast<std::size_t>(n));
    int next = 1;
    for (long j = 0; j < n; ++j) {
        Face slot;
        for (int t = 0; t < b[static_cast<std::size_t>(j)]; ++t) slot.insert(next++);
        blocks[static_cast<std::size_t>(((-2 * j) % n + n) % n)] = slot;
    }
    CyclicOrdering ordering(nonfaces_from_blocks(blocks));
    MaxOddCycle cert = make_certificate(ordering, m);
    return InstantiatedSphere{NonFaceFamily(m, ordering.sets()), std::move(cert)};
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count() || a.facets().size() != b.facets().size()) return false;
    if (f_vector(a) != f_vector(b)) return false;
    auto ca = facet_counts_per_vertex(a);
    auto cb = facet_counts_per_vertex(b);
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
    return IsomorphismSearch(a, b).run();
}

CatalogReport catalog(int m, CatalogOptions options) {
    if (m < 4 || m > std::min(options.max_vertices, kMaxVertices)) {
        throw Error(ErrorCode::InvalidInput, "catalog needs 4 <= m <= " + std::to_string(options.max_vertices));
    }
    const std::vector<Bracelet> bracelets = enumerate_bracelets(m);

    std::vector<VerifiedSphere> verified;
    if (options.parallel) {
        std::vector<std::future<VerifiedSphere>> jobs;
        for (const auto& b : bracelets) jobs.push_back(std::async(std::launch::async, verify_bracelet, b, m));
        for (auto& job : jobs) verified.push_back(job.get());
    } else {
        for (const auto& b : bracelets) verified.push_back(verify_bracelet(b, m));
    }

    CatalogReport report;
    report.m = m;
    for (auto& v : verified) {
        const bool seen = std::any_of(report.classes.begin(), report.classes.end(),
                                      [&](const CatalogClass& c) { return are_isomorphic(c.complex, v.complex); });
        if (seen) continue;
        FVector fv = f_vector(v.complex);
        report.classes.push_back(CatalogClass{std::move(v.bracelet), std::move(v.complex), std::move(fv),
                                              std::move(v.family), std::move(v.certificate)});
    }
    return report;
}

}  // namespace fewsphere
