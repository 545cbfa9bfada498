#include "fewsphere/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "fewsphere/error.hpp"

namespace fewsphere {

namespace {

RationalMatrix homogenized_columns(const PointConfiguration& pc) {
    RationalMatrix a(pc.dim + 1, RationalVector(pc.size()));
    for (std::size_t i = 0; i < pc.size(); ++i) {
        for (std::size_t r = 0; r < pc.dim; ++r) a[r][i] = pc.points[i][r];
        a[pc.dim][i] = 1;
    }
    return a;
}

VertexSet all_labels(std::size_t n) { return VertexSet::range(static_cast<int>(n)); }

// Rank over GF(2) of a set of sparse columns, each a list of row indices.
long gf2_rank(std::vector<std::vector<std::uint64_t>> columns) {
    std::unordered_map<std::size_t, std::size_t> pivot_of;  // lowest set bit -> column index
    long rank = 0;
    auto lowest = [](const std::vector<std::uint64_t>& col) -> std::optional<std::size_t> {
        for (std::size_t w = 0; w < col.size(); ++w) {
            if (col[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(col[w]));
        }
        return std::nullopt;
    };
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto& col = columns[c];
        while (auto low = lowest(col)) {
            auto it = pivot_of.find(*low);
            if (it == pivot_of.end()) {
                pivot_of.emplace(*low, c);
                ++rank;
                break;
            }
            const auto& other = columns[it->second];
            for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= other[w];
        }
    }
    return rank;
}

bool is_single_cycle(const SimplicialComplex& c) {
    const int m = c.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(m + 1), 0);
    for (Face f : c.facets()) {
        if (f.size() != 2) return false;
        f.for_each([&](int v) { ++degree[static_cast<std::size_t>(v)]; });
    }
    for (int v = 1; v <= m; ++v) {
        if (degree[static_cast<std::size_t>(v)] != 2) return false;
    }
    // Every vertex has degree two, so connectivity makes it one cycle.
    VertexSet reached{1};
    bool grew = true;
    while (grew) {
        grew = false;
        for (Face f : c.facets()) {
            if (f.intersects(reached) && !f.subset_of(reached)) {
                reached |= f;
                grew = true;
            }
        }
    }
    return reached == VertexSet::range(m);
}

}  // namespace

std::vector<Face> hull_facets(const PointConfiguration& pc) {
    const std::size_t n = pc.size();
    const std::size_t dim = pc.dim;
    if (dim < 1 || n > static_cast<std::size_t>(kMaxVertices)) {
        throw Error(ErrorCode::InvalidInput, "hull needs dimension >= 1 and at most 64 points");
    }
    for (const auto& x : pc.points) {
        if (x.size() != dim) throw Error(ErrorCode::InvalidInput, "point of the wrong dimension");
    }
    const RationalMatrix homog = homogenized_columns(pc);
    if (n < dim + 1 || linalg::rank(homog, n) != dim + 1) {
        throw Error(ErrorCode::NotFullDimensional, "points do not affinely span Q^" + std::to_string(dim));
    }

    std::vector<Face> facets;
    for_each_subset_of_size(all_labels(n), static_cast<int>(dim), [&](Face s) {
        RationalMatrix rows;
        s.for_each([&](int label) {
            RationalVector row = pc.points[static_cast<std::size_t>(label - 1)];
            row.push_back(1);
            rows.push_back(std::move(row));
        });
        const RationalMatrix normal = linalg::kernel_basis(rows, dim + 1);
        if (normal.size() != 1) return;  // s is affinely dependent
        int above = 0, below = 0;
        Face on_plane = s;
        for (std::size_t j = 0; j < n; ++j) {
            const int label = static_cast<int>(j) + 1;
            if (s.contains(label)) continue;
            Rational value = normal[0][dim];
            for (std::size_t r = 0; r < dim; ++r) value += normal[0][r] * pc.points[j][r];
            if (value > 0) ++above;
            else if (value < 0) ++below;
            else on_plane.insert(label);
        }
        if (above > 0 && below > 0) return;
        if (on_plane != s) {
            throw Error(ErrorCode::NonSimplicial, "supporting hyperplane through " + on_plane.to_string());
        }
        facets.push_back(s);
    });
    std::sort(facets.begin(), facets.end());
    return facets;
}

bool is_vertex(const PointConfiguration& pc, int label) {
    const std::size_t n = pc.size();
    if (label < 1 || static_cast<std::size_t>(label) > n) throw Error(ErrorCode::InvalidInput, "label out of range");
    const std::size_t target = static_cast<std::size_t>(label - 1);
    RationalMatrix a(pc.dim + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == target) continue;
        for (std::size_t r = 0; r < pc.dim; ++r) a[r].push_back(pc.points[i][r]);
        a[pc.dim].push_back(1);
    }
    RationalVector b = pc.points[target];
    b.push_back(1);
    return !linalg::nonnegative_solution(a, n - 1, b).has_value();
}

SimplicialComplex boundary_complex(const PointConfiguration& pc) {
    for (std::size_t i = 1; i <= pc.size(); ++i) {
        if (!is_vertex(pc, static_cast<int>(i))) {
            throw Error(ErrorCode::InteriorPoint, "point " + std::to_string(i) + " is not a vertex of the hull");
        }
    }
    return SimplicialComplex(static_cast<int>(pc.size()), hull_facets(pc));
}

BettiProfile betti_mod2(const SimplicialComplex& c) {
    const int d = c.dimension();
    // faces_by_size[s] lists the faces with s vertices.
    std::vector<std::vector<Face>> faces_by_size(static_cast<std::size_t>(d + 2));
    for (Face f : c.faces()) faces_by_size[static_cast<std::size_t>(f.size())].push_back(f);
    for (auto& group : faces_by_size) std::sort(group.begin(), group.end());

    // boundary_rank[s] is the rank of the map from faces of size s to size s - 1.
    std::vector<long> boundary_rank(static_cast<std::size_t>(d + 3), 0);
    for (int s = 1; s <= d + 1; ++s) {
        const auto& lower = faces_by_size[static_cast<std::size_t>(s - 1)];
        std::unordered_map<Face, std::size_t> index;
        for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
        const std::size_t words = (lower.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> columns;
        for (Face f : faces_by_size[static_cast<std::size_t>(s)]) {
            std::vector<std::uint64_t> col(words, 0);
            f.for_each([&](int v) {
                Face g = f;
                g.erase(v);
                const std::size_t row = index.at(g);
                col[row / 64] |= std::uint64_t{1} << (row % 64);
            });
            columns.push_back(std::move(col));
        }
        boundary_rank[static_cast<std::size_t>(s)] = gf2_rank(std::move(columns));
    }

    BettiProfile out;
    for (int s = 0; s <= d + 1; ++s) {
        const long chains = static_cast<long>(faces_by_size[static_cast<std::size_t>(s)].size());
        out.reduced.push_back(chains - boundary_rank[static_cast<std::size_t>(s)] -
                              boundary_rank[static_cast<std::size_t>(s + 1)]);
    }
    return out;
}

BettiProfile sphere_profile(int d) {
    BettiProfile out;
    out.reduced.assign(static_cast<std::size_t>(d + 2), 0);
    out.reduced.back() = 1;
    return out;
}

bool is_pseudomanifold(const SimplicialComplex& c) {
    const int d = c.dimension();
    const auto& facets = c.facets();
    for (Face f : facets) {
        if (f.size() != d + 1) return false;
    }
    std::map<Face, std::vector<std::size_t>> ridges;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        facets[i].for_each([&](int v) {
            Face r = facets[i];
            r.erase(v);
            ridges[r].push_back(i);
        });
    }
    std::vector<std::vector<std::size_t>> adjacent(facets.size());
    for (const auto& [ridge, owners] : ridges) {
        if (owners.size() != 2) return false;
        adjacent[owners[0]].push_back(owners[1]);
        adjacent[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> seen(facets.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t f = stack.back();
        stack.pop_back();
        for (std::size_t g : adjacent[f]) {
            if (!seen[g]) {
                seen[g] = true;
                ++reached;
                stack.push_back(g);
            }
        }
    }
    return reached == facets.size();
}

std::optional<bool> ground_truth_sphere(const SimplicialComplex& c, const PointConfiguration* realization) {
    if (realization != nullptr) {
        try {
            if (boundary_complex(*realization) == c) return true;
        } catch (const Error&) {
        }
    }
    const int d = c.dimension();
    if (d == 0) return c.vertex_count() == 2;
    if (d == 1) return is_single_cycle(c);
    if (d == 2) {
        if (!is_pseudomanifold(c) || euler_characteristic(c) != 2) return false;
        for (int v = 1; v <= c.vertex_count(); ++v) {
            std::vector<Face> link;
            for (Face f : c.facets()) {
                if (f.contains(v)) link.push_back(f - VertexSet{v});
            }
            // Relabel the link onto [1, |link vertices|] to test it as a cycle.
            VertexSet support;
            for (Face e : link) support |= e;
            std::vector<int> relabel(65, 0);
            int next = 0;
            support.for_each([&](int u) { relabel[static_cast<std::size_t>(u)] = ++next; });
            std::vector<Face> edges;
            for (Face e : link) {
                Face r;
                e.for_each([&](int u) { r.insert(relabel[static_cast<std::size_t>(u)]); });
                edges.push_back(r);
            }
            if (!is_single_cycle(SimplicialComplex(next, std::move(edges)))) return false;
        }
        return true;
    }
    if (!is_pseudomanifold(c) || betti_mod2(c) != sphere_profile(d)) return false;
    return std::nullopt;
}

}  // namespace fewsphere
