#include "fewsphere/complex.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "fewsphere/error.hpp"

namespace fewsphere {

namespace {

void check_vertex_count(int m) {
    if (m < 1 || m > kMaxVertices) {
        throw Error(ErrorCode::InvalidInput, "vertex count " + std::to_string(m) + " outside [1, 64]");
    }
}

// Sorts and rejects any pair where one set contains the other (duplicates included).
void sort_antichain(std::vector<Face>& sets, const char* what) {
    std::sort(sets.begin(), sets.end());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i != j && sets[i].subset_of(sets[j])) {
                throw Error(ErrorCode::InvalidInput, std::string(what) + " " + sets[i].to_string() +
                                                         " is contained in " + sets[j].to_string());
            }
        }
    }
}

// Minimal transversals of `members`: branch on the first member not yet hit,
// choosing each of its vertices in turn and excluding the earlier choices.
void collect_transversals(const std::vector<Face>& members, VertexSet chosen, VertexSet excluded,
                          std::set<VertexSet>& out) {
    auto unhit = std::find_if(members.begin(), members.end(), [&](Face a) { return !a.intersects(chosen); });
    if (unhit == members.end()) {
        out.insert(chosen);
        return;
    }
    VertexSet options = *unhit - excluded;
    options.for_each([&](int v) {
        VertexSet next = chosen;
        next.insert(v);
        collect_transversals(members, next, excluded, out);
        excluded.insert(v);
    });
}

bool is_minimal_transversal(const std::vector<Face>& members, VertexSet t) {
    bool minimal = true;
    t.for_each([&](int v) {
        if (!minimal) return;
        bool private_hit = std::any_of(members.begin(), members.end(), [&](Face a) {
            return (a & t) == VertexSet{v};
        });
        if (!private_hit) minimal = false;
    });
    return minimal;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<Face> facets) : m_(m), facets_(std::move(facets)) {
    check_vertex_count(m);
    if (facets_.empty()) throw Error(ErrorCode::InvalidInput, "complex has no facets");
    const VertexSet all = VertexSet::range(m);
    VertexSet covered;
    for (Face f : facets_) {
        if (!f.subset_of(all)) throw Error(ErrorCode::InvalidInput, "facet " + f.to_string() + " leaves [1, m]");
        covered |= f;
    }
    if (covered != all) {
        throw Error(ErrorCode::InvalidInput, "vertices " + (all - covered).to_string() + " lie in no facet");
    }
    sort_antichain(facets_, "facet");
}

int SimplicialComplex::dimension() const {
    int largest = 0;
    for (Face f : facets_) largest = std::max(largest, f.size());
    return largest - 1;
}

bool SimplicialComplex::is_face(Face a) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](Face f) { return a.subset_of(f); });
}

std::vector<Face> SimplicialComplex::faces() const {
    std::unordered_set<Face> seen;
    for (Face f : facets_) for_each_subset(f, [&](Face s) { seen.insert(s); });
    return {seen.begin(), seen.end()};
}

SimplicialComplex SimplicialComplex::permuted(std::span<const int> perm) const {
    std::vector<Face> out;
    out.reserve(facets_.size());
    for (Face f : facets_) out.push_back(f.permuted(perm));
    return SimplicialComplex(m_, std::move(out));
}

NonFaceFamily::NonFaceFamily(int m, std::vector<Face> members) : m_(m), members_(std::move(members)) {
    check_vertex_count(m);
    const VertexSet all = VertexSet::range(m);
    for (Face a : members_) {
        if (!a.subset_of(all)) throw Error(ErrorCode::InvalidInput, "non-face " + a.to_string() + " leaves [1, m]");
        if (a.size() < 2) {
            throw Error(ErrorCode::InvalidInput, "non-face " + a.to_string() + " has fewer than two vertices");
        }
    }
    sort_antichain(members_, "non-face");
}

NonFaceFamily NonFaceFamily::permuted(std::span<const int> perm) const {
    std::vector<Face> out;
    out.reserve(members_.size());
    for (Face a : members_) out.push_back(a.permuted(perm));
    return NonFaceFamily(m_, std::move(out));
}

NonFaceFamily minimal_nonfaces(const SimplicialComplex& c) {
    const int m = c.vertex_count();
    const VertexSet all = VertexSet::range(m);
    // Every set with more than d + 2 vertices contains a non-face of size d + 2.
    const int max_size = std::min(c.dimension() + 2, m);
    std::vector<Face> found;
    for (int size = 2; size <= max_size; ++size) {
        const std::size_t smaller = found.size();
        for_each_subset_of_size(all, size, [&](Face s) {
            for (std::size_t i = 0; i < smaller; ++i) {
                if (found[i].subset_of(s)) return;
            }
            if (!c.is_face(s)) found.push_back(s);
        });
    }
    return NonFaceFamily(m, std::move(found));
}

SimplicialComplex complex_from_nonfaces(const NonFaceFamily& f) {
    const int m = f.vertex_count();
    const VertexSet all = VertexSet::range(m);
    std::set<VertexSet> candidates;
    collect_transversals(f.members(), VertexSet{}, VertexSet{}, candidates);
    std::vector<Face> facets;
    for (VertexSet t : candidates) {
        if (is_minimal_transversal(f.members(), t)) facets.push_back(all - t);
    }
    return SimplicialComplex(m, std::move(facets));
}

FVector f_vector(const SimplicialComplex& c) {
    FVector out;
    out.counts.assign(static_cast<std::size_t>(c.dimension() + 2), 0);
    for (Face s : c.faces()) ++out.counts[static_cast<std::size_t>(s.size())];
    return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& c) {
    const FVector f = f_vector(c);
    std::int64_t chi = 0;
    for (int i = 0; i <= f.dimension(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f(i);
    return chi;
}

}  // namespace fewsphere
