#include "fewsphere/recognizer.hpp"

#include <algorithm>
#include <functional>

#include "fewsphere/error.hpp"

namespace fewsphere {

namespace {

long wrap(long i, long n) {
    long r = i % n;
    return r < 0 ? r + n : r;
}

bool blocks_partition(const std::vector<Face>& blocks, int m) {
    VertexSet seen;
    for (Face b : blocks) {
        if (b.empty() || b.intersects(seen)) return false;
        seen |= b;
    }
    return seen == VertexSet::range(m);
}

// Hamiltonian cycles of the disjointness graph on the (sorted) members,
// starting at member 0 and keeping only orientations with A_1 < A_{n-1}.
// `visit` returns true to stop the search.
class CycleSearch {
public:
    CycleSearch(const std::vector<Face>& members, std::function<bool(const std::vector<std::size_t>&)> visit)
        : members_(members), visit_(std::move(visit)), used_(members.size(), false) {
        const std::size_t n = members_.size();
        adjacent_.assign(n, std::vector<std::size_t>{});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && !members_[i].intersects(members_[j])) adjacent_[i].push_back(j);
            }
        }
    }

    void run() {
        const std::size_t n = members_.size();
        if (n < 3) return;
        for (const auto& nbrs : adjacent_) {
            if (nbrs.size() < 2) return;
        }
        path_.assign(1, 0);
        used_.assign(n, false);
        used_[0] = true;
        extend();
    }

private:
    bool extend() {
        const std::size_t n = members_.size();
        const std::size_t last = path_.back();
        if (path_.size() == n) {
            if (path_[1] > path_[n - 1]) return false;
            if (members_[last].intersects(members_[path_[0]])) return false;
            return visit_(path_);
        }
        for (std::size_t next : adjacent_[last]) {
            if (used_[next]) continue;
            used_[next] = true;
            path_.push_back(next);
            bool stop = extend();
            path_.pop_back();
            used_[next] = false;
            if (stop) return true;
        }
        return false;
    }

    const std::vector<Face>& members_;
    std::function<bool(const std::vector<std::size_t>&)> visit_;
    std::vector<std::vector<std::size_t>> adjacent_;
    std::vector<bool> used_;
    std::vector<std::size_t> path_;
};

struct SearchOutcome {
    bool any_cycle = false;
    std::vector<MaxOddCycle> found;
};

SearchOutcome search(const NonFaceFamily& f, bool first_only) {
    SearchOutcome out;
    const auto& members = f.members();
    const int m = f.vertex_count();
    if (members.size() < 3 || members.size() % 2 == 0) return out;
    CycleSearch(members, [&](const std::vector<std::size_t>& path) {
        out.any_cycle = true;
        std::vector<Face> sets;
        sets.reserve(path.size());
        for (std::size_t i : path) sets.push_back(members[i]);
        CyclicOrdering ordering(std::move(sets));
        std::vector<Face> blocks = alternating_blocks(ordering);
        if (!blocks_partition(blocks, m)) return false;
        out.found.push_back(MaxOddCycle{std::move(ordering), std::move(blocks)});
        return first_only;
    }).run();
    return out;
}

Verdict recognize_family(const NonFaceFamily& f, int d) {
    const int m = f.vertex_count();
    const VertexSet all = VertexSet::range(m);
    if (m - d >= 5) return OutOfScope{m, d};
    if (m == d + 1) return NotSphere{NotSphereReason::FullSimplex};

    const auto& members = f.members();
    if (m - d == 2) {
        if (members.size() == 1 && members[0] == all) return Sphere{d, SimplexBoundary{all}};
        return NotSphere{NotSphereReason::WrongFamilyShape};
    }
    if (m - d == 3) {
        if (members.size() == 2 && !members[0].intersects(members[1]) && (members[0] | members[1]) == all &&
            members[0].size() >= 2 && members[1].size() >= 2) {
            return Sphere{d, TwoPartition{members[0], members[1]}};
        }
        return NotSphere{NotSphereReason::WrongFamilyShape};
    }

    const std::size_t n = members.size();
    if (n % 2 == 0) return NotSphere{NotSphereReason::NonOddFamilySize};
    if (n < 3) return NotSphere{NotSphereReason::WrongFamilyShape};
    // n nonempty disjoint blocks cannot fit inside [1, m] when n > m.
    if (n > static_cast<std::size_t>(m)) return NotSphere{NotSphereReason::BlocksNotPartition};

    SearchOutcome outcome = search(f, true);
    if (outcome.found.empty()) {
        return NotSphere{outcome.any_cycle ? NotSphereReason::BlocksNotPartition : NotSphereReason::NoCyclicOrdering};
    }
    MaxOddCycle cert = std::move(outcome.found.front());
    if (d != m - 4 || !is_valid_certificate(cert, m)) {
        throw Error(ErrorCode::InternalInconsistency, "maximum odd cycle found for a complex of dimension " +
                                                          std::to_string(d) + " on " + std::to_string(m) +
                                                          " vertices");
    }
    return Sphere{d, std::move(cert)};
}

}  // namespace

CyclicOrdering::CyclicOrdering(std::vector<Face> sets) : sets_(std::move(sets)) {
    if (sets_.empty()) throw Error(ErrorCode::InvalidInput, "cyclic ordering is empty");
    const std::size_t n = sets_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (sets_[i].intersects(sets_[(i + 1) % n])) {
            throw Error(ErrorCode::InvalidInput, "successive sets " + sets_[i].to_string() + " and " +
                                                     sets_[(i + 1) % n].to_string() + " intersect");
        }
    }
}

Face CyclicOrdering::operator[](long i) const {
    return sets_[static_cast<std::size_t>(wrap(i, static_cast<long>(sets_.size())))];
}

CyclicOrdering CyclicOrdering::rotated(long shift) const {
    std::vector<Face> out;
    out.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) out.push_back((*this)[static_cast<long>(i) + shift]);
    return CyclicOrdering(std::move(out));
}

CyclicOrdering CyclicOrdering::reversed() const {
    std::vector<Face> out(sets_.rbegin(), sets_.rend());
    return CyclicOrdering(std::move(out));
}

CyclicOrdering CyclicOrdering::canonical() const {
    const long n = static_cast<long>(sets_.size());
    const long start = std::min_element(sets_.begin(), sets_.end()) - sets_.begin();
    CyclicOrdering out = rotated(start);
    if (n >= 3 && out[n - 1] < out[1]) out = out.reversed().rotated(n - 1);
    return out;
}

bool CyclicOrdering::is_canonical() const { return *this == canonical(); }

std::vector<Face> alternating_blocks(const CyclicOrdering& ordering) {
    const long n = static_cast<long>(ordering.size());
    if (n < 3) throw Error(ErrorCode::TooShort, "cyclic ordering of length " + std::to_string(n));
    if (n % 2 == 0) throw Error(ErrorCode::EvenLength, "cyclic ordering of length " + std::to_string(n));
    const long k = (n - 1) / 2;
    std::vector<Face> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        Face b = ordering[i];
        for (long t = 1; t < k; ++t) b &= ordering[i + 2 * t];
        blocks.push_back(b);
    }
    return blocks;
}

bool is_valid_certificate(const MaxOddCycle& cert, int m) {
    const std::size_t n = cert.ordering.size();
    if (n < 3 || n % 2 == 0 || cert.blocks.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (cert.ordering[static_cast<long>(i)].intersects(cert.ordering[static_cast<long>(i) + 1])) return false;
    }
    if (alternating_blocks(cert.ordering) != cert.blocks) return false;
    if (!blocks_partition(cert.blocks, m)) return false;
    if (n == 3) {
        for (Face b : cert.blocks) {
            if (b.size() < 2) return false;
        }
    }
    return true;
}

MaxOddCycle make_certificate(const CyclicOrdering& ordering, int m) {
    MaxOddCycle cert{ordering, alternating_blocks(ordering)};
    if (!is_valid_certificate(cert, m)) {
        throw Error(ErrorCode::InvalidInput, "ordering is not a maximum odd cycle on [1, " + std::to_string(m) + "]");
    }
    return cert;
}

std::vector<Face> nonfaces_from_blocks(const std::vector<Face>& blocks) {
    const long n = static_cast<long>(blocks.size());
    if (n < 3) throw Error(ErrorCode::TooShort, "block sequence of length " + std::to_string(n));
    if (n % 2 == 0) throw Error(ErrorCode::EvenLength, "block sequence of length " + std::to_string(n));
    const long k = (n - 1) / 2;
    std::vector<Face> sets;
    sets.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        Face a;
        for (long t = 0; t < k; ++t) a |= blocks[static_cast<std::size_t>(wrap(i - 2 * t, n))];
        sets.push_back(a);
    }
    return sets;
}

std::optional<MaxOddCycle> find_max_odd_cycle(const NonFaceFamily& f) {
    SearchOutcome outcome = search(f, true);
    if (outcome.found.empty()) return std::nullopt;
    return std::move(outcome.found.front());
}

std::vector<MaxOddCycle> all_max_odd_cycles(const NonFaceFamily& f) { return search(f, false).found; }

std::string_view to_string(NotSphereReason reason) {
    switch (reason) {
        case NotSphereReason::NonOddFamilySize: return "non_odd_family_size";
        case NotSphereReason::NoCyclicOrdering: return "no_cyclic_ordering";
        case NotSphereReason::BlocksNotPartition: return "blocks_not_partition";
        case NotSphereReason::FullSimplex: return "full_simplex";
        case NotSphereReason::WrongFamilyShape: return "wrong_family_shape";
    }
    return "unknown";
}

Verdict recognize(const SimplicialComplex& c) { return recognize_family(minimal_nonfaces(c), c.dimension()); }

Verdict recognize(const NonFaceFamily& f) { return recognize_family(f, complex_from_nonfaces(f).dimension()); }

}  // namespace fewsphere
