#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "fewsphere/error.hpp"
#include "fewsphere/vertex_set.hpp"

using fewsphere::VertexSet;

TEST_CASE("basic set operations") {
    VertexSet a{1, 3, 5};
    CHECK(a.size() == 3);
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK(a.min() == 1);
    CHECK(a.max() == 5);
    CHECK((a | VertexSet{2}) == VertexSet{1, 2, 3, 5});
    CHECK((a & VertexSet{3, 4, 5}) == VertexSet{3, 5});
    CHECK((a - VertexSet{1}) == VertexSet{3, 5});
    CHECK(VertexSet{3}.subset_of(a));
    CHECK_FALSE(VertexSet{2}.subset_of(a));
    CHECK(a.to_string() == "{1,3,5}");
    CHECK(VertexSet{}.to_string() == "{}");
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet{64}.max() == 64);
}

TEST_CASE("order is lexicographic on sorted vertex lists") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        VertexSet a = VertexSet::from_mask(rng() & 0x3FF);
        VertexSet b = VertexSet::from_mask(rng() & 0x3FF);
        auto va = a.vertices();
        auto vb = b.vertices();
        CHECK((a < b) == std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end()));
        CHECK((a == b) == (va == vb));
    }
    CHECK(VertexSet{1, 2} < VertexSet{1, 2, 5});
    CHECK(VertexSet{1, 2, 5} < VertexSet{1, 3});
    CHECK(VertexSet{1, 3} < VertexSet{2});
    CHECK(VertexSet{} < VertexSet{1});
}

TEST_CASE("from_sorted validates its input") {
    std::vector<int> ok{1, 4, 6};
    CHECK(VertexSet::from_sorted(ok, 6) == VertexSet{1, 4, 6});
    std::vector<int> unsorted{4, 1};
    std::vector<int> dup{2, 2};
    std::vector<int> out_of_range{1, 7};
    std::vector<int> zero{0, 1};
    CHECK_THROWS_AS(VertexSet::from_sorted(unsorted, 6), fewsphere::Error);
    CHECK_THROWS_AS(VertexSet::from_sorted(dup, 6), fewsphere::Error);
    CHECK_THROWS_AS(VertexSet::from_sorted(out_of_range, 6), fewsphere::Error);
    CHECK_THROWS_AS(VertexSet::from_sorted(zero, 6), fewsphere::Error);
}

TEST_CASE("permutation images") {
    std::vector<int> perm{3, 1, 2};
    CHECK(VertexSet{1, 2}.permuted(perm) == VertexSet{1, 3});
    CHECK(VertexSet{3}.permuted(perm) == VertexSet{2});
}
