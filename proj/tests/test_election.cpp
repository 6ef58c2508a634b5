#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kpav/election.hpp"
#include "kpav/peaked.hpp"

using namespace kpav;

namespace {

// Candidates a,b,c -> ids 0,1,2; votes from the three-voter 2-approval example.
VoteMultiset three_voter_example() {
    VoteMultiset vm;
    vm.add({0, 1, 2});  // a > b > c
    vm.add({0, 2, 1});  // a > c > b
    vm.add({2, 0, 1});  // c > a > b
    return vm;
}

}  // namespace

TEST_CASE("position is the 1-based rank") {
    CHECK(position({0, 1, 2}, 0) == 1);
    CHECK(position({0, 1, 2, 3, 4}, 3) == 4);
    // (c3,c4,c7,c6,c8,c9,c5,c2,c10,c1) with c_i mapped to id i-1; c7 sits third.
    Vote fig2{2, 3, 6, 5, 7, 8, 4, 1, 9, 0};
    CHECK(position(fig2, 6) == 3);
    CHECK_THROWS_AS(position({0, 1, 2}, 7), std::invalid_argument);
}

TEST_CASE("approved_set is exactly the top-r prefix") {
    CHECK(approved_set({0, 1, 2}, 2) == std::vector<CandidateId>{0, 1});
    CHECK(approved_set({0, 1, 2}, 1) == std::vector<CandidateId>{0});
    Vote fig2{2, 3, 6, 5, 7, 8, 4, 1, 9, 0};
    auto top4 = approved_set(fig2, 4);
    std::sort(top4.begin(), top4.end());
    CHECK(top4 == std::vector<CandidateId>{2, 3, 5, 6});
    CHECK_THROWS_AS(approved_set({0, 1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(approved_set({0, 1, 2}, 3), std::invalid_argument);
}

TEST_CASE("scores on the three-voter example") {
    auto sc = scores(3, three_voter_example(), 2);
    CHECK(sc == std::vector<int>{3, 1, 2});
    CHECK(unique_winner(3, three_voter_example(), 2) == std::optional<CandidateId>(0));
}

TEST_CASE("scores of the empty multiset are all zero") {
    auto sc = scores(4, VoteMultiset{}, 2);
    CHECK(sc == std::vector<int>{0, 0, 0, 0});
    CHECK(!unique_winner(4, VoteMultiset{}, 2).has_value());
}

TEST_CASE("scores agree with a per-ballot recount on random votes") {
    std::mt19937_64 rng(20240601);
    Axis axis = Axis::identity(6);
    VoteMultiset vm;
    for (int i = 0; i < 10; ++i) vm.add(gen_random_k_peaked(axis, 2, rng), 1 + static_cast<int>(rng() % 3));
    auto sc = scores(6, vm, 3);
    int total = 0;
    for (CandidateId c = 0; c < 6; ++c) {
        int manual = 0;
        for (const auto& e : vm.entries)
            if (position(e.order, c) <= 3) manual += e.multiplicity;
        CHECK(sc[static_cast<size_t>(c)] == manual);
        total += manual;
    }
    CHECK(total == 3 * vm.size());
}

TEST_CASE("unique winner requires a strict maximum") {
    VoteMultiset two_same;
    two_same.add({0, 1}, 2);
    CHECK(unique_winner(2, two_same, 1) == std::optional<CandidateId>(0));

    VoteMultiset tie;
    tie.add({0, 1});
    tie.add({1, 0});
    CHECK(!unique_winner(2, tie, 1).has_value());
}

TEST_CASE("restrict_vote keeps relative order") {
    Vote v{0, 1, 2, 3, 4};  // a > b > c > d > e
    CHECK(restrict_vote(v, std::vector<CandidateId>{1, 3, 4}) == Vote{1, 3, 4});
    CHECK(restrict_vote(v, std::vector<CandidateId>{0, 1, 2, 3, 4}) == v);
    CHECK(restrict_vote(v, std::vector<CandidateId>{}) == Vote{});
    CHECK_THROWS_AS(restrict_vote(v, std::vector<CandidateId>{9}), std::invalid_argument);
}

TEST_CASE("multiset algebra on the worked example") {
    // A = {1,1,1,2,3,3,4}, B = {1,2,3} encoded as single-element votes.
    VoteMultiset a, b;
    a.add({1}, 3);
    a.add({2}, 1);
    a.add({3}, 2);
    a.add({4}, 1);
    b.add({1});
    b.add({2});
    b.add({3});

    auto minus = multiset_minus(a, b);
    VoteMultiset expect_minus;
    expect_minus.add({1}, 2);
    expect_minus.add({3}, 1);
    expect_minus.add({4}, 1);
    CHECK(multiset_equal(minus, expect_minus));

    auto uni = multiset_union(a, b);
    CHECK(uni.size() == 10);
    VoteMultiset expect_union;
    expect_union.add({1}, 4);
    expect_union.add({2}, 2);
    expect_union.add({3}, 3);
    expect_union.add({4}, 1);
    CHECK(multiset_equal(uni, expect_union));

    CHECK(is_submultiset(b, a));
    CHECK(!is_submultiset(a, b));
}

TEST_CASE("multiset round trip restores the original") {
    std::mt19937_64 rng(7);
    Axis axis = Axis::identity(5);
    for (int trial = 0; trial < 50; ++trial) {
        VoteMultiset a;
        for (int i = 0; i < 5; ++i) a.add(gen_random_k_peaked(axis, 2, rng), 1 + static_cast<int>(rng() % 2));
        VoteMultiset b;
        for (const auto& e : a.entries)
            if (rng() % 2) b.add(e.order, 1);
        REQUIRE(is_submultiset(b, a));
        CHECK(multiset_equal(multiset_union(multiset_minus(a, b), b), a));
    }
}

TEST_CASE("scores are linear over multiset union") {
    std::mt19937_64 rng(11);
    Axis axis = Axis::identity(6);
    for (int trial = 0; trial < 30; ++trial) {
        VoteMultiset a, b;
        for (int i = 0; i < 4; ++i) a.add(gen_random_k_peaked(axis, 3, rng));
        for (int i = 0; i < 3; ++i) b.add(gen_random_k_peaked(axis, 3, rng));
        auto sa = scores(6, a, 2), sb = scores(6, b, 2), su = scores(6, multiset_union(a, b), 2);
        for (size_t c = 0; c < 6; ++c) CHECK(su[c] == sa[c] + sb[c]);
    }
}

TEST_CASE("doubling every vote preserves the unique winner") {
    std::mt19937_64 rng(13);
    Axis axis = Axis::identity(5);
    for (int trial = 0; trial < 50; ++trial) {
        VoteMultiset a;
        for (int i = 0; i < 4; ++i) a.add(gen_random_k_peaked(axis, 2, rng));
        CHECK(unique_winner(5, a, 2) == unique_winner(5, multiset_union(a, a), 2));
    }
}

TEST_CASE("restriction composes via intersection") {
    Vote v{3, 0, 4, 1, 2};
    std::vector<CandidateId> s{0, 1, 3, 4}, t{0, 2, 3};
    auto lhs = restrict_vote(restrict_vote(v, s), t);
    std::vector<CandidateId> inter;
    for (CandidateId c : s)
        if (std::find(t.begin(), t.end(), c) != t.end()) inter.push_back(c);
    CHECK(lhs == restrict_vote(v, inter));
}
