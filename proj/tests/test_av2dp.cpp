#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "kpav/av2_dp.hpp"
#include "support/oracles.hpp"

using namespace kpav;

namespace {

AvInstance random_2peaked(std::mt19937_64& rng, int r, int m, int reg, int unreg, int budget) {
    RandomElectionSpec spec;
    spec.m = m;
    spec.r = r;
    spec.k = 2;
    spec.registered = reg;
    spec.unregistered = unreg;
    spec.budget = budget;
    spec.max_multiplicity = 2;
    return random_av_instance(rng, spec);
}

void force_p_position(AvInstance& in, bool front, std::mt19937_64& rng) {
    // Rebuild the axis with p pinned to one end, then regenerate the votes
    // so they stay 2-peaked on the new axis.
    int m = in.election.num_candidates;
    std::vector<CandidateId> order;
    for (CandidateId c = 0; c < m; ++c)
        if (c != in.election.distinguished) order.push_back(c);
    std::shuffle(order.begin(), order.end(), rng);
    if (front) order.insert(order.begin(), in.election.distinguished);
    else order.push_back(in.election.distinguished);
    in.axis = Axis::from_order(order);
    for (auto& entry : in.election.registered.entries) entry.order = gen_random_k_peaked(in.axis, 2, rng);
    for (auto& entry : in.unregistered.entries) entry.order = gen_random_k_peaked(in.axis, 2, rng);
}

}  // namespace

TEST_CASE("arrow index walks the axis and stops at the ends") {
    Axis axis = Axis::from_order({0, 1, 2, 3, 4, 5, 6, 7});
    av2::ArrowIndex arrows{&axis};
    CHECK(arrows.right(3, 1) == std::optional<CandidateId>(4));
    CHECK(arrows.right(3, 4) == std::optional<CandidateId>(7));
    CHECK(arrows.left(3, 1) == std::optional<CandidateId>(2));
    CHECK(arrows.left(3, 3) == std::optional<CandidateId>(0));
    CHECK(!arrows.left(3, 4).has_value());
    CHECK(!arrows.right(3, 5).has_value());
}

TEST_CASE("filtering keeps exactly the p-approving votes") {
    Axis axis = Axis::identity(6);
    std::mt19937_64 rng(808);
    VoteMultiset all, none;
    for (int i = 0; i < 6; ++i) {
        Vote v = gen_random_k_peaked(axis, 2, rng);
        (approves(v, 3, 0) ? all : none).add(v);
    }
    CHECK(multiset_equal(av2::filter_p_approving(all, 3, 0), all));
    CHECK(av2::filter_p_approving(none, 3, 0).size() == 0);

    VoteMultiset mixed = multiset_union(all, none);
    VoteMultiset kept = av2::filter_p_approving(mixed, 3, 0);
    for (const auto& e : kept.entries) REQUIRE(approves(e.order, 3, 0));
    CHECK(kept.size() == all.size());
}

TEST_CASE("one-block types are the contiguous r-blocks containing p") {
    int m = 10, r = 4;
    Axis axis = Axis::identity(m);

    auto block_vote = [&](int start) {  // top-r = axis[start..start+r-1]
        Vote v;
        for (int q = start; q < start + r; ++q) v.push_back(axis.order[static_cast<size_t>(q)]);
        for (int q = start - 1; q >= 0; --q) v.push_back(axis.order[static_cast<size_t>(q)]);
        for (int q = start + r; q < m; ++q) v.push_back(axis.order[static_cast<size_t>(q)]);
        return v;
    };

    // p in the middle: all four window placements occur.
    CandidateId p = 5;
    VoteMultiset vm;
    for (int start = 2; start <= 5; ++start) vm.add(block_vote(start));
    av2::SplitResult split = av2::split_one_block(vm, r, axis, p);
    CHECK(split.one_block.size() == 4);
    CHECK(split.two_block.empty());
    for (const auto& type : split.one_block) {
        REQUIRE(std::find(type.approved.begin(), type.approved.end(), p) != type.approved.end());
        for (size_t i = 1; i < type.approved.size(); ++i)
            REQUIRE(axis.pos[static_cast<size_t>(type.approved[i])] ==
                    axis.pos[static_cast<size_t>(type.approved[i - 1])] + 1);
    }

    // p first on the axis: a single placement remains.
    VoteMultiset front;
    front.add(block_vote(0), 3);
    av2::SplitResult split_front = av2::split_one_block(front, r, axis, 0);
    CHECK(split_front.one_block.size() == 1);
    CHECK(split_front.one_block[0].available == 3);
}

TEST_CASE("random splits classify blocks correctly") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 100; ++trial) {
        AvInstance in = random_2peaked(rng, 3, 8, 4, 6, 3);
        CandidateId p = in.election.distinguished;
        VoteMultiset usable = av2::filter_p_approving(in.unregistered, 3, p);
        av2::SplitResult split = av2::split_one_block(usable, 3, in.axis, p);
        int p_pos = in.axis.pos[static_cast<size_t>(p)];
        for (const auto& type : split.one_block) {
            auto blocks = approved_blocks(type.sources[0].first, 3, in.axis);
            REQUIRE(blocks.blocks.size() == 1);
        }
        for (const auto& tb : split.two_block) {
            REQUIRE(tb.p_block.start <= p_pos);
            REQUIRE(p_pos <= tb.p_block.end);
            REQUIRE((tb.other_block.end < tb.p_block.start || tb.other_block.start > tb.p_block.end));
        }
        for (size_t i = 1; i < split.two_block.size(); ++i)
            REQUIRE(split.two_block[i - 1].other_block.end <= split.two_block[i].other_block.end);
    }
}

TEST_CASE("guess enumeration counts sum-bounded vectors") {
    std::vector<av2::OneBlockType> types(4);
    for (auto& t : types) t.available = 10;  // abundant
    auto guesses = av2::enumerate_s_guesses(types, 2);
    CHECK(guesses.size() == 15);  // non-negative 4-vectors with sum <= 2

    types[1].available = 1;
    for (const auto& g : av2::enumerate_s_guesses(types, 3))
        for (size_t t = 0; t < g.counts.size(); ++t) REQUIRE(g.counts[t] <= types[t].available);

    auto none = av2::enumerate_s_guesses({}, 4);
    REQUIRE(none.size() == 1);
    CHECK(none[0].total == 0);
}

TEST_CASE("dp on a single two-block vote matches a direct rescore") {
    std::mt19937_64 rng(11011);
    int checked = 0;
    for (int trial = 0; trial < 1200 && checked < 60; ++trial) {
        AvInstance in = random_2peaked(rng, 4, 9, 5, 1, 1);
        CandidateId p = in.election.distinguished;
        VoteMultiset usable = av2::filter_p_approving(in.unregistered, 4, p);
        av2::SplitResult split = av2::split_one_block(usable, 4, in.axis, p);
        if (split.two_block.size() != 1) continue;
        std::vector<int> base = scores(in.election.num_candidates, in.election.registered, 4);
        av2::DpOutcome dp =
            av2::dp_fill(base, p, base[static_cast<size_t>(p)], 1, split.two_block, 4, in.axis);

        std::vector<int> after = base;
        for (CandidateId c : approved_prefix(split.two_block[0].order, 4)) ++after[static_cast<size_t>(c)];
        bool direct = unique_winner_of_scores(after) == std::optional<CandidateId>(p);
        REQUIRE(dp.accepted == direct);
        ++checked;
    }
    REQUIRE(checked >= 50);
}

TEST_CASE("no usable votes means the answer is the status quo") {
    // Unregistered votes that all skip p: filtered to nothing.
    Election e;
    e.num_candidates = 6;
    e.r = 3;
    e.distinguished = 0;
    e.names.resize(6);
    for (int i = 0; i < 6; ++i) e.names[static_cast<size_t>(i)] = "c" + std::to_string(i);
    e.registered.add({1, 2, 3, 0, 4, 5}, 2);  // p shut out
    AvInstance in{e, {}, 2, Axis::identity(6), 2};
    in.unregistered.add({1, 2, 3, 4, 5, 0}, 2);
    in.unregistered.add({3, 4, 5, 2, 1, 0}, 1);
    Decision d = solve_av2(in);
    CHECK(!d.yes);
    CHECK(!brute_av(in).yes);
}

TEST_CASE("dp solver matches the oracle on seeded 2-peaked instances") {
    std::mt19937_64 rng(20250810);
    long long total_states = 0;
    int ran = 0;
    for (int trial = 0; trial < 520; ++trial) {
        int r = 3 + static_cast<int>(rng() % 3);  // 3..5
        int m = r + 2 + static_cast<int>(rng() % (10 - r - 1));
        int reg = 2 + static_cast<int>(rng() % 6);
        int unreg = 1 + static_cast<int>(rng() % 6);
        int budget = static_cast<int>(rng() % 5);
        AvInstance in = random_2peaked(rng, r, m, reg, unreg, budget);
        REQUIRE(validate(in).empty());
        Decision fast = solve_av2(in);
        Decision slow = brute_av(in);
        REQUIRE(fast.yes == slow.yes);
        REQUIRE(reverify(in, fast));
        total_states += fast.stats.nodes;
        ++ran;
    }
    REQUIRE(ran >= 500);
    CHECK(total_states > 0);
}

TEST_CASE("dp solver handles adversarial corners") {
    std::mt19937_64 rng(606060);

    SECTION("p pinned to an axis end") {
        for (int trial = 0; trial < 80; ++trial) {
            AvInstance in = random_2peaked(rng, 4, 8, 4, 5, 3);
            force_p_position(in, trial % 2 == 0, rng);
            in.budget = std::min(in.budget, in.unregistered.size());
            REQUIRE(validate(in).empty());
            REQUIRE(solve_av2(in).yes == brute_av(in).yes);
        }
    }

    SECTION("all unregistered votes share one type") {
        for (int trial = 0; trial < 40; ++trial) {
            AvInstance in = random_2peaked(rng, 3, 7, 4, 1, 3);
            Vote v = gen_random_k_peaked(in.axis, 2, rng);
            in.unregistered = VoteMultiset{};
            in.unregistered.add(v, 4);
            in.budget = 3;
            REQUIRE(solve_av2(in).yes == brute_av(in).yes);
        }
    }

    SECTION("only one-block votes") {
        for (int trial = 0; trial < 40; ++trial) {
            AvInstance in = random_2peaked(rng, 3, 8, 4, 0, 0);
            CandidateId p = in.election.distinguished;
            int p_pos = in.axis.pos[static_cast<size_t>(p)];
            in.unregistered = VoteMultiset{};
            for (int start = std::max(0, p_pos - 2); start <= std::min(p_pos, 8 - 3); ++start) {
                Vote v;
                for (int q = start; q < start + 3; ++q)
                    v.push_back(in.axis.order[static_cast<size_t>(q)]);
                for (int q = start - 1; q >= 0; --q) v.push_back(in.axis.order[static_cast<size_t>(q)]);
                for (int q = start + 3; q < 8; ++q) v.push_back(in.axis.order[static_cast<size_t>(q)]);
                in.unregistered.add(v, 1 + static_cast<int>(rng() % 2));
            }
            in.budget = std::min(3, in.unregistered.size());
            REQUIRE(validate(in).empty());
            REQUIRE(solve_av2(in).yes == brute_av(in).yes);
        }
    }

    SECTION("only two-block votes") {
        int checked = 0;
        for (int trial = 0; trial < 300 && checked < 40; ++trial) {
            AvInstance in = random_2peaked(rng, 3, 9, 4, 8, 3);
            CandidateId p = in.election.distinguished;
            VoteMultiset only_two;
            for (const auto& entry : in.unregistered.entries) {
                if (!approves(entry.order, 3, p)) continue;
                if (approved_blocks(entry.order, 3, in.axis).blocks.size() == 2)
                    only_two.entries.push_back(entry);
            }
            if (only_two.size() < 2) continue;
            in.unregistered = only_two;
            in.budget = std::min(3, in.unregistered.size());
            REQUIRE(solve_av2(in).yes == brute_av(in).yes);
            ++checked;
        }
        REQUIRE(checked >= 30);
    }
}

TEST_CASE("reachable state count stays far below the table bound") {
    std::mt19937_64 rng(515151);
    for (int trial = 0; trial < 30; ++trial) {
        AvInstance in = random_2peaked(rng, 4, 9, 5, 6, 4);
        Decision d = solve_av2(in);
        double t = std::max(1, in.unregistered.size());
        double v = std::max(1, in.election.registered.size());
        double bound = t * std::max(1, in.budget) *
                       std::pow(v + in.budget, 3.0 * in.election.r - 2.0);
        REQUIRE(static_cast<double>(d.stats.nodes) <= bound);
    }
}

TEST_CASE("solver rejects out-of-scope parameters") {
    std::mt19937_64 rng(717171);
    AvInstance in = random_2peaked(rng, 3, 7, 3, 3, 2);
    AvInstance wrong_k = in;
    wrong_k.k = 3;
    CHECK_THROWS_AS(solve_av2(wrong_k), std::invalid_argument);
    AvInstance wide = random_2peaked(rng, 3, 12, 3, 3, 2);
    wide.election.r = 7;
    for (auto& entry : wide.election.registered.entries)
        entry.order = gen_random_k_peaked(wide.axis, 2, rng);
    for (auto& entry : wide.unregistered.entries) entry.order = gen_random_k_peaked(wide.axis, 2, rng);
    CHECK_THROWS_AS(solve_av2(wide), std::invalid_argument);
}
