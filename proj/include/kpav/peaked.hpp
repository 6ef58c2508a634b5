#pragma once
// Single-peaked and k-peaked structure over a fixed candidate axis:
// checks with witness partitions, minimal peak counts, discrete-interval
// extraction of approved sets, and seeded random k-peaked vote generation.

#include <cstdint>
#include <optional>
#include <random>

#include "kpav/election.hpp"

namespace kpav {

// The harmonious ordering the peak structure is measured against.
struct Axis {
    std::vector<CandidateId> order;  // axis position -> candidate id
    std::vector<int> pos;            // candidate id -> axis position

    static Axis from_order(std::vector<CandidateId> order) {
        Axis a;
        int m = static_cast<int>(order.size());
        if (!is_permutation_of_candidates(order, m))
            throw std::invalid_argument("axis must be a permutation of candidate ids 0..m-1");
        a.pos.assign(static_cast<size_t>(m), -1);
        for (int i = 0; i < m; ++i) a.pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
        a.order = std::move(order);
        return a;
    }
    static Axis identity(int m) {
        std::vector<CandidateId> o(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) o[static_cast<size_t>(i)] = i;
        return from_order(std::move(o));
    }
    int size() const { return static_cast<int>(order.size()); }
};

// Contiguous block of axis positions, endpoints inclusive.
struct AxisBlock {
    int start = 0;
    int end = 0;
    int length() const { return end - start + 1; }
    bool operator==(const AxisBlock& o) const { return start == o.start && end == o.end; }
};

struct DiscreteIntervalSet {
    std::vector<AxisBlock> blocks;  // pairwise disjoint, sorted by start
};

// Partition of the axis into contiguous segments; cuts[i] is the axis
// position where segment i+1 begins. segments() == cuts.size() + 1.
struct PeakWitness {
    std::vector<int> cuts;
    int segments() const { return static_cast<int>(cuts.size()) + 1; }
};

namespace detail {

// Ranks of the axis positions in [from, to] under the vote; the restricted
// vote is single-peaked iff this sequence strictly falls to its minimum and
// strictly rises afterwards (no position is worse than both its neighbors).
inline bool segment_single_peaked(const Vote& vote, const Axis& axis, int from, int to) {
    std::vector<int> rank(vote.size(), 0);
    for (size_t i = 0; i < vote.size(); ++i) rank[static_cast<size_t>(vote[i])] = static_cast<int>(i);
    int best = from;
    for (int i = from + 1; i <= to; ++i)
        if (rank[static_cast<size_t>(axis.order[static_cast<size_t>(i)])] <
            rank[static_cast<size_t>(axis.order[static_cast<size_t>(best)])])
            best = i;
    for (int i = from; i < best; ++i)
        if (rank[static_cast<size_t>(axis.order[static_cast<size_t>(i)])] <
            rank[static_cast<size_t>(axis.order[static_cast<size_t>(i + 1)])])
            return false;
    for (int i = best; i < to; ++i)
        if (rank[static_cast<size_t>(axis.order[static_cast<size_t>(i)])] >
            rank[static_cast<size_t>(axis.order[static_cast<size_t>(i + 1)])])
            return false;
    return true;
}

inline void check_same_candidates(const Vote& vote, const Axis& axis) {
    if (!is_permutation_of_candidates(vote, axis.size()))
        throw std::invalid_argument("vote and axis must range over the same candidate set");
}

}  // namespace detail

inline bool is_single_peaked(const Vote& vote, const Axis& axis) {
    detail::check_same_candidates(vote, axis);
    if (axis.size() <= 1) return true;
    return detail::segment_single_peaked(vote, axis, 0, axis.size() - 1);
}

// Greedy segmentation: extend the current segment while its induced
// restriction stays single-peaked. Feasibility of a segment is closed
// under shrinking it from the right, so the greedy count is minimal.
inline PeakWitness greedy_segments(const Vote& vote, const Axis& axis) {
    detail::check_same_candidates(vote, axis);
    PeakWitness w;
    int m = axis.size();
    int start = 0;
    while (start < m) {
        int end = start;
        while (end + 1 < m && detail::segment_single_peaked(vote, axis, start, end + 1)) ++end;
        if (end + 1 < m) w.cuts.push_back(end + 1);
        start = end + 1;
    }
    return w;
}

inline int min_peaks(const Vote& vote, const Axis& axis) {
    return greedy_segments(vote, axis).segments();
}

inline std::optional<PeakWitness> is_k_peaked(const Vote& vote, const Axis& axis, int k) {
    if (k < 1) throw std::invalid_argument("peak bound k must be at least 1");
    PeakWitness w = greedy_segments(vote, axis);
    if (w.segments() <= k) return w;
    return std::nullopt;
}

// Maximal contiguous axis blocks covering the vote's top-r set. Defined for
// any vote; for a k-peaked vote the result has at most k blocks.
inline DiscreteIntervalSet approved_blocks(const Vote& vote, int r, const Axis& axis) {
    detail::check_same_candidates(vote, axis);
    std::vector<bool> approved(static_cast<size_t>(axis.size()), false);
    for (CandidateId c : approved_prefix(vote, r)) approved[static_cast<size_t>(c)] = true;
    DiscreteIntervalSet out;
    int m = axis.size();
    int i = 0;
    while (i < m) {
        if (!approved[static_cast<size_t>(axis.order[static_cast<size_t>(i)])]) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < m && approved[static_cast<size_t>(axis.order[static_cast<size_t>(j + 1)])]) ++j;
        out.blocks.push_back(AxisBlock{i, j});
        i = j + 1;
    }
    return out;
}

inline Axis restrict_axis(const Axis& axis, const std::vector<bool>& keep) {
    // Re-labels survivors densely so the restricted pair stays a valid
    // (vote, axis) instance; use relabel_vote with the same mask.
    std::vector<CandidateId> order;
    std::vector<int> newid(static_cast<size_t>(axis.size()), -1);
    int next = 0;
    for (CandidateId c = 0; c < axis.size(); ++c)
        if (keep[static_cast<size_t>(c)]) newid[static_cast<size_t>(c)] = next++;
    for (CandidateId c : axis.order)
        if (keep[static_cast<size_t>(c)]) order.push_back(newid[static_cast<size_t>(c)]);
    return Axis::from_order(std::move(order));
}

inline Vote relabel_vote(const Vote& vote, const std::vector<bool>& keep) {
    std::vector<int> newid(vote.size(), -1);
    int next = 0;
    for (CandidateId c = 0; c < static_cast<int>(vote.size()); ++c)
        if (keep[static_cast<size_t>(c)]) newid[static_cast<size_t>(c)] = next++;
    Vote out;
    for (CandidateId c : vote)
        if (keep[static_cast<size_t>(c)]) out.push_back(newid[static_cast<size_t>(c)]);
    return out;
}

// Random vote that is k-peaked by construction: partition the axis into k
// random non-empty segments, build a random single-peaked order on each
// (random peak, then a random walk down the two slopes), and interleave
// the segment orders uniformly at random.
inline Vote gen_random_k_peaked(const Axis& axis, int k, std::mt19937_64& rng) {
    int m = axis.size();
    if (k < 1 || k > (m + 1) / 2)
        throw std::invalid_argument("peak count k must satisfy 1 <= k <= ceil(m/2)");
    std::vector<int> cuts;  // segment start positions, excluding 0
    {
        std::vector<int> all;
        for (int i = 1; i < m; ++i) all.push_back(i);
        std::shuffle(all.begin(), all.end(), rng);
        cuts.assign(all.begin(), all.begin() + (k - 1));
        std::sort(cuts.begin(), cuts.end());
    }
    std::vector<std::pair<int, int>> segments;
    int start = 0;
    for (int cut : cuts) {
        segments.push_back({start, cut - 1});
        start = cut;
    }
    segments.push_back({start, m - 1});

    std::vector<Vote> seg_orders;
    for (auto [lo, hi] : segments) {
        std::uniform_int_distribution<int> pick(lo, hi);
        int peak = pick(rng);
        Vote order;
        order.push_back(axis.order[static_cast<size_t>(peak)]);
        int left = peak - 1, right = peak + 1;
        while (left >= lo || right <= hi) {
            bool take_left;
            if (left < lo) take_left = false;
            else if (right > hi) take_left = true;
            else take_left = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
            if (take_left) order.push_back(axis.order[static_cast<size_t>(left--)]);
            else order.push_back(axis.order[static_cast<size_t>(right++)]);
        }
        seg_orders.push_back(std::move(order));
    }

    // Uniform interleave: shuffle the multiset of segment slots.
    std::vector<int> slots;
    for (size_t s = 0; s < seg_orders.size(); ++s)
        slots.insert(slots.end(), seg_orders[s].size(), static_cast<int>(s));
    std::shuffle(slots.begin(), slots.end(), rng);
    Vote out;
    std::vector<size_t> next(seg_orders.size(), 0);
    for (int s : slots) out.push_back(seg_orders[static_cast<size_t>(s)][next[static_cast<size_t>(s)]++]);
    return out;
}

inline Vote gen_random_k_peaked(const Axis& axis, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return gen_random_k_peaked(axis, k, rng);
}

}  // namespace kpav
