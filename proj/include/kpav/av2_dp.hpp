#pragma once
// Polynomial-time decision procedure for control by adding votes in
// 2-peaked elections with constant approval width r. Unregistered votes
// approving p split into one-block types (guessed by count vectors) and
// two-block votes (solved by a dynamic program over score windows around
// p and around each vote's non-p block).

#include <array>
#include <map>

#include "kpav/control.hpp"

namespace kpav {
namespace av2 {

// Positional neighbours on the axis; lookups past the ends return nothing.
struct ArrowIndex {
    const Axis* axis = nullptr;

    std::optional<CandidateId> left(CandidateId c, int i) const {
        int q = axis->pos[static_cast<size_t>(c)] - i;
        if (q < 0) return std::nullopt;
        return axis->order[static_cast<size_t>(q)];
    }
    std::optional<CandidateId> right(CandidateId c, int i) const {
        int q = axis->pos[static_cast<size_t>(c)] + i;
        if (q >= axis->size()) return std::nullopt;
        return axis->order[static_cast<size_t>(q)];
    }
};

// Keeps exactly the votes whose top r contains p.
inline VoteMultiset filter_p_approving(const VoteMultiset& votes, int r, CandidateId p) {
    VoteMultiset out;
    for (const auto& entry : votes.entries)
        if (approves(entry.order, r, p)) out.entries.push_back(entry);
    return out;
}

struct TwoBlockVote {
    Vote order;
    AxisBlock p_block;
    AxisBlock other_block;
};

struct OneBlockType {
    std::vector<CandidateId> approved;  // sorted; a contiguous axis block containing p
    int available = 0;
    std::vector<std::pair<Vote, int>> sources;
};

struct SplitResult {
    std::vector<OneBlockType> one_block;
    std::vector<TwoBlockVote> two_block;  // multiplicities unrolled, sorted for the DP
};

// Splits p-approving votes by block shape. Two-block votes come out sorted
// by the axis position of their non-p block's right endpoint (stable).
inline SplitResult split_one_block(const VoteMultiset& p_approving, int r, const Axis& axis,
                                   CandidateId p) {
    SplitResult out;
    std::map<std::vector<CandidateId>, size_t> type_index;
    int p_pos = axis.pos[static_cast<size_t>(p)];
    for (const auto& entry : p_approving.entries) {
        DiscreteIntervalSet blocks = approved_blocks(entry.order, r, axis);
        if (blocks.blocks.size() == 1) {
            std::vector<CandidateId> key = approved_prefix(entry.order, r);
            std::sort(key.begin(), key.end());
            auto [it, fresh] = type_index.try_emplace(key, out.one_block.size());
            if (fresh) out.one_block.push_back(OneBlockType{key, 0, {}});
            out.one_block[it->second].available += entry.multiplicity;
            out.one_block[it->second].sources.push_back({entry.order, entry.multiplicity});
        } else if (blocks.blocks.size() == 2) {
            const AxisBlock& a = blocks.blocks[0];
            const AxisBlock& b = blocks.blocks[1];
            bool p_in_a = a.start <= p_pos && p_pos <= a.end;
            TwoBlockVote tb{entry.order, p_in_a ? a : b, p_in_a ? b : a};
            for (int copy = 0; copy < entry.multiplicity; ++copy) out.two_block.push_back(tb);
        } else {
            throw std::logic_error("vote in a validated 2-peaked instance has more than two blocks");
        }
    }
    std::stable_sort(out.two_block.begin(), out.two_block.end(),
                     [](const TwoBlockVote& x, const TwoBlockVote& y) {
                         return x.other_block.end < y.other_block.end;
                     });
    return out;
}

struct SGuess {
    std::vector<int> counts;
    int total = 0;
};

// Every count vector over the one-block types with total at most `budget`,
// in lexicographic order.
inline std::vector<SGuess> enumerate_s_guesses(const std::vector<OneBlockType>& types, int budget) {
    std::vector<SGuess> out;
    std::vector<int> counts(types.size(), 0);
    std::function<void(size_t, int)> go = [&](size_t idx, int left) {
        if (idx == types.size()) {
            out.push_back(SGuess{counts, budget - left});
            return;
        }
        int cap = std::min(types[idx].available, left);
        for (int c = 0; c <= cap; ++c) {
            counts[idx] = c;
            go(idx + 1, left - c);
        }
        counts[idx] = 0;
    };
    go(0, budget);
    return out;
}

struct DpOutcome {
    bool accepted = false;
    std::vector<int> chosen;  // indices into the sorted two-block list
    long long states = 0;
};

namespace detail {

constexpr int kSentinel = -1;

struct Windows {
    // s-window: candidates within distance r-1 of p, left side then right.
    std::vector<CandidateId> s_cands;
    std::vector<int> slot_of;  // candidate -> s-window slot, -1 if outside

    Windows(const Axis& axis, CandidateId p, int r) {
        slot_of.assign(static_cast<size_t>(axis.size()), -1);
        int p_pos = axis.pos[static_cast<size_t>(p)];
        for (int d = -(r - 1); d <= r - 1; ++d) {
            if (d == 0) continue;
            int q = p_pos + d;
            CandidateId c = (q >= 0 && q < axis.size()) ? axis.order[static_cast<size_t>(q)] : kSentinel;
            if (c != kSentinel) slot_of[static_cast<size_t>(c)] = static_cast<int>(s_cands.size());
            s_cands.push_back(c);
        }
    }
};

// t-window of one two-block vote: the r-1 axis positions ending at the
// right endpoint of its non-p block. Slots that fall off the axis, hit p,
// or land inside the s-window are canonicalized to the sentinel.
inline std::vector<CandidateId> t_window(const TwoBlockVote& v, const Axis& axis, CandidateId p, int r,
                                         const Windows& w) {
    std::vector<CandidateId> out;
    for (int q = v.other_block.end - (r - 2); q <= v.other_block.end; ++q) {
        CandidateId c = (q >= 0 && q < axis.size()) ? axis.order[static_cast<size_t>(q)] : kSentinel;
        if (c == p || (c != kSentinel && w.slot_of[static_cast<size_t>(c)] >= 0)) c = kSentinel;
        out.push_back(c);
    }
    return out;
}

struct DpState {
    int last = -1;
    int j = 0;
    int k = 0;
    std::vector<int> sw;
    std::vector<int> tw;
    int parent = -1;
};

}  // namespace detail

// Fills the table for one sub-instance: `base` already contains the chosen
// one-block votes, `p_score` is p's score after those and before any
// two-block additions. Accepts as soon as some reachable state satisfies
// max-competitor <= p_score + j - 1.
inline DpOutcome dp_fill(const std::vector<int>& base, CandidateId p, int p_score, int budget,
                         const std::vector<TwoBlockVote>& sorted, int r, const Axis& axis) {
    DpOutcome out;
    if (budget <= 0 || sorted.empty()) return out;

    detail::Windows windows(axis, p, r);
    int n = static_cast<int>(sorted.size());
    std::vector<std::vector<CandidateId>> twin(static_cast<size_t>(n));
    std::vector<std::vector<char>> contrib(static_cast<size_t>(n),
                                           std::vector<char>(static_cast<size_t>(axis.size()), 0));
    for (int i = 0; i < n; ++i) {
        twin[static_cast<size_t>(i)] = detail::t_window(sorted[static_cast<size_t>(i)], axis, p, r, windows);
        for (CandidateId c : approved_prefix(sorted[static_cast<size_t>(i)].order, r)) {
            contrib[static_cast<size_t>(i)][static_cast<size_t>(c)] = 1;
            // Window sufficiency: every non-p candidate a two-block vote
            // touches must be tracked by one of the two windows.
            if (c != p && windows.slot_of[static_cast<size_t>(c)] < 0) {
                bool in_t = false;
                for (CandidateId tc : twin[static_cast<size_t>(i)]) in_t = in_t || tc == c;
                if (!in_t) throw std::logic_error("two-block vote touches a candidate outside both windows");
            }
        }
    }

    std::vector<detail::DpState> states;
    std::map<std::vector<int>, bool> seen;
    auto key_of = [](const detail::DpState& s) {
        std::vector<int> key{s.last, s.j, s.k};
        key.insert(key.end(), s.sw.begin(), s.sw.end());
        key.insert(key.end(), s.tw.begin(), s.tw.end());
        return key;
    };
    auto accepted = [&](const detail::DpState& s) { return s.k <= p_score + s.j - 1; };
    auto emit = [&](detail::DpState&& s) -> int {
        auto key = key_of(s);
        if (seen.count(key)) return -1;
        seen[key] = true;
        states.push_back(std::move(s));
        return static_cast<int>(states.size()) - 1;
    };

    // j = 1 seeds: one state per vote, scores read off the base directly.
    for (int i = 0; i < n; ++i) {
        detail::DpState s;
        s.last = i;
        s.j = 1;
        s.parent = -1;
        const auto& add = contrib[static_cast<size_t>(i)];
        s.k = 0;
        for (CandidateId c = 0; c < axis.size(); ++c)
            if (c != p)
                s.k = std::max(s.k, base[static_cast<size_t>(c)] + (add[static_cast<size_t>(c)] ? 1 : 0));
        for (CandidateId c : windows.s_cands)
            s.sw.push_back(c == detail::kSentinel
                               ? detail::kSentinel
                               : base[static_cast<size_t>(c)] + (add[static_cast<size_t>(c)] ? 1 : 0));
        for (CandidateId c : twin[static_cast<size_t>(i)])
            s.tw.push_back(c == detail::kSentinel
                               ? detail::kSentinel
                               : base[static_cast<size_t>(c)] + (add[static_cast<size_t>(c)] ? 1 : 0));
        emit(std::move(s));
    }

    for (size_t cur = 0; cur < states.size(); ++cur) {
        {
            const detail::DpState& s = states[cur];
            if (accepted(s)) {
                out.accepted = true;
                for (int at = static_cast<int>(cur); at != -1; at = states[static_cast<size_t>(at)].parent)
                    out.chosen.push_back(states[static_cast<size_t>(at)].last);
                std::reverse(out.chosen.begin(), out.chosen.end());
                out.states = static_cast<long long>(states.size());
                return out;
            }
            if (s.j >= budget) continue;
        }
        for (int i = states[cur].last + 1; i < n; ++i) {
            const detail::DpState& s = states[cur];  // re-read; emit may reallocate
            const auto& add = contrib[static_cast<size_t>(i)];
            detail::DpState nxt;
            nxt.last = i;
            nxt.j = s.j + 1;
            nxt.parent = static_cast<int>(cur);
            int k = s.k;
            nxt.sw.reserve(s.sw.size());
            for (size_t slot = 0; slot < windows.s_cands.size(); ++slot) {
                CandidateId c = windows.s_cands[slot];
                if (c == detail::kSentinel) {
                    nxt.sw.push_back(detail::kSentinel);
                    continue;
                }
                int v = s.sw[slot] + (add[static_cast<size_t>(c)] ? 1 : 0);
                nxt.sw.push_back(v);
                k = std::max(k, v);
            }
            const auto& prev_twin = twin[static_cast<size_t>(s.last)];
            for (CandidateId c : twin[static_cast<size_t>(i)]) {
                if (c == detail::kSentinel) {
                    nxt.tw.push_back(detail::kSentinel);
                    continue;
                }
                int prev_score = base[static_cast<size_t>(c)];
                for (size_t slot = 0; slot < prev_twin.size(); ++slot)
                    if (prev_twin[slot] == c) {
                        prev_score = s.tw[slot];
                        break;
                    }
                int v = prev_score + (add[static_cast<size_t>(c)] ? 1 : 0);
                nxt.tw.push_back(v);
                k = std::max(k, v);
            }
            nxt.k = k;
            emit(std::move(nxt));
        }
    }
    out.states = static_cast<long long>(states.size());
    return out;
}

}  // namespace av2

// Decision procedure for adding votes in 2-peaked elections. Exact for any
// instance that validates at k <= 2; r is capped because the score windows
// grow with it.
inline Decision solve_av2(const AvInstance& in, int max_r = 6) {
    detail::Stopwatch clock;
    if (in.k > 2) throw std::invalid_argument("the dp solver handles declared peak bounds of at most 2");
    if (in.election.r > max_r)
        throw std::invalid_argument("approval width exceeds the dp solver cap of " + std::to_string(max_r));
    {
        auto violations = validate(in);
        if (!violations.empty())
            throw std::invalid_argument("instance fails validation: " + violations.front());
    }

    const Election& e = in.election;
    CandidateId p = e.distinguished;
    std::vector<int> base = scores(e.num_candidates, e.registered, e.r);

    VoteMultiset usable = av2::filter_p_approving(in.unregistered, e.r, p);
    av2::SplitResult split = av2::split_one_block(usable, e.r, in.axis, p);

    Decision d;
    for (const av2::SGuess& guess : av2::enumerate_s_guesses(split.one_block, in.budget)) {
        std::vector<int> adjusted = base;
        for (size_t t = 0; t < guess.counts.size(); ++t)
            if (guess.counts[t] > 0)
                for (CandidateId c : split.one_block[t].approved)
                    adjusted[static_cast<size_t>(c)] += guess.counts[t];
        int p_score = adjusted[static_cast<size_t>(p)];
        ++d.stats.nodes;

        auto one_block_witness = [&]() {
            for (size_t t = 0; t < guess.counts.size(); ++t) {
                int need = guess.counts[t];
                for (auto& [order, copies] : split.one_block[t].sources) {
                    if (need == 0) break;
                    int take = std::min(copies, need);
                    d.vote_witness.add(order, take);
                    need -= take;
                }
            }
        };

        int top_rival = 0;
        for (CandidateId c = 0; c < e.num_candidates; ++c)
            if (c != p) top_rival = std::max(top_rival, adjusted[static_cast<size_t>(c)]);
        if (top_rival < p_score) {
            d.yes = true;
            one_block_witness();
            d.stats.millis = clock.millis();
            return d;
        }

        int budget_left = in.budget - guess.total;
        if (budget_left <= 0) continue;
        av2::DpOutcome dp = av2::dp_fill(adjusted, p, p_score, budget_left, split.two_block, e.r, in.axis);
        d.stats.nodes += dp.states;
        if (dp.accepted) {
            d.yes = true;
            one_block_witness();
            for (int idx : dp.chosen) d.vote_witness.add(split.two_block[static_cast<size_t>(idx)].order, 1);
            d.stats.millis = clock.millis();
            return d;
        }
    }
    d.stats.millis = clock.millis();
    return d;
}

}  // namespace kpav
