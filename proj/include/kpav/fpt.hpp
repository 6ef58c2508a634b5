#pragma once
// Parameterized solvers for vote control without any peak structure:
// deletion via enumeration of vote types restricted to the threatening
// candidates, addition via reduction to Multi-r-Set Packing.

#include "kpav/control.hpp"
#include "kpav/mrsp.hpp"

namespace kpav {

// Deletion side: only candidates scoring at least p matter, and only
// non-p-approving votes hitting one of them are worth deleting.
struct DvTypeSpace {
    std::vector<CandidateId> c1;  // candidates with registered score >= p's
    struct Type {
        std::vector<CandidateId> key;  // approved ∩ C1, sorted
        int available = 0;
        std::vector<std::pair<size_t, int>> sources;  // (registered entry, copies)
    };
    std::vector<Type> types;
    bool c1_too_large = false;  // |C1| > r * budget: trivially a no-instance
};

inline DvTypeSpace build_dv_type_space(const DvInstance& in) {
    const Election& e = in.election;
    std::vector<int> sc = scores(e.num_candidates, e.registered, e.r);
    CandidateId p = e.distinguished;

    DvTypeSpace space;
    for (CandidateId c = 0; c < e.num_candidates; ++c)
        if (c != p && sc[static_cast<size_t>(c)] >= sc[static_cast<size_t>(p)]) space.c1.push_back(c);
    if (static_cast<long long>(space.c1.size()) > static_cast<long long>(e.r) * in.budget) {
        space.c1_too_large = true;
        return space;
    }

    std::vector<bool> in_c1(static_cast<size_t>(e.num_candidates), false);
    for (CandidateId c : space.c1) in_c1[static_cast<size_t>(c)] = true;

    std::map<std::vector<CandidateId>, size_t> index;
    for (size_t i = 0; i < e.registered.entries.size(); ++i) {
        const auto& entry = e.registered.entries[i];
        if (approves(entry.order, e.r, p)) continue;  // deleting these never helps
        std::vector<CandidateId> key;
        for (CandidateId c : approved_prefix(entry.order, e.r))
            if (in_c1[static_cast<size_t>(c)]) key.push_back(c);
        if (key.empty()) continue;
        std::sort(key.begin(), key.end());
        auto [it, fresh] = index.try_emplace(key, space.types.size());
        if (fresh) space.types.push_back(DvTypeSpace::Type{key, 0, {}});
        auto& type = space.types[it->second];
        type.available += entry.multiplicity;
        type.sources.push_back({i, entry.multiplicity});
    }
    return space;
}

// Exact decision for control by deleting votes, exponential only in the
// budget (for constant r): count vectors over the C1-restricted types.
inline Decision solve_dv_fpt(const DvInstance& in) {
    detail::Stopwatch clock;
    const Election& e = in.election;
    std::vector<int> sc = scores(e.num_candidates, e.registered, e.r);
    CandidateId p = e.distinguished;

    Decision d;
    DvTypeSpace space = build_dv_type_space(in);
    if (space.c1.empty()) {
        d.yes = true;  // p already the unique winner
        d.stats.millis = clock.millis();
        return d;
    }
    if (space.c1_too_large) {
        d.stats.millis = clock.millis();
        return d;
    }

    // A threat that cannot be deleted below p's score dooms the instance.
    std::vector<long long> removable(static_cast<size_t>(e.num_candidates), 0);
    for (const auto& type : space.types)
        for (CandidateId c : type.key) removable[static_cast<size_t>(c)] += type.available;
    for (CandidateId c : space.c1)
        if (sc[static_cast<size_t>(c)] - removable[static_cast<size_t>(c)] >= sc[static_cast<size_t>(p)]) {
            d.stats.millis = clock.millis();
            return d;
        }

    std::vector<int> avail;
    for (const auto& type : space.types) avail.push_back(type.available);
    std::vector<int> counts(space.types.size(), 0);
    bool found = detail::enumerate_count_vectors(
        avail, in.budget, counts, 0, d.stats.nodes, [&](const std::vector<int>& cnt) {
            std::vector<int> hit(static_cast<size_t>(e.num_candidates), 0);
            for (size_t t = 0; t < cnt.size(); ++t)
                if (cnt[t] > 0)
                    for (CandidateId c : space.types[t].key) hit[static_cast<size_t>(c)] += cnt[t];
            for (CandidateId c : space.c1)
                if (sc[static_cast<size_t>(c)] - hit[static_cast<size_t>(c)] >= sc[static_cast<size_t>(p)])
                    return false;
            return true;
        });
    d.yes = found;
    if (found) {
        for (size_t t = 0; t < counts.size(); ++t) {
            int need = counts[t];
            for (auto& [entry, copies] : space.types[t].sources) {
                if (need == 0) break;
                int take = std::min(copies, need);
                d.vote_witness.add(e.registered.entries[entry].order, take);
                need -= take;
            }
        }
    }
    d.stats.millis = clock.millis();
    return d;
}

// Addition side. Preprocessing either settles the instance or leaves a
// residual in which exactly `budget` clean p-approving votes must be added.
struct AvPreprocess {
    bool decided = false;
    Decision decision;
    VoteMultiset residual;  // p-approving votes avoiding saturated candidates
    std::vector<int> base_scores;
};

inline AvPreprocess preprocess_av(const AvInstance& in) {
    const Election& e = in.election;
    AvPreprocess out;
    out.base_scores = scores(e.num_candidates, e.registered, e.r);
    CandidateId p = e.distinguished;
    const std::vector<int>& sc = out.base_scores;

    VoteMultiset approving;
    for (const auto& entry : in.unregistered.entries)
        if (approves(entry.order, e.r, p)) approving.entries.push_back(entry);

    if (in.budget > approving.size()) {
        // Adding every p-approving vote is optimal here.
        auto after = multiset_union(e.registered, approving);
        out.decided = true;
        out.decision.yes =
            unique_winner(e.num_candidates, after, e.r) == std::optional<CandidateId>(p);
        if (out.decision.yes) out.decision.vote_witness = approving;
        return out;
    }

    for (CandidateId c = 0; c < e.num_candidates; ++c) {
        if (c == p) continue;
        if (sc[static_cast<size_t>(c)] >= sc[static_cast<size_t>(p)] + in.budget) {
            out.decided = true;  // even R additions cannot lift p past c
            out.decision.yes = false;
            return out;
        }
    }

    std::vector<bool> saturated(static_cast<size_t>(e.num_candidates), false);
    for (CandidateId c = 0; c < e.num_candidates; ++c)
        if (c != p && sc[static_cast<size_t>(c)] >= sc[static_cast<size_t>(p)] + in.budget - 1)
            saturated[static_cast<size_t>(c)] = true;

    for (const auto& entry : approving.entries) {
        bool clean = true;
        for (CandidateId c : approved_prefix(entry.order, e.r))
            if (saturated[static_cast<size_t>(c)]) clean = false;
        if (clean) out.residual.entries.push_back(entry);
    }
    return out;
}

// Back-translation data for the packing reduction.
struct AvMrspBridge {
    MrspInstance mrsp;
    std::vector<CandidateId> element_to_candidate;
    std::vector<std::vector<std::pair<size_t, int>>> set_sources;  // per set: (residual entry, copies)
};

inline AvMrspBridge reduce_av_to_mrsp(const AvPreprocess& pre, const AvInstance& in) {
    const Election& e = in.election;
    CandidateId p = e.distinguished;
    const std::vector<int>& sc = pre.base_scores;

    AvMrspBridge bridge;
    std::vector<int> element_of(static_cast<size_t>(e.num_candidates), -1);
    for (CandidateId c = 0; c < e.num_candidates; ++c) {
        if (c == p) continue;
        int f = sc[static_cast<size_t>(p)] + in.budget - sc[static_cast<size_t>(c)] - 1;
        if (f < 1) continue;  // saturated candidates stay outside the universe
        element_of[static_cast<size_t>(c)] = static_cast<int>(bridge.element_to_candidate.size());
        bridge.element_to_candidate.push_back(c);
        bridge.mrsp.capacity.push_back(f);
    }
    bridge.mrsp.universe = static_cast<int>(bridge.element_to_candidate.size());
    bridge.mrsp.r = e.r - 1;
    bridge.mrsp.target = in.budget;

    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < pre.residual.entries.size(); ++i) {
        const auto& entry = pre.residual.entries[i];
        std::vector<int> content;
        for (CandidateId c : approved_prefix(entry.order, e.r)) {
            if (c == p) continue;
            if (element_of[static_cast<size_t>(c)] < 0)
                throw std::logic_error("residual vote approves an excluded candidate");
            content.push_back(element_of[static_cast<size_t>(c)]);
        }
        std::sort(content.begin(), content.end());
        auto [it, fresh] = index.try_emplace(content, bridge.mrsp.sets.size());
        if (fresh) {
            bridge.mrsp.sets.push_back({content, 0});
            bridge.set_sources.emplace_back();
        }
        bridge.mrsp.sets[it->second].second += entry.multiplicity;
        bridge.set_sources[it->second].push_back({i, entry.multiplicity});
    }
    return bridge;
}

// Exact decision for control by adding votes: preprocess, pack, and map
// the chosen sets back to unregistered votes.
inline Decision solve_av_fpt(const AvInstance& in) {
    detail::Stopwatch clock;
    AvPreprocess pre = preprocess_av(in);
    if (pre.decided) {
        pre.decision.stats.millis = clock.millis();
        return pre.decision;
    }

    Decision d;
    if (in.election.r == 1) {
        // Every residual vote approves exactly {p}; any `budget` of them do.
        if (pre.residual.size() >= in.budget) {
            d.yes = true;
            int need = in.budget;
            for (const auto& entry : pre.residual.entries) {
                if (need == 0) break;
                int take = std::min(entry.multiplicity, need);
                d.vote_witness.add(entry.order, take);
                need -= take;
            }
        }
        d.stats.millis = clock.millis();
        return d;
    }

    AvMrspBridge bridge = reduce_av_to_mrsp(pre, in);
    MrspResult packed = solve_mrsp(bridge.mrsp);
    d.stats.nodes = packed.nodes;
    d.yes = packed.yes;
    if (packed.yes) {
        for (auto& [set_idx, count] : packed.witness.chosen) {
            int need = count;
            for (auto& [entry, copies] : bridge.set_sources[static_cast<size_t>(set_idx)]) {
                if (need == 0) break;
                int take = std::min(copies, need);
                d.vote_witness.add(pre.residual.entries[entry].order, take);
                need -= take;
            }
        }
    }
    d.stats.millis = clock.millis();
    return d;
}

}  // namespace kpav
