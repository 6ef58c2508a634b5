#pragma once
// Instance types for the four constructive control problems (adding or
// deleting votes, adding or deleting candidates), instance validation,
// and exact brute-force decision oracles with witnesses.

#include <chrono>
#include <cstdint>

#include "kpav/election.hpp"
#include "kpav/peaked.hpp"

namespace kpav {

// Control by adding votes: pick at most `budget` votes from `unregistered`.
struct AvInstance {
    Election election;
    VoteMultiset unregistered;
    int budget = 0;
    Axis axis;
    int k = 1;
};

// Control by deleting votes: remove at most `budget` registered votes.
struct DvInstance {
    Election election;
    int budget = 0;
    Axis axis;
    int k = 1;
};

// Control by adding candidates: the election initially runs without the
// spoiler candidates, whose ids are listed in `spoilers`; votes rank the
// full candidate set including them.
struct AcInstance {
    Election election;
    std::vector<CandidateId> spoilers;
    int budget = 0;
    Axis axis;
    int k = 1;
};

// Control by deleting candidates; the distinguished candidate stays.
struct DcInstance {
    Election election;
    int budget = 0;
    Axis axis;
    int k = 1;
};

struct DecisionStats {
    long long nodes = 0;
    double millis = 0.0;
};

struct Decision {
    bool yes = false;
    VoteMultiset vote_witness;                 // added (AV) or deleted (DV) votes
    std::vector<CandidateId> candidate_witness;  // added (AC) or deleted (DC) candidates
    DecisionStats stats;
    std::vector<std::string> notes;
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

inline void validate_common(const Election& e, const Axis& axis, int k, int budget,
                            std::vector<std::string>& out) {
    int m = e.num_candidates;
    if (m < 2) out.push_back("election needs at least two candidates");
    if (e.r <= 0 || e.r >= m) out.push_back("approval width r must satisfy 0 < r < m");
    if (e.distinguished < 0 || e.distinguished >= m) out.push_back("distinguished candidate id out of range");
    if (axis.size() != m) out.push_back("axis does not range over the candidate set");
    if (k < 1) out.push_back("declared peak bound k must be at least 1");
    if (budget < 0) out.push_back("budget must be non-negative");
    for (size_t i = 0; i < e.registered.entries.size(); ++i) {
        const auto& entry = e.registered.entries[i];
        if (!is_permutation_of_candidates(entry.order, m)) {
            out.push_back("registered entry #" + std::to_string(i) + " is not a permutation of the candidates");
            continue;
        }
        if (axis.size() == m && k >= 1 && !is_k_peaked(entry.order, axis, k))
            out.push_back("registered entry #" + std::to_string(i) + " is not " + std::to_string(k) +
                          "-peaked on the given axis");
    }
}

inline void validate_vote_section(const VoteMultiset& votes, const char* label, int m, const Axis& axis,
                                  int k, std::vector<std::string>& out) {
    for (size_t i = 0; i < votes.entries.size(); ++i) {
        const auto& entry = votes.entries[i];
        if (!is_permutation_of_candidates(entry.order, m)) {
            out.push_back(std::string(label) + " entry #" + std::to_string(i) +
                          " is not a permutation of the candidates");
            continue;
        }
        if (axis.size() == m && k >= 1 && !is_k_peaked(entry.order, axis, k))
            out.push_back(std::string(label) + " entry #" + std::to_string(i) + " is not " +
                          std::to_string(k) + "-peaked on the given axis");
    }
}

}  // namespace detail

inline std::vector<std::string> validate(const AvInstance& in) {
    std::vector<std::string> out;
    detail::validate_common(in.election, in.axis, in.k, in.budget, out);
    detail::validate_vote_section(in.unregistered, "unregistered", in.election.num_candidates, in.axis,
                                  in.k, out);
    if (in.budget > in.unregistered.size())
        out.push_back("budget exceeds the number of unregistered votes");
    return out;
}

inline std::vector<std::string> validate(const DvInstance& in) {
    std::vector<std::string> out;
    detail::validate_common(in.election, in.axis, in.k, in.budget, out);
    if (in.budget > in.election.registered.size())
        out.push_back("budget exceeds the number of registered votes");
    return out;
}

inline std::vector<std::string> validate(const AcInstance& in) {
    std::vector<std::string> out;
    detail::validate_common(in.election, in.axis, in.k, in.budget, out);
    std::vector<bool> seen(static_cast<size_t>(std::max(1, in.election.num_candidates)), false);
    for (CandidateId d : in.spoilers) {
        if (d < 0 || d >= in.election.num_candidates) {
            out.push_back("spoiler id " + std::to_string(d) + " out of range");
            continue;
        }
        if (seen[static_cast<size_t>(d)]) out.push_back("duplicate spoiler id " + std::to_string(d));
        seen[static_cast<size_t>(d)] = true;
        if (d == in.election.distinguished) out.push_back("distinguished candidate cannot be a spoiler");
    }
    if (in.budget > static_cast<int>(in.spoilers.size()))
        out.push_back("budget exceeds the number of unregistered candidates");
    return out;
}

inline std::vector<std::string> validate(const DcInstance& in) {
    std::vector<std::string> out;
    detail::validate_common(in.election, in.axis, in.k, in.budget, out);
    if (in.budget > in.election.num_candidates - 1)
        out.push_back("budget exceeds the number of deletable candidates");
    return out;
}

namespace detail {

// Count-vector enumeration over distinct vote orders. `on_leaf` sees the
// per-type counts; enumeration order is lexicographic, so the first
// accepted vector is the lexicographically smallest witness.
template <typename Leaf>
inline bool enumerate_count_vectors(const std::vector<int>& avail, int budget, std::vector<int>& counts,
                                    size_t idx, long long& nodes, const Leaf& on_leaf) {
    if (idx == avail.size()) {
        ++nodes;
        return on_leaf(counts);
    }
    int cap = std::min(avail[idx], budget);
    for (int c = 0; c <= cap; ++c) {
        counts[idx] = c;
        if (enumerate_count_vectors(avail, budget - c, counts, idx + 1, nodes, on_leaf)) return true;
    }
    counts[idx] = 0;
    return false;
}

inline void guard_vector_count(const std::vector<int>& avail, int budget, long long cap) {
    double total = 1.0;
    for (int a : avail) total *= static_cast<double>(std::min(a, budget) + 1);
    if (total > static_cast<double>(cap))
        throw capacity_error("count-vector search space too large for the brute-force oracle");
}

}  // namespace detail

// Exact oracle for control by adding votes: per distinct unregistered vote
// order, try every count vector with total at most the budget.
inline Decision brute_av(const AvInstance& in, long long search_cap = (1LL << 26)) {
    detail::Stopwatch clock;
    const Election& e = in.election;
    VoteMultiset types = normalize(in.unregistered);
    std::vector<int> avail;
    for (const auto& t : types.entries) avail.push_back(t.multiplicity);
    detail::guard_vector_count(avail, in.budget, search_cap);

    std::vector<int> base = scores(e.num_candidates, e.registered, e.r);
    Decision d;
    std::vector<int> counts(types.entries.size(), 0);
    bool found = detail::enumerate_count_vectors(
        avail, in.budget, counts, 0, d.stats.nodes, [&](const std::vector<int>& cnt) {
            std::vector<int> sc = base;
            for (size_t t = 0; t < cnt.size(); ++t)
                if (cnt[t] > 0)
                    for (CandidateId c : approved_prefix(types.entries[t].order, e.r))
                        sc[static_cast<size_t>(c)] += cnt[t];
            return unique_winner_of_scores(sc) == std::optional<CandidateId>(e.distinguished);
        });
    d.yes = found;
    if (found)
        for (size_t t = 0; t < counts.size(); ++t)
            if (counts[t] > 0) d.vote_witness.add(types.entries[t].order, counts[t]);
    d.stats.millis = clock.millis();
    return d;
}

// Exact oracle for control by deleting votes.
inline Decision brute_dv(const DvInstance& in, long long search_cap = (1LL << 26)) {
    detail::Stopwatch clock;
    const Election& e = in.election;
    VoteMultiset types = normalize(e.registered);
    std::vector<int> avail;
    for (const auto& t : types.entries) avail.push_back(t.multiplicity);
    detail::guard_vector_count(avail, in.budget, search_cap);

    std::vector<int> base = scores(e.num_candidates, e.registered, e.r);
    Decision d;
    std::vector<int> counts(types.entries.size(), 0);
    bool found = detail::enumerate_count_vectors(
        avail, in.budget, counts, 0, d.stats.nodes, [&](const std::vector<int>& cnt) {
            std::vector<int> sc = base;
            for (size_t t = 0; t < cnt.size(); ++t)
                if (cnt[t] > 0)
                    for (CandidateId c : approved_prefix(types.entries[t].order, e.r))
                        sc[static_cast<size_t>(c)] -= cnt[t];
            return unique_winner_of_scores(sc) == std::optional<CandidateId>(e.distinguished);
        });
    d.yes = found;
    if (found)
        for (size_t t = 0; t < counts.size(); ++t)
            if (counts[t] > 0) d.vote_witness.add(types.entries[t].order, counts[t]);
    d.stats.millis = clock.millis();
    return d;
}

namespace detail {

// Scores of an election restricted to the candidates marked present,
// approving the top min(r, m') of each restricted vote.
inline std::vector<int> restricted_scores(const Election& e, const std::vector<bool>& present, int* width_out) {
    int survivors = 0;
    for (bool b : present) survivors += b ? 1 : 0;
    int width = std::min(e.r, survivors);
    if (width_out) *width_out = width;
    std::vector<int> sc(static_cast<size_t>(e.num_candidates), 0);
    for (const auto& entry : e.registered.entries) {
        int taken = 0;
        for (CandidateId c : entry.order) {
            if (!present[static_cast<size_t>(c)]) continue;
            sc[static_cast<size_t>(c)] += entry.multiplicity;
            if (++taken == width) break;
        }
    }
    return sc;
}

inline bool restricted_p_wins(const Election& e, const std::vector<bool>& present) {
    std::vector<int> sc = restricted_scores(e, present, nullptr);
    CandidateId p = e.distinguished;
    for (CandidateId c = 0; c < e.num_candidates; ++c) {
        if (c == p || !present[static_cast<size_t>(c)]) continue;
        if (sc[static_cast<size_t>(c)] >= sc[static_cast<size_t>(p)]) return false;
    }
    return true;
}

template <typename Check>
inline bool enumerate_subsets(const std::vector<CandidateId>& pool, int budget, size_t idx,
                              std::vector<CandidateId>& chosen, long long& nodes, const Check& check) {
    ++nodes;
    if (check(chosen)) return true;
    if (static_cast<int>(chosen.size()) == budget) return false;
    for (size_t i = idx; i < pool.size(); ++i) {
        chosen.push_back(pool[i]);
        if (enumerate_subsets(pool, budget, i + 1, chosen, nodes, check)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

// Exact oracle for control by adding candidates: all spoiler subsets of
// size at most the budget, rescored on the restricted votes.
inline Decision brute_ac(const AcInstance& in, int exhaustive_cap = 20) {
    detail::Stopwatch clock;
    if (static_cast<int>(in.spoilers.size()) > exhaustive_cap)
        throw capacity_error("too many unregistered candidates for the exhaustive oracle");
    const Election& e = in.election;
    std::vector<bool> base_present(static_cast<size_t>(e.num_candidates), true);
    for (CandidateId d : in.spoilers) base_present[static_cast<size_t>(d)] = false;

    Decision d;
    std::vector<CandidateId> chosen;
    bool found = detail::enumerate_subsets(in.spoilers, in.budget, 0, chosen, d.stats.nodes,
                                           [&](const std::vector<CandidateId>& add) {
                                               std::vector<bool> present = base_present;
                                               for (CandidateId c : add) present[static_cast<size_t>(c)] = true;
                                               return detail::restricted_p_wins(e, present);
                                           });
    d.yes = found;
    if (found) d.candidate_witness = chosen;
    int m0 = e.num_candidates - static_cast<int>(in.spoilers.size());
    if (e.r >= m0) d.notes.push_back("initial election has at most r candidates; approvals clamp to min(r, m')");
    d.stats.millis = clock.millis();
    return d;
}

namespace detail {

// Depth-first deletion search with incremental rescoring: deleting c only
// touches the votes currently approving c, each of which slides its
// approval window to the next surviving candidate.
struct DcSearch {
    const Election& e;
    std::vector<CandidateId> pool;
    int budget;

    std::vector<int> score;
    std::vector<std::vector<CandidateId>> approved;  // per registered entry
    std::vector<int> frontier;                       // order positions consumed per entry
    std::vector<bool> present;
    int survivors;
    bool clamped = false;
    long long nodes = 0;
    std::vector<CandidateId> chosen;

    explicit DcSearch(const DcInstance& in)
        : e(in.election), budget(in.budget) {
        for (CandidateId c = 0; c < e.num_candidates; ++c)
            if (c != e.distinguished) pool.push_back(c);
        present.assign(static_cast<size_t>(e.num_candidates), true);
        survivors = e.num_candidates;
        score.assign(static_cast<size_t>(e.num_candidates), 0);
        for (const auto& entry : e.registered.entries) {
            approved.push_back(approved_prefix(entry.order, e.r));
            frontier.push_back(e.r);
            for (CandidateId c : approved.back()) score[static_cast<size_t>(c)] += entry.multiplicity;
        }
    }

    bool p_wins() const {
        if (survivors <= e.r) return survivors == 1;  // every vote approves all survivors
        CandidateId p = e.distinguished;
        for (CandidateId c = 0; c < e.num_candidates; ++c) {
            if (c == p || !present[static_cast<size_t>(c)]) continue;
            if (score[static_cast<size_t>(c)] >= score[static_cast<size_t>(p)]) return false;
        }
        return true;
    }

    struct Change {
        int entry;
        int old_frontier;
        size_t slot;
        CandidateId removed;
        CandidateId added;
    };

    void delete_incremental(CandidateId c, std::vector<Change>& trail) {
        present[static_cast<size_t>(c)] = false;
        --survivors;
        for (size_t i = 0; i < approved.size(); ++i) {
            auto& appr = approved[i];
            auto it = std::find(appr.begin(), appr.end(), c);
            if (it == appr.end()) continue;
            const auto& order = e.registered.entries[i].order;
            int f = frontier[i];
            CandidateId next = -1;
            while (f < static_cast<int>(order.size())) {
                CandidateId cand = order[static_cast<size_t>(f++)];
                if (present[static_cast<size_t>(cand)]) {
                    next = cand;
                    break;
                }
            }
            Change ch{static_cast<int>(i), frontier[i], static_cast<size_t>(it - appr.begin()), c, next};
            *it = next;  // survivors > r here, so a replacement always exists
            frontier[i] = f;
            score[static_cast<size_t>(next)] += e.registered.entries[i].multiplicity;
            trail.push_back(ch);
        }
    }

    void undo_incremental(CandidateId c, const std::vector<Change>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            approved[static_cast<size_t>(it->entry)][it->slot] = it->removed;
            frontier[static_cast<size_t>(it->entry)] = it->old_frontier;
            score[static_cast<size_t>(it->added)] -=
                e.registered.entries[static_cast<size_t>(it->entry)].multiplicity;
        }
        present[static_cast<size_t>(c)] = true;
        ++survivors;
    }

    bool dfs(size_t pool_idx, int budget_left) {
        ++nodes;
        if (survivors <= e.r) clamped = true;
        if (p_wins()) return true;
        if (budget_left == 0) return false;
        for (size_t i = pool_idx; i < pool.size(); ++i) {
            CandidateId c = pool[i];
            if (!present[static_cast<size_t>(c)]) continue;
            chosen.push_back(c);
            if (survivors - 1 >= e.r) {
                std::vector<Change> trail;
                delete_incremental(c, trail);
                if (dfs(i + 1, budget_left - 1)) return true;
                undo_incremental(c, trail);
            } else {
                present[static_cast<size_t>(c)] = false;
                --survivors;
                if (dfs(i + 1, budget_left - 1)) return true;
                present[static_cast<size_t>(c)] = true;
                ++survivors;
            }
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace detail

// Exact oracle for control by deleting candidates. The distinguished
// candidate is never deletable. When deletions leave at most r candidates,
// each vote approves all survivors (width clamps to min(r, m')).
inline Decision brute_dc(const DcInstance& in, int exhaustive_cap = 20) {
    detail::Stopwatch clock;
    const Election& e = in.election;
    if (e.num_candidates - 1 > exhaustive_cap)
        throw capacity_error("too many candidates for the exhaustive oracle");

    detail::DcSearch search(in);
    Decision d;
    d.yes = search.dfs(0, in.budget);
    d.stats.nodes = search.nodes;
    if (d.yes) d.candidate_witness = search.chosen;
    if (search.clamped)
        d.notes.push_back("some explored deletions left at most r candidates; approvals clamp to min(r, m')");
    d.stats.millis = clock.millis();
    return d;
}

// Witness re-verification: a yes-decision must re-apply cleanly.
inline bool reverify(const AvInstance& in, const Decision& d) {
    if (!d.yes) return true;
    if (d.vote_witness.size() > in.budget) return false;
    if (!is_submultiset(d.vote_witness, in.unregistered)) return false;
    auto after = multiset_union(in.election.registered, d.vote_witness);
    return unique_winner(in.election.num_candidates, after, in.election.r) ==
           std::optional<CandidateId>(in.election.distinguished);
}

inline bool reverify(const DvInstance& in, const Decision& d) {
    if (!d.yes) return true;
    if (d.vote_witness.size() > in.budget) return false;
    if (!is_submultiset(d.vote_witness, in.election.registered)) return false;
    auto after = multiset_minus(in.election.registered, d.vote_witness);
    std::vector<int> sc(static_cast<size_t>(in.election.num_candidates), 0);
    add_scores(sc, after, in.election.r);
    return unique_winner_of_scores(sc) == std::optional<CandidateId>(in.election.distinguished);
}

inline bool reverify(const AcInstance& in, const Decision& d) {
    if (!d.yes) return true;
    if (static_cast<int>(d.candidate_witness.size()) > in.budget) return false;
    std::vector<bool> present(static_cast<size_t>(in.election.num_candidates), true);
    for (CandidateId c : in.spoilers) present[static_cast<size_t>(c)] = false;
    for (CandidateId c : d.candidate_witness) {
        if (std::find(in.spoilers.begin(), in.spoilers.end(), c) == in.spoilers.end()) return false;
        present[static_cast<size_t>(c)] = true;
    }
    return detail::restricted_p_wins(in.election, present);
}

inline bool reverify(const DcInstance& in, const Decision& d) {
    if (!d.yes) return true;
    if (static_cast<int>(d.candidate_witness.size()) > in.budget) return false;
    std::vector<bool> present(static_cast<size_t>(in.election.num_candidates), true);
    for (CandidateId c : d.candidate_witness) {
        if (c == in.election.distinguished || c < 0 || c >= in.election.num_candidates) return false;
        present[static_cast<size_t>(c)] = false;
    }
    return detail::restricted_p_wins(in.election, present);
}

// Seeded random instances used by the equivalence suites and the CLI.
struct RandomElectionSpec {
    int m = 6;
    int r = 3;
    int k = 2;
    int registered = 6;
    int unregistered = 4;
    int budget = 2;
    int max_multiplicity = 2;
};

namespace detail {

inline VoteMultiset random_votes(std::mt19937_64& rng, const Axis& axis, int k, int entries,
                                 int max_multiplicity) {
    VoteMultiset vm;
    std::uniform_int_distribution<int> mult(1, std::max(1, max_multiplicity));
    for (int i = 0; i < entries; ++i) vm.add(gen_random_k_peaked(axis, k, rng), mult(rng));
    return vm;
}

}  // namespace detail

inline AvInstance random_av_instance(std::mt19937_64& rng, const RandomElectionSpec& spec) {
    AvInstance in;
    std::vector<CandidateId> order(static_cast<size_t>(spec.m));
    for (int i = 0; i < spec.m; ++i) order[static_cast<size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    in.axis = Axis::from_order(order);
    in.k = spec.k;
    in.budget = spec.budget;
    in.election.num_candidates = spec.m;
    in.election.r = spec.r;
    in.election.distinguished = std::uniform_int_distribution<int>(0, spec.m - 1)(rng);
    in.election.names.resize(static_cast<size_t>(spec.m));
    for (int i = 0; i < spec.m; ++i) in.election.names[static_cast<size_t>(i)] = "c" + std::to_string(i);
    in.election.registered = detail::random_votes(rng, in.axis, spec.k, spec.registered, spec.max_multiplicity);
    in.unregistered = detail::random_votes(rng, in.axis, spec.k, spec.unregistered, spec.max_multiplicity);
    in.budget = std::min(in.budget, in.unregistered.size());
    return in;
}

inline DvInstance random_dv_instance(std::mt19937_64& rng, const RandomElectionSpec& spec) {
    AvInstance av = random_av_instance(rng, spec);
    DvInstance in;
    in.election = av.election;
    in.axis = av.axis;
    in.k = av.k;
    in.budget = std::min(spec.budget, in.election.registered.size());
    return in;
}

}  // namespace kpav
