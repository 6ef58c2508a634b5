#pragma once
// Core model for r-SP-AV elections: candidates with dense integer ids,
// ranked votes stored as multisets, approval scoring and unique-winner
// determination, plus the multiset algebra used by the control solvers.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpav {

using CandidateId = int;
// A vote is a linear order over all candidates, best first.
using Vote = std::vector<CandidateId>;

// Thrown when a brute-force oracle would exceed its configured search cap.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VoteEntry {
    Vote order;
    int multiplicity = 1;
};

// Multiset of votes. Entries are kept un-normalized: equal orders may
// appear as distinct entries, which is how reductions naturally emit
// "n copies of" vote families. normalize() merges them when wanted.
struct VoteMultiset {
    std::vector<VoteEntry> entries;

    int size() const {
        int s = 0;
        for (const auto& e : entries) s += e.multiplicity;
        return s;
    }
    bool empty() const { return size() == 0; }
    void add(Vote order, int multiplicity = 1) {
        if (multiplicity <= 0) throw std::invalid_argument("vote multiplicity must be positive");
        entries.push_back(VoteEntry{std::move(order), multiplicity});
    }
};

inline VoteMultiset normalize(const VoteMultiset& vm) {
    std::map<Vote, int> counts;
    for (const auto& e : vm.entries) counts[e.order] += e.multiplicity;
    VoteMultiset out;
    for (auto& [order, mult] : counts) out.add(order, mult);
    return out;
}

inline VoteMultiset multiset_union(const VoteMultiset& a, const VoteMultiset& b) {
    VoteMultiset out = a;
    for (const auto& e : b.entries) out.entries.push_back(e);
    return out;
}

inline VoteMultiset multiset_minus(const VoteMultiset& a, const VoteMultiset& b) {
    std::map<Vote, int> remove;
    for (const auto& e : b.entries) remove[e.order] += e.multiplicity;
    VoteMultiset out;
    for (const auto& e : normalize(a).entries) {
        auto it = remove.find(e.order);
        int drop = it == remove.end() ? 0 : it->second;
        int keep = std::max(0, e.multiplicity - drop);
        if (keep > 0) out.add(e.order, keep);
    }
    return out;
}

inline bool is_submultiset(const VoteMultiset& b, const VoteMultiset& a) {
    std::map<Vote, int> have;
    for (const auto& e : a.entries) have[e.order] += e.multiplicity;
    for (const auto& e : normalize(b).entries) {
        auto it = have.find(e.order);
        if (it == have.end() || it->second < e.multiplicity) return false;
    }
    return true;
}

inline bool multiset_equal(const VoteMultiset& a, const VoteMultiset& b) {
    auto na = normalize(a), nb = normalize(b);
    if (na.entries.size() != nb.entries.size()) return false;
    for (size_t i = 0; i < na.entries.size(); ++i) {
        if (na.entries[i].order != nb.entries[i].order) return false;
        if (na.entries[i].multiplicity != nb.entries[i].multiplicity) return false;
    }
    return true;
}

// An r-SP-AV election. Candidate ids are dense 0..m-1; display names live
// at the I/O boundary only. The distinguished candidate p is part of the
// candidate set.
struct Election {
    int num_candidates = 0;
    std::vector<std::string> names;  // indexed by id; filled with c0..c{m-1} if unnamed
    CandidateId distinguished = 0;
    int r = 1;
    VoteMultiset registered;

    const std::string& name(CandidateId c) const { return names.at(static_cast<size_t>(c)); }
};

inline void check_candidate(int m, CandidateId c) {
    if (c < 0 || c >= m) throw std::invalid_argument("unknown candidate id " + std::to_string(c));
}

inline bool is_permutation_of_candidates(const Vote& v, int m) {
    if (static_cast<int>(v.size()) != m) return false;
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (CandidateId c : v) {
        if (c < 0 || c >= m || seen[static_cast<size_t>(c)]) return false;
        seen[static_cast<size_t>(c)] = 1;
    }
    return true;
}

// 1-based rank of c in the vote: |{c' : c' beats c}| + 1.
inline int position(const Vote& vote, CandidateId c) {
    for (size_t i = 0; i < vote.size(); ++i)
        if (vote[i] == c) return static_cast<int>(i) + 1;
    throw std::invalid_argument("candidate " + std::to_string(c) + " not in vote");
}

// Top min(width, m') prefix, no range policing. Internal building block;
// the clamp covers elections shrunk below r by candidate deletion.
inline std::vector<CandidateId> approved_prefix(const Vote& vote, int width) {
    int take = std::min<int>(width, static_cast<int>(vote.size()));
    if (take < 0) take = 0;
    return std::vector<CandidateId>(vote.begin(), vote.begin() + take);
}

// The set of candidates receiving one point from this vote: its top r.
inline std::vector<CandidateId> approved_set(const Vote& vote, int r) {
    int m = static_cast<int>(vote.size());
    if (r <= 0 || r >= m) throw std::invalid_argument("approval width r must satisfy 0 < r < m");
    return approved_prefix(vote, r);
}

inline bool approves(const Vote& vote, int r, CandidateId c) {
    int take = std::min<int>(r, static_cast<int>(vote.size()));
    for (int i = 0; i < take; ++i)
        if (vote[static_cast<size_t>(i)] == c) return true;
    return false;
}

inline void add_scores(std::vector<int>& acc, const VoteMultiset& votes, int r) {
    for (const auto& e : votes.entries) {
        int take = std::min<int>(r, static_cast<int>(e.order.size()));
        for (int i = 0; i < take; ++i) acc[static_cast<size_t>(e.order[static_cast<size_t>(i)])] += e.multiplicity;
    }
}

// Per-candidate totals. Every vote must rank the same m candidates.
inline std::vector<int> scores(int m, const VoteMultiset& votes, int r) {
    if (r <= 0 || r >= m) throw std::invalid_argument("approval width r must satisfy 0 < r < m");
    for (const auto& e : votes.entries)
        if (!is_permutation_of_candidates(e.order, m))
            throw std::invalid_argument("vote is not a permutation of the candidate set");
    std::vector<int> sc(static_cast<size_t>(m), 0);
    add_scores(sc, votes, r);
    return sc;
}

inline std::optional<CandidateId> unique_winner_of_scores(const std::vector<int>& sc) {
    if (sc.empty()) return std::nullopt;
    CandidateId best = 0;
    bool tied = false;
    for (CandidateId c = 1; c < static_cast<int>(sc.size()); ++c) {
        if (sc[static_cast<size_t>(c)] > sc[static_cast<size_t>(best)]) {
            best = c;
            tied = false;
        } else if (sc[static_cast<size_t>(c)] == sc[static_cast<size_t>(best)]) {
            tied = true;
        }
    }
    if (tied) return std::nullopt;
    return best;
}

// The candidate with strictly highest score, or none on a tie at the top.
inline std::optional<CandidateId> unique_winner(int m, const VoteMultiset& votes, int r) {
    return unique_winner_of_scores(scores(m, votes, r));
}

// Partial vote restricted to a candidate subset, preserving relative order.
inline Vote restrict_vote(const Vote& vote, const std::vector<bool>& keep) {
    Vote out;
    for (CandidateId c : vote) {
        if (c < 0 || c >= static_cast<int>(keep.size()))
            throw std::invalid_argument("vote mentions candidate outside the subset universe");
        if (keep[static_cast<size_t>(c)]) out.push_back(c);
    }
    return out;
}

inline Vote restrict_vote(const Vote& vote, const std::vector<CandidateId>& subset) {
    CandidateId hi = -1;
    for (CandidateId c : vote) hi = std::max(hi, c);
    for (CandidateId c : subset) {
        if (c < 0 || c > hi) throw std::invalid_argument("subset mentions unknown candidate " + std::to_string(c));
    }
    std::vector<bool> keep(static_cast<size_t>(hi + 1), false);
    for (CandidateId c : subset) keep[static_cast<size_t>(c)] = true;
    return restrict_vote(vote, keep);
}

}  // namespace kpav
