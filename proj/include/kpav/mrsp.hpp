#pragma once
// Multi-r-Set Packing: choose exactly `target` sets from a multiset of
// r-element sets so that each element c lies in at most f(c) chosen sets.
// A greedy maximal packing seeds a partial-set branching search; an exact
// count-vector enumeration serves as the reference oracle.

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpav/election.hpp"  // capacity_error

namespace kpav {

struct MrspInstance {
    int universe = 0;                                    // elements 0..universe-1
    std::vector<int> capacity;                           // f(c) >= 1
    std::vector<std::pair<std::vector<int>, int>> sets;  // sorted distinct contents + multiplicity
    int r = 0;
    int target = 0;
};

// An r-set with some positions still open (stars). `fixed` stays sorted.
struct PartialSet {
    std::vector<int> fixed;
    int stars = 0;
};

// Chosen sets by index into MrspInstance::sets, with counts.
struct Packing {
    std::vector<std::pair<int, int>> chosen;
    int size() const {
        int s = 0;
        for (auto& [idx, cnt] : chosen) s += cnt;
        return s;
    }
};

struct MrspResult {
    bool yes = false;
    Packing witness;
    long long nodes = 0;
    int max_branch = 0;
    int max_depth = 0;
};

inline void validate_mrsp(const MrspInstance& in) {
    if (in.universe < 0 || in.r < 1 || in.target < 0)
        throw std::invalid_argument("malformed packing instance");
    if (static_cast<int>(in.capacity.size()) != in.universe)
        throw std::invalid_argument("capacity table does not match the universe");
    for (int f : in.capacity)
        if (f < 1) throw std::invalid_argument("capacities must be positive");
    for (const auto& [content, mult] : in.sets) {
        if (static_cast<int>(content.size()) != in.r)
            throw std::invalid_argument("every set must have exactly r elements");
        if (mult < 1) throw std::invalid_argument("set multiplicities must be positive");
        for (size_t i = 0; i < content.size(); ++i) {
            if (content[i] < 0 || content[i] >= in.universe)
                throw std::invalid_argument("set element out of universe");
            if (i > 0 && content[i] <= content[i - 1])
                throw std::invalid_argument("set contents must be sorted and distinct");
        }
    }
}

inline bool is_valid_packing(const MrspInstance& in, const Packing& t) {
    std::vector<int> count(static_cast<size_t>(in.universe), 0);
    for (auto& [idx, cnt] : t.chosen) {
        if (idx < 0 || idx >= static_cast<int>(in.sets.size()) || cnt < 0) return false;
        if (cnt > in.sets[static_cast<size_t>(idx)].second) return false;
        for (int c : in.sets[static_cast<size_t>(idx)].first) count[static_cast<size_t>(c)] += cnt;
    }
    for (int c = 0; c < in.universe; ++c)
        if (count[static_cast<size_t>(c)] > in.capacity[static_cast<size_t>(c)]) return false;
    return true;
}

namespace detail {

// Set indices ordered by content, ties by index; fixes the iteration order
// of every greedy pass so runs are reproducible.
inline std::vector<int> canonical_set_order(const MrspInstance& in) {
    std::vector<int> order(in.sets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return in.sets[static_cast<size_t>(a)].first < in.sets[static_cast<size_t>(b)].first;
    });
    return order;
}

}  // namespace detail

// Arbitrary maximal packing: walk the canonical order and take every copy
// that still fits. Maximality: any remaining copy violates some capacity.
inline Packing greedy_maximal_packing(const MrspInstance& in) {
    validate_mrsp(in);
    std::vector<int> count(static_cast<size_t>(in.universe), 0);
    Packing t;
    for (int idx : detail::canonical_set_order(in)) {
        const auto& [content, mult] = in.sets[static_cast<size_t>(idx)];
        int taken = 0;
        for (int copy = 0; copy < mult; ++copy) {
            bool fits = true;
            for (int c : content)
                if (count[static_cast<size_t>(c)] + 1 > in.capacity[static_cast<size_t>(c)]) {
                    fits = false;
                    break;
                }
            if (!fits) break;
            for (int c : content) ++count[static_cast<size_t>(c)];
            ++taken;
        }
        if (taken > 0) t.chosen.push_back({idx, taken});
    }
    return t;
}

// Reference oracle: every count vector over the set multiset summing to
// exactly the target, validity checked per vector.
inline MrspResult brute_mrsp(const MrspInstance& in, int copy_cap = 20) {
    validate_mrsp(in);
    int copies = 0;
    for (const auto& [content, mult] : in.sets) copies += mult;
    if (copies > copy_cap) throw capacity_error("too many set copies for the exhaustive packing oracle");

    MrspResult res;
    std::vector<int> counts(in.sets.size(), 0);
    std::function<bool(size_t, int)> go = [&](size_t idx, int left) -> bool {
        if (idx == in.sets.size()) {
            if (left != 0) return false;
            ++res.nodes;
            Packing t;
            for (size_t i = 0; i < counts.size(); ++i)
                if (counts[i] > 0) t.chosen.push_back({static_cast<int>(i), counts[i]});
            if (is_valid_packing(in, t)) {
                res.witness = t;
                return true;
            }
            return false;
        }
        int cap = std::min(in.sets[idx].second, left);
        for (int c = 0; c <= cap; ++c) {
            counts[idx] = c;
            if (go(idx + 1, left - c)) return true;
        }
        counts[idx] = 0;
        return false;
    };
    res.yes = go(0, in.target);
    return res;
}

namespace detail {

struct MrspSearch {
    const MrspInstance& in;
    std::vector<int> order;       // canonical copy iteration order
    std::vector<PartialSet> t_r;  // the branching state
    std::vector<int> t_counts;    // fixed-element counts over t_r
    MrspResult* res;

    MrspSearch(const MrspInstance& instance, MrspResult* result)
        : in(instance), order(canonical_set_order(instance)), res(result) {}

    bool consistent(const std::vector<int>& fixed, const std::vector<int>& content) const {
        return std::includes(content.begin(), content.end(), fixed.begin(), fixed.end());
    }

    // One expansion node: greedy completion over V, then branch on one
    // partial set. Returns true once a full packing has been certified.
    bool expand(int depth) {
        ++res->nodes;
        res->max_depth = std::max(res->max_depth, depth);

        // Q mirrors t_r positionally; replaced positions hold a set index.
        std::vector<int> regular(t_r.size(), -1);
        std::vector<int> used(in.sets.size(), 0);
        std::vector<int> q_counts = t_counts;

        bool replaced_any = false;
        for (int idx : order) {
            const auto& [content, mult] = in.sets[static_cast<size_t>(idx)];
            for (int copy = 0; copy < mult; ++copy) {
                // Pick the consistent partial with the most fixed elements;
                // full partials must win these copies or yes-instances can
                // starve them of their only matching sets.
                int best = -1;
                for (size_t qi = 0; qi < t_r.size(); ++qi) {
                    if (regular[qi] != -1) continue;
                    if (!consistent(t_r[qi].fixed, content)) continue;
                    bool ok = true;
                    for (int c : content) {
                        int delta = std::binary_search(t_r[qi].fixed.begin(), t_r[qi].fixed.end(), c) ? 0 : 1;
                        if (q_counts[static_cast<size_t>(c)] + delta > in.capacity[static_cast<size_t>(c)]) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    if (best == -1 || t_r[qi].fixed.size() > t_r[static_cast<size_t>(best)].fixed.size())
                        best = static_cast<int>(qi);
                }
                if (best == -1) break;  // further copies of this content cannot help either
                for (int c : t_r[static_cast<size_t>(best)].fixed) --q_counts[static_cast<size_t>(c)];
                for (int c : content) ++q_counts[static_cast<size_t>(c)];
                regular[static_cast<size_t>(best)] = idx;
                ++used[static_cast<size_t>(idx)];
                replaced_any = true;
            }
        }

        std::vector<size_t> open;
        for (size_t qi = 0; qi < t_r.size(); ++qi)
            if (regular[qi] == -1) open.push_back(qi);

        if (open.empty()) {
            emit_witness(regular, -1);
            return true;
        }
        if (!replaced_any) return false;

        // Pick the open partial with the fewest stars; ties by the smallest
        // fixed contents, then by position.
        size_t pick = open[0];
        for (size_t qi : open) {
            if (t_r[qi].stars != t_r[pick].stars) {
                if (t_r[qi].stars < t_r[pick].stars) pick = qi;
            } else if (t_r[qi].fixed < t_r[pick].fixed) {
                pick = qi;
            }
        }

        if (open.size() == 1) {
            // Last open slot: any remaining copy that keeps the packing
            // valid finishes the job.
            for (int idx : order) {
                const auto& [content, mult] = in.sets[static_cast<size_t>(idx)];
                if (used[static_cast<size_t>(idx)] >= mult) continue;
                bool ok = true;
                for (int c : content) {
                    int delta = std::binary_search(t_r[pick].fixed.begin(), t_r[pick].fixed.end(), c) ? 0 : 1;
                    if (q_counts[static_cast<size_t>(c)] + delta > in.capacity[static_cast<size_t>(c)]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    emit_witness(regular, idx);
                    return true;
                }
            }
            return false;
        }

        if (t_r[pick].stars == 0) return false;  // full but no copy left for it

        std::vector<int> support;  // S(Q_R), ascending
        for (int c = 0; c < in.universe; ++c)
            if (q_counts[static_cast<size_t>(c)] > 0) support.push_back(c);

        int branches = 0;
        for (int c : support) {
            if (std::binary_search(t_r[pick].fixed.begin(), t_r[pick].fixed.end(), c)) continue;
            if (t_counts[static_cast<size_t>(c)] + 1 > in.capacity[static_cast<size_t>(c)]) continue;
            PartialSet grown;
            grown.fixed = t_r[pick].fixed;
            grown.fixed.insert(std::upper_bound(grown.fixed.begin(), grown.fixed.end(), c), c);
            grown.stars = t_r[pick].stars - 1;
            bool reachable = false;
            for (const auto& [content, mult] : in.sets)
                if (consistent(grown.fixed, content)) {
                    reachable = true;
                    break;
                }
            if (!reachable) continue;

            ++branches;
            res->max_branch = std::max(res->max_branch, branches);
            PartialSet saved = t_r[pick];
            t_r[pick] = grown;
            ++t_counts[static_cast<size_t>(c)];
            bool done = expand(depth + 1);
            --t_counts[static_cast<size_t>(c)];
            t_r[pick] = saved;
            if (done) return true;
        }
        return false;
    }

    void emit_witness(const std::vector<int>& regular, int extra_idx) {
        std::vector<int> per_index(in.sets.size(), 0);
        for (int idx : regular)
            if (idx != -1) ++per_index[static_cast<size_t>(idx)];
        if (extra_idx != -1) ++per_index[static_cast<size_t>(extra_idx)];
        res->witness.chosen.clear();
        for (size_t i = 0; i < per_index.size(); ++i)
            if (per_index[i] > 0) res->witness.chosen.push_back({static_cast<int>(i), per_index[i]});
    }
};

}  // namespace detail

// Branching solver. Seeds are capacity-respecting multisets over the
// support of a greedy maximal packing (every solution set must intersect
// it); each seed is expanded by alternating greedy completion with
// branching that fills one star at a time.
inline MrspResult solve_mrsp(const MrspInstance& in) {
    validate_mrsp(in);
    MrspResult res;
    if (in.target == 0) {
        res.yes = true;
        return res;
    }

    Packing t0 = greedy_maximal_packing(in);
    if (t0.size() >= in.target) {
        res.yes = true;
        int left = in.target;
        for (auto& [idx, cnt] : t0.chosen) {
            if (left == 0) break;
            int take = std::min(cnt, left);
            res.witness.chosen.push_back({idx, take});
            left -= take;
        }
        return res;
    }

    std::vector<int> support;
    {
        std::vector<bool> seen(static_cast<size_t>(in.universe), false);
        for (auto& [idx, cnt] : t0.chosen)
            for (int c : in.sets[static_cast<size_t>(idx)].first) seen[static_cast<size_t>(c)] = true;
        for (int c = 0; c < in.universe; ++c)
            if (seen[static_cast<size_t>(c)]) support.push_back(c);
    }
    long long slack = 0;
    for (int c : support) slack += in.capacity[static_cast<size_t>(c)];
    if (slack < in.target) return res;  // no valid seed exists

    detail::MrspSearch search(in, &res);
    // Non-decreasing capacity-respecting seed sequences over the support.
    std::vector<int> seed;
    std::function<bool(size_t, int)> seeds = [&](size_t idx, int left) -> bool {
        if (left == 0) {
            search.t_r.clear();
            search.t_counts.assign(static_cast<size_t>(in.universe), 0);
            for (int c : seed) {
                search.t_r.push_back(PartialSet{{c}, in.r - 1});
                ++search.t_counts[static_cast<size_t>(c)];
            }
            return search.expand(0);
        }
        if (idx == support.size()) return false;
        int c = support[idx];
        int cap = std::min(in.capacity[static_cast<size_t>(c)], left);
        for (int take = 0; take <= cap; ++take) {
            for (int i = 0; i < take; ++i) seed.push_back(c);
            if (seeds(idx + 1, left - take)) {
                return true;
            }
            for (int i = 0; i < take; ++i) seed.pop_back();
        }
        return false;
    };
    res.yes = seeds(0, in.target);
    return res;
}

// Seeded random instances for the equivalence suites and the CLI.
inline MrspInstance random_mrsp_instance(std::mt19937_64& rng, int universe, int num_sets, int r,
                                         int target, int max_capacity = 2, int max_multiplicity = 2) {
    MrspInstance in;
    in.universe = universe;
    in.r = r;
    in.target = target;
    in.capacity.resize(static_cast<size_t>(universe));
    for (int c = 0; c < universe; ++c)
        in.capacity[static_cast<size_t>(c)] = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_capacity));
    std::vector<int> pool(static_cast<size_t>(universe));
    for (int c = 0; c < universe; ++c) pool[static_cast<size_t>(c)] = c;
    for (int s = 0; s < num_sets; ++s) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> content(pool.begin(), pool.begin() + r);
        std::sort(content.begin(), content.end());
        in.sets.push_back({content, 1 + static_cast<int>(rng() % static_cast<unsigned>(max_multiplicity))});
    }
    return in;
}

}  // namespace kpav
