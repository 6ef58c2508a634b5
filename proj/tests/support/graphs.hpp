#pragma once
// Graph enumeration helpers shared by the verifier sweeps: exhaustive
// generation of small (connected, optionally degree-bounded) graphs and a
// brute-force canonical code for isomorphism deduplication.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "kpav/interval_rep.hpp"

namespace kpav::testing {

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto adj = g.adjacency();
    std::vector<bool> seen(static_cast<size_t>(g.n), false);
    std::vector<int> queue{0};
    seen[0] = true;
    int reached = 1;
    for (size_t i = 0; i < queue.size(); ++i)
        for (int w : adj[static_cast<size_t>(queue[i])])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                queue.push_back(w);
                ++reached;
            }
    return reached == g.n;
}

// All labeled graphs on n vertices with every degree <= max_deg
// (max_deg <= 0 disables the cap), filtered to connected ones.
inline void for_each_connected_graph(int n, int max_deg, const std::function<void(const Graph&)>& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<std::pair<int, int>> chosen;
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::function<void(size_t)> go = [&](size_t idx) {
        if (idx == slots.size()) {
            Graph g = Graph::make(n, chosen);
            if (is_connected(g)) fn(g);
            return;
        }
        go(idx + 1);
        auto [u, v] = slots[idx];
        if (max_deg <= 0 || (deg[static_cast<size_t>(u)] < max_deg && deg[static_cast<size_t>(v)] < max_deg)) {
            chosen.push_back(slots[idx]);
            ++deg[static_cast<size_t>(u)];
            ++deg[static_cast<size_t>(v)];
            go(idx + 1);
            chosen.pop_back();
            --deg[static_cast<size_t>(u)];
            --deg[static_cast<size_t>(v)];
        }
    };
    go(0);
}

// Minimum adjacency bitmask over all vertex relabelings; usable up to n=8.
inline std::uint64_t canonical_code(const Graph& g) {
    std::vector<int> perm(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) perm[static_cast<size_t>(i)] = i;
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v, ++bit)
                if (g.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
                    code |= (1ULL << bit);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Connected isomorphism representatives, optionally degree-bounded.
inline std::vector<Graph> connected_representatives(int n, int max_deg) {
    std::vector<Graph> out;
    std::set<std::uint64_t> seen;
    for_each_connected_graph(n, max_deg, [&](const Graph& g) {
        if (seen.insert(canonical_code(g)).second) out.push_back(g);
    });
    return out;
}

}  // namespace kpav::testing
