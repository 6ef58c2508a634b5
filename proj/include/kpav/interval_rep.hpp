#pragma once
// Constructive 2-interval representation of graphs with maximum degree 3:
// a recursive build giving each vertex at most two intervals with private
// nontrivial interiors, padding into the canonical trivial-plus-nontrivial
// form, and a full verifier for both stages.

#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpav {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // unordered, u < v

    static Graph make(int n, std::vector<std::pair<int, int>> edges) {
        Graph g;
        g.n = n;
        std::set<std::pair<int, int>> seen;
        for (auto [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n || u == v) throw std::invalid_argument("bad edge");
            if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
            g.edges.push_back({u, v});
        }
        std::sort(g.edges.begin(), g.edges.end());
        return g;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<size_t>(n));
        for (auto [u, v] : edges) {
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    int degree(int v) const {
        int d = 0;
        for (auto [a, b] : edges) d += (a == v || b == v) ? 1 : 0;
        return d;
    }

    int max_degree() const {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (auto [u, v] : edges) {
            ++deg[static_cast<size_t>(u)];
            ++deg[static_cast<size_t>(v)];
        }
        int d = 0;
        for (int x : deg) d = std::max(d, x);
        return d;
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }
};

struct Interval {
    long long left = 0;
    long long right = 0;
    bool trivial() const { return left == right; }
    bool intersects(const Interval& o) const {
        return std::max(left, o.left) <= std::min(right, o.right);
    }
};

struct TwoIntervalRep {
    std::vector<std::vector<Interval>> intervals;  // per vertex, at most two
};

namespace ivdetail {

// Working subgraph with global vertex ids; edges get removed explicitly
// when a cycle through the root is cut open.
struct SubGraph {
    std::map<int, std::vector<int>> adj;

    static SubGraph from_graph(const Graph& g) {
        SubGraph s;
        for (int v = 0; v < g.n; ++v) s.adj[v] = {};
        for (auto [u, v] : g.edges) {
            s.adj[u].push_back(v);
            s.adj[v].push_back(u);
        }
        for (auto& [v, list] : s.adj) std::sort(list.begin(), list.end());
        return s;
    }

    int degree(int v) const { return static_cast<int>(adj.at(v).size()); }

    void remove_vertex(int v) {
        for (int w : adj.at(v)) {
            auto& list = adj.at(w);
            list.erase(std::remove(list.begin(), list.end(), v), list.end());
        }
        adj.erase(v);
    }

    void remove_edge(int u, int v) {
        auto& lu = adj.at(u);
        lu.erase(std::remove(lu.begin(), lu.end(), v), lu.end());
        auto& lv = adj.at(v);
        lv.erase(std::remove(lv.begin(), lv.end(), u), lv.end());
    }

    std::vector<int> component_of(int start) const {
        std::vector<int> out{start};
        std::set<int> seen{start};
        for (size_t i = 0; i < out.size(); ++i)
            for (int w : adj.at(out[i]))
                if (seen.insert(w).second) out.push_back(w);
        std::sort(out.begin(), out.end());
        return out;
    }

    SubGraph induced(const std::vector<int>& vertices) const {
        std::set<int> keep(vertices.begin(), vertices.end());
        SubGraph s;
        for (int v : vertices) {
            auto& list = s.adj[v];
            for (int w : adj.at(v))
                if (keep.count(w)) list.push_back(w);
        }
        return s;
    }

    // Shortest path from `from` to the first member of `targets` reached;
    // empty when none is reachable. Interior vertices never hit a target.
    std::vector<int> bfs_first_hit(int from, const std::set<int>& targets) const {
        std::map<int, int> parent;
        parent[from] = from;
        std::vector<int> queue{from};
        for (size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            if (targets.count(v)) {
                std::vector<int> path;
                for (int at = v;; at = parent[at]) {
                    path.push_back(at);
                    if (parent[at] == at) break;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (int w : adj.at(v))
                if (!parent.count(w)) {
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        return {};
    }
};

// A representation fragment over its own coordinate window [lo, hi].
struct LocalRep {
    std::map<int, std::vector<Interval>> iv;
    long long lo = 0;
    long long hi = -1;

    void shift(long long delta) {
        for (auto& [v, list] : iv)
            for (auto& i : list) {
                i.left += delta;
                i.right += delta;
            }
        lo += delta;
        hi += delta;
    }

    void mirror() {
        long long pivot = lo + hi;
        for (auto& [v, list] : iv)
            for (auto& i : list) {
                long long l = pivot - i.right, r = pivot - i.left;
                i.left = l;
                i.right = r;
            }
    }

    void absorb(LocalRep&& other) {
        for (auto& [v, list] : other.iv) iv[v] = std::move(list);
        lo = std::min(lo, other.lo);
        hi = std::max(hi, other.hi);
    }

    bool root_touches(int v, long long coord) const {
        for (const auto& i : iv.at(v))
            if (i.left <= coord && coord <= i.right) return true;
        return false;
    }
};

enum class Side { Left, Right };

// Exposes a fresh coordinate through which the parent gadget can attach to
// `root`, upgrading the root's interval shape for its incoming edge. The
// connection always ends up at the requested window extreme.
inline long long expose_connection(LocalRep& rep, int root, Side side) {
    if (side == Side::Left) {
        // Work on the mirrored window, then mirror back.
        rep.mirror();
        long long conn = expose_connection(rep, root, Side::Right);
        rep.mirror();
        return rep.lo + rep.hi - conn;  // mirrored image of conn
    }

    auto& mine = rep.iv.at(root);
    if (mine.size() == 1 && mine[0].trivial() && rep.iv.size() == 1) {
        return mine[0].left;  // isolated root keeps its point
    }
    if (!rep.root_touches(root, rep.hi)) {
        rep.mirror();
        if (!rep.root_touches(root, rep.hi))
            throw std::logic_error("component root lost its extreme interval");
    }

    if (mine.size() == 1 && mine[0].trivial()) {
        // Degree-1 root: widen the point into the fresh space on the right.
        mine[0] = Interval{mine[0].left, rep.hi + 1};
        rep.hi += 1;
        return rep.hi;
    }
    if (mine.size() == 1) {
        // Degree-2 root with one nontrivial interval: gains its trivial.
        mine.push_back(Interval{rep.hi + 1, rep.hi + 1});
        rep.hi += 1;
        return rep.hi;
    }
    if (mine.size() == 2 && mine[0].trivial() && mine[1].trivial()) {
        // Degree-2 root with two points: widen the extreme one.
        size_t at = mine[0].right == rep.hi ? 0 : 1;
        if (mine[at].right != rep.hi) {
            at = mine[0].right > mine[1].right ? 0 : 1;
            if (mine[at].right != rep.hi) throw std::logic_error("no extreme trivial to widen");
        }
        mine[at] = Interval{mine[at].left, rep.hi + 1};
        rep.hi += 1;
        return rep.hi;
    }
    throw std::logic_error("component root has an unexpected interval shape");
}

inline LocalRep build_component(const SubGraph& h, int root);

// Root on a cycle: lay the cycle out as a chain of shared coordinates,
// close it through the root's two endpoints, then hang the remaining
// structure off to the right.
inline LocalRep build_cycle_case(const SubGraph& h, int root, const std::vector<int>& path, int third) {
    LocalRep rep;
    int s = static_cast<int>(path.size());
    rep.lo = 0;
    rep.hi = s;  // coordinates z_0..z_s

    for (int j = 0; j < s; ++j) {
        int w = path[static_cast<size_t>(j)];
        long long za = j, zb = j + 1;
        if (h.degree(w) == 3)
            rep.iv[w] = {Interval{za, zb}};  // merged: keeps a slot for the third edge
        else
            rep.iv[w] = {Interval{za, za}, Interval{zb, zb}};
    }
    // The root closes the cycle through z_0 and z_s.
    if (third < 0)
        rep.iv[root] = {Interval{0, 0}, Interval{s, s}};
    else
        rep.iv[root] = {Interval{0, 0}};  // nontrivial part added once K* is placed

    SubGraph rest = h;
    rest.remove_vertex(root);
    for (int j = 0; j + 1 < s; ++j) rest.remove_edge(path[static_cast<size_t>(j)], path[static_cast<size_t>(j + 1)]);

    std::set<int> done;
    if (third >= 0) {
        std::vector<int> comp = rest.component_of(third);
        done.insert(comp.begin(), comp.end());
        LocalRep sub = build_component(rest.induced(comp), third);
        long long conn = expose_connection(sub, third, Side::Left);
        sub.shift(rep.hi + 1 - conn);
        rep.iv[root].push_back(Interval{static_cast<long long>(s), sub.lo});  // [z_s, conn]
        rep.absorb(std::move(sub));
    }
    for (auto& [v, list] : rest.adj) {
        if (done.count(v)) continue;
        std::vector<int> comp = rest.component_of(v);
        done.insert(comp.begin(), comp.end());
        if (comp.size() == 1 && std::find(path.begin(), path.end(), v) != path.end())
            continue;  // cycle vertex fully represented by the chain
        int comp_root = comp[0];
        int best_deg = -1;
        for (int u : comp) {
            SubGraph tmp = rest.induced(comp);
            int d = tmp.degree(u);
            if (d > best_deg) {
                best_deg = d;
                comp_root = u;
            }
        }
        LocalRep sub = build_component(rest.induced(comp), comp_root);
        sub.shift(rep.hi + 2 - sub.lo);
        rep.absorb(std::move(sub));
    }
    return rep;
}

inline LocalRep build_component(const SubGraph& h, int root) {
    if (h.adj.size() == 1) {
        LocalRep rep;
        rep.iv[root] = {Interval{0, 0}};
        rep.lo = rep.hi = 0;
        return rep;
    }
    int deg = h.degree(root);

    if (deg == 1) {
        int a = h.adj.at(root)[0];
        SubGraph rest = h;
        rest.remove_vertex(root);
        LocalRep sub = build_component(rest.induced(rest.component_of(a)), a);
        long long conn = expose_connection(sub, a, Side::Right);
        sub.iv[root] = {Interval{conn, conn}};
        return sub;
    }

    if (deg == 2) {
        int a = h.adj.at(root)[0], b = h.adj.at(root)[1];
        SubGraph rest = h;
        rest.remove_vertex(root);
        std::vector<int> path = rest.bfs_first_hit(a, {b});
        if (!path.empty()) return build_cycle_case(h, root, path, -1);

        LocalRep left = build_component(rest.induced(rest.component_of(a)), a);
        long long conn_a = expose_connection(left, a, Side::Right);
        LocalRep right = build_component(rest.induced(rest.component_of(b)), b);
        long long conn_b = expose_connection(right, b, Side::Right);
        right.shift(left.hi + 2 - right.lo);
        conn_b = right.hi;  // exposure leaves the connection at the extreme
        left.iv[root] = {Interval{conn_a, conn_a}, Interval{conn_b, conn_b}};
        left.absorb(std::move(right));
        return left;
    }

    if (deg == 3) {
        int a = h.adj.at(root)[0], b = h.adj.at(root)[1], c = h.adj.at(root)[2];
        SubGraph rest = h;
        rest.remove_vertex(root);

        std::vector<int> path = rest.bfs_first_hit(a, {b, c});
        if (!path.empty()) {
            int hit = path.back();
            return build_cycle_case(h, root, path, hit == b ? c : b);
        }
        path = rest.bfs_first_hit(b, {c});
        if (!path.empty()) return build_cycle_case(h, root, path, a);

        // Three separate branches: bridge a-b with the span placed across
        // the window boundary, reach c with the point at the far right.
        LocalRep rep_a = build_component(rest.induced(rest.component_of(a)), a);
        long long conn_a = expose_connection(rep_a, a, Side::Right);
        LocalRep rep_b = build_component(rest.induced(rest.component_of(b)), b);
        long long conn_b = expose_connection(rep_b, b, Side::Left);
        rep_b.shift(conn_a + 1 - conn_b);
        LocalRep rep_c = build_component(rest.induced(rest.component_of(c)), c);
        expose_connection(rep_c, c, Side::Right);
        rep_c.shift(rep_b.hi + 2 - rep_c.lo);

        rep_a.iv[root] = {Interval{conn_a, conn_a + 1}, Interval{rep_c.hi, rep_c.hi}};
        rep_a.absorb(std::move(rep_b));
        rep_a.absorb(std::move(rep_c));
        return rep_a;
    }

    throw std::logic_error("unexpected root degree");
}

}  // namespace ivdetail

// Per-component recursive construction; fails on degree > 3.
inline TwoIntervalRep build_2interval_rep(const Graph& g) {
    if (g.max_degree() > 3) throw std::invalid_argument("graph has a vertex of degree greater than 3");
    TwoIntervalRep rep;
    rep.intervals.resize(static_cast<size_t>(g.n));
    if (g.n == 0) return rep;

    ivdetail::SubGraph whole = ivdetail::SubGraph::from_graph(g);
    std::set<int> done;
    long long offset = 0;
    for (int v = 0; v < g.n; ++v) {
        if (done.count(v)) continue;
        std::vector<int> comp = whole.component_of(v);
        done.insert(comp.begin(), comp.end());
        ivdetail::SubGraph sub = whole.induced(comp);
        int root = comp[0];
        int best = -1;
        for (int u : comp)
            if (sub.degree(u) > best) {
                best = sub.degree(u);
                root = u;
            }
        ivdetail::LocalRep local = ivdetail::build_component(sub, root);
        local.shift(offset - local.lo);
        offset = local.hi + 2;
        for (auto& [u, list] : local.iv) rep.intervals[static_cast<size_t>(u)] = list;
    }
    return rep;
}

// Verifier for the construction-stage conditions, before padding.
inline std::vector<std::string> verify_claim_rep(const Graph& g, const TwoIntervalRep& rep) {
    std::vector<std::string> out;
    if (static_cast<int>(rep.intervals.size()) != g.n) {
        out.push_back("representation size does not match the vertex count");
        return out;
    }
    for (int v = 0; v < g.n; ++v) {
        const auto& list = rep.intervals[static_cast<size_t>(v)];
        int deg = g.degree(v);
        for (const auto& i : list)
            if (i.left > i.right) out.push_back("vertex " + std::to_string(v) + " has a malformed interval");
        if (deg <= 1) {
            if (list.size() != 1 || !list[0].trivial())
                out.push_back("degree-<=1 vertex " + std::to_string(v) + " is not a single point");
        } else if (deg == 2) {
            bool two_points = list.size() == 2 && list[0].trivial() && list[1].trivial() &&
                              list[0].left != list[1].left;
            bool one_span = list.size() == 1 && !list[0].trivial();
            if (!two_points && !one_span) {
                out.push_back("degree-2 vertex " + std::to_string(v) + " has the wrong interval shape");
            } else if (one_span) {
                for (int u = 0; u < g.n; ++u) {
                    if (u == v) continue;
                    for (const auto& i : rep.intervals[static_cast<size_t>(u)])
                        if (i.left < list[0].right && i.right > list[0].left)
                            out.push_back("vertex " + std::to_string(u) +
                                          " intrudes into the open span of degree-2 vertex " +
                                          std::to_string(v));
                }
            }
        } else if (deg == 3) {
            bool shape = list.size() == 2 && (list[0].trivial() != list[1].trivial());
            if (!shape) {
                out.push_back("degree-3 vertex " + std::to_string(v) +
                              " is not one point plus one span");
            } else {
                const Interval& span = list[0].trivial() ? list[1] : list[0];
                const Interval& point = list[0].trivial() ? list[0] : list[1];
                std::set<long long> coords{span.left, span.right, point.left};
                if (coords.size() != 3)
                    out.push_back("degree-3 vertex " + std::to_string(v) +
                                  " does not use three distinct coordinates");
                for (int u = 0; u < g.n; ++u) {
                    if (u == v) continue;
                    for (const auto& i : rep.intervals[static_cast<size_t>(u)])
                        for (long long endp : {i.left, i.right})
                            if (span.left < endp && endp < span.right)
                                out.push_back("endpoint of vertex " + std::to_string(u) +
                                              " lies inside the span of vertex " + std::to_string(v));
                }
            }
        }
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            bool touch = false;
            for (const auto& a : rep.intervals[static_cast<size_t>(u)])
                for (const auto& b : rep.intervals[static_cast<size_t>(v)]) touch = touch || a.intersects(b);
            if (touch != g.has_edge(u, v))
                out.push_back("pair (" + std::to_string(u) + "," + std::to_string(v) +
                              (touch ? ") intersects without an edge" : ") misses its edge"));
        }
    return out;
}

namespace ivdetail {

inline bool is_canonical_vertex(const std::vector<Interval>& list) {
    if (list.size() != 2) return false;
    if (list[0].trivial() == list[1].trivial()) return false;
    const Interval& span = list[0].trivial() ? list[1] : list[0];
    const Interval& point = list[0].trivial() ? list[0] : list[1];
    return span.left != point.left && span.right != point.left;
}

}  // namespace ivdetail

// Pads a construction-stage representation so every vertex carries exactly
// one point and one span with three distinct endpoints, without changing
// the intersection graph. Idempotent: canonical input is returned as is.
inline TwoIntervalRep pad_to_lemma_form(const TwoIntervalRep& rep, const Graph& g) {
    bool all_canonical = true;
    for (const auto& list : rep.intervals) all_canonical = all_canonical && ivdetail::is_canonical_vertex(list);
    if (all_canonical) return rep;

    TwoIntervalRep out = rep;
    long long hi = 0;
    for (auto& list : out.intervals)
        for (auto& i : list) {
            i.left *= 4;  // every original gap now has private slots on both sides
            i.right *= 4;
            hi = std::max(hi, i.right);
        }
    long long fresh = hi + 2;

    auto endpoint_free = [&](long long e, int self) {
        for (int u = 0; u < g.n; ++u)
            for (const auto& i : out.intervals[static_cast<size_t>(u)]) {
                if (i.left < e && e < i.right) return false;  // inside someone's open span
                if ((i.left == e || i.right == e) && u != self && !g.has_edge(u, self))
                    return false;  // would manufacture an adjacency
            }
        return true;
    };

    for (int v = 0; v < g.n; ++v) {
        auto& list = out.intervals[static_cast<size_t>(v)];
        if (ivdetail::is_canonical_vertex(list)) continue;
        if (list.size() == 1 && list[0].trivial()) {
            list.push_back(Interval{fresh, fresh + 1});  // far-away span, touches nothing
            fresh += 3;
        } else if (list.size() == 1) {
            list.push_back(Interval{fresh, fresh});
            fresh += 3;
        } else if (list.size() == 2 && list[0].trivial() && list[1].trivial()) {
            size_t big = list[0].left >= list[1].left ? 0 : 1;
            size_t small = 1 - big;
            bool placed = false;
            const std::array<std::pair<size_t, long long>, 4> options{
                std::pair<size_t, long long>{big, +1}, {big, -1}, {small, +1}, {small, -1}};
            for (auto [slot, dir] : options) {
                long long e = list[slot].left + dir;
                if (!endpoint_free(e, v)) continue;
                list[slot] = dir > 0 ? Interval{list[slot].left, e} : Interval{e, list[slot].left};
                placed = true;
                break;
            }
            if (!placed) throw std::logic_error("no free slot to widen a two-point vertex");
        } else {
            throw std::logic_error("vertex shape not recognised by the padding step");
        }
    }
    return out;
}

// Sorted distinct endpoint coordinates plus each vertex's three endpoints
// as indices into that universe. Requires a padded representation.
struct EndpointUniverse {
    std::vector<long long> gamma;
    std::vector<std::array<int, 3>> d;  // per vertex, ascending
};

inline EndpointUniverse endpoint_universe(const TwoIntervalRep& rep) {
    EndpointUniverse out;
    std::set<long long> coords;
    for (const auto& list : rep.intervals) {
        if (!ivdetail::is_canonical_vertex(list))
            throw std::invalid_argument("endpoint universe needs the padded canonical form");
        for (const auto& i : list) {
            coords.insert(i.left);
            coords.insert(i.right);
        }
    }
    out.gamma.assign(coords.begin(), coords.end());
    auto index_of = [&](long long x) {
        return static_cast<int>(std::lower_bound(out.gamma.begin(), out.gamma.end(), x) - out.gamma.begin());
    };
    for (const auto& list : rep.intervals) {
        std::vector<long long> e;
        for (const auto& i : list) {
            e.push_back(i.left);
            if (!i.trivial()) e.push_back(i.right);
        }
        std::sort(e.begin(), e.end());
        out.d.push_back({index_of(e[0]), index_of(e[1]), index_of(e[2])});
    }
    return out;
}

// Verifier for the padded canonical form.
inline std::vector<std::string> verify_rep(const Graph& g, const TwoIntervalRep& rep) {
    std::vector<std::string> out;
    if (static_cast<int>(rep.intervals.size()) != g.n) {
        out.push_back("representation size does not match the vertex count");
        return out;
    }
    for (int v = 0; v < g.n; ++v) {
        const auto& list = rep.intervals[static_cast<size_t>(v)];
        if (!ivdetail::is_canonical_vertex(list)) {
            out.push_back("vertex " + std::to_string(v) + " is not in point-plus-span form");
            continue;
        }
        const Interval& span = list[0].trivial() ? list[1] : list[0];
        for (int u = 0; u < g.n; ++u) {
            if (u == v) continue;
            for (const auto& i : rep.intervals[static_cast<size_t>(u)])
                for (long long endp : {i.left, i.right})
                    if (span.left < endp && endp < span.right)
                        out.push_back("endpoint of vertex " + std::to_string(u) +
                                      " lies inside the span of vertex " + std::to_string(v));
        }
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            bool touch = false;
            for (const auto& a : rep.intervals[static_cast<size_t>(u)])
                for (const auto& b : rep.intervals[static_cast<size_t>(v)]) touch = touch || a.intersects(b);
            if (touch != g.has_edge(u, v))
                out.push_back("pair (" + std::to_string(u) + "," + std::to_string(v) +
                              (touch ? ") intersects without an edge" : ") misses its edge"));
        }
    if (out.empty()) {
        EndpointUniverse uni = endpoint_universe(rep);
        for (int v = 0; v < g.n; ++v) {
            const auto& list = rep.intervals[static_cast<size_t>(v)];
            const Interval& span = list[0].trivial() ? list[1] : list[0];
            auto at = [&](long long x) {
                return std::lower_bound(uni.gamma.begin(), uni.gamma.end(), x) - uni.gamma.begin();
            };
            if (at(span.right) != at(span.left) + 1)
                out.push_back("span endpoints of vertex " + std::to_string(v) +
                              " are not consecutive in the endpoint universe");
        }
    }
    return out;
}

// Random connected graph with maximum degree 3, for the verifier sweeps.
inline Graph random_max_degree3_graph(std::mt19937_64& rng, int n, bool connected = true) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::set<std::pair<int, int>> used;
    if (connected && n > 1) {
        std::vector<int> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 1; i < n; ++i) {
            // attach to a previous vertex that still has spare degree
            std::vector<int> options;
            for (int j = 0; j < i; ++j)
                if (deg[static_cast<size_t>(order[static_cast<size_t>(j)])] < 3)
                    options.push_back(order[static_cast<size_t>(j)]);
            if (options.empty()) return random_max_degree3_graph(rng, n, connected);
            int u = options[static_cast<size_t>(rng() % options.size())];
            int v = order[static_cast<size_t>(i)];
            int a = std::min(u, v), b = std::max(u, v);
            edges.push_back({a, b});
            used.insert({a, b});
            ++deg[static_cast<size_t>(u)];
            ++deg[static_cast<size_t>(v)];
        }
    }
    int extra = static_cast<int>(rng() % static_cast<unsigned>(std::max(1, n)));
    for (int t = 0; t < extra; ++t) {
        int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (u == v) continue;
        int a = std::min(u, v), b = std::max(u, v);
        if (used.count({a, b})) continue;
        if (deg[static_cast<size_t>(a)] >= 3 || deg[static_cast<size_t>(b)] >= 3) continue;
        edges.push_back({a, b});
        used.insert({a, b});
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
    }
    return Graph::make(n, edges);
}

}  // namespace kpav
