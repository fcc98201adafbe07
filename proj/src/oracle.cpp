#include "dcp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace dcp {

namespace {

// DFS from each root over vertices with larger ids; every simple cycle is
// reported exactly once, rooted at its minimum vertex, extensions in
// ascending neighbor order.
struct CycleSearch {
    const Digraph& d;
    std::size_t limit;
    CycleEnumeration result;
    std::vector<char> on_path;
    std::vector<Vertex> path;
    Vertex root = 0;

    CycleSearch(const Digraph& g, std::size_t lim)
        : d(g), limit(lim), on_path(g.vertex_count(), 0) {}

    bool dfs(Vertex v) {
        for (Vertex w : d.out(v)) {
            if (w == root && path.size() >= 2) {
                if (result.cycles.size() >= limit) {
                    result.overflow = true;
                    return false;
                }
                result.cycles.push_back(DiCycle{path});
            } else if (w > root && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                bool keep_going = dfs(w);
                path.pop_back();
                on_path[w] = 0;
                if (!keep_going) return false;
            }
        }
        return true;
    }

    void run() {
        for (root = 0; root < d.vertex_count(); ++root) {
            on_path[root] = 1;
            path = {root};
            if (!dfs(root)) return;
            on_path[root] = 0;
        }
    }
};

}  // namespace

CycleEnumeration enum_cycles(const Digraph& d, std::size_t limit) {
    CycleSearch s(d, limit);
    s.run();
    return s.result;
}

namespace {

// Unit-capacity max flow on the vertex-split graph; good enough for the
// desk-scale connectivity queries this library makes.
int min_vertex_cut(const Digraph& d, Vertex s, Vertex t, int cap) {
    const int n = d.vertex_count();
    // node 2v = v_in, 2v+1 = v_out
    struct Edge {
        int to, rev, cap;
    };
    std::vector<std::vector<Edge>> g(2 * n);
    auto add_edge = [&](int a, int b, int c) {
        g[a].push_back({b, static_cast<int>(g[b].size()), c});
        g[b].push_back({a, static_cast<int>(g[a].size()) - 1, 0});
    };
    for (Vertex v = 0; v < n; ++v) add_edge(2 * v, 2 * v + 1, v == s || v == t ? cap + 1 : 1);
    for (const Arc& a : d.arcs()) add_edge(2 * a.tail + 1, 2 * a.head, cap + 1);
    const int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (flow <= cap) {
        std::vector<std::pair<int, int>> pred(2 * n, {-1, -1});  // node, edge idx
        std::deque<int> q{source};
        pred[source] = {source, -1};
        while (!q.empty() && pred[sink].first == -1) {
            int v = q.front();
            q.pop_front();
            for (std::size_t i = 0; i < g[v].size(); ++i) {
                const Edge& e = g[v][i];
                if (e.cap > 0 && pred[e.to].first == -1) {
                    pred[e.to] = {v, static_cast<int>(i)};
                    q.push_back(e.to);
                }
            }
        }
        if (pred[sink].first == -1) break;
        for (int v = sink; v != source;) {
            auto [pv, pe] = pred[v];
            g[pv][pe].cap -= 1;
            g[v][g[pv][pe].rev].cap += 1;
            v = pv;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Digraph& d, int upto) {
    const int n = d.vertex_count();
    if (n <= 1 || upto <= 0) return 0;
    int best = std::min(upto, n - 1);
    if (!is_strongly_connected(d)) return 0;
    for (Vertex u = 0; u < n && best > 0; ++u)
        for (Vertex v = 0; v < n && best > 0; ++v) {
            if (u == v || d.has_arc(u, v)) continue;
            best = std::min(best, min_vertex_cut(d, u, v, best));
        }
    return best;
}

int vertex_connectivity_brute(const Digraph& d, int upto) {
    const int n = d.vertex_count();
    if (n <= 1 || upto <= 0) return 0;
    const int cap = std::min(upto, n - 1);
    // find the smallest deletion set that disconnects; answer is its size
    std::vector<Vertex> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int size = 0; size < cap; ++size) {
        std::vector<int> pick(size);
        std::function<bool(int, int)> rec = [&](int idx, int from) {
            if (idx == size) {
                VertexSet del(pick.begin(), pick.end());
                VertexSet keep = set_difference(VertexSet(all), del);
                auto sub = induced(d, keep);
                return !is_strongly_connected(sub.graph);
            }
            for (int v = from; v < n; ++v) {
                pick[idx] = v;
                if (rec(idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return size;
    }
    return cap;
}

bool strong_after_single_deletions(const Digraph& d) {
    std::vector<Vertex> all(d.vertex_count());
    for (int i = 0; i < d.vertex_count(); ++i) all[i] = i;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        VertexSet keep = set_difference(VertexSet(all), VertexSet{v});
        if (!is_strongly_connected(induced(d, keep).graph)) return false;
    }
    return true;
}

PackingReport verify_packing(const Digraph& d, const CyclePacking& p) {
    PackingReport r;
    auto fail = [&](const std::string& s) {
        r.ok = false;
        r.violation = s;
        return r;
    };
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        std::string why;
        if (!is_cycle(d, p.cycles[i], &why))
            return fail("cycle " + std::to_string(i) + " invalid: " + why);
    }
    std::vector<VertexSet> vsets;
    for (const DiCycle& c : p.cycles) vsets.push_back(make_set(c.vertices));
    for (std::size_t i = 0; i < vsets.size(); ++i)
        for (std::size_t j = i + 1; j < vsets.size(); ++j)
            if (!sets_disjoint(vsets[i], vsets[j])) {
                VertexSet shared = set_intersection(vsets[i], vsets[j]);
                return fail("overlap at vertex " + std::to_string(shared.front()));
            }
    switch (p.claim) {
        case PackingClaim::distinct_lengths:
        case PackingClaim::equal_length_forbidden: {
            std::set<int> seen;
            for (const DiCycle& c : p.cycles)
                if (!seen.insert(c.length()).second)
                    return fail("length collision at " + std::to_string(c.length()));
            break;
        }
        case PackingClaim::distinct_weights: {
            if (!p.weights) return fail("distinct-weights claim without a weighting");
            std::set<Rational> seen;
            for (const DiCycle& c : p.cycles)
                if (!seen.insert(cycle_weight(c, *p.weights)).second)
                    return fail("weight collision");
            break;
        }
    }
    return r;
}

namespace {

std::set<Arc> cycle_arcs(const DiCycle& c) {
    std::set<Arc> arcs;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        arcs.insert({c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]});
    return arcs;
}

}  // namespace

EqLenReport no_equal_length_arcdisjoint(const Digraph& d, std::size_t budget) {
    EqLenReport r;
    CycleEnumeration e = enum_cycles(d, budget);
    std::map<int, std::vector<std::size_t>> by_length;
    for (std::size_t i = 0; i < e.cycles.size(); ++i)
        by_length[e.cycles[i].length()].push_back(i);
    for (const auto& [len, idxs] : by_length) {
        for (std::size_t a = 0; a < idxs.size(); ++a) {
            std::set<Arc> arcs_a = cycle_arcs(e.cycles[idxs[a]]);
            for (std::size_t b = a + 1; b < idxs.size(); ++b) {
                std::set<Arc> arcs_b = cycle_arcs(e.cycles[idxs[b]]);
                bool disjoint = true;
                for (const Arc& arc : arcs_b)
                    if (arcs_a.count(arc)) {
                        disjoint = false;
                        break;
                    }
                if (disjoint) {
                    r.status = EqLenStatus::refuted;
                    r.refuting_pair = {e.cycles[idxs[a]], e.cycles[idxs[b]]};
                    r.detail = "two arc-disjoint cycles of length " + std::to_string(len);
                    return r;
                }
            }
        }
    }
    if (e.overflow) {
        r.status = EqLenStatus::inconclusive;
        r.detail = "cycle budget exhausted at " + std::to_string(e.cycles.size());
    } else {
        r.status = EqLenStatus::verified;
        r.detail = "all " + std::to_string(e.cycles.size()) + " cycles examined";
    }
    return r;
}

namespace {

struct TrainSearch {
    const Digraph& d;
    int k;
    std::uint64_t steps_left;
    std::vector<char> on_path;
    std::vector<int> pos;
    std::vector<Vertex> path;
    std::optional<KTrain> found;
    bool exhausted = true;

    TrainSearch(const Digraph& g, int kk, std::uint64_t cap)
        : d(g), k(kk), steps_left(cap), on_path(g.vertex_count(), 0),
          pos(g.vertex_count(), -1) {}

    bool check_here() {
        Vertex u = path.back();
        if (!d.has_arc(u, path.front())) return false;
        std::vector<int> targets;
        for (Vertex w : d.out(u))
            if (on_path[w] && pos[w] + 1 < static_cast<int>(path.size()))
                targets.push_back(pos[w]);
        if (static_cast<int>(targets.size()) < k) return false;
        std::sort(targets.begin(), targets.end());
        targets.resize(k);
        KTrain t;
        t.spine.vertices = path;
        t.back_indices = targets;
        found = t;
        return true;
    }

    // returns false when the search should stop (found or out of steps)
    bool dfs() {
        if (steps_left-- == 0) {
            exhausted = false;
            return false;
        }
        if (path.size() >= 2 && check_here()) return false;
        Vertex v = path.back();
        for (Vertex w : d.out(v)) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            pos[w] = static_cast<int>(path.size());
            path.push_back(w);
            bool keep_going = dfs();
            path.pop_back();
            pos[w] = -1;
            on_path[w] = 0;
            if (!keep_going) return false;
        }
        return true;
    }

    void run() {
        for (Vertex s = 0; s < d.vertex_count(); ++s) {
            on_path[s] = 1;
            pos[s] = 0;
            path = {s};
            bool keep_going = dfs();
            on_path[s] = 0;
            pos[s] = -1;
            if (!keep_going) return;
        }
    }
};

}  // namespace

std::optional<KTrain> brute_find_train(const Digraph& d, int k, TrainSearchCaps caps) {
    if (d.vertex_count() > caps.max_vertices)
        throw GraphError("brute train search: instance above the vertex cap");
    TrainSearch s(d, k, caps.max_steps);
    s.run();
    if (!s.found && !s.exhausted)
        throw GraphError("brute train search: step cap exhausted");
    return s.found;
}

TriBool brute_train_exists(const Digraph& d, int k, TrainSearchCaps caps) {
    if (d.vertex_count() > caps.max_vertices) return TriBool::inconclusive;
    TrainSearch s(d, k, caps.max_steps);
    s.run();
    if (s.found) return TriBool::yes;
    return s.exhausted ? TriBool::no : TriBool::inconclusive;
}

}  // namespace dcp
