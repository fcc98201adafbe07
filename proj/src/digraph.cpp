#include "dcp/digraph.hpp"

#include <algorithm>
#include <deque>

namespace dcp {

VertexSet make_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return false;
    }
    return true;
}

bool set_includes(const VertexSet& big, const VertexSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Digraph Digraph::build(int vertex_count, std::vector<Arc> arcs,
                       std::map<Vertex, std::string> labels) {
    if (vertex_count < 0) throw GraphError("negative vertex count");
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.tail == a.head)
            throw GraphError("loop at vertex " + std::to_string(a.tail));
        if (a.tail < 0 || a.tail >= vertex_count || a.head < 0 || a.head >= vertex_count)
            throw GraphError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                             ") endpoint out of range");
        if (i > 0 && arcs[i - 1] == a)
            throw GraphError("duplicate arc (" + std::to_string(a.tail) + "," +
                             std::to_string(a.head) + ")");
    }
    for (const auto& [v, s] : labels) {
        (void)s;
        if (v < 0 || v >= vertex_count)
            throw GraphError("label on out-of-range vertex " + std::to_string(v));
    }
    Digraph d;
    d.n_ = vertex_count;
    d.arcs_ = std::move(arcs);
    d.labels_ = std::move(labels);
    d.build_adjacency();
    return d;
}

void Digraph::build_adjacency() {
    out_off_.assign(n_ + 1, 0);
    in_off_.assign(n_ + 1, 0);
    for (const Arc& a : arcs_) {
        ++out_off_[a.tail + 1];
        ++in_off_[a.head + 1];
    }
    for (int v = 0; v < n_; ++v) {
        out_off_[v + 1] += out_off_[v];
        in_off_[v + 1] += in_off_[v];
    }
    out_dst_.resize(arcs_.size());
    in_src_.resize(arcs_.size());
    std::vector<int> op = out_off_, ip = in_off_;
    for (const Arc& a : arcs_) out_dst_[op[a.tail]++] = a.head;
    // arcs_ is sorted by (tail, head); fill in-lists by head so each list is
    // sorted by source as well
    for (const Arc& a : arcs_) in_src_[ip[a.head]++] = a.tail;
    for (int v = 0; v < n_; ++v)
        std::sort(in_src_.begin() + in_off_[v], in_src_.begin() + in_off_[v + 1]);
}

std::span<const Vertex> Digraph::out(Vertex v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex out of range");
    return {out_dst_.data() + out_off_[v], static_cast<std::size_t>(out_off_[v + 1] - out_off_[v])};
}

std::span<const Vertex> Digraph::in(Vertex v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex out of range");
    return {in_src_.data() + in_off_[v], static_cast<std::size_t>(in_off_[v + 1] - in_off_[v])};
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

int Digraph::min_out_degree() const {
    int m = n_ == 0 ? 0 : arc_count();
    for (int v = 0; v < n_; ++v) m = std::min(m, out_degree(v));
    return m;
}

int Digraph::min_in_degree() const {
    int m = n_ == 0 ? 0 : arc_count();
    for (int v = 0; v < n_; ++v) m = std::min(m, in_degree(v));
    return m;
}

bool is_path(const Digraph& d, const DiPath& p, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (p.vertices.empty()) return fail("empty path");
    std::vector<Vertex> sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("repeated vertex on path");
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!d.has_arc(p.vertices[i], p.vertices[i + 1]))
            return fail("missing arc (" + std::to_string(p.vertices[i]) + "," +
                        std::to_string(p.vertices[i + 1]) + ")");
    return true;
}

bool is_cycle(const Digraph& d, const DiCycle& c, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (c.vertices.size() < 2) return fail("cycle shorter than a digon");
    DiPath p{c.vertices};
    if (!is_path(d, p, why)) return false;
    if (!d.has_arc(c.vertices.back(), c.vertices.front()))
        return fail("missing closing arc (" + std::to_string(c.vertices.back()) + "," +
                    std::to_string(c.vertices.front()) + ")");
    return true;
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
    return Digraph::build(d.vertex_count(), std::move(arcs), d.labels());
}

InducedSubdigraph induced(const Digraph& d, const VertexSet& x) {
    InducedSubdigraph r;
    r.to_sub.assign(d.vertex_count(), -1);
    for (Vertex v : x) {
        if (v < 0 || v >= d.vertex_count())
            throw GraphError("induced: vertex " + std::to_string(v) + " out of range");
        r.to_sub[v] = static_cast<Vertex>(r.to_host.size());
        r.to_host.push_back(v);
    }
    std::vector<Arc> arcs;
    std::map<Vertex, std::string> labels;
    for (const Arc& a : d.arcs())
        if (r.to_sub[a.tail] >= 0 && r.to_sub[a.head] >= 0)
            arcs.push_back({r.to_sub[a.tail], r.to_sub[a.head]});
    for (const auto& [v, s] : d.labels())
        if (r.to_sub[v] >= 0) labels[r.to_sub[v]] = s;
    r.graph = Digraph::build(static_cast<int>(r.to_host.size()), std::move(arcs), std::move(labels));
    return r;
}

namespace {

// Iterative Tarjan; components emitted sinks-first, reversed afterwards.
struct TarjanState {
    const Digraph& d;
    std::vector<int> index, low, on_stack;
    std::vector<Vertex> stack;
    int counter = 0;
    std::vector<VertexSet> comps;

    explicit TarjanState(const Digraph& g)
        : d(g), index(g.vertex_count(), -1), low(g.vertex_count(), 0),
          on_stack(g.vertex_count(), 0) {}

    void run(Vertex root) {
        struct Frame {
            Vertex v;
            std::size_t next;
        };
        std::vector<Frame> frames{{root, 0}};
        visit(root);
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto succ = d.out(f.v);
            if (f.next < succ.size()) {
                Vertex w = succ[f.next++];
                if (index[w] == -1) {
                    visit(w);
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    VertexSet comp;
                    while (true) {
                        Vertex w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == f.v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                Vertex v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }

    void visit(Vertex v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
    }
};

}  // namespace

std::vector<VertexSet> strong_components(const Digraph& d) {
    TarjanState t(d);
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (t.index[v] == -1) t.run(v);
    std::reverse(t.comps.begin(), t.comps.end());
    return t.comps;
}

bool is_strongly_connected(const Digraph& d) {
    return d.vertex_count() > 0 && strong_components(d).size() == 1;
}

VertexSet reach_set(const Digraph& d, const VertexSet& sources,
                    const VertexSet& forbidden_interior, Direction dir) {
    if (!sets_disjoint(sources, forbidden_interior))
        throw GraphError("reach_set: sources intersect forbidden set");
    std::vector<char> forbidden(d.vertex_count(), 0), reached(d.vertex_count(), 0);
    for (Vertex v : forbidden_interior) forbidden[v] = 1;
    std::deque<Vertex> queue;
    auto step = [&](Vertex v) {
        auto nbrs = dir == Direction::forward ? d.out(v) : d.in(v);
        for (Vertex w : nbrs) {
            if (forbidden[w] || reached[w]) continue;
            reached[w] = 1;
            queue.push_back(w);
        }
    };
    for (Vertex s : sources) step(s);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        step(v);
    }
    VertexSet result;
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (reached[v]) result.push_back(v);
    return result;
}

std::optional<DiPath> find_path(const Digraph& d, Vertex from, Vertex to,
                                const VertexSet& forbidden) {
    if (from == to) throw GraphError("find_path: endpoints must differ");
    if (set_contains(forbidden, from) || set_contains(forbidden, to))
        throw GraphError("find_path: endpoint in forbidden set");
    std::vector<Vertex> parent(d.vertex_count(), -2);
    for (Vertex v : forbidden) parent[v] = -3;
    std::deque<Vertex> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : d.out(v)) {
            if (parent[w] != -2) continue;
            parent[w] = v;
            if (w == to) {
                DiPath p;
                for (Vertex cur = to; cur != -1; cur = parent[cur]) p.vertices.push_back(cur);
                std::reverse(p.vertices.begin(), p.vertices.end());
                return p;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

}  // namespace dcp
