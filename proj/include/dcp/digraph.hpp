#ifndef DCP_DIGRAPH_HPP
#define DCP_DIGRAPH_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

using Vertex = int;

struct Arc {
    Vertex tail = -1;
    Vertex head = -1;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Sorted, duplicate-free vertex lists are the set representation used
// throughout; helpers below keep that invariant.
using VertexSet = std::vector<Vertex>;

VertexSet make_set(std::vector<Vertex> v);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
bool set_includes(const VertexSet& big, const VertexSet& small);

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Loopless simple digraph; digons allowed. Arcs are kept sorted
// lexicographically and iteration order is deterministic everywhere.
class Digraph {
public:
    Digraph() = default;

    static Digraph build(int vertex_count, std::vector<Arc> arcs,
                         std::map<Vertex, std::string> labels = {});

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const Vertex> out(Vertex v) const;
    std::span<const Vertex> in(Vertex v) const;
    int out_degree(Vertex v) const { return static_cast<int>(out(v).size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in(v).size()); }
    bool has_arc(Vertex u, Vertex v) const;

    int min_out_degree() const;  // 0 on the empty digraph
    int min_in_degree() const;

    const std::map<Vertex, std::string>& labels() const { return labels_; }
    void set_label(Vertex v, std::string s) { labels_[v] = std::move(s); }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_off_, in_off_;
    std::vector<Vertex> out_dst_, in_src_;
    std::map<Vertex, std::string> labels_;

    void build_adjacency();
};

struct DiPath {
    std::vector<Vertex> vertices;
    Vertex first() const { return vertices.front(); }
    Vertex last() const { return vertices.back(); }
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Cyclic vertex sequence; length == number of vertices == number of arcs.
struct DiCycle {
    std::vector<Vertex> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

bool is_path(const Digraph& d, const DiPath& p, std::string* why = nullptr);
bool is_cycle(const Digraph& d, const DiCycle& c, std::string* why = nullptr);

Digraph reverse(const Digraph& d);

struct InducedSubdigraph {
    Digraph graph;
    std::vector<Vertex> to_host;  // sub id -> host id, ascending
    std::vector<Vertex> to_sub;   // host id -> sub id or -1
};

InducedSubdigraph induced(const Digraph& d, const VertexSet& x);

// Components in topological order of the condensation (sources first).
std::vector<VertexSet> strong_components(const Digraph& d);
bool is_strongly_connected(const Digraph& d);

enum class Direction { forward, backward };

// Vertices reachable from `sources` by walks whose intermediate vertices
// avoid `forbidden_interior`; sources themselves excluded unless re-entered.
VertexSet reach_set(const Digraph& d, const VertexSet& sources,
                    const VertexSet& forbidden_interior, Direction dir);

// Shortest from-to dipath internally avoiding `forbidden`; ties broken by
// lowest-id predecessor so the result is deterministic.
std::optional<DiPath> find_path(const Digraph& d, Vertex from, Vertex to,
                                const VertexSet& forbidden);

}  // namespace dcp

#endif
