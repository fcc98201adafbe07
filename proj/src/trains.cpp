#include "dcp/trains.hpp"

#include <algorithm>
#include <set>

namespace dcp {

TrainCheck is_train(const Digraph& host, const KTrain& t) {
    TrainCheck r;
    auto fail = [&](const std::string& s) {
        r.ok = false;
        r.violation = s;
        return r;
    };
    const Digraph d = t.reversed ? reverse(host) : host;
    std::string why;
    if (t.spine.vertices.size() < 2) return fail("spine too short");
    if (!is_path(d, t.spine, &why)) return fail("spine not a path: " + why);
    if (t.back_indices.empty()) return fail("no back arcs");
    if (t.back_indices.front() != 0) return fail("first back index not 0");
    const int ell = t.spine.length();
    int prev = -1;
    for (int idx : t.back_indices) {
        if (idx <= prev) return fail("back indices not strictly increasing");
        if (idx >= ell) return fail("back index reaches the spine end");
        prev = idx;
        if (!d.has_arc(t.spine.last(), t.spine.vertices[idx]))
            return fail("missing arc (" + std::to_string(t.spine.last()) + "," +
                        std::to_string(t.spine.vertices[idx]) + ")");
    }
    // implied lengths ell - idx + 1 are distinct because the indices are
    return r;
}

KTrain find_k_train(const Digraph& d, int k) {
    if (k < 1) throw GraphError("find_k_train: k must be positive");
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (d.out_degree(v) < k)
            throw GraphError("find_k_train: vertex " + std::to_string(v) +
                             " has out-degree " + std::to_string(d.out_degree(v)) +
                             " < " + std::to_string(k));
    if (d.vertex_count() == 0) throw GraphError("find_k_train: empty digraph");

    std::vector<char> on_path(d.vertex_count(), 0);
    std::vector<Vertex> path{0};
    on_path[0] = 1;
    while (true) {
        Vertex u = path.back();
        Vertex next = -1;
        for (Vertex w : d.out(u))
            if (!on_path[w]) {
                next = w;
                break;
            }
        if (next == -1) break;
        on_path[next] = 1;
        path.push_back(next);
    }
    // the endpoint's out-neighborhood lies on the path, so it has >= k
    // targets there; take the earliest k and re-root the spine
    Vertex u = path.back();
    std::vector<int> pos(d.vertex_count(), -1);
    for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
    std::vector<int> targets;
    for (Vertex w : d.out(u)) targets.push_back(pos[w]);
    std::sort(targets.begin(), targets.end());
    targets.resize(k);

    KTrain t;
    const int root = targets.front();
    t.spine.vertices.assign(path.begin() + root, path.end());
    for (int p : targets) t.back_indices.push_back(p - root);
    return t;
}

std::vector<DiCycle> train_cycles(const KTrain& t) {
    std::vector<DiCycle> cycles;
    const auto& spine = t.spine.vertices;
    for (int idx : t.back_indices) {
        DiCycle c;
        c.vertices.assign(spine.begin() + idx, spine.end());
        if (t.reversed) std::reverse(c.vertices.begin(), c.vertices.end());
        cycles.push_back(std::move(c));
    }
    // indices ascend, so lengths ell - idx + 1 descend
    return cycles;
}

std::vector<DiCycle> select_distinct(const Digraph& d, const std::vector<KTrain>& trains,
                                     const std::vector<int>& taken_lengths) {
    std::vector<VertexSet> vsets;
    for (std::size_t i = 0; i < trains.size(); ++i) {
        TrainCheck c = is_train(d, trains[i]);
        if (!c.ok)
            throw GraphError("select_distinct: train " + std::to_string(i) + " invalid: " +
                             c.violation);
        vsets.push_back(trains[i].vertex_set());
        for (std::size_t j = 0; j < i; ++j)
            if (!sets_disjoint(vsets[i], vsets[j]))
                throw GraphError("select_distinct: trains " + std::to_string(j) + " and " +
                                 std::to_string(i) + " share a vertex");
    }
    std::set<int> taken(taken_lengths.begin(), taken_lengths.end());
    std::vector<DiCycle> picked;
    for (const KTrain& t : trains) {
        std::vector<DiCycle> menu = train_cycles(t);
        std::sort(menu.begin(), menu.end(),
                  [](const DiCycle& a, const DiCycle& b) { return a.length() < b.length(); });
        bool found = false;
        for (DiCycle& c : menu) {
            if (taken.count(c.length())) continue;
            taken.insert(c.length());
            picked.push_back(std::move(c));
            found = true;
            break;
        }
        if (!found)
            throw GraphError("select_distinct: a train offered no fresh length");
    }
    return picked;
}

std::vector<DiCycle> select_distinct(const Digraph& d, const std::vector<KTrain>& trains) {
    return select_distinct(d, trains, {});
}

}  // namespace dcp
