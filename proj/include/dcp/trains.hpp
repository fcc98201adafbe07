#ifndef DCP_TRAINS_HPP
#define DCP_TRAINS_HPP

#include <string>
#include <vector>

#include "dcp/digraph.hpp"

namespace dcp {

// A directed path (the spine) plus k arcs from its last vertex back to
// earlier spine positions, the first of which is position 0. A reversed
// train is valid in the reversed host.
struct KTrain {
    DiPath spine;
    std::vector<int> back_indices;  // strictly increasing, front() == 0
    bool reversed = false;

    int k() const { return static_cast<int>(back_indices.size()); }
    VertexSet vertex_set() const { return make_set(spine.vertices); }
};

struct TrainCheck {
    bool ok = true;
    std::string violation;
};

TrainCheck is_train(const Digraph& d, const KTrain& t);

// Greedy maximal-path extraction; requires min out-degree >= k and throws a
// degree-deficit GraphError naming a violating vertex otherwise.
KTrain find_k_train(const Digraph& d, int k);

// The k cycles certified by the train, lengths strictly descending. For a
// reversed train the cycles are returned in host orientation.
std::vector<DiCycle> train_cycles(const KTrain& t);

// One cycle per train, pairwise vertex-disjoint, pairwise distinct lengths;
// picks the lowest usable length from each train's menu. The second form
// additionally avoids a list of already-claimed lengths.
std::vector<DiCycle> select_distinct(const Digraph& d, const std::vector<KTrain>& trains);
std::vector<DiCycle> select_distinct(const Digraph& d, const std::vector<KTrain>& trains,
                                     const std::vector<int>& taken_lengths);

}  // namespace dcp

#endif
