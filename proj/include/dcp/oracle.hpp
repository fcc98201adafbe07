#ifndef DCP_ORACLE_HPP
#define DCP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcp/digraph.hpp"
#include "dcp/rational.hpp"
#include "dcp/trains.hpp"

namespace dcp {

struct CycleEnumeration {
    std::vector<DiCycle> cycles;  // each rooted at its minimum vertex, deterministic order
    bool overflow = false;
};

CycleEnumeration enum_cycles(const Digraph& d, std::size_t limit);

// Largest c <= upto such that |V| >= c+1 and deleting any < c vertices
// leaves the digraph strongly connected; vertex-splitting max-flow cuts.
int vertex_connectivity(const Digraph& d, int upto);

// Exhaustive cross-check of the same quantity, for tiny instances.
int vertex_connectivity_brute(const Digraph& d, int upto);

// True iff deleting any single vertex leaves a strongly connected digraph.
bool strong_after_single_deletions(const Digraph& d);

enum class PackingClaim { distinct_lengths, distinct_weights, equal_length_forbidden };

struct CyclePacking {
    std::vector<DiCycle> cycles;
    PackingClaim claim = PackingClaim::distinct_lengths;
    std::optional<ArcWeighting> weights;  // required for distinct_weights
};

struct PackingReport {
    bool ok = true;
    std::string violation;
};

PackingReport verify_packing(const Digraph& d, const CyclePacking& p);

enum class EqLenStatus { verified, refuted, inconclusive };

struct EqLenReport {
    EqLenStatus status = EqLenStatus::inconclusive;
    std::optional<std::pair<DiCycle, DiCycle>> refuting_pair;
    std::string detail;
};

// Enumerates up to `budget` cycles and tests equal-length classes for
// arc-disjoint pairs. Overflow downgrades "verified" to "inconclusive".
EqLenReport no_equal_length_arcdisjoint(const Digraph& d, std::size_t budget);

struct TrainSearchCaps {
    int max_vertices = 14;
    std::uint64_t max_steps = 10'000'000;
};

enum class TriBool { yes, no, inconclusive };

// Exhaustive spine search; exact within the caps.
TriBool brute_train_exists(const Digraph& d, int k, TrainSearchCaps caps = {});

// Same search, returning a witness when one exists.
std::optional<KTrain> brute_find_train(const Digraph& d, int k, TrainSearchCaps caps = {});

}  // namespace dcp

#endif
