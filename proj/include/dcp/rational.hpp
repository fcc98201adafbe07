#ifndef DCP_RATIONAL_HPP
#define DCP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>

#include "dcp/digraph.hpp"

namespace dcp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Strictly positive exact weights on arcs; absent arcs have no weight.
using ArcWeighting = std::map<Arc, Rational>;

inline ArcWeighting unit_weights(const Digraph& d) {
    ArcWeighting w;
    for (const Arc& a : d.arcs()) w[a] = 1;
    return w;
}

inline Rational cycle_weight(const DiCycle& c, const ArcWeighting& w) {
    Rational total = 0;
    const auto& vs = c.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Arc a{vs[i], vs[(i + 1) % vs.size()]};
        auto it = w.find(a);
        if (it == w.end()) throw GraphError("cycle uses an unweighted arc");
        total += it->second;
    }
    return total;
}

}  // namespace dcp

#endif
