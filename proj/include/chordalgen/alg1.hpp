#pragma once

#include "chordalgen/graph.hpp"
#include "chordalgen/rng.hpp"

namespace chordalgen {

struct Alg1Params {
    int n = 1;
    double ubc = 0.0;  // upper bound coefficient in [0, 1]
};

// Peo-based incremental generator: each new vertex picks
// max(1, floor(ubc * existing)) uniform existing vertices as seed neighbors
// and fill edges keep every vertex's earlier neighborhood a clique, so the
// reverse insertion order is a peo. Always chordal and connected.
// Output-sensitive cost; intended as a comparison baseline, not for large n.
Graph generate_alg1(const Alg1Params& params, Rng& rng);

}  // namespace chordalgen
