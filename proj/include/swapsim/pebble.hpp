#pragma once

#include <map>
#include <set>

#include "swapsim/digraph.hpp"

namespace swapsim {

struct PebbleResult {
    std::map<Arc, int> rounds;  // round each arc was pebbled
    bool complete = false;      // every arc pebbled
    int max_round = 0;
};

// Lazy game: pebbles on arcs leaving each leader at round 0; a vertex with
// every entering arc pebbled gets its leaving arcs pebbled next round.
// Leaders that are not a feedback vertex set leave coverage incomplete.
PebbleResult lazy_game(const Digraph& d, const std::set<VertexId>& leaders);

// Eager game: vertex pebble on z at round 0, arcs leaving z visible at
// round 1; a vertex with any entering arc pebbled propagates next round.
PebbleResult eager_game(const Digraph& d, const VertexId& z);

}  // namespace swapsim
