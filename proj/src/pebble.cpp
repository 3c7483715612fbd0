#include "swapsim/pebble.hpp"

#include <deque>

namespace swapsim {

PebbleResult lazy_game(const Digraph& d, const std::set<VertexId>& leaders) {
    PebbleResult res;
    for (const VertexId& l : leaders)
        if (!d.has_vertex(l)) throw SwapError("lazy_game: unknown leader " + l);
    for (const VertexId& l : leaders)
        for (const Arc& a : d.arcs_leaving(l)) res.rounds.emplace(a, 0);
    int round = 0;
    bool progressed = true;
    while (progressed) {
        ++round;
        progressed = false;
        for (const VertexId& v : d.vertexes()) {
            auto entering = d.arcs_entering(v);
            if (entering.empty()) continue;
            bool all_before = true;
            for (const Arc& a : entering) {
                auto it = res.rounds.find(a);
                if (it == res.rounds.end() || it->second >= round) {
                    all_before = false;
                    break;
                }
            }
            if (!all_before) continue;
            for (const Arc& a : d.arcs_leaving(v))
                if (res.rounds.emplace(a, round).second) progressed = true;
        }
    }
    res.complete = res.rounds.size() == d.arcs().size();
    for (const auto& [a, r] : res.rounds) res.max_round = std::max(res.max_round, r);
    return res;
}

PebbleResult eager_game(const Digraph& d, const VertexId& z) {
    if (!d.has_vertex(z)) throw SwapError("eager_game: unknown vertex " + z);
    // vertex pebble rounds are BFS depths from z; an arc is pebbled one
    // round after its head's vertex pebble
    std::map<VertexId, int> depth;
    depth[z] = 0;
    std::deque<VertexId> queue{z};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const Arc& a : d.arcs_leaving(v)) {
            if (!depth.count(a.tail)) {
                depth[a.tail] = depth[v] + 1;
                queue.push_back(a.tail);
            }
        }
    }
    PebbleResult res;
    for (const Arc& a : d.arcs()) {
        auto it = depth.find(a.head);
        if (it != depth.end()) res.rounds.emplace(a, it->second + 1);
    }
    res.complete = res.rounds.size() == d.arcs().size();
    for (const auto& [a, r] : res.rounds) res.max_round = std::max(res.max_round, r);
    return res;
}

}  // namespace swapsim
