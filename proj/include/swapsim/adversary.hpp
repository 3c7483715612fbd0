#pragma once

#include <set>
#include <string>

#include "swapsim/crypto.hpp"
#include "swapsim/digraph.hpp"

namespace swapsim {

enum class OutcomeClass { FreeRide, Discount, Deal, NoDeal, Underwater };

std::string to_string(OutcomeClass c);

// Per-vertex classification over the triggered-arc set. The vertex must
// have at least one entering and one leaving arc.
OutcomeClass classify_outcome(const Digraph& d, const std::set<Arc>& triggered,
                              const VertexId& v);

// Same rules over the coalition's boundary arcs (internal arcs ignored).
// An empty boundary side counts as vacuously all-triggered; the
// FreeRide/Discount overlap resolves to FreeRide. Rejects coalitions with
// no boundary arcs at all.
OutcomeClass classify_coalition(const Digraph& d, const std::set<Arc>& triggered,
                                const std::set<VertexId>& members);

enum class StrategyKind {
    Conforming,
    HaltAt,            // conforming while now < tick, then silent
    SkipWait,          // follower publishes leaving contracts immediately
    WithholdSecret,    // leader reveals its secret only on listed ledgers
    PrematureReveal,   // leader issues hashkeys from tick on, ignoring phase gates
    LastMomentReveal,  // every unlock delayed to the last round before its deadline
    FreeRideCollusion  // coalition triggers only coalition-internal arcs
};

struct Strategy {
    StrategyKind kind = StrategyKind::Conforming;
    TimeTick tick = 0;                      // HaltAt / PrematureReveal
    std::set<std::string> reveal_ledgers;   // WithholdSecret: ledgers still revealed on
    bool reveal_broadcast = true;           // WithholdSecret: still reveal on broadcast
    std::string group;                      // FreeRideCollusion coalition name

    bool operator==(const Strategy&) const = default;
};

std::string to_string(const Strategy& s);

struct Coalition {
    std::set<VertexId> members;
};

}  // namespace swapsim
