#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swapsim/adversary.hpp"
#include "swapsim/contract.hpp"
#include "swapsim/ledger.hpp"

namespace swapsim {

enum class Variant { Hashkey, SingleLeaderTimeout };

std::string to_string(Variant v);

struct SwapSpec {
    Digraph digraph;
    std::vector<VertexId> leaders;  // published order; index pairs hashlocks
    std::vector<Hashlock> hashlocks;
    TimeTick start = 0;
    TimeTick delta = 1;
    Variant variant = Variant::Hashkey;
    bool broadcast = false;
};

// Empty result means the spec is acceptable; otherwise one reason per
// violated condition.
std::vector<std::string> validate_spec(const SwapSpec& spec);

// Per-arc absolute timeout start + (diam + D(tail, leader) + 1) * delta.
std::map<Arc, TimeTick> assign_single_leader_timeouts(const Digraph& d, const VertexId& leader,
                                                      TimeTick start, TimeTick delta);

struct PartyState {
    VertexId self;
    std::optional<std::size_t> leader_index;
    std::optional<Secret> own_secret;  // leaders only
    bool published_leaving = false;
    bool abandoned = false;
    bool issued = false;  // leader's own-secret one-shot
    std::vector<std::optional<Hashkey>> hashkeys;  // per hashlock, first acquisition only
    std::optional<Secret> known_secret;            // single-leader variant
    std::set<Arc> verified;                        // entering contracts checked ok
};

// Fault-injection knobs, surfaced in scenario files.
struct Faults {
    TimeTick dead_time_offset = 0;        // shifts stored refund dead times
    bool equalize_single_timeouts = false;  // all arcs get the minimum formula timeout
};

// Precomputed per-run context shared by all parties.
struct ProtocolContext {
    SwapSpec spec;
    int diam = 0;
    std::map<Arc, std::string> asset_labels;
    std::map<Arc, std::string> ledger_of;
    std::map<Arc, TimeTick> single_timeouts;  // single-leader variant, after faults
    Faults faults;
    const KeyStore* keys = nullptr;
    TimeTick phase_two_tick = 0;  // earliest leader issuance tick: (diam+1)*delta
    std::map<std::string, std::set<VertexId>> coalitions;
};

// The canonical contract a conforming party publishes for one arc.
SwapContract make_arc_contract(const ProtocolContext& ctx, const Arc& arc);

// Behavior switches used to express the deviating strategies on top of
// the conforming rules.
struct StepTweaks {
    bool skip_wait = false;
    bool force_issue = false;
    std::optional<std::set<std::string>> own_reveal_ledgers;  // withhold mask
    bool reveal_broadcast = true;
    bool last_moment = false;
    const std::set<VertexId>* coalition = nullptr;  // unlock internal arcs only
};

struct StepResult {
    std::vector<Action> actions;
    PartyState state;
};

StepResult conforming_step(const PartyState& ps, const Snapshot& snap,
                           const ProtocolContext& ctx, const StepTweaks& tweaks = {});

StepResult apply_strategy(const PartyState& ps, const Strategy& strategy, const Snapshot& snap,
                          const ProtocolContext& ctx);

struct ArcReport {
    Arc arc;
    bool published = false;
    bool triggered = false;
    ContractStatus status = ContractStatus::Active;
    TimeTick publish_tick = -1;
    TimeTick trigger_tick = -1;
    TimeTick terminal_tick = -1;
    std::vector<TimeTick> unlock_ticks;  // per hashlock, -1 while locked
    std::string asset_owner;
};

struct Report {
    Variant variant = Variant::Hashkey;
    std::map<VertexId, OutcomeClass> outcomes;
    std::map<VertexId, bool> conforming;
    std::map<std::string, std::optional<OutcomeClass>> coalition_outcomes;
    std::vector<ArcReport> arcs;
    TimeTick phase_one_complete = -1;  // tick of the last contract publication
    TimeTick first_reveal = -1;        // earliest secret-bearing unlock or broadcast
    TimeTick last_trigger = -1;
    TimeTick horizon = 0;
    std::size_t storage_bytes = 0;
    bool stuck = false;      // horizon hit with non-terminal contracts
    bool violation = false;  // some conforming party ended Underwater
    std::vector<std::string> notes;
};

struct RunSetup {
    Digraph digraph;
    std::vector<VertexId> leaders;
    TimeTick start = 0;
    TimeTick delta = 1;
    Variant variant = Variant::Hashkey;
    bool broadcast = false;
    std::map<Arc, std::string> asset_labels;
    std::map<Arc, std::string> ledger_of;
    Faults faults;
    std::optional<TimeTick> horizon_override;
    std::uint64_t seed = 0;
    bool force = false;  // run even if validate_spec rejects
};

struct RunResult {
    Report report;
    std::vector<TraceEvent> trace;
};

// Drives the world to quiescence (all contracts terminal or horizon
// start + (diam + |V|) * delta reached).
RunResult run_swap(const RunSetup& setup, const std::map<VertexId, Strategy>& strategies);

struct SearchOptions {
    std::size_t max_parties = 4;
    std::uint64_t max_runs = 2'000'000;
};

struct SearchViolation {
    std::string strategies;
    VertexId victim;
    OutcomeClass outcome = OutcomeClass::Underwater;
    std::vector<std::string> trace_excerpt;
};

struct SearchResult {
    std::vector<SearchViolation> violations;
    std::uint64_t runs = 0;
    bool partial = false;  // budget exhausted before full coverage
};

// Brute-force safety oracle: every party independently Conforming or
// HaltAt(t) over the run horizon, plus withhold masks for leaders.
SearchResult exhaustive_halt_search(const RunSetup& setup, const SearchOptions& opts = {});

}  // namespace swapsim
