#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "swapsim/contract.hpp"

namespace swapsim {

struct TraceEvent {
    TimeTick tick = 0;
    VertexId actor;
    std::string action;
    std::string target;
    std::string detail;
};

// `t=<tick> <actor> <action> <arc/ledger> <detail>`
std::string to_string(const TraceEvent& e);

struct PublishAction {
    Arc arc;
    SwapContract contract;
};
struct UnlockAction {
    Arc arc;
    std::size_t lock = 0;
    Hashkey hashkey;
};
struct UnlockPlainAction {
    Arc arc;
    Secret secret;
};
struct RefundAction {
    Arc arc;
};
struct ClaimAction {
    Arc arc;
};
// leader reveal on the shared broadcast ledger
struct BroadcastAction {
    std::size_t lock = 0;
    Hashkey hashkey;
};
// trace-only note (protocol abandonment etc.)
struct NoteAction {
    std::string text;
};

using Action = std::variant<PublishAction, UnlockAction, UnlockPlainAction, RefundAction,
                            ClaimAction, BroadcastAction, NoteAction>;

struct BroadcastEntry {
    std::size_t lock = 0;
    Hashkey hashkey;
    TimeTick tick = 0;
};

struct PublishedContract {
    SwapContract contract;
    TimeTick publish_tick = 0;
    std::string ledger;
};

// What a party can see: previous-round state of the ledgers it is
// incident to, plus the broadcast ledger when enabled.
struct Snapshot {
    TimeTick now = 0;  // tick at which actions submitted this round execute
    int round = 0;
    std::map<Arc, const PublishedContract*> contracts;
    const std::vector<BroadcastEntry>* broadcast = nullptr;  // null when disabled

    const PublishedContract* find(const Arc& a) const {
        auto it = contracts.find(a);
        return it == contracts.end() ? nullptr : it->second;
    }
};

struct WorldConfig {
    std::map<Arc, std::string> ledger_of;  // every scenario arc mapped
    bool broadcast_enabled = false;
    TimeTick delta = 1;
};

// Simulated blockchains under a synchronous-round clock. One round = delta;
// actions submitted in round r execute at tick r*delta and become visible
// in round r+1 snapshots. Published contracts are append-only.
class World {
public:
    explicit World(WorldConfig cfg);

    TimeTick clock() const { return clock_; }
    int round() const { return round_; }
    TimeTick delta() const { return cfg_.delta; }

    void submit(const VertexId& caller, Action action);
    void advance_round(const KeyStore& keys);

    Snapshot observe(const VertexId& party) const;

    bool all_published() const;  // every configured arc has a contract
    bool all_terminal() const;   // every published contract left Active
    std::size_t measure_storage() const;

    const std::vector<TraceEvent>& trace() const { return trace_; }
    const std::map<Arc, PublishedContract>& contracts() const { return published_; }
    const std::map<Arc, std::string>& ledger_of() const { return cfg_.ledger_of; }
    std::set<Arc> triggered_arcs() const;

private:
    struct Pending {
        VertexId caller;
        std::uint64_t seq;
        Action action;
    };

    WorldConfig cfg_;
    TimeTick clock_ = 0;
    int round_ = 0;
    std::uint64_t seq_ = 0;
    std::map<Arc, PublishedContract> published_;
    std::vector<BroadcastEntry> broadcast_;
    std::map<Arc, PublishedContract> visible_published_;
    std::vector<BroadcastEntry> visible_broadcast_;
    std::vector<Pending> pending_;
    std::vector<TraceEvent> trace_;
    std::map<std::string, std::set<VertexId>> ledger_watchers_;

    void execute(const Pending& p, const KeyStore& keys);
    void log(const VertexId& actor, const std::string& action, const std::string& target,
             const std::string& detail);
};

}  // namespace swapsim
