#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swapsim/crypto.hpp"
#include "swapsim/digraph.hpp"

namespace swapsim {

struct Asset {
    std::string label;
    std::uint64_t amount = 1;
    VertexId owner;
    bool operator==(const Asset&) const = default;
};

enum class ContractStatus { Active, Claimed, Refunded };
enum class ContractMode { HashkeyVector, SingleTimeout };

std::string to_string(ContractStatus s);

// Result of a contract call. Authorization failures are denials; every
// other failed check is a silent no-op, mirroring the unguarded ifs in
// the on-chain functions.
struct CallResult {
    bool state_changed = false;
    bool denied = false;
    std::string note;  // short reason for the trace
};

struct ContractParams {
    Asset asset;
    Digraph digraph;
    std::vector<VertexId> leaders;
    VertexId party;
    VertexId counterparty;
    std::vector<Hashlock> hashlocks;
    TimeTick start = 0;
    TimeTick delta = 1;
    ContractMode mode = ContractMode::HashkeyVector;
    bool broadcast = false;
    TimeTick dead_time_offset = 0;                 // fault-injection knob
    std::optional<TimeTick> timeout_override;      // single-timeout fault knob
    std::optional<int> diam_override;              // for forced runs on invalid digraphs
};

// Per-arc escrow state machine: hashlock vector, unlock/refund/claim.
class SwapContract {
public:
    static SwapContract create(const ContractParams& p);

    CallResult unlock(std::size_t i, const Hashkey& hk, const VertexId& caller, TimeTick now,
                      const KeyStore& keys);
    // single-timeout variant: plain secret reveal
    CallResult unlock_plain(const Secret& s, const VertexId& caller, TimeTick now);
    CallResult refund(const VertexId& caller, TimeTick now);
    CallResult claim(const VertexId& caller, TimeTick now);

    bool is_triggered() const;

    const Asset& asset() const { return asset_; }
    const Digraph& digraph() const { return digraph_; }
    const std::vector<VertexId>& leaders() const { return leaders_; }
    const VertexId& party() const { return party_; }
    const VertexId& counterparty() const { return counterparty_; }
    const std::vector<Hashlock>& hashlocks() const { return hashlocks_; }
    const std::vector<bool>& unlocked() const { return unlocked_; }
    const std::vector<TimeTick>& unlock_ticks() const { return unlock_ticks_; }
    const std::vector<TimeTick>& dead_times() const { return dead_times_; }
    TimeTick start() const { return start_; }
    TimeTick delta() const { return delta_; }
    int diam() const { return diam_; }
    ContractMode mode() const { return mode_; }
    ContractStatus status() const { return status_; }
    TimeTick trigger_tick() const { return trigger_tick_; }
    TimeTick terminal_tick() const { return terminal_tick_; }
    // evidence readable from the ledger by observers
    const std::vector<std::optional<Hashkey>>& unlock_evidence() const { return evidence_; }
    const std::optional<Secret>& revealed_secret() const { return revealed_; }

    std::vector<std::uint8_t> serialize() const;

private:
    Asset asset_;
    Digraph digraph_;
    std::vector<VertexId> leaders_;
    VertexId party_;
    VertexId counterparty_;
    std::vector<Hashlock> hashlocks_;
    std::vector<bool> unlocked_;
    std::vector<TimeTick> unlock_ticks_;
    std::vector<TimeTick> dead_times_;
    TimeTick start_ = 0;
    TimeTick delta_ = 1;
    int diam_ = 0;
    ContractMode mode_ = ContractMode::HashkeyVector;
    bool broadcast_ = false;
    ContractStatus status_ = ContractStatus::Active;
    TimeTick trigger_tick_ = -1;
    TimeTick terminal_tick_ = -1;
    std::vector<std::optional<Hashkey>> evidence_;
    std::optional<Secret> revealed_;

    bool path_acceptable(const Hashkey& hk, std::size_t i) const;
};

}  // namespace swapsim
