#include "swapsim/contract.hpp"

#include <algorithm>
#include <set>

namespace swapsim {

std::string to_string(ContractStatus s) {
    switch (s) {
        case ContractStatus::Active: return "Active";
        case ContractStatus::Claimed: return "Claimed";
        case ContractStatus::Refunded: return "Refunded";
    }
    return "?";
}

SwapContract SwapContract::create(const ContractParams& p) {
    SwapContract c;
    if (!p.digraph.has_arc(p.party, p.counterparty))
        throw SwapError("contract: (" + p.party + "," + p.counterparty + ") is not an arc");
    if (p.leaders.empty() || p.leaders.size() != p.hashlocks.size())
        throw SwapError("contract: leader/hashlock length mismatch");
    std::set<VertexId> lset(p.leaders.begin(), p.leaders.end());
    if (!is_feedback_vertex_set(p.digraph, lset))
        throw SwapError("contract: leaders are not a feedback vertex set");
    if (p.delta <= 0) throw SwapError("contract: delta must be positive");
    if (p.mode == ContractMode::SingleTimeout && p.leaders.size() != 1)
        throw SwapError("contract: single-timeout mode needs exactly one leader");

    c.asset_ = p.asset;
    c.asset_.owner = p.party;
    c.digraph_ = p.digraph;
    c.leaders_ = p.leaders;
    c.party_ = p.party;
    c.counterparty_ = p.counterparty;
    c.hashlocks_ = p.hashlocks;
    c.start_ = p.start;
    c.delta_ = p.delta;
    c.mode_ = p.mode;
    c.broadcast_ = p.broadcast;
    c.diam_ = p.diam_override ? *p.diam_override : diameter(p.digraph);
    c.unlocked_.assign(p.leaders.size(), false);
    c.unlock_ticks_.assign(p.leaders.size(), -1);
    c.evidence_.assign(p.leaders.size(), std::nullopt);

    for (std::size_t i = 0; i < p.leaders.size(); ++i) {
        TimeTick dt;
        if (p.mode == ContractMode::SingleTimeout && p.timeout_override) {
            dt = *p.timeout_override;
        } else {
            auto len = longest_path_len(p.digraph, p.counterparty, p.leaders[i]);
            if (!len)
                throw SwapError("contract: leader " + p.leaders[i] + " unreachable from " +
                                p.counterparty);
            TimeTick path_term = static_cast<TimeTick>(*len);
            if (p.mode == ContractMode::SingleTimeout) path_term += 1;  // (diam + D(v,v^) + 1)*delta
            dt = p.start + (static_cast<TimeTick>(c.diam_) + path_term) * p.delta;
        }
        c.dead_times_.push_back(dt + p.dead_time_offset);
    }
    return c;
}

bool SwapContract::path_acceptable(const Hashkey& hk, std::size_t i) const {
    if (is_valid_hashkey_path(digraph_, hk.path, leaders_[i], counterparty_)) return true;
    // broadcast optimization: logical arc from the counterparty straight to
    // the leader, length-one path
    if (broadcast_ && hk.path.size() == 2 && hk.path.front() == counterparty_ &&
        hk.path.back() == leaders_[i] && counterparty_ != leaders_[i]) {
        std::set<VertexId> known(digraph_.vertexes().begin(), digraph_.vertexes().end());
        return known.count(hk.path.front()) && known.count(hk.path.back());
    }
    return false;
}

CallResult SwapContract::unlock(std::size_t i, const Hashkey& hk, const VertexId& caller,
                                TimeTick now, const KeyStore& keys) {
    if (caller != counterparty_) return {false, true, "unlock: caller is not counterparty"};
    if (mode_ != ContractMode::HashkeyVector) return {false, false, "unlock: wrong variant"};
    if (status_ != ContractStatus::Active) return {false, false, "unlock: contract " + to_string(status_)};
    if (i >= hashlocks_.size()) return {false, false, "unlock: bad index"};
    if (unlocked_[i]) return {false, false, "unlock: already unlocked"};
    if (hk.path.empty()) return {false, false, "unlock: empty path"};
    TimeTick deadline = hashkey_deadline(diam_, hk.path.size() - 1, start_, delta_);
    if (!(now < deadline)) return {false, false, "unlock: hashkey timed out"};
    if (hashlock_of(hk.secret) != hashlocks_[i]) return {false, false, "unlock: wrong secret"};
    if (!path_acceptable(hk, i)) return {false, false, "unlock: invalid path"};
    if (!verify_chain(hk, keys)) return {false, false, "unlock: bad signature chain"};
    unlocked_[i] = true;
    unlock_ticks_[i] = now;
    evidence_[i] = hk;
    if (is_triggered() && trigger_tick_ < 0) trigger_tick_ = now;
    return {true, false, "unlocked[" + std::to_string(i) + "]"};
}

CallResult SwapContract::unlock_plain(const Secret& s, const VertexId& caller, TimeTick now) {
    if (caller != counterparty_) return {false, true, "unlock: caller is not counterparty"};
    if (mode_ != ContractMode::SingleTimeout) return {false, false, "unlock: wrong variant"};
    if (status_ != ContractStatus::Active) return {false, false, "unlock: contract " + to_string(status_)};
    if (unlocked_[0]) return {false, false, "unlock: already unlocked"};
    if (!(now < dead_times_[0])) return {false, false, "unlock: timed out"};
    if (hashlock_of(s) != hashlocks_[0]) return {false, false, "unlock: wrong secret"};
    unlocked_[0] = true;
    unlock_ticks_[0] = now;
    revealed_ = s;
    if (trigger_tick_ < 0) trigger_tick_ = now;
    return {true, false, "unlocked[0]"};
}

CallResult SwapContract::refund(const VertexId& caller, TimeTick now) {
    if (caller != party_) return {false, true, "refund: caller is not party"};
    if (status_ != ContractStatus::Active) return {false, false, "refund: contract " + to_string(status_)};
    for (std::size_t i = 0; i < unlocked_.size(); ++i) {
        if (!unlocked_[i] && now >= dead_times_[i]) {
            status_ = ContractStatus::Refunded;
            asset_.owner = party_;
            terminal_tick_ = now;
            return {true, false, "refunded (hashlock " + std::to_string(i) + " dead)"};
        }
    }
    return {false, false, "refund: no dead hashlock"};
}

CallResult SwapContract::claim(const VertexId& caller, TimeTick now) {
    if (caller != counterparty_) return {false, true, "claim: caller is not counterparty"};
    if (status_ != ContractStatus::Active) return {false, false, "claim: contract " + to_string(status_)};
    if (!is_triggered()) return {false, false, "claim: hashlock still locked"};
    status_ = ContractStatus::Claimed;
    asset_.owner = counterparty_;
    terminal_tick_ = now;
    return {true, false, "claimed"};
}

bool SwapContract::is_triggered() const {
    return std::all_of(unlocked_.begin(), unlocked_.end(), [](bool b) { return b; });
}

std::vector<std::uint8_t> SwapContract::serialize() const {
    std::vector<std::uint8_t> out;
    put_u8(out, 1);  // format version
    put_u8(out, mode_ == ContractMode::HashkeyVector ? 0 : 1);
    put_u8(out, broadcast_ ? 1 : 0);
    put_bytes32(out, address_of(party_));
    put_bytes32(out, address_of(counterparty_));
    put_str(out, asset_.label);
    put_u64(out, asset_.amount);
    // digraph copy: per-vertex address + verification tag, per-arc endpoints
    put_u16(out, static_cast<std::uint16_t>(digraph_.vertexes().size()));
    for (const auto& v : digraph_.vertexes()) {
        put_bytes32(out, address_of(v));
        put_bytes32(out, sha256_concat({address_of(v)}));  // stand-in public key material
    }
    put_u16(out, static_cast<std::uint16_t>(digraph_.arcs().size()));
    for (const auto& a : digraph_.arcs()) {
        put_bytes32(out, address_of(a.head));
        put_bytes32(out, address_of(a.tail));
    }
    put_u16(out, static_cast<std::uint16_t>(leaders_.size()));
    for (const auto& l : leaders_) put_bytes32(out, address_of(l));
    for (const auto& h : hashlocks_) put_bytes32(out, h.digest);
    for (bool b : unlocked_) put_u8(out, b ? 1 : 0);
    for (TimeTick t : dead_times_) put_i64(out, t);
    put_i64(out, start_);
    put_i64(out, delta_);
    put_u8(out, static_cast<std::uint8_t>(status_));
    return out;
}

}  // namespace swapsim
