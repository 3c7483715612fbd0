#include "swapsim/ledger.hpp"

#include <algorithm>
#include <sstream>

namespace swapsim {

std::string to_string(const TraceEvent& e) {
    std::ostringstream os;
    os << "t=" << e.tick << " " << e.actor << " " << e.action << " " << e.target;
    if (!e.detail.empty()) os << " " << e.detail;
    return os.str();
}

World::World(WorldConfig cfg) : cfg_(std::move(cfg)) {
    for (const auto& [arc, ledger] : cfg_.ledger_of) {
        ledger_watchers_[ledger].insert(arc.head);
        ledger_watchers_[ledger].insert(arc.tail);
    }
}

void World::submit(const VertexId& caller, Action action) {
    pending_.push_back(Pending{caller, seq_++, std::move(action)});
}

void World::log(const VertexId& actor, const std::string& action, const std::string& target,
                const std::string& detail) {
    trace_.push_back(TraceEvent{clock_, actor, action, target, detail});
}

void World::execute(const Pending& p, const KeyStore& keys) {
    const TimeTick now = clock_;
    if (const auto* pub = std::get_if<PublishAction>(&p.action)) {
        auto ledger_it = cfg_.ledger_of.find(pub->arc);
        if (ledger_it == cfg_.ledger_of.end()) {
            log(p.caller, "publish", to_string(pub->arc), "rejected:unknown-arc");
            return;
        }
        if (published_.count(pub->arc)) {
            log(p.caller, "publish", to_string(pub->arc), "rejected:duplicate");
            return;
        }
        if (pub->contract.party() != p.caller) {
            log(p.caller, "publish", to_string(pub->arc), "rejected:not-party");
            return;
        }
        if (pub->contract.party() != pub->arc.head || pub->contract.counterparty() != pub->arc.tail) {
            log(p.caller, "publish", to_string(pub->arc), "rejected:arc-mismatch");
            return;
        }
        published_.emplace(pub->arc,
                           PublishedContract{pub->contract, now, ledger_it->second});
        log(p.caller, "publish", to_string(pub->arc), "ledger=" + ledger_it->second);
        return;
    }
    if (const auto* note = std::get_if<NoteAction>(&p.action)) {
        log(p.caller, "note", "-", note->text);
        return;
    }
    if (const auto* bc = std::get_if<BroadcastAction>(&p.action)) {
        if (!cfg_.broadcast_enabled) {
            log(p.caller, "broadcast", "-", "rejected:no-broadcast-ledger");
            return;
        }
        if (bc->hashkey.path.size() != 1 || bc->hashkey.path.front() != p.caller) {
            log(p.caller, "broadcast", "-", "rejected:not-own-degenerate-hashkey");
            return;
        }
        broadcast_.push_back(BroadcastEntry{bc->lock, bc->hashkey, now});
        log(p.caller, "broadcast", "broadcast",
            "lock=" + std::to_string(bc->lock));
        return;
    }

    // contract calls
    Arc arc;
    if (const auto* u = std::get_if<UnlockAction>(&p.action)) arc = u->arc;
    else if (const auto* up = std::get_if<UnlockPlainAction>(&p.action)) arc = up->arc;
    else if (const auto* r = std::get_if<RefundAction>(&p.action)) arc = r->arc;
    else arc = std::get<ClaimAction>(p.action).arc;

    auto it = published_.find(arc);
    const std::string target = to_string(arc);
    if (it == published_.end()) {
        log(p.caller, "call", target, "rejected:unknown-contract");
        return;
    }
    SwapContract& c = it->second.contract;
    CallResult res;
    std::string action_name;
    if (const auto* u = std::get_if<UnlockAction>(&p.action)) {
        action_name = "unlock";
        res = c.unlock(u->lock, u->hashkey, p.caller, now, keys);
    } else if (const auto* up = std::get_if<UnlockPlainAction>(&p.action)) {
        action_name = "unlock";
        res = c.unlock_plain(up->secret, p.caller, now);
    } else if (std::get_if<RefundAction>(&p.action)) {
        action_name = "refund";
        res = c.refund(p.caller, now);
    } else {
        action_name = "claim";
        res = c.claim(p.caller, now);
    }
    std::string detail = res.state_changed ? "ok" : (res.denied ? "denied" : "noop");
    if (!res.note.empty()) detail += " (" + res.note + ")";
    log(p.caller, action_name, target, detail);
}

void World::advance_round(const KeyStore& keys) {
    std::stable_sort(pending_.begin(), pending_.end(), [](const Pending& a, const Pending& b) {
        if (a.caller != b.caller) return a.caller < b.caller;
        return a.seq < b.seq;
    });
    for (const Pending& p : pending_) execute(p, keys);
    pending_.clear();
    visible_published_ = published_;
    visible_broadcast_ = broadcast_;
    clock_ += cfg_.delta;
    ++round_;
}

Snapshot World::observe(const VertexId& party) const {
    Snapshot s;
    s.now = clock_;
    s.round = round_;
    for (const auto& [arc, pub] : visible_published_) {
        auto watchers = ledger_watchers_.find(pub.ledger);
        if (watchers != ledger_watchers_.end() && watchers->second.count(party))
            s.contracts.emplace(arc, &pub);
    }
    if (cfg_.broadcast_enabled) s.broadcast = &visible_broadcast_;
    return s;
}

bool World::all_published() const { return published_.size() == cfg_.ledger_of.size(); }

bool World::all_terminal() const {
    return std::all_of(published_.begin(), published_.end(), [](const auto& kv) {
        return kv.second.contract.status() != ContractStatus::Active;
    });
}

std::size_t World::measure_storage() const {
    std::size_t total = 0;
    for (const auto& [arc, pub] : published_) total += pub.contract.serialize().size();
    return total;
}

std::set<Arc> World::triggered_arcs() const {
    std::set<Arc> out;
    for (const auto& [arc, pub] : published_)
        if (pub.contract.is_triggered()) out.insert(arc);
    return out;
}

}  // namespace swapsim
