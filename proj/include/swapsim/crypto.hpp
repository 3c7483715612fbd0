#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swapsim/digraph.hpp"

namespace swapsim {

using TimeTick = long long;
using Bytes32 = std::array<std::uint8_t, 32>;

// The one hash used across the artifact: SHA-256.
Bytes32 sha256(std::span<const std::uint8_t> data);
Bytes32 sha256_concat(std::initializer_list<std::span<const std::uint8_t>> parts);

std::string hex(const Bytes32& b);

// Stable 32-byte address for a party name; used by the canonical wire
// encoding. Independent of the scenario seed.
Bytes32 address_of(const VertexId& v);

struct Secret {
    Bytes32 bytes{};
    bool operator==(const Secret&) const = default;
};

struct Hashlock {
    Bytes32 digest{};
    bool operator==(const Hashlock&) const = default;
};

Hashlock hashlock_of(const Secret& s);

// Deterministic byte source; all scenario randomness flows through one of
// these so runs replay bit-exactly.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : rng_(seed) {}
    std::uint64_t next_u64() { return rng_(); }
    // unbiased enough for simulation use; avoids std::uniform_int_distribution
    // whose output is implementation-defined
    std::uint64_t next_below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
    Bytes32 next_bytes32();

private:
    std::mt19937_64 rng_;
};

std::pair<Secret, Hashlock> new_secret(SeedStream& seeds);

// Simulated signature scheme: keyed digest over (signer id || payload).
// Verifiable and tamper-evident; a real scheme could replace it behind
// this interface.
class KeyStore {
public:
    KeyStore(std::uint64_t seed, const std::vector<VertexId>& parties);

    bool has(const VertexId& v) const { return keys_.count(v) != 0; }
    Bytes32 sign(std::span<const std::uint8_t> payload, const VertexId& signer) const;
    bool verify(std::span<const std::uint8_t> payload, const VertexId& signer,
                const Bytes32& attestation) const;
    Bytes32 public_tag(const VertexId& v) const;

private:
    std::map<VertexId, Bytes32> keys_;
};

struct SignatureLayer {
    VertexId signer;
    Bytes32 attestation{};
    bool operator==(const SignatureLayer&) const = default;
};

// Innermost layer first: layers[0] is the leader's signature over the
// secret, each later layer signs the previous attestation.
struct SignatureChain {
    std::vector<SignatureLayer> layers;
    bool operator==(const SignatureChain&) const = default;
};

struct Hashkey {
    Secret secret;
    std::vector<VertexId> path;  // path[0] = presenting counterparty, path.back() = leader
    SignatureChain chain;
    bool operator==(const Hashkey&) const = default;
};

// The leader's degenerate hashkey: path (leader), chain sig(s, leader).
Hashkey make_leader_hashkey(const Secret& s, const VertexId& leader, const KeyStore& keys);

// New hashkey with path v+p and v's signature over the previous chain.
// Requires v not already on the path and the arc (v, p.front()) in d.
Hashkey extend_hashkey(const Hashkey& hk, const VertexId& v, const Digraph& d,
                       const KeyStore& keys);

// Variant used for the broadcast optimization's logical arc: extends the
// leader's degenerate hashkey without requiring an arc of d.
Hashkey extend_hashkey_broadcast(const Hashkey& hk, const VertexId& v, const KeyStore& keys);

bool verify_chain(const Hashkey& hk, const KeyStore& keys);

bool verify_hashkey(const Hashkey& hk, const Hashlock& h, const Digraph& d,
                    const VertexId& leader, const VertexId& counterparty,
                    const KeyStore& keys);

// start + (diam(d) + |p|) * delta; the hashkey is valid strictly before
// this tick.
TimeTick hashkey_deadline(const Digraph& d, const std::vector<VertexId>& p, TimeTick start,
                          TimeTick delta);
TimeTick hashkey_deadline(int diam, std::size_t path_len, TimeTick start, TimeTick delta);

// Canonical length-prefixed byte encodings.
void put_u8(std::vector<std::uint8_t>& out, std::uint8_t v);
void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v);
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v);
void put_i64(std::vector<std::uint8_t>& out, std::int64_t v);
void put_bytes32(std::vector<std::uint8_t>& out, const Bytes32& b);
void put_str(std::vector<std::uint8_t>& out, const std::string& s);

std::vector<std::uint8_t> serialize_chain(const SignatureChain& chain);
std::vector<std::uint8_t> serialize_hashkey(const Hashkey& hk);

}  // namespace swapsim
