#include "swapsim/crypto.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstring>

namespace swapsim {

namespace {

std::span<const std::uint8_t> as_span(const std::string& s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

Bytes32 sha256(std::span<const std::uint8_t> data) {
    Bytes32 out{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr);
    return out;
}

Bytes32 sha256_concat(std::initializer_list<std::span<const std::uint8_t>> parts) {
    std::vector<std::uint8_t> buf;
    for (const auto& p : parts) buf.insert(buf.end(), p.begin(), p.end());
    return sha256(buf);
}

std::string hex(const Bytes32& b) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint8_t c : b) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

Bytes32 address_of(const VertexId& v) {
    const std::string tagged = "swapsim-address:" + v;
    return sha256(as_span(tagged));
}

Hashlock hashlock_of(const Secret& s) { return Hashlock{sha256(s.bytes)}; }

Bytes32 SeedStream::next_bytes32() {
    Bytes32 out{};
    for (int i = 0; i < 4; ++i) {
        std::uint64_t w = rng_();
        std::memcpy(out.data() + 8 * i, &w, 8);
    }
    return out;
}

std::pair<Secret, Hashlock> new_secret(SeedStream& seeds) {
    Secret s{seeds.next_bytes32()};
    return {s, hashlock_of(s)};
}

KeyStore::KeyStore(std::uint64_t seed, const std::vector<VertexId>& parties) {
    for (const VertexId& v : parties) {
        std::vector<std::uint8_t> buf;
        put_u64(buf, seed);
        put_str(buf, "key");
        put_str(buf, v);
        keys_[v] = sha256(buf);
    }
}

Bytes32 KeyStore::sign(std::span<const std::uint8_t> payload, const VertexId& signer) const {
    auto it = keys_.find(signer);
    if (it == keys_.end()) throw SwapError("sign: unknown signer " + signer);
    return sha256_concat({it->second, as_span(signer), payload});
}

bool KeyStore::verify(std::span<const std::uint8_t> payload, const VertexId& signer,
                      const Bytes32& attestation) const {
    auto it = keys_.find(signer);
    if (it == keys_.end()) return false;
    return sha256_concat({it->second, as_span(signer), payload}) == attestation;
}

Bytes32 KeyStore::public_tag(const VertexId& v) const {
    auto it = keys_.find(v);
    if (it == keys_.end()) throw SwapError("public_tag: unknown party " + v);
    return sha256_concat({as_span(std::string("pub")), it->second});
}

Hashkey make_leader_hashkey(const Secret& s, const VertexId& leader, const KeyStore& keys) {
    Hashkey hk;
    hk.secret = s;
    hk.path = {leader};
    hk.chain.layers.push_back({leader, keys.sign(s.bytes, leader)});
    return hk;
}

namespace {

Hashkey extend_impl(const Hashkey& hk, const VertexId& v, const KeyStore& keys) {
    Hashkey out = hk;
    out.path.insert(out.path.begin(), v);
    out.chain.layers.push_back({v, keys.sign(hk.chain.layers.back().attestation, v)});
    return out;
}

}  // namespace

Hashkey extend_hashkey(const Hashkey& hk, const VertexId& v, const Digraph& d,
                       const KeyStore& keys) {
    if (hk.path.empty()) throw SwapError("extend_hashkey: empty path");
    if (std::find(hk.path.begin(), hk.path.end(), v) != hk.path.end())
        throw SwapError("extend_hashkey: " + v + " already on path");
    if (!d.has_arc(v, hk.path.front()))
        throw SwapError("extend_hashkey: missing arc " + v + "->" + hk.path.front());
    return extend_impl(hk, v, keys);
}

Hashkey extend_hashkey_broadcast(const Hashkey& hk, const VertexId& v, const KeyStore& keys) {
    if (hk.path.size() != 1) throw SwapError("broadcast extension needs a degenerate hashkey");
    if (hk.path.front() == v) throw SwapError("broadcast extension by the leader itself");
    return extend_impl(hk, v, keys);
}

bool verify_chain(const Hashkey& hk, const KeyStore& keys) {
    if (hk.path.empty() || hk.chain.layers.size() != hk.path.size()) return false;
    // layers run leader-first; path runs counterparty-first
    for (std::size_t i = 0; i < hk.chain.layers.size(); ++i) {
        if (hk.chain.layers[i].signer != hk.path[hk.path.size() - 1 - i]) return false;
    }
    if (!keys.verify(hk.secret.bytes, hk.chain.layers[0].signer, hk.chain.layers[0].attestation))
        return false;
    for (std::size_t i = 1; i < hk.chain.layers.size(); ++i) {
        if (!keys.verify(hk.chain.layers[i - 1].attestation, hk.chain.layers[i].signer,
                         hk.chain.layers[i].attestation))
            return false;
    }
    return true;
}

bool verify_hashkey(const Hashkey& hk, const Hashlock& h, const Digraph& d,
                    const VertexId& leader, const VertexId& counterparty,
                    const KeyStore& keys) {
    if (hashlock_of(hk.secret) != h) return false;
    if (!is_valid_hashkey_path(d, hk.path, leader, counterparty)) return false;
    return verify_chain(hk, keys);
}

TimeTick hashkey_deadline(const Digraph& d, const std::vector<VertexId>& p, TimeTick start,
                          TimeTick delta) {
    if (delta <= 0) throw SwapError("hashkey_deadline: delta must be positive");
    if (p.empty()) throw SwapError("hashkey_deadline: empty path");
    return hashkey_deadline(diameter(d), p.size() - 1, start, delta);
}

TimeTick hashkey_deadline(int diam, std::size_t path_len, TimeTick start, TimeTick delta) {
    return start + (static_cast<TimeTick>(diam) + static_cast<TimeTick>(path_len)) * delta;
}

void put_u8(std::vector<std::uint8_t>& out, std::uint8_t v) { out.push_back(v); }

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_i64(std::vector<std::uint8_t>& out, std::int64_t v) {
    put_u64(out, static_cast<std::uint64_t>(v));
}

void put_bytes32(std::vector<std::uint8_t>& out, const Bytes32& b) {
    out.insert(out.end(), b.begin(), b.end());
}

void put_str(std::vector<std::uint8_t>& out, const std::string& s) {
    if (s.size() > 0xff) throw SwapError("string too long for canonical encoding");
    put_u8(out, static_cast<std::uint8_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
}

std::vector<std::uint8_t> serialize_chain(const SignatureChain& chain) {
    std::vector<std::uint8_t> out;
    put_u16(out, static_cast<std::uint16_t>(chain.layers.size()));
    for (const auto& layer : chain.layers) {
        put_str(out, layer.signer);
        put_bytes32(out, layer.attestation);
    }
    return out;
}

std::vector<std::uint8_t> serialize_hashkey(const Hashkey& hk) {
    std::vector<std::uint8_t> out;
    put_bytes32(out, hk.secret.bytes);
    put_u16(out, static_cast<std::uint16_t>(hk.path.size()));
    for (const auto& v : hk.path) put_str(out, v);
    auto chain = serialize_chain(hk.chain);
    out.insert(out.end(), chain.begin(), chain.end());
    return out;
}

}  // namespace swapsim
