#include "ectk/rng.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "ectk/errors.hpp"
#include "ectk/sha256.hpp"

namespace ectk {

namespace {

inline uint32_t load_le32(const uint8_t* p) {
    return uint32_t(p[0]) | (uint32_t(p[1]) << 8) | (uint32_t(p[2]) << 16) | (uint32_t(p[3]) << 24);
}

inline void store_le32(uint8_t* p, uint32_t v) {
    p[0] = uint8_t(v); p[1] = uint8_t(v >> 8); p[2] = uint8_t(v >> 16); p[3] = uint8_t(v >> 24);
}

inline void quarter_round(uint32_t& a, uint32_t& b, uint32_t& c, uint32_t& d) {
    a += b; d ^= a; d = std::rotl(d, 16);
    c += d; b ^= c; b = std::rotl(b, 12);
    a += b; d ^= a; d = std::rotl(d, 8);
    c += d; b ^= c; b = std::rotl(b, 7);
}

// RFC 8439 ChaCha20 block function: 256-bit key, 32-bit block count, 96-bit nonce.
void chacha20_block(const uint8_t key[32], uint32_t count, const uint8_t nonce[12], uint8_t out[64]) {
    uint32_t st[16];
    st[0] = 0x61707865; st[1] = 0x3320646e; st[2] = 0x79622d32; st[3] = 0x6b206574;
    for (int i = 0; i < 8; ++i) st[4 + i] = load_le32(key + 4 * i);
    st[12] = count;
    for (int i = 0; i < 3; ++i) st[13 + i] = load_le32(nonce + 4 * i);

    uint32_t w[16];
    std::memcpy(w, st, sizeof(w));
    for (int round = 0; round < 10; ++round) {
        quarter_round(w[0], w[4], w[8], w[12]);
        quarter_round(w[1], w[5], w[9], w[13]);
        quarter_round(w[2], w[6], w[10], w[14]);
        quarter_round(w[3], w[7], w[11], w[15]);
        quarter_round(w[0], w[5], w[10], w[15]);
        quarter_round(w[1], w[6], w[11], w[12]);
        quarter_round(w[2], w[7], w[8], w[13]);
        quarter_round(w[3], w[4], w[9], w[14]);
    }
    for (int i = 0; i < 16; ++i) store_le32(out + 4 * i, w[i] + st[i]);
}

} // namespace

Seed256 Seed256::from_u64(uint64_t x) {
    Sha256 h;
    h.update(std::string_view("ectk.seed.v1"));
    uint8_t be[8];
    for (int i = 0; i < 8; ++i) be[i] = uint8_t(x >> (56 - 8 * i));
    h.update(std::span<const uint8_t>(be, 8));
    Seed256 s;
    s.bytes = h.finish();
    return s;
}

Seed256 Seed256::from_hex(const std::string& hex) {
    if (hex.size() != 64) throw DomainError("Seed256::from_hex: expected 64 hex chars");
    Seed256 s;
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw DomainError("Seed256::from_hex: invalid hex digit");
    };
    for (size_t i = 0; i < 32; ++i)
        s.bytes[i] = uint8_t((nib(hex[2 * i]) << 4) | nib(hex[2 * i + 1]));
    return s;
}

std::string Seed256::to_hex() const { return hex_encode(bytes); }

RngHandle::RngHandle(const Seed256& seed) : seed_(seed) {}

void RngHandle::refill() {
    static const uint8_t kNonce[12] = {};
    chacha20_block(seed_.bytes.data(), static_cast<uint32_t>(counter_), kNonce, block_.data());
    ++counter_;
    pos_ = 0;
}

void RngHandle::fill(std::span<uint8_t> out) {
    size_t off = 0;
    while (off < out.size()) {
        if (pos_ == 64) refill();
        size_t take = std::min(out.size() - off, 64 - pos_);
        std::memcpy(out.data() + off, block_.data() + pos_, take);
        pos_ += take;
        off += take;
    }
}

uint32_t RngHandle::next_u32() {
    uint8_t b[4];
    fill(b);
    return load_le32(b);
}

uint64_t RngHandle::next_u64() {
    uint64_t lo = next_u32();
    uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double RngHandle::next_unit() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

static Seed256 derive(const Seed256& parent, uint8_t tag, std::span<const uint8_t> data) {
    Sha256 h;
    h.update(parent.bytes);
    h.update(std::span<const uint8_t>(&tag, 1));
    h.update(data);
    Seed256 s;
    s.bytes = h.finish();
    return s;
}

Seed256 RngHandle::child(uint64_t index) const {
    uint8_t be[8];
    for (int i = 0; i < 8; ++i) be[i] = uint8_t(index >> (56 - 8 * i));
    return derive(seed_, 0x01, std::span<const uint8_t>(be, 8));
}

Seed256 RngHandle::child(std::string_view label) const {
    return derive(seed_, 0x02,
                  std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(label.data()), label.size()));
}

} // namespace ectk
