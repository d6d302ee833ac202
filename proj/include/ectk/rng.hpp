#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace ectk {

// 256-bit seed value. All experiment randomness is rooted in one of these so
// every run is replayable.
struct Seed256 {
    std::array<uint8_t, 32> bytes{};

    static Seed256 from_u64(uint64_t x);            // domain-separated hash of x
    static Seed256 from_hex(const std::string& hex); // exactly 64 hex chars
    std::string to_hex() const;

    friend bool operator==(const Seed256&, const Seed256&) = default;
};

// Deterministic ChaCha20-based random stream. Same seed, same stream.
// Move-only: a handle is owned by exactly one sequential task; concurrent
// work derives child seeds instead of sharing a handle.
class RngHandle {
public:
    explicit RngHandle(const Seed256& seed);

    RngHandle(RngHandle&&) noexcept = default;
    RngHandle& operator=(RngHandle&&) noexcept = default;
    RngHandle(const RngHandle&) = delete;
    RngHandle& operator=(const RngHandle&) = delete;

    void fill(std::span<uint8_t> out);
    uint32_t next_u32();
    uint64_t next_u64();
    int coin() { return static_cast<int>(next_u32() & 1u); }
    double next_unit(); // uniform in [0, 1), 53-bit resolution

    // Independent derived seeds; derivation reads only the root seed, not the
    // stream position.
    Seed256 child(uint64_t index) const;
    Seed256 child(std::string_view label) const;

    const Seed256& seed() const { return seed_; }

private:
    void refill();
    Seed256 seed_;
    std::array<uint8_t, 64> block_{};
    size_t pos_ = 64;
    uint64_t counter_ = 0;
};

} // namespace ectk
