#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace ectk {

using Digest256 = std::array<uint8_t, 32>;

// Incremental SHA-256 (FIPS 180-4).
class Sha256 {
public:
    Sha256() { reset(); }
    void reset();
    void update(std::span<const uint8_t> data);
    void update(std::string_view s) {
        update(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
    }
    Digest256 finish();

private:
    void process_block(const uint8_t* block);
    uint32_t state_[8];
    uint64_t total_len_ = 0;
    uint8_t buf_[64];
    size_t buf_len_ = 0;
};

Digest256 sha256(std::span<const uint8_t> data);
Digest256 sha256(std::string_view s);
std::string sha256_hex(std::string_view s);
std::string hex_encode(std::span<const uint8_t> bytes);

} // namespace ectk
