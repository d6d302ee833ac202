#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ectk/errors.hpp"

namespace ectk {

// Arbitrary-precision non-negative integer. Canonical form is maintained by
// the underlying representation; subtraction below zero is a DomainError
// rather than a wrap.
class BigUint {
public:
    BigUint() : v_(0) {}
    BigUint(uint64_t v) { set_u64(v); }

    static BigUint from_hex(const std::string& hex);
    static BigUint from_decimal(const std::string& dec);
    static BigUint from_bytes_be(std::span<const uint8_t> bytes);

    std::string to_hex() const;     // lowercase, no leading zeros, "0" for zero
    std::string to_decimal() const;
    std::vector<uint8_t> to_bytes_be() const; // minimal length, empty for zero

    size_t bit_length() const;      // 0 for zero
    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    bool bit(size_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }

    bool fits_u64() const { return mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }
    uint64_t to_u64() const;        // DomainError if too large

    friend BigUint operator+(const BigUint& a, const BigUint& b) { return BigUint(a.v_ + b.v_); }
    friend BigUint operator-(const BigUint& a, const BigUint& b);
    friend BigUint operator*(const BigUint& a, const BigUint& b) { return BigUint(a.v_ * b.v_); }
    friend BigUint operator/(const BigUint& a, const BigUint& b);
    friend BigUint operator%(const BigUint& a, const BigUint& b);
    friend BigUint operator<<(const BigUint& a, unsigned k) { return BigUint(a.v_ << k); }
    friend BigUint operator>>(const BigUint& a, unsigned k) { return BigUint(a.v_ >> k); }

    BigUint& operator+=(const BigUint& b) { v_ += b.v_; return *this; }
    BigUint& operator*=(const BigUint& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    double to_double() const { return v_.get_d(); }

    // Internal handle for the number-theory layer.
    const mpz_class& raw() const { return v_; }
    explicit BigUint(mpz_class v) : v_(std::move(v)) {}

private:
    void set_u64(uint64_t v);
    mpz_class v_;
};

// (a op b) mod m helpers; m >= 2 is required.
BigUint add_mod(const BigUint& a, const BigUint& b, const BigUint& m);
BigUint sub_mod(const BigUint& a, const BigUint& b, const BigUint& m);
BigUint mul_mod(const BigUint& a, const BigUint& b, const BigUint& m);

} // namespace ectk
