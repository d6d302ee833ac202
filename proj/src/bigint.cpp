#include "ectk/bigint.hpp"

namespace ectk {

void BigUint::set_u64(uint64_t v) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    v_ = mpz_class();
    mpz_set_ui(v_.get_mpz_t(), static_cast<unsigned long>(v));
}

BigUint BigUint::from_hex(const std::string& hex) {
    if (hex.empty()) throw DomainError("BigUint::from_hex: empty string");
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), hex.c_str(), 16) != 0 || sgn(v) < 0)
        throw DomainError("BigUint::from_hex: invalid hex literal: " + hex);
    return BigUint(std::move(v));
}

BigUint BigUint::from_decimal(const std::string& dec) {
    if (dec.empty()) throw DomainError("BigUint::from_decimal: empty string");
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), dec.c_str(), 10) != 0 || sgn(v) < 0)
        throw DomainError("BigUint::from_decimal: invalid decimal literal: " + dec);
    return BigUint(std::move(v));
}

BigUint BigUint::from_bytes_be(std::span<const uint8_t> bytes) {
    mpz_class v;
    if (!bytes.empty())
        mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return BigUint(std::move(v));
}

std::string BigUint::to_hex() const { return v_.get_str(16); }
std::string BigUint::to_decimal() const { return v_.get_str(10); }

std::vector<uint8_t> BigUint::to_bytes_be() const {
    if (is_zero()) return {};
    size_t count = 0;
    std::vector<uint8_t> out((mpz_sizeinbase(v_.get_mpz_t(), 2) + 7) / 8);
    mpz_export(out.data(), &count, 1, 1, 1, 0, v_.get_mpz_t());
    out.resize(count);
    return out;
}

size_t BigUint::bit_length() const {
    if (is_zero()) return 0;
    return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw DomainError("BigUint::to_u64: value exceeds 64 bits");
    return static_cast<uint64_t>(mpz_get_ui(v_.get_mpz_t()));
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    if (a < b) throw DomainError("BigUint subtraction would go negative");
    return BigUint(mpz_class(a.v_ - b.v_));
}

BigUint operator/(const BigUint& a, const BigUint& b) {
    if (b.is_zero()) throw DomainError("BigUint division by zero");
    return BigUint(mpz_class(a.v_ / b.v_));
}

BigUint operator%(const BigUint& a, const BigUint& b) {
    if (b.is_zero()) throw DomainError("BigUint modulo by zero");
    return BigUint(mpz_class(a.v_ % b.v_));
}

static void require_modulus(const BigUint& m) {
    if (m < BigUint(2)) throw DomainError("modulus must be >= 2");
}

BigUint add_mod(const BigUint& a, const BigUint& b, const BigUint& m) {
    require_modulus(m);
    return (a + b) % m;
}

BigUint sub_mod(const BigUint& a, const BigUint& b, const BigUint& m) {
    require_modulus(m);
    BigUint ar = a % m, br = b % m;
    if (ar >= br) return ar - br;
    return ar + m - br;
}

BigUint mul_mod(const BigUint& a, const BigUint& b, const BigUint& m) {
    require_modulus(m);
    return (a * b) % m;
}

} // namespace ectk
