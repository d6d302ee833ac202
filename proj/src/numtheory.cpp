#include "ectk/numtheory.hpp"

#include <vector>

namespace ectk {

namespace {

// Odd primes below 2^16, built once.
const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> table = [] {
        constexpr uint32_t limit = 1u << 16;
        std::vector<bool> composite(limit, false);
        std::vector<uint32_t> primes;
        for (uint32_t i = 3; i < limit; i += 2) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < limit; j += 2 * i) composite[j] = true;
        }
        return primes;
    }();
    return table;
}

uint32_t mod_u32(const BigUint& n, uint32_t d) {
    return static_cast<uint32_t>(mpz_fdiv_ui(n.raw().get_mpz_t(), d));
}

// Miller-Rabin rounds only; caller has already screened small factors.
bool miller_rabin(const BigUint& n, RngHandle& rng, int rounds) {
    const BigUint one(1);
    const BigUint n_minus_1 = n - one;
    BigUint d = n_minus_1;
    size_t s = 0;
    while (!d.is_odd()) {
        d = d >> 1;
        ++s;
    }
    const BigUint n_minus_3 = n - BigUint(3);
    for (int round = 0; round < rounds; ++round) {
        BigUint a = rand_below(rng, n_minus_3) + BigUint(2); // a in [2, n-2]
        BigUint x = mod_pow(a, d, n);
        if (x == one || x == n_minus_1) continue;
        bool witness = true;
        for (size_t i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace

BigUint mod_pow(const BigUint& base, const BigUint& exp, const BigUint& modulus) {
    if (modulus < BigUint(2)) throw DomainError("mod_pow: modulus must be >= 2");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.raw().get_mpz_t(), exp.raw().get_mpz_t(), modulus.raw().get_mpz_t());
    return BigUint(std::move(r));
}

BigUint mod_inv(const BigUint& a, const BigUint& modulus) {
    if (modulus < BigUint(2)) throw DomainError("mod_inv: modulus must be >= 2");
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.raw().get_mpz_t(), modulus.raw().get_mpz_t()) == 0)
        throw NotInvertibleError("mod_inv: argument shares a factor with the modulus");
    return BigUint(std::move(r));
}

BigUint gcd(const BigUint& a, const BigUint& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigUint(std::move(r));
}

BigUint lcm(const BigUint& a, const BigUint& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigUint(std::move(r));
}

BigUint rand_below(RngHandle& rng, const BigUint& bound) {
    if (bound.is_zero()) throw DomainError("rand_below: bound must be >= 1");
    const size_t bits = bound.bit_length();
    const size_t nbytes = (bits + 7) / 8;
    const unsigned top_mask = (bits % 8 == 0) ? 0xff : ((1u << (bits % 8)) - 1);
    std::vector<uint8_t> buf(nbytes);
    for (;;) {
        rng.fill(buf);
        buf[0] &= static_cast<uint8_t>(top_mask);
        BigUint candidate = BigUint::from_bytes_be(buf);
        if (candidate < bound) return candidate;
    }
}

BigUint rand_bits(RngHandle& rng, unsigned bits) {
    if (bits == 0) throw DomainError("rand_bits: bits must be >= 1");
    if (bits == 1) return BigUint(1);
    BigUint low = rand_below(rng, BigUint(1) << (bits - 1));
    return low + (BigUint(1) << (bits - 1));
}

bool is_probable_prime(const BigUint& n, RngHandle& rng, int rounds) {
    if (n < BigUint(2)) return false;
    if (n == BigUint(2)) return true;
    if (!n.is_odd()) return false;
    const bool small = n.bit_length() <= 32;
    for (uint32_t p : small_primes()) {
        if (n == BigUint(uint64_t(p))) return true;
        if (mod_u32(n, p) == 0) return false;
        if (small && uint64_t(p) * p > n.to_u64()) return true; // fully trial-divided
    }
    if (small) return true;
    return miller_rabin(n, rng, rounds);
}

namespace {

// Sieve flags for candidates base, base+2, ..., base+2(count-1); also_safe
// additionally strikes candidates where 2*candidate+1 has a small factor.
std::vector<bool> sieve_window(const BigUint& base, size_t count, bool also_safe) {
    std::vector<bool> ok(count, true);
    for (uint32_t sp : small_primes()) {
        const uint32_t r = mod_u32(base, sp);
        const uint32_t inv2 = (sp + 1) / 2;
        // base + 2i == 0 (mod sp)
        uint64_t i0 = (uint64_t(sp - r) % sp) * inv2 % sp;
        for (uint64_t i = i0; i < count; i += sp) ok[i] = false;
        if (also_safe) {
            // 2(base + 2i) + 1 == 0 (mod sp)  =>  4i == -(2r+1) (mod sp)
            const uint32_t inv4 = uint32_t((uint64_t(inv2) * inv2) % sp);
            uint64_t t = (2 * uint64_t(r) + 1) % sp;
            uint64_t j0 = ((sp - t) % sp) * inv4 % sp;
            for (uint64_t i = j0; i < count; i += sp) ok[i] = false;
        }
    }
    return ok;
}

constexpr unsigned kSieveThresholdBits = 64;
constexpr size_t kWindow = 1 << 14;

} // namespace

BigUint gen_prime(unsigned bits, RngHandle& rng) {
    if (bits < 8) throw DomainError("gen_prime: bits must be >= 8");
    if (bits < kSieveThresholdBits) {
        for (;;) {
            BigUint candidate = rand_bits(rng, bits);
            if (!candidate.is_odd()) candidate += BigUint(1);
            if (candidate.bit_length() != bits) continue;
            if (is_probable_prime(candidate, rng)) return candidate;
        }
    }
    for (;;) {
        BigUint base = rand_bits(rng, bits);
        if (!base.is_odd()) base += BigUint(1);
        // keep the window inside the exact bit range
        if ((base + BigUint(2 * kWindow)).bit_length() != bits) continue;
        std::vector<bool> ok = sieve_window(base, kWindow, false);
        for (size_t i = 0; i < kWindow; ++i) {
            if (!ok[i]) continue;
            BigUint candidate = base + BigUint(uint64_t(2 * i));
            if (miller_rabin(candidate, rng, 40)) return candidate;
        }
    }
}

std::pair<BigUint, BigUint> gen_safe_prime(unsigned bits, RngHandle& rng) {
    if (bits < 8) throw DomainError("gen_safe_prime: bits must be >= 8");
    if (bits < kSieveThresholdBits) {
        for (;;) {
            BigUint q = rand_bits(rng, bits - 1);
            if (!q.is_odd()) q += BigUint(1);
            if (q.bit_length() != bits - 1) continue;
            if (!is_probable_prime(q, rng)) continue;
            BigUint p = (q << 1) + BigUint(1);
            if (p.bit_length() == bits && is_probable_prime(p, rng)) return {p, q};
        }
    }
    for (;;) {
        BigUint base = rand_bits(rng, bits - 1);
        if (!base.is_odd()) base += BigUint(1);
        if ((base + BigUint(2 * kWindow)).bit_length() != bits - 1) continue;
        std::vector<bool> ok = sieve_window(base, kWindow, true);
        for (size_t i = 0; i < kWindow; ++i) {
            if (!ok[i]) continue;
            BigUint q = base + BigUint(uint64_t(2 * i));
            BigUint p = (q << 1) + BigUint(1);
            if (!miller_rabin(q, rng, 1)) continue;
            if (!miller_rabin(p, rng, 1)) continue;
            if (miller_rabin(q, rng, 40) && miller_rabin(p, rng, 40)) return {p, q};
        }
    }
}

bool is_subgroup_member(const BigUint& a, const BigUint& p, const BigUint& q) {
    if (a.is_zero() || a >= p) return false;
    return mod_pow(a, q, p) == BigUint(1);
}

} // namespace ectk
