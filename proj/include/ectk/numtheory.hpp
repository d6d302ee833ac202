#pragma once

#include <utility>

#include "ectk/bigint.hpp"
#include "ectk/rng.hpp"

namespace ectk {

// base^exp mod modulus by square-and-multiply; modulus >= 2.
BigUint mod_pow(const BigUint& base, const BigUint& exp, const BigUint& modulus);

// Multiplicative inverse mod modulus via extended Euclid.
// Throws NotInvertibleError when gcd(a, modulus) != 1.
BigUint mod_inv(const BigUint& a, const BigUint& modulus);

BigUint gcd(const BigUint& a, const BigUint& b);
BigUint lcm(const BigUint& a, const BigUint& b);

// Uniform value in [0, bound), bound >= 1. Rejection sampling off the stream.
BigUint rand_below(RngHandle& rng, const BigUint& bound);

// Uniform value of exactly `bits` bits (top bit set), bits >= 1.
BigUint rand_bits(RngHandle& rng, unsigned bits);

// Miller-Rabin with `rounds` random bases (error probability <= 4^-rounds),
// after trial division by all primes below 2^16. Exact for n < 2^32.
bool is_probable_prime(const BigUint& n, RngHandle& rng, int rounds = 40);

// Random prime of exactly `bits` bits; bits >= 8. Windowed sieve then
// Miller-Rabin (40 rounds).
BigUint gen_prime(unsigned bits, RngHandle& rng);

// Safe prime p = 2q + 1 with both p, q prime and p of exactly `bits` bits.
// Returns (p, q).
std::pair<BigUint, BigUint> gen_safe_prime(unsigned bits, RngHandle& rng);

// Euler-criterion membership test for the order-q subgroup of Z_p^*
// (p = 2q + 1 a safe prime): a != 0 and a^q == 1 (mod p).
bool is_subgroup_member(const BigUint& a, const BigUint& p, const BigUint& q);

} // namespace ectk
