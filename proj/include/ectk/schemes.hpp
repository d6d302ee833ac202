#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ectk/bigint.hpp"
#include "ectk/numtheory.hpp"
#include "ectk/rng.hpp"

namespace ectk {

// Concrete cryptosystem instances. The two broken variants fix the encryption
// randomness to 1, making Enc a deterministic function of the message; they
// exist so the games have distinguishable negative-control schemes for each
// homomorphism type.
enum class SchemeId {
    additive,                      // Paillier-style, Dec(c*c') = m+m'
    multiplicative,                // ElGamal-style,  Dec(c*c') = m*m'
    broken_deterministic,          // multiplicative with rho fixed to 1
    broken_deterministic_additive, // additive with rho fixed to 1
};

std::string to_string(SchemeId id);
SchemeId scheme_from_string(const std::string& name);

inline bool is_deterministic(SchemeId id) {
    return id == SchemeId::broken_deterministic || id == SchemeId::broken_deterministic_additive;
}

// True for schemes whose hom_op decrypts to m+m'.
inline bool has_additive_homomorphism(SchemeId id) {
    return id == SchemeId::additive || id == SchemeId::broken_deterministic_additive;
}

// Safe-prime group: p = 2q + 1, g generates the order-q subgroup.
struct GroupParams {
    BigUint p, q, g;
};

struct AdditivePublic {
    BigUint n, n_squared;
};
struct AdditiveSecret {
    BigUint lambda, mu; // lcm(p-1, q-1) and its inverse mod n
};
struct MultiplicativePublic {
    GroupParams group;
    BigUint h; // g^x mod p
};
struct MultiplicativeSecret {
    BigUint x;
};

struct PublicKey {
    SchemeId scheme;
    unsigned lambda_bits;
    std::variant<AdditivePublic, MultiplicativePublic> material;

    const AdditivePublic& additive() const;
    const MultiplicativePublic& multiplicative() const;
};

struct SecretKey {
    std::variant<AdditiveSecret, MultiplicativeSecret> material;
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

// Value in [0, modulus); `modulus` is the ambient plaintext modulus (n for the
// additive schemes, p for the multiplicative ones, whose plaintext space is
// the order-q subgroup plus the degenerate 0).
struct Plaintext {
    BigUint value;
    BigUint modulus;

    Plaintext() = default;
    Plaintext(BigUint v, BigUint m);

    friend bool operator==(const Plaintext& a, const Plaintext& b) { return a.value == b.value; }
};

struct Ciphertext {
    SchemeId scheme;
    std::vector<BigUint> parts; // one element mod n^2, or the pair (c1, c2) mod p

    friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// --- key generation -------------------------------------------------------

// lambda_bits >= 16, even. Additive schemes: n = p*q with fresh primes of
// lambda/2 bits. Multiplicative schemes: safe-prime group of lambda bits from
// the deterministic per-lambda pool, fresh generator and secret exponent.
KeyPair keygen(SchemeId id, unsigned lambda_bits, RngHandle& rng);

// Construction from explicit parameters, for tiny test keys and deserialization.
KeyPair additive_keypair_from_primes(SchemeId id, const BigUint& p, const BigUint& q);
KeyPair multiplicative_keypair_from_group(SchemeId id, const GroupParams& group, const BigUint& x);

// Deterministic per-lambda safe-prime groups shared by multiplicative keygen.
size_t group_pool_size(unsigned lambda_bits);
const GroupParams& pooled_group(unsigned lambda_bits, size_t index);

// --- plaintext helpers ----------------------------------------------------

BigUint plaintext_modulus(const PublicKey& pk);
bool in_plaintext_space(const PublicKey& pk, const BigUint& value);
Plaintext make_plaintext(const PublicKey& pk, const BigUint& value); // DomainError if outside
Plaintext make_plaintext(const PublicKey& pk, uint64_t value);

// Uniform valid plaintext: [0, n) additive, random subgroup element multiplicative.
Plaintext random_plaintext(const PublicKey& pk, RngHandle& rng);

// --- the cryptosystem tuple ------------------------------------------------

Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, RngHandle& rng);

// rho in Z_n^* (additive) or [1, q-1] (multiplicative). The broken schemes'
// encrypt() is exactly encrypt_with_randomness(pk, m, 1).
Ciphertext encrypt_with_randomness(const PublicKey& pk, const Plaintext& m, const BigUint& rho);

Plaintext decrypt(const KeyPair& keys, const Ciphertext& c);

// Homomorphic combine: decrypts to m+m' (additive schemes) or m*m'
// (multiplicative schemes).
Ciphertext hom_op(const PublicKey& pk, const Ciphertext& a, const Ciphertext& b);

// Decrypts to -m mod n (additive; exponent n-1 on the group element) or
// m^-1 mod p (multiplicative).
Ciphertext hom_inv(const PublicKey& pk, const Ciphertext& c);

} // namespace ectk
