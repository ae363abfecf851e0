#pragma once

#include <optional>

#include <gmpxx.h>

#include "zemor/deadline.hpp"
#include "zemor/matrix.hpp"
#include "zemor/random.hpp"
#include "zemor/word.hpp"

namespace zemor {

/// Integer matrix (1 + k1 p, k2 p; k3 p, 1 + k4 p) of determinant 1, which
/// reduces to the identity mod p. k3 is the auxiliary prime p'.
struct CollisionLift {
    mpz_class k1, k2, k3, k4;
    mpz_class c;
    mpz_class p_prime;

    IntMatrix2 matrix(const mpz_class& p) const;
};

/// Solves for the lift with fixed (c, p'). Returns nullopt when (cp)^2 + 4c is
/// a non-residue mod p' or when k1 = cp - k4 would be negative.
std::optional<CollisionLift> identity_lift_for(const mpz_class& p, const mpz_class& c,
                                               const mpz_class& p_prime);

/// Draws c in [1, ceil(ln p)] and p' = next prime >= U[p, 2p] until a lift
/// exists. Throws RetryExhausted after 100 (ln p)^2 draws.
CollisionLift identity_lift(const mpz_class& p, Rng& rng, const Deadline& deadline = {});

/// Nonempty word over {A, B} evaluating to I mod p, no longer than 1000 ln p.
Word identity_word(const mpz_class& p, Rng& rng, const Deadline& deadline = {});

struct InverseWords {
    Word inv_a;  ///< evaluates to A^-1 mod p
    Word inv_b;  ///< evaluates to B^-1 mod p
};

/// Derives both inverse words from a positive identity word: the leading
/// letter is deleted, the other inverse comes from transpose_reverse.
InverseWords inverse_words_from_identity(const Word& identity);

InverseWords inverse_generator_words(const mpz_class& p, Rng& rng, const Deadline& deadline = {});

/// 1000 ln p, the acceptance threshold for identity and diagonal words.
double word_length_budget(const mpz_class& p);

/// Natural logarithm of a (possibly huge) positive integer.
double ln(const mpz_class& n);

}  // namespace zemor
