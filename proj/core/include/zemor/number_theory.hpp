#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "zemor/deadline.hpp"
#include "zemor/random.hpp"

namespace zemor {

struct ExtGcd {
    mpz_class g;  ///< gcd(x, y) > 0
    mpz_class u;  ///< u*x + v*y == g
    mpz_class v;
};

/// Extended Euclid. x and y must not both be zero.
ExtGcd ext_gcd(const mpz_class& x, const mpz_class& y);

/// y in [1, m) with x*y = 1 mod m. Throws NotCoprime when gcd(x, m) != 1.
mpz_class mod_inv(const mpz_class& x, const mpz_class& m);

/// Legendre symbol by Euler's criterion: -1, 0 or +1.
int legendre(const mpz_class& x, const mpz_class& p);

/// Square root mod an odd prime; always the smaller root min(r, p - r).
/// Throws NonResidue when x is not a square mod p.
mpz_class sqrt_mod(const mpz_class& x, const mpz_class& p);

/// Miller-Rabin. Deterministic witness set below 2^64; above that the fixed
/// bases plus 40 pseudo-random rounds.
bool is_prime(const mpz_class& n);

/// Smallest prime >= n.
mpz_class next_prime(const mpz_class& n);

/// Uniform-ish prime with exactly `bits` bits (bits >= 3).
mpz_class random_prime(std::size_t bits, Rng& rng);

/// factorize() trial-divides by every prime below this bound.
inline constexpr unsigned kTrialDivisionLimit = 10000;

struct PrimePower {
    mpz_class prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by prime. Empty for n == 1.
using FactorMultiset = std::vector<PrimePower>;

struct FactorLimits {
    /// Cap on Pollard-rho iterations across the whole call; 0 means unlimited.
    std::uint64_t max_rho_iterations = 0;
    Deadline deadline{};
};

/// Trial division by primes below 10^4, then Brent's Pollard rho with
/// primality-certified cofactors. Throws FactorBudgetExceeded or Timeout only
/// when the limits say so.
FactorMultiset factorize(const mpz_class& n, const FactorLimits& limits = {});

/// Product of q^e over the multiset.
mpz_class multiply_out(const FactorMultiset& f);

inline constexpr std::size_t kDivisorEnumerationThreshold = std::size_t{1} << 16;

/// Largest divisor of n that is <= floor(sqrt(n)).
mpz_class balanced_divisor(const mpz_class& n);

/// Same, given n's factorization. Enumerates all divisors when there are at
/// most `enumeration_threshold` of them, else meets in the middle.
mpz_class balanced_divisor(const mpz_class& n, const FactorMultiset& factors,
                           std::size_t enumeration_threshold = kDivisorEnumerationThreshold);

/// d = a^-1 mod p shifted by the least k*p (k >= 0) so that gcd(a, d) = 1.
/// Requires 0 < a < p.
mpz_class coprime_lift(const mpz_class& a, const mpz_class& p);

/// The k-th smallest prime (1-based), for small k.
std::uint64_t nth_prime(unsigned k);

}  // namespace zemor
