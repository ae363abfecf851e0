#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "zemor/collision.hpp"
#include "zemor/deadline.hpp"
#include "zemor/matrix.hpp"
#include "zemor/number_theory.hpp"
#include "zemor/random.hpp"
#include "zemor/word.hpp"

namespace zemor {

/// M = P^perm * L * D * U with P = (0 1; -1 0), L = (1 0; lower 1),
/// D = diag(diag, diag^-1), U = (1 upper; 0 1).
struct LUParts {
    bool perm = false;
    mpz_class lower;
    mpz_class diag;
    mpz_class upper;

    friend bool operator==(const LUParts&, const LUParts&) = default;
};

LUParts lu_decompose(const ModMatrix2& m);
ModMatrix2 recompose(const LUParts& parts, const mpz_class& p);

/// Integer lift (a + k1 p, k2 p; k3 p, d + k4 p) of diag(a, a^-1) with
/// a*d = 1 + p*n, gcd(a, d) = 1 and determinant exactly 1.
struct DiagonalLift {
    mpz_class a, d, n;
    mpz_class k1, k2, k3, k4;

    IntMatrix2 matrix(const mpz_class& p) const;
};

/// The lift with k4's random multiplier fixed. Requires 1 < a < p and
/// 1 <= multiplier <= p. k2 is the balanced divisor of
/// T = k1 k4 + (n + a k4 + d k1) / p and k3 = T / k2.
DiagonalLift diagonal_lift_with_multiplier(const mpz_class& a, const mpz_class& p,
                                           const mpz_class& multiplier,
                                           const FactorLimits& limits = {});

/// Multiplier drawn uniformly from [1, p].
DiagonalLift diagonal_lift(const mpz_class& a, const mpz_class& p, Rng& rng,
                           const FactorLimits& limits = {});

/// True when every lift entry lies in [1, 8 p^3] and k3 / k2 <= p.
bool lift_is_balanced(const DiagonalLift& lift, const mpz_class& p);

/// Reduces each run exponent mod p (A and B have order p) and writes an
/// exponent above p/2 as the inverse letter to the power p - e. Adjacent runs
/// on the same generator are merged; zero runs vanish.
Word compress_powers(const Word& w, const mpz_class& p);

struct DiagonalWordOptions {
    unsigned attempts = 15;             ///< Euclidean attempts before keeping the shortest
    unsigned draws_per_attempt = 64;    ///< lift redraws allowed per attempt
    std::uint64_t rho_iterations = std::uint64_t{1} << 18;
};

/// Word over {A, B, A^-1, B^-1} evaluating to diag(a, a^-1); empty for a = 1.
/// Accepts the first attempt of length <= 1000 ln p, otherwise the shortest.
/// Throws RetryExhausted if no attempt produced a balanced lift.
Word diagonal_word(const mpz_class& a, const mpz_class& p, Rng& rng, const Deadline& deadline = {},
                   const DiagonalWordOptions& options = {});

/// A^-1 B A^-1 followed by the word for diag(-1, -1); evaluates to (0 1; -1 0).
Word permutation_word(const mpz_class& p, Rng& rng, const Deadline& deadline = {});

enum class Side { Lower, Upper };

/// Word for (1 0; b 1) (Lower) or (1 b; 0 1) (Upper); empty for b = 0.
/// Squares use D(x^-1) B D(x); non-squares split b = r^2 - s^2.
Word unitriangular_word(const mpz_class& b, Side side, const mpz_class& p, Rng& rng,
                        const Deadline& deadline = {});

enum class Alphabet { Extended, Positive };

/// Extended-alphabet preimage together with the inverse-generator words that
/// turn it into a positive word.
struct PositivePreimage {
    Word extended;
    InverseWords inverses;

    /// Length after substituting the inverse words; throws std::overflow_error
    /// past 2^64 - 1.
    std::uint64_t length() const;
    /// Materializes the positive word. Throws std::length_error if it would
    /// need more than max_runs runs.
    Word expand(std::size_t max_runs = kMaxExpandedRuns) const;

    static constexpr std::size_t kMaxExpandedRuns = std::size_t{1} << 25;
};

/// Replaces every A^-1 / B^-1 letter by the matching inverse word.
Word substitute_inverses(const Word& w, const InverseWords& inverses,
                         std::size_t max_runs = PositivePreimage::kMaxExpandedRuns);

/// Extended word: the P?, L, D and U words concatenated and freely reduced.
Word extended_preimage(const ModMatrix2& m, Rng& rng, const Deadline& deadline = {});

PositivePreimage positive_preimage(const ModMatrix2& m, Rng& rng, const Deadline& deadline = {});

/// Word evaluating to m, over {A, B, A^-1, B^-1} or over {A, B} alone.
Word preimage_word(const ModMatrix2& m, Rng& rng, Alphabet alphabet, const Deadline& deadline = {});

/// Uniformly random element of SL2(p).
ModMatrix2 random_sl2(const mpz_class& p, Rng& rng);

}  // namespace zemor
