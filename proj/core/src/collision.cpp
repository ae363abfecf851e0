#include "zemor/collision.hpp"

#include <cmath>

#include "zemor/errors.hpp"
#include "zemor/euclid_factor.hpp"
#include "zemor/number_theory.hpp"

namespace zemor {

namespace {

constexpr unsigned kIdentityWordAttempts = 100;

}  // namespace

double ln(const mpz_class& n) {
    if (sgn(n) <= 0) throw BadInput("ln of a non-positive integer");
    long exp = 0;
    const double mantissa = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp) * std::log(2.0);
}

double word_length_budget(const mpz_class& p) { return 1000.0 * ln(p); }

IntMatrix2 CollisionLift::matrix(const mpz_class& p) const {
    return IntMatrix2{1 + k1 * p, k2 * p, k3 * p, 1 + k4 * p};
}

std::optional<CollisionLift> identity_lift_for(const mpz_class& p, const mpz_class& c, const mpz_class& p_prime) {
    if (sgn(c) <= 0) throw BadInput("identity_lift_for needs c >= 1");
    if (p_prime == p || p_prime < 3) throw BadInput("auxiliary prime must be odd and differ from p");

    const mpz_class cp = c * p;
    // k4 solves k4^2 - cp k4 - c = 0 mod p'.
    mpz_class disc = cp * cp + 4 * c;
    mpz_mod(disc.get_mpz_t(), disc.get_mpz_t(), p_prime.get_mpz_t());
    if (legendre(disc, p_prime) == -1) return std::nullopt;
    const mpz_class root = sqrt_mod(disc, p_prime);
    const mpz_class half = (p_prime + 1) / 2;  // 2^-1 mod p'

    CollisionLift lift;
    lift.c = c;
    lift.p_prime = p_prime;
    lift.k4 = (cp + root) * half;
    mpz_mod(lift.k4.get_mpz_t(), lift.k4.get_mpz_t(), p_prime.get_mpz_t());
    lift.k1 = cp - lift.k4;
    if (sgn(lift.k1) < 0) return std::nullopt;

    const mpz_class numerator = c + lift.k1 * lift.k4;
    if (!mpz_divisible_p(numerator.get_mpz_t(), p_prime.get_mpz_t()))
        throw Error("internal: c + k1 k4 is not divisible by p'");
    mpz_divexact(lift.k2.get_mpz_t(), numerator.get_mpz_t(), p_prime.get_mpz_t());
    lift.k3 = p_prime;
    return lift;
}

CollisionLift identity_lift(const mpz_class& p, Rng& rng, const Deadline& deadline) {
    const double log_p = ln(p);
    const mpz_class c_max = std::max(1.0, std::ceil(log_p));
    const auto budget = static_cast<std::uint64_t>(std::ceil(100.0 * log_p * log_p));
    const mpz_class two_p = 2 * p;
    for (std::uint64_t i = 0; i < budget; ++i) {
        deadline.check();
        const mpz_class c = uniform_range(1, c_max, rng);
        mpz_class p_prime = next_prime(uniform_range(p, two_p, rng));
        if (p_prime == p) p_prime = next_prime(p + 1);
        if (auto lift = identity_lift_for(p, c, p_prime)) return *lift;
    }
    throw RetryExhausted("no suitable (c, p') within " + std::to_string(budget) + " draws for p = " + p.get_str());
}

Word identity_word(const mpz_class& p, Rng& rng, const Deadline& deadline) {
    const double budget = word_length_budget(p);
    for (unsigned attempt = 0; attempt < kIdentityWordAttempts; ++attempt) {
        const CollisionLift lift = identity_lift(p, rng, deadline);
        try {
            Word w = factor_nonneg(lift.matrix(p));
            if (!w.empty() && static_cast<double>(w.length()) <= budget) return w;
        } catch (const NotReducible&) {
        }
    }
    throw RetryExhausted("no identity word of length <= 1000 ln p for p = " + p.get_str());
}

InverseWords inverse_words_from_identity(const Word& identity) {
    if (identity.empty() || !identity.is_positive())
        throw BadInput("identity word must be a nonempty word over {A, B}");
    // X w' = I gives w' = X^-1; the other inverse is the transpose.
    const Letter first = identity.runs().front().letter;
    Word tail = identity.drop_first_letter();
    Word dual = transpose_reverse(tail);
    if (first == Letter::A) return InverseWords{std::move(tail), std::move(dual)};
    return InverseWords{std::move(dual), std::move(tail)};
}

InverseWords inverse_generator_words(const mpz_class& p, Rng& rng, const Deadline& deadline) {
    return inverse_words_from_identity(identity_word(p, rng, deadline));
}

}  // namespace zemor
