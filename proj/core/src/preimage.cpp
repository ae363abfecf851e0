#include "zemor/preimage.hpp"

#include <stdexcept>

#include "zemor/errors.hpp"
#include "zemor/euclid_factor.hpp"

namespace zemor {

namespace {

mpz_class mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

LUParts lu_decompose(const ModMatrix2& m) {
    const mpz_class& p = m.modulus();
    LUParts parts;
    if (sgn(m.a()) != 0) {
        const mpz_class a_inv = mod_inv(m.a(), p);
        parts.lower = mod(m.c() * a_inv, p);
        parts.diag = m.a();
        parts.upper = mod(a_inv * m.b(), p);
    } else {
        // det = -bc = 1, so c is a unit.
        const mpz_class c_inv = mod_inv(m.c(), p);
        parts.perm = true;
        parts.lower = 0;
        parts.diag = mod(-m.c(), p);
        parts.upper = mod(c_inv * m.d(), p);
    }
    return parts;
}

ModMatrix2 recompose(const LUParts& parts, const mpz_class& p) {
    ModMatrix2 m = parts.perm ? ModMatrix2{0, 1, -1, 0, p} : ModMatrix2::identity(p);
    m = m * ModMatrix2{1, 0, parts.lower, 1, p};
    m = m * ModMatrix2::diagonal(parts.diag, p);
    return m * ModMatrix2{1, parts.upper, 0, 1, p};
}

IntMatrix2 DiagonalLift::matrix(const mpz_class& p) const {
    return IntMatrix2{a + k1 * p, k2 * p, k3 * p, d + k4 * p};
}

DiagonalLift diagonal_lift_with_multiplier(const mpz_class& a, const mpz_class& p, const mpz_class& multiplier,
                                           const FactorLimits& limits) {
    if (a <= 1 || a >= p) throw BadInput("diagonal_lift needs 1 < a < p, got a = " + a.get_str());
    if (multiplier < 1 || multiplier > p) throw BadInput("k4 multiplier must lie in [1, p]");

    DiagonalLift lift;
    lift.a = a;
    lift.d = coprime_lift(a, p);
    const mpz_class ad_minus_1 = a * lift.d - 1;
    mpz_divexact(lift.n.get_mpz_t(), ad_minus_1.get_mpz_t(), p.get_mpz_t());

    // k1 = -n d^-1 mod a, shifted by a p
    lift.k1 = mod(-lift.n * mod_inv(lift.d, a), a) + a * p;
    // k4 = (-n - d k1) a^-1 mod p, shifted by p * multiplier
    lift.k4 = mod((-lift.n - lift.d * lift.k1) * mod_inv(a, p), p) + p * multiplier;

    const mpz_class residue = lift.n + a * lift.k4 + lift.d * lift.k1;
    if (!mpz_divisible_p(residue.get_mpz_t(), p.get_mpz_t()))
        throw Error("internal: n + a k4 + d k1 is not divisible by p");
    mpz_class target;
    mpz_divexact(target.get_mpz_t(), residue.get_mpz_t(), p.get_mpz_t());
    target += lift.k1 * lift.k4;

    lift.k2 = balanced_divisor(target, factorize(target, limits));
    mpz_divexact(lift.k3.get_mpz_t(), target.get_mpz_t(), lift.k2.get_mpz_t());
    return lift;
}

DiagonalLift diagonal_lift(const mpz_class& a, const mpz_class& p, Rng& rng, const FactorLimits& limits) {
    return diagonal_lift_with_multiplier(a, p, uniform_range(1, p, rng), limits);
}

bool lift_is_balanced(const DiagonalLift& lift, const mpz_class& p) {
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), p.get_mpz_t(), 3);
    bound *= 8;
    const IntMatrix2 m = lift.matrix(p);
    for (const mpz_class* e : {&m.a, &m.b, &m.c, &m.d})
        if (*e < 1 || *e > bound) return false;
    return lift.k3 <= p * lift.k2;
}

Word compress_powers(const Word& w, const mpz_class& p) {
    // Each run is g^r for a generator g in {A, B} and a residue r mod p.
    struct Item {
        bool is_a;
        mpz_class r;
    };
    std::vector<Item> stack;
    stack.reserve(w.run_count());
    mpz_class r;
    for (const Run& run : w.runs()) {
        const bool is_a = run.letter == Letter::A || run.letter == Letter::InvA;
        r = run.exponent;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        if (is_inverse_letter(run.letter) && sgn(r) != 0) r = p - r;
        if (sgn(r) == 0) continue;
        if (!stack.empty() && stack.back().is_a == is_a) {
            stack.back().r += r;
            if (stack.back().r >= p) stack.back().r -= p;
            if (sgn(stack.back().r) == 0) stack.pop_back();
        } else {
            stack.push_back(Item{is_a, r});
        }
    }

    Word out;
    mpz_class e;
    for (const Item& item : stack) {
        Letter letter = item.is_a ? Letter::A : Letter::B;
        e = item.r;
        if (2 * item.r > p) {
            letter = inverse(letter);
            e = p - item.r;
        }
        if (!mpz_fits_ulong_p(e.get_mpz_t())) throw ExponentOverflow("compressed exponent exceeds 64 bits");
        out.append(letter, e.get_ui());
    }
    return out;
}

Word diagonal_word(const mpz_class& a, const mpz_class& p, Rng& rng, const Deadline& deadline,
                   const DiagonalWordOptions& options) {
    const mpz_class x = mod(a, p);
    if (sgn(x) == 0) throw BadInput("diagonal_word needs a unit");
    if (x == 1) return {};

    const double budget = word_length_budget(p);
    const FactorLimits limits{options.rho_iterations, deadline};
    std::optional<Word> best;
    std::uint64_t best_length = 0;
    for (unsigned attempt = 0; attempt < options.attempts; ++attempt) {
        std::optional<DiagonalLift> lift;
        for (unsigned draw = 0; draw < options.draws_per_attempt && !lift; ++draw) {
            deadline.check();
            try {
                DiagonalLift candidate = diagonal_lift(x, p, rng, limits);
                if (lift_is_balanced(candidate, p)) lift = std::move(candidate);
            } catch (const FactorBudgetExceeded&) {
            }
        }
        if (!lift) continue;

        Word w;
        try {
            w = compress_powers(factor_nonneg(lift->matrix(p)), p);
        } catch (const NotReducible&) {
            continue;
        }
        const std::uint64_t length = w.length();
        if (static_cast<double>(length) <= budget) return w;
        if (!best || length < best_length) {
            best = std::move(w);
            best_length = length;
        }
    }
    if (best) return *best;
    throw RetryExhausted("no balanced diagonal lift for a = " + x.get_str() + " mod " + p.get_str());
}

Word permutation_word(const mpz_class& p, Rng& rng, const Deadline& deadline) {
    // (0 1; -1 0) = A^-1 B A^-1 diag(-1, -1)
    Word w{{Letter::InvA, 1}, {Letter::B, 1}, {Letter::InvA, 1}};
    w.append(diagonal_word(p - 1, p, rng, deadline));
    return w;
}

Word unitriangular_word(const mpz_class& b, Side side, const mpz_class& p, Rng& rng, const Deadline& deadline) {
    const mpz_class x = mod(b, p);
    if (sgn(x) == 0) return {};

    Word lower;
    if (legendre(x, p) == 1) {
        // (1 0; α^2 1) = D(α^-1) B D(α)
        const mpz_class alpha = sqrt_mod(x, p);
        lower = diagonal_word(mod_inv(alpha, p), p, rng, deadline);
        lower.append(Letter::B);
        lower.append(diagonal_word(alpha, p, rng, deadline));
    } else {
        // x = r^2 - s^2 with r = (x + 1)/2, s = (x - 1)/2; s != 0 because 1 is a square.
        const mpz_class half = (p + 1) / 2;
        const mpz_class r = mod((x + 1) * half, p);
        const mpz_class s = mod((x - 1) * half, p);
        const mpz_class s_inv = mod_inv(s, p);
        if (sgn(r) != 0) {
            // D(r^-1) B D(r) D(s^-1) B^-1 D(s), middle diagonals merged
            lower = diagonal_word(mod_inv(r, p), p, rng, deadline);
            lower.append(Letter::B);
            lower.append(diagonal_word(mod(r * s_inv, p), p, rng, deadline));
        } else {
            // x = -s^2: (1 0; x 1) = D(s^-1) B^-1 D(s)
            lower = diagonal_word(s_inv, p, rng, deadline);
        }
        lower.append(Letter::InvB);
        lower.append(diagonal_word(s, p, rng, deadline));
    }
    return side == Side::Lower ? lower : transpose_reverse(lower);
}

namespace {

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("word length exceeds 64 bits");
    return out;
}

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("word length exceeds 64 bits");
    return out;
}

}  // namespace

std::uint64_t PositivePreimage::length() const {
    std::uint64_t total = 0;
    for (const Run& r : extended.runs()) {
        switch (r.letter) {
            case Letter::A:
            case Letter::B: total = checked_add(total, r.exponent); break;
            case Letter::InvA: total = checked_add(total, checked_mul(r.exponent, inverses.inv_a.length())); break;
            case Letter::InvB: total = checked_add(total, checked_mul(r.exponent, inverses.inv_b.length())); break;
        }
    }
    return total;
}

Word PositivePreimage::expand(std::size_t max_runs) const { return substitute_inverses(extended, inverses, max_runs); }

Word substitute_inverses(const Word& w, const InverseWords& inverses, std::size_t max_runs) {
    std::uint64_t runs = 0;
    for (const Run& r : w.runs()) {
        std::uint64_t add = 1;
        if (r.letter == Letter::InvA) add = checked_mul(r.exponent, inverses.inv_a.run_count());
        if (r.letter == Letter::InvB) add = checked_mul(r.exponent, inverses.inv_b.run_count());
        runs = checked_add(runs, add);
    }
    if (runs > max_runs)
        throw std::length_error("positive word needs " + std::to_string(runs) + " runs, over the limit of " +
                                std::to_string(max_runs));

    Word out;
    for (const Run& r : w.runs()) {
        switch (r.letter) {
            case Letter::A:
            case Letter::B: out.append(r.letter, r.exponent); break;
            case Letter::InvA: out.append_power(inverses.inv_a, r.exponent); break;
            case Letter::InvB: out.append_power(inverses.inv_b, r.exponent); break;
        }
    }
    return out;
}

Word extended_preimage(const ModMatrix2& m, Rng& rng, const Deadline& deadline) {
    const mpz_class& p = m.modulus();
    const LUParts parts = lu_decompose(m);
    Word w;
    if (parts.perm) w.append(permutation_word(p, rng, deadline));
    w.append(unitriangular_word(parts.lower, Side::Lower, p, rng, deadline));
    w.append(diagonal_word(parts.diag, p, rng, deadline));
    w.append(unitriangular_word(parts.upper, Side::Upper, p, rng, deadline));
    return word_simplify(w);
}

PositivePreimage positive_preimage(const ModMatrix2& m, Rng& rng, const Deadline& deadline) {
    PositivePreimage out;
    out.extended = extended_preimage(m, rng, deadline);
    if (!out.extended.is_positive()) out.inverses = inverse_generator_words(m.modulus(), rng, deadline);
    return out;
}

Word preimage_word(const ModMatrix2& m, Rng& rng, Alphabet alphabet, const Deadline& deadline) {
    if (alphabet == Alphabet::Extended) return extended_preimage(m, rng, deadline);
    return positive_preimage(m, rng, deadline).expand();
}

ModMatrix2 random_sl2(const mpz_class& p, Rng& rng) {
    // 1/(p+1) of SL2(p) has a = 0.
    if (sgn(uniform_below(p + 1, rng)) == 0) {
        const mpz_class c = uniform_range(1, p - 1, rng);
        const mpz_class d = uniform_below(p, rng);
        return ModMatrix2{0, -mod_inv(c, p), c, d, p};
    }
    const mpz_class a = uniform_range(1, p - 1, rng);
    const mpz_class b = uniform_below(p, rng);
    const mpz_class c = uniform_below(p, rng);
    return ModMatrix2{a, b, c, (1 + b * c) * mod_inv(a, p), p};
}

}  // namespace zemor
