#include <algorithm>
#include <map>
#include <vector>

#include "zemor/errors.hpp"
#include "zemor/number_theory.hpp"

namespace zemor {

namespace {

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> composite(kTrialDivisionLimit, false);
        std::vector<unsigned> out;
        for (unsigned i = 2; i < kTrialDivisionLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned j = i * i; j < kTrialDivisionLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

struct RhoState {
    const FactorLimits& limits;
    std::uint64_t iterations = 0;
    Rng rng{0xb5e17ULL};

    void charge(std::uint64_t steps) {
        iterations += steps;
        if (limits.max_rho_iterations != 0 && iterations > limits.max_rho_iterations)
            throw FactorBudgetExceeded("Pollard rho iteration budget exhausted");
        limits.deadline.check();
    }
};

// Brent's cycle finding on x -> x^2 + c mod n with gcds batched over m steps.
// Returns a divisor of n in (1, n], n meaning this (c, y0) failed.
mpz_class brent_rho(const mpz_class& n, const mpz_class& c, const mpz_class& y0, RhoState& state) {
    constexpr std::uint64_t m = 128;
    mpz_class y = y0, x, ys, q = 1, g = 1, diff;
    auto step = [&](mpz_class& v) {
        mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
        v += c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };

    std::uint64_t r = 1;
    do {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        state.charge(r);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t batch = std::min(m, r - k);
            for (std::uint64_t i = 0; i < batch; ++i) {
                step(y);
                diff = x - y;
                mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            state.charge(batch);
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    } while (g == 1);

    if (g == n) {
        // The batch overshot; replay it one step at a time.
        do {
            step(ys);
            diff = x - ys;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            state.charge(1);
        } while (g == 1);
    }
    return g;
}

mpz_class find_factor(const mpz_class& n, RhoState& state) {
    for (;;) {
        const mpz_class c = uniform_range(1, n - 1, state.rng);
        const mpz_class y0 = uniform_below(n, state.rng);
        mpz_class g = brent_rho(n, c, y0, state);
        if (g != n) return g;
    }
}

// If n = r^k for some k >= 2, returns the smallest such r and sets k.
bool perfect_power_root(const mpz_class& n, mpz_class& root, unsigned& k) {
    if (!mpz_perfect_power_p(n.get_mpz_t())) return false;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned e = static_cast<unsigned>(bits); e >= 2; --e) {
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
            k = e;
            return true;
        }
    }
    return false;
}

}  // namespace

FactorMultiset factorize(const mpz_class& n, const FactorLimits& limits) {
    if (sgn(n) <= 0) throw BadInput("factorize needs n >= 1");
    std::map<mpz_class, unsigned, decltype([](const mpz_class& x, const mpz_class& y) { return cmp(x, y) < 0; })> found;

    mpz_class rest = n;
    for (unsigned q : small_primes()) {
        if (rest == 1) break;
        if (rest < mpz_class{q} * q) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
            ++found[mpz_class{q}];
        }
    }

    RhoState state{limits};
    // (cofactor, multiplicity) pairs still to split.
    std::vector<std::pair<mpz_class, unsigned>> pending;
    if (rest != 1) pending.emplace_back(rest, 1);
    while (!pending.empty()) {
        auto [m, mult] = pending.back();
        pending.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            found[m] += mult;
            continue;
        }
        mpz_class root;
        unsigned k = 0;
        if (perfect_power_root(m, root, k)) {
            pending.emplace_back(root, mult * k);
            continue;
        }
        const mpz_class g = find_factor(m, state);
        mpz_class other;
        mpz_divexact(other.get_mpz_t(), m.get_mpz_t(), g.get_mpz_t());
        pending.emplace_back(g, mult);
        pending.emplace_back(other, mult);
    }

    FactorMultiset out;
    out.reserve(found.size());
    for (const auto& [q, e] : found) out.push_back(PrimePower{q, e});
    return out;
}

}  // namespace zemor
