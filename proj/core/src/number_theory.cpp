#include "zemor/number_theory.hpp"

#include <algorithm>
#include <array>

#include "zemor/errors.hpp"

namespace zemor {

namespace {

mpz_class mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

// One Miller-Rabin round; n odd > 3, n - 1 = q 2^s.
bool strong_probable_prime(const mpz_class& n, const mpz_class& base, const mpz_class& q, unsigned long s) {
    const mpz_class n_minus_1 = n - 1;
    mpz_class x = powm(base, q, n);
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

constexpr std::array<unsigned, 12> kFixedBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr unsigned kRandomRounds = 40;

}  // namespace

ExtGcd ext_gcd(const mpz_class& x, const mpz_class& y) {
    if (sgn(x) == 0 && sgn(y) == 0) throw BadInput("ext_gcd(0, 0) is undefined");
    // Invariants: old_r = old_u x + old_v y, r = u x + v y.
    mpz_class old_r = x, r = y;
    mpz_class old_u = 1, u = 0;
    mpz_class old_v = 0, v = 1;
    mpz_class q, t;
    while (sgn(r) != 0) {
        mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * u;
        old_u = u;
        u = t;
        t = old_v - q * v;
        old_v = v;
        v = t;
    }
    if (sgn(old_r) < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return ExtGcd{old_r, old_u, old_v};
}

mpz_class mod_inv(const mpz_class& x, const mpz_class& m) {
    if (m < 2) throw BadInput("mod_inv: modulus must be at least 2");
    const mpz_class reduced = mod(x, m);
    if (sgn(reduced) == 0) throw NotCoprime(x.get_str() + " is not invertible mod " + m.get_str());
    const ExtGcd e = ext_gcd(reduced, m);
    if (e.g != 1) throw NotCoprime(x.get_str() + " is not invertible mod " + m.get_str());
    return mod(e.u, m);
}

int legendre(const mpz_class& x, const mpz_class& p) {
    const mpz_class r = mod(x, p);
    if (sgn(r) == 0) return 0;
    const mpz_class half = (p - 1) / 2;
    const mpz_class e = powm(r, half, p);
    return e == 1 ? 1 : -1;
}

mpz_class sqrt_mod(const mpz_class& x, const mpz_class& p) {
    const mpz_class n = mod(x, p);
    if (sgn(n) == 0) return 0;
    if (legendre(n, p) != 1) throw NonResidue(x.get_str() + " is not a square mod " + p.get_str());

    mpz_class root;
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
        root = powm(n, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks with p - 1 = q 2^s.
        mpz_class q = p - 1;
        const unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        q >>= s;

        mpz_class z = 2;
        while (legendre(z, p) != -1) ++z;

        unsigned long m = s;
        mpz_class c = powm(z, q, p);
        mpz_class t = powm(n, q, p);
        root = powm(n, (q + 1) / 2, p);
        while (t != 1) {
            unsigned long i = 0;
            mpz_class t2 = t;
            while (t2 != 1) {
                t2 = t2 * t2 % p;
                ++i;
            }
            mpz_class b = c;
            for (unsigned long j = 0; j + 1 < m - i; ++j) b = b * b % p;
            m = i;
            c = b * b % p;
            t = t * c % p;
            root = root * b % p;
        }
    }
    const mpz_class other = p - root;
    return other < root ? other : root;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (unsigned b : kFixedBases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    mpz_class q = n - 1;
    const unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;

    for (unsigned b : kFixedBases)
        if (!strong_probable_prime(n, mpz_class{b}, q, s)) return false;
    // The first twelve prime bases are exact below 3.3 * 10^24 > 2^64.
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;

    // Fixed seed keeps is_prime a pure function of n.
    Rng rng{0x5eed5eedULL};
    const mpz_class span = n - 3;
    for (unsigned round = 0; round < kRandomRounds; ++round) {
        mpz_class base = uniform_below(span, rng) + 2;
        if (!strong_probable_prime(n, base, q, s)) return false;
    }
    return true;
}

mpz_class next_prime(const mpz_class& n) {
    if (n <= 2) return 2;
    mpz_class c = n;
    if (mpz_even_p(c.get_mpz_t())) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

mpz_class random_prime(std::size_t bits, Rng& rng) {
    if (bits < 3) throw BadInput("random_prime needs at least 3 bits");
    mpz_class lo, hi;
    mpz_ui_pow_ui(lo.get_mpz_t(), 2, bits - 1);
    hi = 2 * lo - 1;
    for (;;) {
        mpz_class c = uniform_range(lo, hi, rng);
        mpz_setbit(c.get_mpz_t(), 0);
        if (is_prime(c)) return c;
    }
}

mpz_class multiply_out(const FactorMultiset& f) {
    mpz_class n = 1;
    mpz_class t;
    for (const PrimePower& pp : f) {
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        n *= t;
    }
    return n;
}

namespace {

std::vector<mpz_class> all_divisors(FactorMultiset::const_iterator first, FactorMultiset::const_iterator last) {
    std::vector<mpz_class> divs{1};
    for (auto it = first; it != last; ++it) {
        const std::size_t base = divs.size();
        mpz_class power = 1;
        for (unsigned e = 1; e <= it->exponent; ++e) {
            power *= it->prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::size_t divisor_count(const FactorMultiset& f, std::size_t cap) {
    std::size_t count = 1;
    for (const PrimePower& pp : f) {
        if (count > cap / (pp.exponent + 1)) return cap + 1;
        count *= pp.exponent + 1;
    }
    return count;
}

}  // namespace

mpz_class balanced_divisor(const mpz_class& n) { return balanced_divisor(n, factorize(n)); }

mpz_class balanced_divisor(const mpz_class& n, const FactorMultiset& factors, std::size_t enumeration_threshold) {
    if (sgn(n) <= 0) throw BadInput("balanced_divisor needs n >= 1");
    const mpz_class limit = sqrt(n);

    if (divisor_count(factors, enumeration_threshold) <= enumeration_threshold) {
        const std::vector<mpz_class> divs = all_divisors(factors.begin(), factors.end());
        return *(std::upper_bound(divs.begin(), divs.end(), limit) - 1);
    }

    // Meet in the middle: a divisor is x * y with x from the first half of the
    // prime powers and y from the second. For each x take the largest y with
    // x * y <= limit; as x grows that y only shrinks.
    const auto middle = factors.begin() + static_cast<std::ptrdiff_t>(factors.size() / 2);
    const std::vector<mpz_class> left = all_divisors(factors.begin(), middle);
    const std::vector<mpz_class> right = all_divisors(middle, factors.end());
    mpz_class best = 1;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(right.size()) - 1;
    mpz_class prod;
    for (const mpz_class& x : left) {
        if (x > limit) break;
        while (j >= 0 && (prod = x * right[static_cast<std::size_t>(j)]) > limit) --j;
        if (j < 0) break;
        if (prod > best) best = prod;
    }
    return best;
}

mpz_class coprime_lift(const mpz_class& a, const mpz_class& p) {
    if (sgn(a) <= 0 || a >= p) throw BadInput("coprime_lift needs 0 < a < p");
    mpz_class d = mod_inv(a, p);
    mpz_class g;
    for (;;) {
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        if (g == 1) return d;
        d += p;
    }
}

std::uint64_t nth_prime(unsigned k) {
    if (k == 0) throw BadInput("nth_prime is 1-based");
    std::uint64_t candidate = 1;
    for (unsigned found = 0; found < k;) {
        ++candidate;
        if (is_prime(mpz_class{static_cast<unsigned long>(candidate)})) ++found;
    }
    return candidate;
}

}  // namespace zemor
