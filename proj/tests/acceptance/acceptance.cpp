// Acceptance gates for the attack toolkit. Prints one PASS/FAIL line per
// criterion and exits nonzero if any gate fails.

#include <zemor/collision.hpp>
#include <zemor/errors.hpp>
#include <zemor/euclid_factor.hpp>
#include <zemor/experiment.hpp>
#include <zemor/hash.hpp>
#include <zemor/number_theory.hpp>
#include <zemor/preimage.hpp>
#include <zemor/random.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace zemor;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& gate) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = gate();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

bool small_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// Positive words evaluated letter-run by letter-run, no shortcuts.
Outcome soundness() {
    std::string detail;
    bool pass = true;
    for (unsigned bits : {10u, 20u}) {
        int successes = 0, verified = 0;
        for (std::size_t i = 0; i < 100; ++i) {
            Rng rng{trial_seed(kSeed, bits, i)};
            const mpz_class p = random_prime(bits, rng);
            const ModMatrix2 m = random_sl2(p, rng);
            try {
                const Word w = preimage_word(m, rng, Alphabet::Positive, Deadline::after(std::chrono::seconds(60)));
                ++successes;
                if (w.is_positive() && evaluate_word(w, p) == m) ++verified;
            } catch (const Error&) {
            }
        }
        pass = pass && successes >= 90 && verified == successes;
        detail += fmt("%g-bit %g/100 succeeded, %g verified; ", bits, successes, verified);
    }
    return {pass, detail};
}

std::vector<TrialRecord> length_records;

Outcome length_statistics() {
    ExperimentConfig config;
    config.bits = {10, 20};
    config.trials = 100;
    config.seed = kSeed;
    length_records = run_experiment(config);
    const auto summary = summarize(length_records);
    const auto& s10 = summary.at(0);
    const auto& s20 = summary.at(1);
    const bool pass = s10.successes > 0 && s20.successes > 0 && s10.min_normalized_length >= 50 &&
                      s10.min_normalized_length <= 2000 && s10.avg_normalized_length <= 1e5 &&
                      s20.min_normalized_length >= 50 && s20.min_normalized_length <= 3000 &&
                      s20.avg_normalized_length <= 1e6;
    return {pass, fmt("10-bit min %.1f avg %.1f; ", s10.min_normalized_length, s10.avg_normalized_length) +
                      fmt("20-bit min %.1f avg %.1f (min bands [50,2000] / [50,3000])", s20.min_normalized_length,
                          s20.avg_normalized_length)};
}

Outcome extended_scaling() {
    std::vector<double> medians;
    std::string detail;
    for (unsigned bits : {10u, 20u, 40u}) {
        const std::size_t trials = bits == 40 ? 40 : 100;
        std::vector<double> ratios;
        for (std::size_t i = 0; i < trials; ++i) {
            Rng rng{trial_seed(kSeed + 1, bits, i)};
            const mpz_class p = random_prime(bits, rng);
            const ModMatrix2 m = random_sl2(p, rng);
            const Word w = extended_preimage(m, rng);
            if (evaluate_word(w, p) != m) return {false, "extended word does not evaluate to its target"};
            ratios.push_back(static_cast<double>(w.length()) / ln(p));
        }
        medians.push_back(median(ratios));
        detail += fmt("%g-bit median %.1f; ", bits, medians.back());
    }
    const double spread = *std::max_element(medians.begin(), medians.end()) /
                          *std::min_element(medians.begin(), medians.end());
    return {spread <= 4.0, detail + fmt("max/min %.2f (limit 4)", spread)};
}

Outcome collision_attack() {
    int ok = 0, bad = 0;
    Rng rng{kSeed + 4};
    for (int i = 0; i < 1000; ++i) {
        const mpz_class p = random_prime(20, rng);
        try {
            const Word w = identity_word(p, rng);
            if (!w.empty() && w.is_positive() && evaluate_word(w, p).is_identity() &&
                static_cast<double>(w.length()) <= word_length_budget(p))
                ++ok;
            else
                ++bad;
        } catch (const RetryExhausted&) {
        }
    }
    return {ok >= 990 && bad == 0, fmt("%g/1000 succeeded, %g invalid outputs", ok, bad)};
}

Outcome worked_examples() {
    const auto lift = identity_lift_for(5, 1, 7);
    if (!lift) return {false, "no collision lift for p=5, c=1, p'=7"};
    const IntMatrix2 c = lift->matrix(5);
    const bool c_ok = c == IntMatrix2{11, 5, 35, 16} && c.det() == 1 && to_string(factor_nonneg(c)) == "B^3A^5B^2";
    const IntMatrix2 d = diagonal_lift_with_multiplier(2, 5, 1).matrix(5);
    const bool d_ok = d == IntMatrix2{57, 35, 70, 43} && d.det() == 1 && to_string(factor_nonneg(d)) == "BA^4B^2ABAB";
    return {c_ok && d_ok, std::string("collision ") + (c_ok ? "exact" : "MISMATCH") + ", diagonal " +
                              (d_ok ? "exact" : "MISMATCH")};
}

Outcome free_monoid() {
    Rng rng{kSeed + 6};
    int exact = 0;
    for (int i = 0; i < 1000; ++i) {
        Word w;
        const auto len = uniform_range(0, 30, rng).get_ui();
        for (unsigned long j = 0; j < len; ++j) w.append(rng() & 1 ? Letter::A : Letter::B);
        if (factor_nonneg(integer_product(w)) == w) ++exact;
    }
    return {exact == 1000, fmt("%g/1000 round-trips exact", exact)};
}

Outcome number_theory() {
    Rng rng{kSeed + 7};
    int factored = 0;
    for (int i = 0; i < 1000; ++i) {
        const mpz_class n = random_bits(80, rng) + 1;
        const auto f = factorize(n);
        bool ok = multiply_out(f) == n;
        for (const auto& pp : f) ok = ok && is_prime(pp.prime);
        factored += ok;
    }

    int table_errors = 0;
    for (unsigned p = 3; p < 200; ++p) {
        if (!small_prime(p)) continue;
        std::vector<bool> square(p, false);
        for (unsigned r = 0; r < p; ++r) square[r * r % p] = true;
        for (unsigned x = 0; x < p; ++x) {
            const int expect = x == 0 ? 0 : (square[x] ? 1 : -1);
            if (legendre(x, p) != expect) ++table_errors;
            if (square[x]) {
                const mpz_class r = sqrt_mod(x, p);
                if (r * r % p != x || 2 * r > p) ++table_errors;
            } else {
                try {
                    sqrt_mod(x, p);
                    ++table_errors;
                } catch (const NonResidue&) {
                }
            }
        }
    }

    int lift_errors = 0, lifts = 0;
    for (unsigned p = 3; p <= 997; ++p) {
        if (!small_prime(p)) continue;
        for (unsigned a = 1; a < p; ++a) {
            ++lifts;
            const mpz_class d = coprime_lift(a, p);
            const mpz_class d0 = mod_inv(a, p);
            const mpz_class k = (d - d0) / p;
            const auto m = static_cast<unsigned>(factorize(a).size());
            if (gcd(mpz_class(a), d) != 1 || d % p != d0 || k >= nth_prime(m + 1)) ++lift_errors;
        }
    }
    const bool pass = factored == 1000 && table_errors == 0 && lift_errors == 0;
    return {pass, fmt("factorize %g/1000, sqrt/legendre table errors %g, coprime_lift bound violations %g of %g",
                      factored, table_errors, lift_errors, lifts)};
}

Outcome runtime_sanity() {
    ExperimentConfig config;
    config.bits = {40};
    config.trials = 20;
    config.seed = kSeed + 8;
    const auto records = run_experiment(config);
    double total_ms = 0;
    for (const auto& r : records) total_ms += static_cast<double>(r.runtime_ms);
    const double avg_s = total_ms / static_cast<double>(records.size()) / 1000.0;
    int timeouts = 0;
    for (const auto& r : length_records) timeouts += r.failure == "timeout";
    const bool pass = avg_s <= 15.0 && timeouts == 0 && !length_records.empty();
    return {pass, fmt("40-bit average %.2fs per trial (limit 15s); %g timeouts at 10-20 bits", avg_s, timeouts)};
}

}  // namespace

int main() {
    report(1, "end-to-end soundness", soundness);
    report(2, "word-length statistics", length_statistics);
    report(3, "extended-alphabet scaling", extended_scaling);
    report(4, "collision attack at 20 bits", collision_attack);
    report(5, "worked-example lifts", worked_examples);
    report(6, "free-monoid round trip", free_monoid);
    report(7, "number-theory kernel", number_theory);
    report(8, "runtime sanity", runtime_sanity);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
