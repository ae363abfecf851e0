#include "zemor/random.hpp"

#include <stdexcept>
#include <vector>

namespace zemor {

mpz_class random_bits(std::size_t bits, Rng& rng) {
    mpz_class out;
    if (bits == 0) return out;
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> limbs(words);
    for (auto& w : limbs) w = rng();
    if (const std::size_t extra = words * 64 - bits; extra != 0) limbs.back() >>= extra;
    // Most significant word last, native byte order inside each word.
    mpz_import(out.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
    return out;
}

mpz_class uniform_below(const mpz_class& bound, Rng& rng) {
    if (sgn(bound) <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    if (bound == 1) return 0;
    const mpz_class top = bound - 1;
    const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    for (;;) {
        mpz_class x = random_bits(bits, rng);
        if (x < bound) return x;
    }
}

mpz_class uniform_range(const mpz_class& lo, const mpz_class& hi, Rng& rng) {
    if (hi < lo) throw std::invalid_argument("uniform_range: empty range");
    mpz_class width = hi - lo + 1;
    mpz_class x = uniform_below(width, rng);
    x += lo;
    return x;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace zemor
