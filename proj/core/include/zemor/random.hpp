#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace zemor {

/// The only source of randomness in the library. Callers own it and pass it in.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
mpz_class uniform_below(const mpz_class& bound, Rng& rng);

/// Uniform integer in [lo, hi], both inclusive.
mpz_class uniform_range(const mpz_class& lo, const mpz_class& hi, Rng& rng);

/// Uniform integer in [0, 2^bits).
mpz_class random_bits(std::size_t bits, Rng& rng);

/// SplitMix64 mixing of (seed, stream); used to derive independent per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace zemor
