#pragma once

#include <cstdint>
#include <span>

#include <gmpxx.h>

#include "zemor/matrix.hpp"
#include "zemor/word.hpp"

namespace zemor {

/// A = (1 1; 0 1), B = (1 0; 1 1) and their inverses mod p.
ModMatrix2 generator(Letter letter, const mpz_class& p);

/// Left-to-right product of the word's letters mod p. Empty word is I.
ModMatrix2 evaluate_word(const Word& w, const mpz_class& p);

/// Exact product over Z (inverse letters allowed; A^-1 = (1 -1; 0 1)).
IntMatrix2 integer_product(const Word& w);

/// Zemor's Cayley hash: 0 -> A, 1 -> B, multiplied in message order.
/// Throws BadInput on any value other than 0 or 1.
ModMatrix2 zemor_hash(std::span<const std::uint8_t> bits, const mpz_class& p);

}  // namespace zemor
