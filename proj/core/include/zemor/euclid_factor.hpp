#pragma once

#include "zemor/matrix.hpp"
#include "zemor/word.hpp"

namespace zemor {

/// Factors a determinant-1 matrix with nonnegative integer entries as a word
/// over {A, B} whose exact integer product is m. Run exponents are the
/// Euclidean quotients.
///
/// At each step the dominant row loses the largest multiple of the other row
/// that keeps it nonnegative: A^q is peeled off when row 1 >= row 2
/// entrywise, B^q when row 2 >= row 1.
///
/// Throws BadInput if det(m) != 1 or an entry is negative, NotReducible if the
/// peeling stalls, ExponentOverflow if a quotient exceeds 64 bits.
Word factor_nonneg(const IntMatrix2& m);

}  // namespace zemor
