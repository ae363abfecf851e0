#include "zemor/hash.hpp"

#include "zemor/errors.hpp"

namespace zemor {

ModMatrix2 generator(Letter letter, const mpz_class& p) {
    switch (letter) {
        case Letter::A: return ModMatrix2{1, 1, 0, 1, p};
        case Letter::B: return ModMatrix2{1, 0, 1, 1, p};
        case Letter::InvA: return ModMatrix2{1, p - 1, 0, 1, p};
        case Letter::InvB: return ModMatrix2{1, 0, p - 1, 1, p};
    }
    throw BadInput("unknown letter");
}

ModMatrix2 evaluate_word(const Word& w, const mpz_class& p) {
    ModMatrix2 m = ModMatrix2::identity(p);
    // X^e for a generator X is unitriangular with e on the off-diagonal, so
    // each run costs one unitriangular multiply.
    mpz_class e;
    for (const Run& r : w.runs()) {
        e = r.exponent;
        switch (r.letter) {
            case Letter::A: m.mul_upper_unit(e); break;
            case Letter::InvA: m.mul_upper_unit(p - e % p); break;
            case Letter::B: m.mul_lower_unit(e); break;
            case Letter::InvB: m.mul_lower_unit(p - e % p); break;
        }
    }
    return m;
}

IntMatrix2 integer_product(const Word& w) {
    IntMatrix2 m;
    mpz_class e;
    for (const Run& r : w.runs()) {
        e = r.exponent;
        if (is_inverse_letter(r.letter)) e = -e;
        if (r.letter == Letter::A || r.letter == Letter::InvA) {
            m.b += m.a * e;
            m.d += m.c * e;
        } else {
            m.a += m.b * e;
            m.c += m.d * e;
        }
    }
    return m;
}

ModMatrix2 zemor_hash(std::span<const std::uint8_t> bits, const mpz_class& p) {
    Word w;
    for (const std::uint8_t bit : bits) {
        if (bit > 1) throw BadInput("message symbols must be 0 or 1");
        w.append(bit == 0 ? Letter::A : Letter::B);
    }
    return evaluate_word(w, p);
}

}  // namespace zemor
