#include "zemor/euclid_factor.hpp"

#include <optional>

#include "zemor/errors.hpp"

namespace zemor {

namespace {

// min over the defined quotients floor(num_i / den_i); a zero denominator
// places no constraint.
std::optional<mpz_class> peel_quotient(const mpz_class& n1, const mpz_class& d1, const mpz_class& n2,
                                       const mpz_class& d2) {
    std::optional<mpz_class> q;
    mpz_class t;
    if (sgn(d1) > 0) {
        mpz_fdiv_q(t.get_mpz_t(), n1.get_mpz_t(), d1.get_mpz_t());
        q = t;
    }
    if (sgn(d2) > 0) {
        mpz_fdiv_q(t.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
        if (!q || t < *q) q = t;
    }
    return q;
}

std::uint64_t to_exponent(const mpz_class& q) {
    if (!mpz_fits_ulong_p(q.get_mpz_t()) || sizeof(unsigned long) < sizeof(std::uint64_t))
        throw ExponentOverflow("Euclidean quotient " + q.get_str() + " exceeds 64 bits");
    return q.get_ui();
}

}  // namespace

Word factor_nonneg(const IntMatrix2& m) {
    if (!m.nonnegative()) throw BadInput("factor_nonneg needs nonnegative entries: " + to_string(m));
    if (m.det() != 1) throw BadInput("factor_nonneg needs determinant 1: " + to_string(m));

    Word w;
    mpz_class a = m.a, b = m.b, c = m.c, d = m.d;
    while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
        if (a >= c && b >= d) {
            // M = A^q (a - q c, b - q d; c, d)
            const auto q = peel_quotient(a, c, b, d);
            if (!q || sgn(*q) == 0) throw NotReducible("no A-run can be peeled");
            w.append(Letter::A, to_exponent(*q));
            mpz_submul(a.get_mpz_t(), q->get_mpz_t(), c.get_mpz_t());
            mpz_submul(b.get_mpz_t(), q->get_mpz_t(), d.get_mpz_t());
        } else if (c >= a && d >= b) {
            // M = B^q (a, b; c - q a, d - q b)
            const auto q = peel_quotient(c, a, d, b);
            if (!q || sgn(*q) == 0) throw NotReducible("no B-run can be peeled");
            w.append(Letter::B, to_exponent(*q));
            mpz_submul(c.get_mpz_t(), q->get_mpz_t(), a.get_mpz_t());
            mpz_submul(d.get_mpz_t(), q->get_mpz_t(), b.get_mpz_t());
        } else {
            throw NotReducible("rows are incomparable");
        }
    }
    return w;
}

}  // namespace zemor
