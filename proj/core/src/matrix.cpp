#include "zemor/matrix.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "zemor/errors.hpp"
#include "zemor/number_theory.hpp"

namespace zemor {

namespace {

mpz_class canonical(const mpz_class& x, const mpz_class& p) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return r;
}

void reduce_in_place(mpz_class& x, const mpz_class& p) { mpz_mod(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()); }

void check_modulus(const mpz_class& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) throw BadInput("modulus must be an odd prime, got " + p.get_str());
}

}  // namespace

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
    return IntMatrix2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string to_string(const IntMatrix2& m) {
    return m.a.get_str() + "," + m.b.get_str() + "," + m.c.get_str() + "," + m.d.get_str();
}

ModMatrix2::ModMatrix2(Unchecked, mpz_class a, mpz_class b, mpz_class c, mpz_class d, mpz_class p)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), p_(std::move(p)) {}

ModMatrix2::ModMatrix2(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d,
                       const mpz_class& p)
    : a_(a), b_(b), c_(c), d_(d), p_(p) {
    check_modulus(p_);
    reduce_in_place(a_, p_);
    reduce_in_place(b_, p_);
    reduce_in_place(c_, p_);
    reduce_in_place(d_, p_);
    if (det() != 1) throw BadInput("matrix " + to_string(*this) + " is not in SL2(" + p_.get_str() + ")");
}

ModMatrix2 ModMatrix2::identity(const mpz_class& p) {
    check_modulus(p);
    return ModMatrix2{Unchecked{}, 1, 0, 0, 1, p};
}

ModMatrix2 ModMatrix2::diagonal(const mpz_class& x, const mpz_class& p) {
    check_modulus(p);
    mpz_class a = canonical(x, p);
    mpz_class inv = mod_inv(a, p);
    return ModMatrix2{Unchecked{}, std::move(a), 0, 0, std::move(inv), p};
}

ModMatrix2 ModMatrix2::reduce(const IntMatrix2& m, const mpz_class& p) { return ModMatrix2{m.a, m.b, m.c, m.d, p}; }

mpz_class ModMatrix2::det() const {
    mpz_class r = a_ * d_ - b_ * c_;
    reduce_in_place(r, p_);
    return r;
}

ModMatrix2 ModMatrix2::transpose() const { return ModMatrix2{Unchecked{}, a_, c_, b_, d_, p_}; }

ModMatrix2 ModMatrix2::inverse() const {
    // det = 1, so the inverse is the adjugate.
    return ModMatrix2{Unchecked{}, d_, canonical(-b_, p_), canonical(-c_, p_), a_, p_};
}

void ModMatrix2::mul_upper_unit(const mpz_class& e) {
    // (a b; c d)(1 e; 0 1) = (a, a e + b; c, c e + d)
    mpz_addmul(b_.get_mpz_t(), a_.get_mpz_t(), e.get_mpz_t());
    reduce_in_place(b_, p_);
    mpz_addmul(d_.get_mpz_t(), c_.get_mpz_t(), e.get_mpz_t());
    reduce_in_place(d_, p_);
}

void ModMatrix2::mul_lower_unit(const mpz_class& e) {
    // (a b; c d)(1 0; e 1) = (a + b e, b; c + d e, d)
    mpz_addmul(a_.get_mpz_t(), b_.get_mpz_t(), e.get_mpz_t());
    reduce_in_place(a_, p_);
    mpz_addmul(c_.get_mpz_t(), d_.get_mpz_t(), e.get_mpz_t());
    reduce_in_place(c_, p_);
}

ModMatrix2 mat_mul(const ModMatrix2& x, const ModMatrix2& y) {
    if (x.p_ != y.p_) throw ModulusMismatch{};
    const mpz_class& p = x.p_;
    return ModMatrix2{ModMatrix2::Unchecked{},
                      canonical(x.a_ * y.a_ + x.b_ * y.c_, p),
                      canonical(x.a_ * y.b_ + x.b_ * y.d_, p),
                      canonical(x.c_ * y.a_ + x.d_ * y.c_, p),
                      canonical(x.c_ * y.b_ + x.d_ * y.d_, p),
                      p};
}

ModMatrix2 power(const ModMatrix2& m, const mpz_class& exponent) {
    ModMatrix2 base = sgn(exponent) < 0 ? m.inverse() : m;
    mpz_class e = abs(exponent);
    ModMatrix2 result = ModMatrix2::identity(m.modulus());
    const std::size_t bits = sgn(e) == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    }
    return result;
}

std::string to_string(const ModMatrix2& m) {
    return m.a().get_str() + "," + m.b().get_str() + "," + m.c().get_str() + "," + m.d().get_str();
}

ModMatrix2 parse_matrix(std::string_view text, const mpz_class& p) {
    std::vector<mpz_class> entries;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        std::string field{text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)};
        std::size_t digits_from = (!field.empty() && (field[0] == '-' || field[0] == '+')) ? 1 : 0;
        if (field.size() == digits_from ||
            field.find_first_not_of("0123456789", digits_from) != std::string::npos) {
            throw BadInput("matrix entry '" + field + "' is not a decimal integer");
        }
        if (field[0] == '+') field.erase(0, 1);
        entries.emplace_back(field, 10);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (entries.size() != 4) throw BadInput("matrix must have exactly four comma-separated entries");
    return ModMatrix2{entries[0], entries[1], entries[2], entries[3], p};
}

}  // namespace zemor
