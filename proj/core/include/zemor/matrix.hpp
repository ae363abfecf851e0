#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zemor {

/// 2x2 matrix over the integers, row-major (a b; c d).
struct IntMatrix2 {
    mpz_class a{1}, b{0}, c{0}, d{1};

    static IntMatrix2 identity() { return {}; }

    mpz_class det() const { return a * d - b * c; }
    bool nonnegative() const { return sgn(a) >= 0 && sgn(b) >= 0 && sgn(c) >= 0 && sgn(d) >= 0; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
    friend bool operator==(const IntMatrix2& x, const IntMatrix2& y) = default;
};

std::string to_string(const IntMatrix2& m);

/// Element of SL2(p): entries are canonical residues in [0, p) and the
/// determinant is 1 mod p. Every public way of building one checks this.
class ModMatrix2 {
public:
    /// Reduces the entries mod p. Throws BadInput if p is not an odd integer
    /// >= 3 or the determinant is not 1 mod p.
    ModMatrix2(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d,
               const mpz_class& p);

    static ModMatrix2 identity(const mpz_class& p);
    /// diag(x, x^-1); x must be a unit mod p.
    static ModMatrix2 diagonal(const mpz_class& x, const mpz_class& p);
    /// Reduction of an integer matrix; throws BadInput unless det = 1 mod p.
    static ModMatrix2 reduce(const IntMatrix2& m, const mpz_class& p);

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    const mpz_class& d() const { return d_; }
    const mpz_class& modulus() const { return p_; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
    mpz_class det() const;

    ModMatrix2 transpose() const;
    ModMatrix2 inverse() const;

    /// this := this * (1 e; 0 1)
    void mul_upper_unit(const mpz_class& e);
    /// this := this * (1 0; e 1)
    void mul_lower_unit(const mpz_class& e);

    friend bool operator==(const ModMatrix2& x, const ModMatrix2& y) = default;

private:
    struct Unchecked {};
    ModMatrix2(Unchecked, mpz_class a, mpz_class b, mpz_class c, mpz_class d, mpz_class p);

    friend ModMatrix2 mat_mul(const ModMatrix2& x, const ModMatrix2& y);

    mpz_class a_, b_, c_, d_, p_;
};

/// Product mod p. Throws ModulusMismatch when the moduli differ.
ModMatrix2 mat_mul(const ModMatrix2& x, const ModMatrix2& y);
inline ModMatrix2 operator*(const ModMatrix2& x, const ModMatrix2& y) { return mat_mul(x, y); }

/// Square-and-multiply power; negative exponents use the inverse.
ModMatrix2 power(const ModMatrix2& m, const mpz_class& exponent);

/// "a,b,c,d" in decimal, row-major.
std::string to_string(const ModMatrix2& m);

/// Parses "a,b,c,d" (optionally signed decimal) into SL2(p). Throws BadInput.
ModMatrix2 parse_matrix(std::string_view text, const mpz_class& p);

}  // namespace zemor
