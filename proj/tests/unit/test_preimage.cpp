#include <gtest/gtest.h>

#include <zemor/errors.hpp>
#include <zemor/euclid_factor.hpp>
#include <zemor/hash.hpp>
#include <zemor/number_theory.hpp>
#include <zemor/preimage.hpp>
#include <zemor/random.hpp>

#include <map>

using namespace zemor;

TEST(LU, Examples) {
    auto parts = lu_decompose(ModMatrix2(2, 3, 1, 2, 5));
    EXPECT_EQ(parts, (LUParts{false, 3, 2, 4}));
    EXPECT_EQ(recompose(parts, 5), ModMatrix2(2, 3, 1, 2, 5));

    EXPECT_EQ(lu_decompose(ModMatrix2::identity(11)), (LUParts{false, 0, 1, 0}));

    auto perm = lu_decompose(ModMatrix2(0, 1, 6, 0, 7));
    EXPECT_EQ(perm, (LUParts{true, 0, 1, 0}));
    EXPECT_EQ(recompose(perm, 7), ModMatrix2(0, 1, 6, 0, 7));
}

TEST(LU, RecomposesRandomMatrices) {
    Rng rng{4};
    for (int i = 0; i < 500; ++i) {
        mpz_class p = random_prime(3 + i % 20, rng);
        auto m = random_sl2(p, rng);
        ASSERT_EQ(recompose(lu_decompose(m), p), m);
    }
}

TEST(DiagonalLift, WorkedExample) {
    auto lift = diagonal_lift_with_multiplier(2, 5, 1);
    EXPECT_EQ(lift.d, 3);
    EXPECT_EQ(lift.n, 1);
    EXPECT_EQ(lift.k1, 11);
    EXPECT_EQ(lift.k4, 8);
    EXPECT_EQ(lift.k2, 7);
    EXPECT_EQ(lift.k3, 14);
    auto m = lift.matrix(5);
    EXPECT_EQ(m, (IntMatrix2{57, 35, 70, 43}));
    EXPECT_EQ(m.det(), 1);
    EXPECT_EQ(ModMatrix2::reduce(m, 5), ModMatrix2::diagonal(2, 5));
    auto w = factor_nonneg(m);
    EXPECT_EQ(to_string(w), "BA^4B^2ABAB");
    EXPECT_EQ(to_string(compress_powers(w, 5)), "BaB^2ABAB");
    EXPECT_EQ(evaluate_word(compress_powers(w, 5), 5), ModMatrix2::diagonal(2, 5));
}

TEST(DiagonalLift, RejectsTrivialA) {
    EXPECT_THROW(diagonal_lift_with_multiplier(1, 5, 1), BadInput);
    EXPECT_THROW(diagonal_lift_with_multiplier(5, 5, 1), BadInput);
}

TEST(DiagonalLift, DiophantineIdentities) {
    Rng rng{8};
    for (int i = 0; i < 1000; ++i) {
        mpz_class p = random_prime(5 + i % 16, rng);
        mpz_class a = uniform_range(2, p - 1, rng);
        auto lift = diagonal_lift(a, p, rng);
        ASSERT_EQ(gcd(lift.a, lift.d), 1);
        ASSERT_EQ(lift.a * lift.d, 1 + p * lift.n);
        mpz_class s = lift.n + lift.a * lift.k4 + lift.d * lift.k1;
        ASSERT_TRUE(s % p == 0);
        ASSERT_EQ(lift.k2 * lift.k3, lift.k1 * lift.k4 + s / p);
        ASSERT_LE(lift.k2, lift.k3);
        auto m = lift.matrix(p);
        ASSERT_EQ(m.det(), 1);
        ASSERT_EQ(ModMatrix2::reduce(m, p), ModMatrix2::diagonal(a, p));
    }
}

TEST(Compress, Examples) {
    EXPECT_EQ(to_string(compress_powers(parse_word("A^7"), 5)), "A^2");
    EXPECT_EQ(to_string(compress_powers(parse_word("A^4"), 5)), "a");
    EXPECT_EQ(to_string(compress_powers(parse_word("B^5"), 5)), "");
    EXPECT_EQ(to_string(compress_powers(parse_word("AB^5A"), 5)), "A^2");
    EXPECT_EQ(to_string(compress_powers(parse_word("Aa^3"), 7)), "a^2");
}

TEST(Compress, PreservesEvaluation) {
    Rng rng{12};
    const Letter letters[] = {Letter::A, Letter::B, Letter::InvA, Letter::InvB};
    for (int i = 0; i < 500; ++i) {
        mpz_class p = random_prime(4 + i % 10, rng);
        Word w;
        for (int j = 0; j < 12; ++j) w.append(letters[rng() % 4], 1 + rng() % 3000);
        auto c = compress_powers(w, p);
        ASSERT_EQ(evaluate_word(c, p), evaluate_word(w, p));
        for (const auto& run : c.runs()) ASSERT_LE(2 * run.exponent, p.get_ui());
    }
}

TEST(Unitriangular, Examples) {
    Rng rng{1};
    EXPECT_TRUE(unitriangular_word(0, Side::Lower, 7, rng).empty());
    // b = 2 is a square mod 7 with root 3
    auto w = diagonal_word(5, 7, rng) + parse_word("B") + diagonal_word(3, 7, rng);
    EXPECT_EQ(evaluate_word(w, 7), ModMatrix2(1, 0, 2, 1, 7));
    EXPECT_EQ(evaluate_word(unitriangular_word(2, Side::Lower, 7, rng), 7), ModMatrix2(1, 0, 2, 1, 7));
    EXPECT_EQ(evaluate_word(unitriangular_word(3, Side::Lower, 7, rng), 7), ModMatrix2(1, 0, 3, 1, 7));
    EXPECT_EQ(evaluate_word(unitriangular_word(3, Side::Upper, 7, rng), 7), ModMatrix2(1, 3, 0, 1, 7));
}

// b = -1 is a non-square when p = 3 mod 4, which makes r = 0.
TEST(Unitriangular, MinusOneNonResidue) {
    Rng rng{2};
    for (long p : {7L, 11L, 19L, 1000003L}) {
        ASSERT_EQ(legendre(p - 1, p), -1);
        EXPECT_EQ(evaluate_word(unitriangular_word(p - 1, Side::Lower, p, rng), p),
                  ModMatrix2(1, 0, p - 1, 1, p));
        EXPECT_EQ(evaluate_word(unitriangular_word(p - 1, Side::Upper, p, rng), p),
                  ModMatrix2(1, p - 1, 0, 1, p));
    }
}

TEST(Unitriangular, AllResiduesSmallPrime) {
    Rng rng{3};
    for (long p : {5L, 13L, 31L}) {
        for (long b = 0; b < p; ++b) {
            ASSERT_EQ(evaluate_word(unitriangular_word(b, Side::Lower, p, rng), p), ModMatrix2(1, 0, b, 1, p));
            ASSERT_EQ(evaluate_word(unitriangular_word(b, Side::Upper, p, rng), p), ModMatrix2(1, b, 0, 1, p));
        }
    }
}

TEST(DiagonalWord, EvaluatesToDiagonal) {
    Rng rng{21};
    EXPECT_TRUE(diagonal_word(1, 101, rng).empty());
    for (int i = 0; i < 200; ++i) {
        mpz_class p = random_prime(5 + i % 30, rng);
        mpz_class a = uniform_range(1, p - 1, rng);
        ASSERT_EQ(evaluate_word(diagonal_word(a, p, rng), p), ModMatrix2::diagonal(a, p));
    }
}

TEST(Permutation, Word) {
    Rng rng{5};
    auto w = permutation_word(7, rng);
    ASSERT_GE(w.run_count(), 3u);
    EXPECT_EQ(w.runs()[0], (zemor::Run{Letter::InvA, 1}));
    EXPECT_EQ(w.runs()[1], (zemor::Run{Letter::B, 1}));
    EXPECT_EQ(evaluate_word(parse_word("aBa"), 7), ModMatrix2(0, 6, 1, 0, 7));
    EXPECT_EQ(evaluate_word(w, 7), ModMatrix2(0, 1, 6, 0, 7));
}

TEST(Preimage, Examples) {
    Rng rng{6};
    for (auto alphabet : {Alphabet::Extended, Alphabet::Positive})
        EXPECT_TRUE(preimage_word(ModMatrix2::identity(5), rng, alphabet).empty());
    for (long p : {5L, 7L, 101L, 1000003L})
        EXPECT_EQ(evaluate_word(preimage_word(generator(Letter::A, p), rng, Alphabet::Positive), p),
                  generator(Letter::A, p));
    auto m = ModMatrix2(2, 3, 1, 2, 5);
    EXPECT_EQ(evaluate_word(preimage_word(m, rng, Alphabet::Extended), 5), m);
    auto pos = preimage_word(m, rng, Alphabet::Positive);
    EXPECT_TRUE(pos.is_positive());
    EXPECT_EQ(evaluate_word(pos, 5), m);
}

TEST(Preimage, RandomMatricesBothAlphabets) {
    Rng rng{7};
    for (unsigned bits : {10u, 20u, 40u}) {
        for (int i = 0; i < 10; ++i) {
            mpz_class p = random_prime(bits, rng);
            auto m = random_sl2(p, rng);
            auto pre = positive_preimage(m, rng);
            ASSERT_EQ(evaluate_word(pre.extended, p), m);
            if (!pre.extended.is_positive()) {
                ASSERT_EQ(evaluate_word(pre.inverses.inv_a, p), generator(Letter::InvA, p));
                ASSERT_EQ(evaluate_word(pre.inverses.inv_b, p), generator(Letter::InvB, p));
            }
            if (pre.length() < 2'000'000) {
                auto w = pre.expand();
                ASSERT_TRUE(w.is_positive());
                ASSERT_EQ(w.length(), pre.length());
                ASSERT_EQ(evaluate_word(w, p), m);
            }
        }
    }
}

TEST(Preimage, SubstituteInverses) {
    InverseWords inv{parse_word("A^4"), parse_word("B^4")};
    EXPECT_EQ(to_string(substitute_inverses(parse_word("Ab^2a"), inv)), "AB^8A^4");
    EXPECT_THROW(substitute_inverses(parse_word("ABab"), inv, 2), std::length_error);
}

TEST(RandomSl2, RoughlyUniformOnTinyGroup) {
    // |SL2(3)| = 24
    Rng rng{10};
    std::map<std::string, int> counts;
    const int draws = 24000;
    for (int i = 0; i < draws; ++i) counts[to_string(random_sl2(3, rng))]++;
    ASSERT_EQ(counts.size(), 24u);
    for (const auto& [k, v] : counts) {
        EXPECT_GT(v, 800) << k;
        EXPECT_LT(v, 1200) << k;
    }
}
