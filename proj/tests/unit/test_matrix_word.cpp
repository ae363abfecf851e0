#include <gtest/gtest.h>

#include <zemor/errors.hpp>
#include <zemor/hash.hpp>
#include <zemor/matrix.hpp>
#include <zemor/word.hpp>

#include <cstdint>
#include <vector>

using namespace zemor;

namespace {

ModMatrix2 m5(long a, long b, long c, long d) { return ModMatrix2(a, b, c, d, 5); }

}  // namespace

TEST(Matrix, RejectsBadModulusAndDeterminant) {
    EXPECT_THROW(ModMatrix2(1, 0, 0, 1, 4), BadInput);
    EXPECT_THROW(ModMatrix2(1, 0, 0, 1, 1), BadInput);
    EXPECT_THROW(m5(2, 1, 1, 3), BadInput);
    EXPECT_THROW(parse_matrix("2,1,1,3", 5), BadInput);
    EXPECT_THROW(parse_matrix("1,0,0", 5), BadInput);
    EXPECT_THROW(parse_matrix("1,0,0,x", 5), BadInput);
}

TEST(Matrix, Products) {
    EXPECT_EQ(m5(1, 1, 0, 1) * m5(1, 0, 1, 1), m5(2, 1, 1, 1));
    EXPECT_EQ(ModMatrix2::identity(5) * m5(2, 3, 1, 2), m5(2, 3, 1, 2));
    EXPECT_EQ(m5(2, 1, 1, 1) * m5(2, 1, 1, 1), m5(0, 3, 3, 2));
    EXPECT_THROW(m5(1, 0, 0, 1) * ModMatrix2::identity(7), ModulusMismatch);
}

TEST(Matrix, PowerInverseTranspose) {
    auto m = m5(2, 1, 1, 1);
    EXPECT_TRUE((m * m.inverse()).is_identity());
    EXPECT_EQ(power(m, 3), m * m * m);
    EXPECT_EQ(power(m, -2), m.inverse() * m.inverse());
    EXPECT_EQ(m5(2, 3, 1, 2).transpose(), m5(2, 1, 3, 2));
    EXPECT_EQ(to_string(m5(-1, 0, 0, -1)), "4,0,0,4");
    EXPECT_EQ(parse_matrix("-1,0,0,-1", 5), m5(4, 0, 0, 4));
}

TEST(Hash, Generators) {
    EXPECT_EQ(generator(Letter::A, 5), m5(1, 1, 0, 1));
    EXPECT_EQ(generator(Letter::B, 5), m5(1, 0, 1, 1));
    EXPECT_EQ(generator(Letter::InvA, 5), m5(1, 4, 0, 1));
    EXPECT_EQ(generator(Letter::InvB, 5), m5(1, 0, 4, 1));
}

TEST(Hash, EvaluateWord) {
    EXPECT_TRUE(evaluate_word(Word{}, 7).is_identity());
    EXPECT_EQ(evaluate_word(parse_word("AB"), 5), m5(2, 1, 1, 1));
    EXPECT_TRUE(evaluate_word(parse_word("Aa"), 7).is_identity());
    EXPECT_TRUE(evaluate_word(parse_word("A^5"), 5).is_identity());
    // run powers agree with letter-by-letter products
    auto p = mpz_class(101);
    auto slow = ModMatrix2::identity(p);
    for (int i = 0; i < 37; ++i) slow = slow * generator(Letter::B, p);
    for (int i = 0; i < 3; ++i) slow = slow * generator(Letter::InvA, p);
    EXPECT_EQ(evaluate_word(parse_word("B^37a^3"), p), slow);
}

TEST(Hash, ZemorHash) {
    std::vector<std::uint8_t> ab{0, 1}, aba{0, 1, 0}, none;
    EXPECT_EQ(zemor_hash(ab, 5), m5(2, 1, 1, 1));
    EXPECT_TRUE(zemor_hash(none, 5).is_identity());
    EXPECT_EQ(zemor_hash(aba, 5), m5(2, 3, 1, 2));
    std::vector<std::uint8_t> bad{0, 2};
    EXPECT_THROW(zemor_hash(bad, 5), BadInput);
}

TEST(Hash, IntegerProduct) {
    auto m = integer_product(parse_word("B^3A^5B^2"));
    EXPECT_EQ(m, (IntMatrix2{11, 5, 35, 16}));
    EXPECT_EQ(integer_product(parse_word("a")), (IntMatrix2{1, -1, 0, 1}));
}

TEST(Word, CanonicalRuns) {
    Word w;
    w.append(Letter::A, 2);
    w.append(Letter::A, 3);
    w.append(Letter::B, 0);
    w.append(Letter::B);
    EXPECT_EQ(w.run_count(), 2u);
    EXPECT_EQ(w.length(), 6u);
    EXPECT_EQ(to_string(w), "A^5B");
    EXPECT_TRUE(w.is_positive());
    w.append(Letter::InvA);
    EXPECT_FALSE(w.is_positive());
    EXPECT_EQ(to_string(w.drop_first_letter()), "A^4Ba");
}

TEST(Word, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_word("B^3A^5B^2")), "B^3A^5B^2");
    EXPECT_EQ(to_string(parse_word("AAB")), "A^2B");
    EXPECT_EQ(to_string(parse_word("")), "");
    EXPECT_EQ(to_string(parse_word("ab^12")), "ab^12");
}

TEST(Word, ParseErrorsCarryOffset) {
    auto offset_of = [](const char* text) {
        try {
            parse_word(text);
        } catch (const WordParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    EXPECT_EQ(offset_of("A^"), 2);
    EXPECT_EQ(offset_of("AB^0"), 3);
    EXPECT_EQ(offset_of("A^1"), 2);
    EXPECT_EQ(offset_of("A^07"), 2);
    EXPECT_EQ(offset_of("ABx"), 2);
    EXPECT_EQ(offset_of("^2"), 0);
}

TEST(Word, TransposeReverse) {
    EXPECT_EQ(to_string(transpose_reverse(parse_word("AAB"))), "AB^2");
    EXPECT_EQ(to_string(transpose_reverse(Word{})), "");
    EXPECT_EQ(to_string(transpose_reverse(parse_word("B^2A^5B^2"))), "A^2B^5A^2");
    auto w = parse_word("AB^3aBbA^2");
    EXPECT_EQ(evaluate_word(transpose_reverse(w), 13), evaluate_word(w, 13).transpose());
}

TEST(Word, Simplify) {
    EXPECT_EQ(to_string(word_simplify(parse_word("AaB"))), "B");
    EXPECT_EQ(to_string(word_simplify(parse_word("A^3a"))), "A^2");
    EXPECT_EQ(to_string(word_simplify(parse_word("ABba"))), "");
    EXPECT_EQ(to_string(word_simplify(parse_word("A^2Bb^3Ba^2"))), "A^2ba^2");
    EXPECT_EQ(to_string(word_simplify(parse_word("A^2Bb^2Ba^2"))), "");
    EXPECT_EQ(to_string(word_simplify(parse_word("Ab^2B^5a"))), "AB^3a");
}

TEST(Word, ExponentOverflowIsReported) {
    Word w;
    w.append(Letter::A, UINT64_MAX);
    EXPECT_THROW(w.append(Letter::A, 1), std::overflow_error);
    Word v;
    v.append(Letter::A, UINT64_MAX);
    v.append(Letter::B, 1);
    EXPECT_THROW(v.length(), std::overflow_error);
}
