#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zemor {

enum class Letter : std::uint8_t { A, B, InvA, InvB };

constexpr Letter inverse(Letter l) noexcept {
    switch (l) {
        case Letter::A: return Letter::InvA;
        case Letter::B: return Letter::InvB;
        case Letter::InvA: return Letter::A;
        case Letter::InvB: return Letter::B;
    }
    return l;
}

/// Letter whose matrix is the transpose of l's: A <-> B, A^-1 <-> B^-1.
constexpr Letter transpose(Letter l) noexcept {
    switch (l) {
        case Letter::A: return Letter::B;
        case Letter::B: return Letter::A;
        case Letter::InvA: return Letter::InvB;
        case Letter::InvB: return Letter::InvA;
    }
    return l;
}

constexpr bool is_inverse_letter(Letter l) noexcept { return l == Letter::InvA || l == Letter::InvB; }

char to_char(Letter l) noexcept;

struct Run {
    Letter letter;
    std::uint64_t exponent;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length encoded word over {A, B, A^-1, B^-1}.
///
/// Canonical form: every exponent is >= 1 and adjacent runs carry different
/// letters. Inverse pairs are *not* cancelled here; see word_simplify.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Run> runs);
    explicit Word(const std::vector<Run>& runs);

    /// Appends l^e, merging with the last run when the letters match.
    /// e == 0 is a no-op. Throws std::overflow_error if a merged exponent
    /// would not fit in 64 bits.
    void append(Letter l, std::uint64_t e = 1);
    void append(const Word& w);
    void append_power(const Word& w, std::uint64_t times);

    const std::vector<Run>& runs() const noexcept { return runs_; }
    bool empty() const noexcept { return runs_.empty(); }
    std::size_t run_count() const noexcept { return runs_.size(); }

    /// Number of letters (sum of exponents). Throws std::overflow_error past 2^64-1.
    std::uint64_t length() const;

    /// True when no run uses A^-1 or B^-1.
    bool is_positive() const noexcept;

    /// Removes one letter from the front. The word must be nonempty.
    Word drop_first_letter() const;

    friend Word operator+(Word lhs, const Word& rhs) {
        lhs.append(rhs);
        return lhs;
    }
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Run> runs_;
};

/// Reverses the word and swaps A <-> B, A^-1 <-> B^-1. The result evaluates
/// to the transpose of the input's evaluation.
Word transpose_reverse(const Word& w);

/// Free reduction: cancels adjacent mutually inverse runs until none remain.
Word word_simplify(const Word& w);

/// Text form: 'A','B' for generators, 'a','b' for inverses, "X^n" for n >= 2,
/// runs concatenated without separators, e.g. "B^3A^5B^2". Empty word is "".
std::string to_string(const Word& w);

/// Inverse of to_string. Repeated letters ("AA") are accepted and merged.
/// Throws WordParseError carrying the byte offset of the first problem.
Word parse_word(std::string_view text);

}  // namespace zemor
