#include "zemor/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "zemor/errors.hpp"

namespace zemor {

char to_char(Letter l) noexcept {
    switch (l) {
        case Letter::A: return 'A';
        case Letter::B: return 'B';
        case Letter::InvA: return 'a';
        case Letter::InvB: return 'b';
    }
    return '?';
}

Word::Word(std::initializer_list<Run> runs) {
    for (const Run& r : runs) append(r.letter, r.exponent);
}

Word::Word(const std::vector<Run>& runs) {
    for (const Run& r : runs) append(r.letter, r.exponent);
}

void Word::append(Letter l, std::uint64_t e) {
    if (e == 0) return;
    if (!runs_.empty() && runs_.back().letter == l) {
        std::uint64_t& x = runs_.back().exponent;
        if (__builtin_add_overflow(x, e, &x)) throw std::overflow_error("run exponent exceeds 64 bits");
        return;
    }
    runs_.push_back(Run{l, e});
}

void Word::append(const Word& w) {
    if (&w == this) {
        const Word copy = w;
        append(copy);
        return;
    }
    for (const Run& r : w.runs_) append(r.letter, r.exponent);
}

void Word::append_power(const Word& w, std::uint64_t times) {
    if (w.empty() || times == 0) return;
    const Word copy = w;
    if (copy.runs_.size() == 1) {
        std::uint64_t e = 0;
        if (__builtin_mul_overflow(copy.runs_.front().exponent, times, &e))
            throw std::overflow_error("run exponent exceeds 64 bits");
        append(copy.runs_.front().letter, e);
        return;
    }
    runs_.reserve(runs_.size() + copy.runs_.size() * times);
    for (std::uint64_t i = 0; i < times; ++i) append(copy);
}

std::uint64_t Word::length() const {
    std::uint64_t total = 0;
    for (const Run& r : runs_)
        if (__builtin_add_overflow(total, r.exponent, &total)) throw std::overflow_error("word length exceeds 64 bits");
    return total;
}

bool Word::is_positive() const noexcept {
    return std::none_of(runs_.begin(), runs_.end(), [](const Run& r) { return is_inverse_letter(r.letter); });
}

Word Word::drop_first_letter() const {
    if (runs_.empty()) throw BadInput("cannot drop a letter from the empty word");
    Word out;
    out.runs_.reserve(runs_.size());
    if (runs_.front().exponent > 1) out.runs_.push_back(Run{runs_.front().letter, runs_.front().exponent - 1});
    out.runs_.insert(out.runs_.end(), runs_.begin() + 1, runs_.end());
    return out;
}

Word transpose_reverse(const Word& w) {
    Word out;
    for (auto it = w.runs().rbegin(); it != w.runs().rend(); ++it) out.append(transpose(it->letter), it->exponent);
    return out;
}

Word word_simplify(const Word& w) {
    std::vector<Run> stack;
    stack.reserve(w.run_count());
    for (Run r : w.runs()) {
        while (r.exponent != 0 && !stack.empty()) {
            Run& top = stack.back();
            if (top.letter == r.letter) {
                if (__builtin_add_overflow(top.exponent, r.exponent, &top.exponent))
                    throw std::overflow_error("run exponent exceeds 64 bits");
                r.exponent = 0;
            } else if (top.letter == inverse(r.letter)) {
                const std::uint64_t cancel = std::min(top.exponent, r.exponent);
                top.exponent -= cancel;
                r.exponent -= cancel;
                if (top.exponent == 0) stack.pop_back();
            } else {
                break;
            }
        }
        if (r.exponent != 0) stack.push_back(r);
    }
    return Word{stack};
}

std::string to_string(const Word& w) {
    std::string out;
    for (const Run& r : w.runs()) {
        out += to_char(r.letter);
        if (r.exponent != 1) {
            out += '^';
            out += std::to_string(r.exponent);
        }
    }
    return out;
}

Word parse_word(std::string_view text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        Letter l{};
        switch (text[i]) {
            case 'A': l = Letter::A; break;
            case 'B': l = Letter::B; break;
            case 'a': l = Letter::InvA; break;
            case 'b': l = Letter::InvB; break;
            default: throw WordParseError(i, std::string("unexpected character '") + text[i] + "'");
        }
        ++i;
        std::uint64_t exponent = 1;
        if (i < text.size() && text[i] == '^') {
            const std::size_t at = ++i;
            if (i >= text.size() || text[i] < '0' || text[i] > '9') throw WordParseError(at, "expected exponent digits");
            if (text[i] == '0') throw WordParseError(at, "exponent has a leading zero");
            exponent = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                const auto digit = static_cast<std::uint64_t>(text[i] - '0');
                if (__builtin_mul_overflow(exponent, std::uint64_t{10}, &exponent) ||
                    __builtin_add_overflow(exponent, digit, &exponent))
                    throw WordParseError(at, "exponent exceeds 64 bits");
                ++i;
            }
            if (exponent < 2) throw WordParseError(at, "explicit exponent must be at least 2");
        }
        try {
            out.append(l, exponent);
        } catch (const std::overflow_error&) {
            throw WordParseError(i, "merged run exponent exceeds 64 bits");
        }
    }
    return out;
}

}  // namespace zemor
