#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "antipow/bigint.hpp"

namespace antipow {

using Letter = std::uint8_t;

/// A finite word over a small ordered alphabet. Letters are stored as indices
/// into the alphabet; positions are 0-based in this API unless noted.
class FiniteWord {
public:
    FiniteWord() = default;
    FiniteWord(std::vector<char> alphabet, std::vector<Letter> letters);

    /// Builds a word from its textual form; every character must be in the alphabet.
    static FiniteWord from_string(std::string_view text, std::vector<char> alphabet);
    static FiniteWord binary(std::string_view text) { return from_string(text, {'0', '1'}); }

    const std::vector<char>& alphabet() const noexcept { return alphabet_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    /// Index of symbol c in the alphabet; throws std::invalid_argument if absent.
    Letter index_of(char c) const;

    /// Subword of `len` letters starting at 0-based offset `pos`.
    FiniteWord factor(std::size_t pos, std::size_t len) const;
    FiniteWord prefix(std::size_t len) const { return factor(0, len); }

    std::string str() const;

    friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

private:
    std::vector<char> alphabet_;
    std::vector<Letter> letters_;
};

/// A substitution over an alphabet: one nonempty image per symbol.
class Morphism {
public:
    Morphism(std::vector<char> alphabet, std::vector<std::vector<Letter>> images);

    /// Convenience constructor from textual images, e.g. {{'a',"aba"},{'b',"bbb"}}.
    static Morphism from_strings(std::vector<char> alphabet, const std::vector<std::string>& images);

    const std::vector<char>& alphabet() const noexcept { return alphabet_; }
    const std::vector<Letter>& image(Letter a) const { return images_.at(a); }

private:
    std::vector<char> alphabet_;
    std::vector<std::vector<Letter>> images_;
};

/// sigma: a -> aba, b -> bbb
Morphism sierpinski_morphism();
/// 0 -> 01, 1 -> 10
Morphism thue_morse_morphism();

/// First n letters of the fixed point of m starting with `seed`.
FiniteWord morphism_prefix(const Morphism& m, char seed, std::size_t n);

/// First n letters of the Sierpinski word, via s_{k+1} = s_k b^{3^k} s_k.
FiniteWord sierpinski_prefix(std::size_t n);

FiniteWord thue_morse_prefix(std::size_t n);

/// Folding instructions b_0 b_1 ... over {+1,-1}: a finite preperiod followed
/// by a periodic tail. Text form is PRE(PER), e.g. "(+)", "(-+)", "+-(-)".
class InstructionSequence {
public:
    InstructionSequence(std::vector<int> preperiod, std::vector<int> period);

    static InstructionSequence regular() { return InstructionSequence({}, {+1}); }
    /// Throws std::invalid_argument on malformed text.
    static InstructionSequence parse(std::string_view text);

    int at(std::size_t k) const noexcept {
        return k < preperiod_.size() ? preperiod_[k]
                                     : period_[(k - preperiod_.size()) % period_.size()];
    }

    const std::vector<int>& preperiod() const noexcept { return preperiod_; }
    const std::vector<int>& period() const noexcept { return period_; }

    std::string str() const;

    friend bool operator==(const InstructionSequence&, const InstructionSequence&) = default;

private:
    std::vector<int> preperiod_;
    std::vector<int> period_;
};

/// First n letters of the paperfolding word for b, by iterated Toeplitz hole filling.
FiniteWord toeplitz_paperfolding_prefix(const InstructionSequence& b, std::size_t n);

/// Letter f_i (1-based i >= 1) from the sign rule w_i = (-1)^j b_k, i = 2^k(2j+1).
int paperfolding_letter(const InstructionSequence& b, const BigInt& i);
int paperfolding_letter(const InstructionSequence& b, std::uint64_t i);

/// Same letter from the residue rule f_i = 1 iff i = 2^k(2+b_k) mod 2^{k+2}.
int paperfolding_letter_by_residue(const InstructionSequence& b, const BigInt& i);

}  // namespace antipow
