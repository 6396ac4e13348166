#include "doctest.h"

#include <random>

#include "antipow/word.hpp"
#include "oracles.hpp"

using namespace antipow;

TEST_CASE("morphism_prefix iterates prolongable substitutions") {
    CHECK(morphism_prefix(sierpinski_morphism(), 'a', 9).str() == "ababbbaba");
    CHECK(morphism_prefix(sierpinski_morphism(), 'a', 1).str() == "a");
    CHECK(morphism_prefix(thue_morse_morphism(), '0', 8).str() == "01101001");
}

TEST_CASE("morphism_prefix error paths") {
    const auto swap = Morphism::from_strings({'a', 'b'}, {"ba", "ab"});
    CHECK_THROWS_AS(morphism_prefix(swap, 'a', 4), std::invalid_argument);
    CHECK_THROWS_AS(morphism_prefix(sierpinski_morphism(), 'c', 4), std::invalid_argument);
    CHECK_THROWS_AS(morphism_prefix(sierpinski_morphism(), 'a', 0), std::invalid_argument);
    CHECK(morphism_prefix(sierpinski_morphism(), 'b', 4).str() == "bbbb");
    const auto finite = Morphism::from_strings({'a', 'b'}, {"a", "b"});
    CHECK_THROWS_AS(morphism_prefix(finite, 'a', 2), std::invalid_argument);
    CHECK_THROWS_AS(Morphism::from_strings({'a', 'b'}, {"a"}), std::invalid_argument);
    CHECK_THROWS_AS(Morphism::from_strings({'a', 'b'}, {"a", ""}), std::invalid_argument);
}

TEST_CASE("sierpinski_prefix follows the block recurrence") {
    CHECK(sierpinski_prefix(10).str() == "ababbbabab");
    CHECK(sierpinski_prefix(1).str() == "a");
    CHECK(sierpinski_prefix(27).str() == "ababbbaba" "bbbbbbbbb" "ababbbaba");
    CHECK_THROWS_AS(sierpinski_prefix(0), std::invalid_argument);

    const std::size_t n = 19683;  // 3^9
    const auto via_recurrence = sierpinski_prefix(n);
    const auto via_morphism = morphism_prefix(sierpinski_morphism(), 'a', n);
    CHECK(via_recurrence == via_morphism);
    for (std::size_t len : {2u, 5u, 26u, 28u, 100u, 6560u}) CHECK(sierpinski_prefix(len) == via_morphism.prefix(len));
}

TEST_CASE("instruction sequences parse PRE(PER)") {
    CHECK(InstructionSequence::parse("(+)") == InstructionSequence::regular());
    const auto alt = InstructionSequence::parse("(-+)");
    CHECK(alt.at(0) == -1);
    CHECK(alt.at(1) == 1);
    CHECK(alt.at(1001) == 1);
    const auto mixed = InstructionSequence::parse("+-(-)");
    CHECK(mixed.preperiod() == std::vector<int>{1, -1});
    CHECK(mixed.at(2) == -1);
    CHECK(mixed.at(0) == 1);
    CHECK(mixed.str() == "+-(-)");
    CHECK(InstructionSequence::parse("+\xE2\x88\x92(\xE2\x88\x92)") == mixed);

    for (const char* bad : {"bad", "()", "(+", "+)", "+", "(+)(-)", "(+x)", "(+))", ""})
        CHECK_THROWS_AS(InstructionSequence::parse(bad), std::invalid_argument);
}

TEST_CASE("toeplitz filling reproduces the displayed prefixes") {
    const auto reg = InstructionSequence::regular();
    CHECK(toeplitz_paperfolding_prefix(reg, 32).str() == "00100110001101100010011100110110");
    CHECK(toeplitz_paperfolding_prefix(reg, 3).str() == "001");
    const auto neg = InstructionSequence::parse("(-)");
    const auto w = toeplitz_paperfolding_prefix(neg, 4);
    CHECK(w.str() == "1101");
    for (std::uint64_t i = 1; i <= 4; ++i) CHECK(w[i - 1] == paperfolding_letter(neg, i));
}

TEST_CASE("paperfolding_letter: sign rule and residue rule") {
    const auto reg = InstructionSequence::regular();
    CHECK(paperfolding_letter(reg, 3) == 1);
    CHECK(paperfolding_letter(reg, 12) == 1);
    CHECK(paperfolding_letter(reg, 8) == 0);
    CHECK_THROWS_AS(paperfolding_letter(reg, BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(paperfolding_letter(reg, std::uint64_t{0}), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto b = InstructionSequence::parse(oracle::random_instructions(rng));
        BigInt i = BigInt(rng()) * BigInt(rng()) * BigInt(rng()) + 1;
        i <<= rng() % 300;
        CHECK(paperfolding_letter(b, i) == paperfolding_letter_by_residue(b, i));
        const std::uint64_t small = rng() | 1;
        CHECK(paperfolding_letter(b, small) == paperfolding_letter(b, BigInt(small)));
    }
}

TEST_CASE("toeplitz prefix agrees with the letter oracle on 2^16 letters") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const auto text = oracle::random_instructions(rng);
        CAPTURE(text);
        const auto b = InstructionSequence::parse(text);
        const std::size_t n = std::size_t{1} << 16;
        const auto w = toeplitz_paperfolding_prefix(b, n);
        std::size_t mismatches = 0;
        for (std::uint64_t i = 1; i <= n; ++i) mismatches += w[i - 1] != paperfolding_letter(b, i);
        CHECK(mismatches == 0);
        // Short prefixes are prefixes of long ones.
        CHECK(toeplitz_paperfolding_prefix(b, 1000) == w.prefix(1000));
    }
}

TEST_CASE("ones of order k in the regular word sit at 2^k (3 + 4t)") {
    const auto reg = InstructionSequence::regular();
    for (std::size_t k = 0; k <= 8; ++k) {
        const std::size_t n = std::size_t{1} << (k + 4);
        const auto w = toeplitz_paperfolding_prefix(reg, n);
        std::vector<std::size_t> found, expected;
        for (std::size_t i = 1; i <= n; ++i)
            if (w[i - 1] == 1 && (i >> k) << k == i && ((i >> k) & 1)) found.push_back(i);
        for (std::size_t t = 0; (std::size_t{1} << k) * (3 + 4 * t) <= n; ++t)
            expected.push_back((std::size_t{1} << k) * (3 + 4 * t));
        CHECK(found == expected);
    }
}

TEST_CASE("FiniteWord invariants") {
    CHECK_THROWS_AS(FiniteWord({'a', 'a'}, {}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteWord({'a', 'b'}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteWord::binary("012"), std::invalid_argument);
    const auto w = FiniteWord::binary("0110");
    CHECK(w.factor(1, 2).str() == "11");
    CHECK_THROWS_AS(w.factor(3, 2), std::out_of_range);
}
