#include "antipow/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace antipow {

FiniteWord::FiniteWord(std::vector<char> alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        for (std::size_t j = i + 1; j < alphabet_.size(); ++j)
            if (alphabet_[i] == alphabet_[j]) throw std::invalid_argument("alphabet symbols must be distinct");
    for (Letter l : letters_)
        if (l >= alphabet_.size()) throw std::invalid_argument("letter index outside the alphabet");
}

FiniteWord FiniteWord::from_string(std::string_view text, std::vector<char> alphabet) {
    FiniteWord w(std::move(alphabet), {});
    w.letters_.reserve(text.size());
    for (char c : text) w.letters_.push_back(w.index_of(c));
    return w;
}

Letter FiniteWord::index_of(char c) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), c);
    if (it == alphabet_.end()) throw std::invalid_argument(std::string("symbol '") + c + "' is not in the alphabet");
    return static_cast<Letter>(it - alphabet_.begin());
}

FiniteWord FiniteWord::factor(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw std::out_of_range("factor exceeds word");
    FiniteWord w;
    w.alphabet_ = alphabet_;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
}

std::string FiniteWord::str() const {
    std::string s;
    s.reserve(size());
    for (Letter l : letters_) s.push_back(alphabet_[l]);
    return s;
}

Morphism::Morphism(std::vector<char> alphabet, std::vector<std::vector<Letter>> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
        throw std::invalid_argument("morphism needs exactly one rule per symbol");
    for (const auto& img : images_) {
        if (img.empty()) throw std::invalid_argument("morphism images must be nonempty");
        for (Letter l : img)
            if (l >= alphabet_.size()) throw std::invalid_argument("morphism image leaves the alphabet");
    }
}

Morphism Morphism::from_strings(std::vector<char> alphabet, const std::vector<std::string>& images) {
    if (images.size() != alphabet.size())
        throw std::invalid_argument("morphism needs exactly one rule per symbol");
    std::vector<std::vector<Letter>> rules;
    for (const auto& img : images) rules.push_back(FiniteWord::from_string(img, alphabet).letters());
    return Morphism(std::move(alphabet), std::move(rules));
}

Morphism sierpinski_morphism() { return Morphism::from_strings({'a', 'b'}, {"aba", "bbb"}); }

Morphism thue_morse_morphism() { return Morphism::from_strings({'0', '1'}, {"01", "10"}); }

FiniteWord morphism_prefix(const Morphism& m, char seed, std::size_t n) {
    if (n == 0) throw std::invalid_argument("prefix length must be positive");
    const auto& alphabet = m.alphabet();
    auto it = std::find(alphabet.begin(), alphabet.end(), seed);
    if (it == alphabet.end()) throw std::invalid_argument(std::string("no rule for symbol '") + seed + "'");
    const auto a = static_cast<Letter>(it - alphabet.begin());
    const auto& first = m.image(a);
    if (first.front() != a) throw std::invalid_argument("morphism is not prolongable on the seed");

    // The fixed point is a prefix of its own image: stream images of its letters.
    std::vector<Letter> out(first.begin(), first.end());
    for (std::size_t i = 1; out.size() < n; ++i) {
        if (i >= out.size()) throw std::invalid_argument("fixed point from the seed is finite");
        const auto& img = m.image(out[i]);
        out.insert(out.end(), img.begin(), img.end());
    }
    out.resize(n);
    return FiniteWord(alphabet, std::move(out));
}

FiniteWord sierpinski_prefix(std::size_t n) {
    if (n == 0) throw std::invalid_argument("prefix length must be positive");
    std::vector<Letter> s{0};
    std::size_t run = 1;  // 3^k
    while (s.size() < n) {
        std::vector<Letter> next;
        next.reserve(3 * s.size());
        next.insert(next.end(), s.begin(), s.end());
        next.insert(next.end(), run, Letter{1});
        next.insert(next.end(), s.begin(), s.end());
        s = std::move(next);
        run *= 3;
    }
    s.resize(n);
    return FiniteWord({'a', 'b'}, std::move(s));
}

FiniteWord thue_morse_prefix(std::size_t n) { return morphism_prefix(thue_morse_morphism(), '0', n); }

InstructionSequence::InstructionSequence(std::vector<int> preperiod, std::vector<int> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("instruction period must be nonempty");
    auto valid = [](int v) { return v == 1 || v == -1; };
    if (!std::all_of(preperiod_.begin(), preperiod_.end(), valid) ||
        !std::all_of(period_.begin(), period_.end(), valid))
        throw std::invalid_argument("instructions must be +1 or -1");
}

namespace {

// Accepts ASCII '+'/'-' and U+2212 MINUS SIGN.
std::vector<int> parse_signs(std::string_view s) {
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    std::vector<int> out;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '+') {
            out.push_back(+1);
            ++i;
        } else if (s[i] == '-') {
            out.push_back(-1);
            ++i;
        } else if (s.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
            out.push_back(-1);
            i += kUnicodeMinus.size();
        } else {
            throw std::invalid_argument("unexpected character in instruction sequence");
        }
    }
    return out;
}

}  // namespace

InstructionSequence InstructionSequence::parse(std::string_view text) {
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')' ||
        text.find('(', open + 1) != std::string_view::npos ||
        text.find(')') != text.size() - 1)
        throw std::invalid_argument("instruction sequence must have the form PRE(PER): '" + std::string(text) + "'");
    auto period = parse_signs(text.substr(open + 1, text.size() - open - 2));
    if (period.empty()) throw std::invalid_argument("instruction period must be nonempty");
    return InstructionSequence(parse_signs(text.substr(0, open)), std::move(period));
}

std::string InstructionSequence::str() const {
    std::string s;
    for (int v : preperiod_) s.push_back(v > 0 ? '+' : '-');
    s.push_back('(');
    for (int v : period_) s.push_back(v > 0 ? '+' : '-');
    s.push_back(')');
    return s;
}

FiniteWord toeplitz_paperfolding_prefix(const InstructionSequence& b, std::size_t n) {
    if (n == 0) throw std::invalid_argument("prefix length must be positive");
    constexpr Letter kHole = 2;
    static constexpr Letter kGamma[4] = {0, kHole, 1, kHole};     // (0?1?)^w
    static constexpr Letter kGammaBar[4] = {1, kHole, 0, kHole};  // (1?0?)^w

    std::vector<Letter> f(n, kHole);
    std::vector<std::size_t> holes(n);
    for (std::size_t i = 0; i < n; ++i) holes[i] = i;

    // Round k writes gamma_k into the holes left by round k-1, in order.
    for (std::size_t k = 0; !holes.empty(); ++k) {
        const Letter* gamma = b.at(k) > 0 ? kGamma : kGammaBar;
        std::vector<std::size_t> remaining;
        remaining.reserve(holes.size() / 2 + 1);
        for (std::size_t t = 0; t < holes.size(); ++t) {
            const Letter c = gamma[t % 4];
            if (c == kHole)
                remaining.push_back(holes[t]);
            else
                f[holes[t]] = c;
        }
        holes = std::move(remaining);
    }
    return FiniteWord({'0', '1'}, std::move(f));
}

int paperfolding_letter(const InstructionSequence& b, const BigInt& i) {
    if (i <= 0) throw std::invalid_argument("paperfolding positions start at 1");
    const std::size_t k = two_adic_valuation(i);
    const BigInt j = ((i >> k) - 1) >> 1;
    const int sign = test_bit(j, 0) ? -1 : 1;
    return sign * b.at(k) == -1 ? 1 : 0;
}

int paperfolding_letter(const InstructionSequence& b, std::uint64_t i) {
    if (i == 0) throw std::invalid_argument("paperfolding positions start at 1");
    const auto k = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint64_t j = ((i >> k) - 1) >> 1;
    const int sign = (j & 1) ? -1 : 1;
    return sign * b.at(k) == -1 ? 1 : 0;
}

int paperfolding_letter_by_residue(const InstructionSequence& b, const BigInt& i) {
    if (i <= 0) throw std::invalid_argument("paperfolding positions start at 1");
    const std::size_t k = two_adic_valuation(i);
    const BigInt modulus = pow2(k + 2);
    const BigInt residue = pow2(k) * (2 + b.at(k));
    return (i % modulus) == residue ? 1 : 0;
}

}  // namespace antipow
