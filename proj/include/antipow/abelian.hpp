#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "antipow/word.hpp"

namespace antipow {

/// Per-letter occurrence counts of a word, in alphabet order.
struct ParikhVector {
    std::vector<std::uint64_t> counts;

    std::uint64_t length() const;
    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
    friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

struct ParikhVectorHash {
    std::size_t operator()(const ParikhVector& p) const noexcept;
};

ParikhVector parikh(const FiniteWord& w);

/// Cumulative Parikh vectors: entry t describes the prefix of length t, so any
/// factor's Parikh vector is the difference of two entries.
class ParikhTable {
public:
    explicit ParikhTable(const FiniteWord& w);

    std::size_t word_length() const noexcept { return length_; }
    std::size_t alphabet_size() const noexcept { return sigma_; }

    /// Parikh vector of the prefix of length t (0 <= t <= |w|).
    ParikhVector entry(std::size_t t) const;
    /// Parikh vector of the factor of `len` letters at 0-based offset `pos`.
    ParikhVector factor(std::size_t pos, std::size_t len) const;
    /// Occurrences of letter `a` in that factor.
    std::uint64_t count(Letter a, std::size_t pos, std::size_t len) const {
        return table_[(pos + len) * sigma_ + a] - table_[pos * sigma_ + a];
    }

private:
    std::size_t length_;
    std::size_t sigma_;
    std::vector<std::uint32_t> table_;
};

/// Number of distinct Parikh vectors among length-n factors of w (1 <= n <= |w|).
std::size_t abelian_complexity(const FiniteWord& w, std::size_t n);

/// Number of distinct length-n factors of w (1 <= n <= |w|).
std::size_t factor_complexity(const FiniteWord& w, std::size_t n);

/// True iff no factor of w has more occurrences of `letter` than the prefix of the same length.
bool is_prefix_normal(const FiniteWord& w, char letter);

/// Number of ones in a binary block of length 2^u, u >= 1.
std::size_t phi_u(const FiniteWord& block, std::size_t u);

/// Shifts q in [1, 2^{n-u}] under which the sequence of block one-counts of f
/// (|f| = 2^n, blocks of length 2^u, n >= u + 2) is invariant under cyclic rotation.
std::set<std::size_t> cyclic_shift_spectrum(const FiniteWord& f, std::size_t u);

enum class ComplexityKind { abelian, factor };

struct ComplexityTable {
    ComplexityKind kind = ComplexityKind::abelian;
    std::vector<std::pair<std::size_t, std::size_t>> rows;  // (n, value)
};

/// Rows for n = 1..max_n on the given prefix.
ComplexityTable complexity_table(const FiniteWord& w, std::size_t max_n, ComplexityKind kind);

/// CSV with header `n,value`.
void write_csv(std::ostream& out, const ComplexityTable& table);

}  // namespace antipow
