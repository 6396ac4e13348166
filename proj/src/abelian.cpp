#include "antipow/abelian.hpp"

#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

namespace antipow {

std::uint64_t ParikhVector::length() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::size_t ParikhVectorHash::operator()(const ParikhVector& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : p.counts) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

ParikhVector parikh(const FiniteWord& w) {
    ParikhVector p{std::vector<std::uint64_t>(w.alphabet().size(), 0)};
    for (Letter l : w.letters()) ++p.counts[l];
    return p;
}

ParikhTable::ParikhTable(const FiniteWord& w)
    : length_(w.size()), sigma_(w.alphabet().size()), table_((w.size() + 1) * w.alphabet().size(), 0) {
    if (w.size() >= std::numeric_limits<std::uint32_t>::max()) throw std::length_error("word too long for ParikhTable");
    for (std::size_t t = 0; t < length_; ++t) {
        for (std::size_t a = 0; a < sigma_; ++a) table_[(t + 1) * sigma_ + a] = table_[t * sigma_ + a];
        ++table_[(t + 1) * sigma_ + w[t]];
    }
}

ParikhVector ParikhTable::entry(std::size_t t) const {
    if (t > length_) throw std::out_of_range("ParikhTable entry out of range");
    ParikhVector p{std::vector<std::uint64_t>(sigma_)};
    for (std::size_t a = 0; a < sigma_; ++a) p.counts[a] = table_[t * sigma_ + a];
    return p;
}

ParikhVector ParikhTable::factor(std::size_t pos, std::size_t len) const {
    if (pos > length_ || len > length_ - pos) throw std::out_of_range("factor exceeds word");
    ParikhVector p{std::vector<std::uint64_t>(sigma_)};
    for (std::size_t a = 0; a < sigma_; ++a) p.counts[a] = count(static_cast<Letter>(a), pos, len);
    return p;
}

namespace {

void check_length(const FiniteWord& w, std::size_t n) {
    if (n == 0 || n > w.size()) throw std::out_of_range("factor length must satisfy 1 <= n <= |w|");
}

}  // namespace

std::size_t abelian_complexity(const FiniteWord& w, std::size_t n) {
    check_length(w, n);
    const auto& x = w.letters();
    if (w.alphabet().size() <= 2) {
        // Binary: the Parikh vector of a length-n factor is determined by its count of letter 1.
        std::vector<bool> seen(n + 1, false);
        std::size_t ones = 0, distinct = 0;
        for (std::size_t i = 0; i < n; ++i) ones += x[i];
        for (std::size_t i = 0;; ++i) {
            if (!seen[ones]) {
                seen[ones] = true;
                ++distinct;
            }
            if (i + n >= x.size()) break;
            ones += x[i + n];
            ones -= x[i];
        }
        return distinct;
    }
    const ParikhTable table(w);
    std::unordered_set<ParikhVector, ParikhVectorHash> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(table.factor(i, n));
    return seen.size();
}

std::size_t factor_complexity(const FiniteWord& w, std::size_t n) {
    check_length(w, n);
    const std::string_view text(reinterpret_cast<const char*>(w.letters().data()), w.size());
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i + n <= text.size(); ++i) seen.insert(text.substr(i, n));
    return seen.size();
}

bool is_prefix_normal(const FiniteWord& w, char letter) {
    const Letter a = w.index_of(letter);
    const ParikhTable table(w);
    for (std::size_t n = 1; n <= w.size(); ++n) {
        const auto bound = table.count(a, 0, n);
        for (std::size_t i = 1; i + n <= w.size(); ++i)
            if (table.count(a, i, n) > bound) return false;
    }
    return true;
}

std::size_t phi_u(const FiniteWord& block, std::size_t u) {
    if (u == 0 || u >= 63 || block.size() != (std::size_t{1} << u))
        throw std::invalid_argument("phi_u expects a block of length 2^u with u >= 1");
    if (block.alphabet().size() != 2) throw std::invalid_argument("phi_u expects a binary block");
    std::size_t ones = 0;
    for (Letter l : block.letters()) ones += l;
    return ones;
}

std::set<std::size_t> cyclic_shift_spectrum(const FiniteWord& f, std::size_t u) {
    if (f.size() == 0 || !std::has_single_bit(f.size()))
        throw std::invalid_argument("cyclic_shift_spectrum expects a factor of length 2^n");
    const auto n = static_cast<std::size_t>(std::countr_zero(f.size()));
    if (u == 0 || n < u + 2) throw std::invalid_argument("cyclic_shift_spectrum expects n >= u + 2, u >= 1");

    const std::size_t width = std::size_t{1} << u;
    const std::size_t blocks = f.size() / width;
    std::vector<std::size_t> values(blocks);
    for (std::size_t i = 0; i < blocks; ++i) values[i] = phi_u(f.factor(i * width, width), u);

    std::set<std::size_t> shifts;
    for (std::size_t q = 1; q <= blocks; ++q) {
        bool same = true;
        for (std::size_t i = 0; i < blocks && same; ++i) same = values[i] == values[(i + q) % blocks];
        if (same) shifts.insert(q);
    }
    return shifts;
}

ComplexityTable complexity_table(const FiniteWord& w, std::size_t max_n, ComplexityKind kind) {
    if (max_n == 0 || max_n > w.size()) throw std::out_of_range("max n must satisfy 1 <= max_n <= prefix length");
    ComplexityTable table{kind, {}};
    for (std::size_t n = 1; n <= max_n; ++n)
        table.rows.emplace_back(n, kind == ComplexityKind::abelian ? abelian_complexity(w, n) : factor_complexity(w, n));
    return table;
}

void write_csv(std::ostream& out, const ComplexityTable& table) {
    out << "n,value\n";
    for (const auto& [n, value] : table.rows) out << n << ',' << value << '\n';
}

}  // namespace antipow
