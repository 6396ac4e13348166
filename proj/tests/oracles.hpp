#pragma once

// Brute-force reference implementations used only by tests. They work on plain
// strings and materialized prefixes and share no code with the library's fast paths.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::map<char, std::size_t> letter_counts(const std::string& s) {
    std::map<char, std::size_t> c;
    for (char x : s) ++c[x];
    return c;
}

/// Ones at 1-based positions a+1 .. n of a binary string.
inline std::size_t ones_between(const std::string& word, std::size_t a, std::size_t n) {
    return static_cast<std::size_t>(std::count(word.begin() + static_cast<std::ptrdiff_t>(a),
                                               word.begin() + static_cast<std::ptrdiff_t>(n), '1'));
}

/// Sum over k of floor(len / 2^{k+2}), by direct enumeration of orders.
inline std::size_t baseline(std::size_t len) {
    std::size_t total = 0;
    for (std::size_t k = 0; (std::size_t{4} << k) <= len; ++k) total += len / (std::size_t{4} << k);
    return total;
}

inline std::vector<std::size_t> brute_delta(const std::string& word, std::size_t l, std::size_t d, std::size_t m) {
    std::vector<std::size_t> v;
    for (std::size_t t = 0; t < m; ++t) v.push_back(ones_between(word, l + t * d, l + (t + 1) * d) - baseline(d));
    return v;
}

inline std::size_t brute_abelian_complexity(const std::string& w, std::size_t n) {
    std::set<std::map<char, std::size_t>> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(letter_counts(w.substr(i, n)));
    return seen.size();
}

inline std::size_t brute_factor_complexity(const std::string& w, std::size_t n) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(w.substr(i, n));
    return seen.size();
}

enum class Kind { power, abelian_power, antipower, abelian_antipower };

/// Pairwise comparison of all cells; O(m^2 d) per split.
inline bool split_is(const std::string& w, std::size_t pos, std::size_t d, std::size_t m, Kind kind) {
    std::vector<std::string> cells;
    std::vector<std::map<char, std::size_t>> parikh;
    for (std::size_t t = 0; t < m; ++t) {
        cells.push_back(w.substr(pos + t * d, d));
        parikh.push_back(letter_counts(cells.back()));
    }
    bool all_equal = true, all_abelian_equal = true, distinct = true, abelian_distinct = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (cells[i] != cells[j]) all_equal = false;
            else distinct = false;
            if (parikh[i] != parikh[j]) all_abelian_equal = false;
            else abelian_distinct = false;
        }
    switch (kind) {
        case Kind::power: return all_equal;
        case Kind::abelian_power: return all_abelian_equal;
        case Kind::antipower: return distinct;
        case Kind::abelian_antipower: return abelian_distinct;
    }
    return false;
}

struct Hit {
    std::size_t start, d;
};

inline std::optional<Hit> reference_find_first(const std::string& w, std::size_t m, Kind kind, std::size_t d_max) {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t d = 1; d <= d_max && pos + m * d <= w.size(); ++d)
            if (split_is(w, pos, d, m, kind)) return Hit{pos + 1, d};
    return std::nullopt;
}

/// Random binary string over the given two symbols.
inline std::string random_binary(std::mt19937_64& rng, std::size_t n, char zero = '0', char one = '1') {
    std::string s(n, zero);
    for (auto& c : s)
        if (rng() & 1) c = one;
    return s;
}

/// Random instruction text PRE(PER) with |PRE| <= max_pre and 1 <= |PER| <= max_per.
inline std::string random_instructions(std::mt19937_64& rng, std::size_t max_pre = 4, std::size_t max_per = 4) {
    auto signs = [&](std::size_t n) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(rng() & 1 ? '+' : '-');
        return s;
    };
    const std::size_t pre = rng() % (max_pre + 1);
    const std::size_t per = 1 + rng() % max_per;
    return signs(pre) + "(" + signs(per) + ")";
}

}  // namespace oracle
