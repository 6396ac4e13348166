#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "antipow/word.hpp"

namespace antipow {

/// m consecutive cells of width d; cell 1 begins at the 1-based position `start`.
struct BlockSplit {
    std::size_t start = 1;
    std::size_t cell_width = 1;
    std::size_t order = 1;

    bool fits(std::size_t word_length) const noexcept {
        if (start < 1 || cell_width < 1 || order < 1 || start - 1 > word_length) return false;
        return order <= (word_length - (start - 1)) / cell_width;
    }
};

enum class ScanKind { power, abelian_power, antipower, abelian_antipower };

std::string_view to_string(ScanKind kind);
/// Accepts both `abelian_power` and `abelian-power` spellings.
ScanKind parse_scan_kind(std::string_view text);

struct BlockFlags {
    bool is_power = false;
    bool is_abelian_power = false;
    bool is_antipower = false;
    bool is_abelian_antipower = false;

    bool has(ScanKind kind) const noexcept;
};

struct ScanHit {
    std::size_t start = 0;
    std::size_t cell_width = 0;
    std::size_t order = 0;
    ScanKind kind = ScanKind::antipower;

    friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

/// One-line JSON: {"start":..,"d":..,"m":..,"kind":".."}
std::string to_json(const ScanHit& hit);

/// Reference classification by direct cell comparison.
BlockFlags classify_block(const FiniteWord& w, const BlockSplit& split);

/// Occurrence with the smallest start (ties: smallest d) among splits with d <= d_max.
std::optional<ScanHit> find_first(const FiniteWord& w, std::size_t m, ScanKind kind, std::size_t d_max);

/// True iff no split of w (any start, any d) is an occurrence of `kind` of order m.
/// The cell-width range is partitioned across `threads` workers.
bool avoidance_scan(const FiniteWord& w, std::size_t m, ScanKind kind, unsigned threads = 1);

}  // namespace antipow
