#include "antipow/scan.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "antipow/abelian.hpp"

namespace antipow {

std::string_view to_string(ScanKind kind) {
    switch (kind) {
        case ScanKind::power: return "power";
        case ScanKind::abelian_power: return "abelian_power";
        case ScanKind::antipower: return "antipower";
        case ScanKind::abelian_antipower: return "abelian_antipower";
    }
    return "unknown";
}

ScanKind parse_scan_kind(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), '-', '_');
    for (auto k : {ScanKind::power, ScanKind::abelian_power, ScanKind::antipower, ScanKind::abelian_antipower})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown scan kind '" + std::string(text) + "'");
}

bool BlockFlags::has(ScanKind kind) const noexcept {
    switch (kind) {
        case ScanKind::power: return is_power;
        case ScanKind::abelian_power: return is_abelian_power;
        case ScanKind::antipower: return is_antipower;
        case ScanKind::abelian_antipower: return is_abelian_antipower;
    }
    return false;
}

std::string to_json(const ScanHit& hit) {
    nlohmann::ordered_json j;
    j["start"] = hit.start;
    j["d"] = hit.cell_width;
    j["m"] = hit.order;
    j["kind"] = to_string(hit.kind);
    return j.dump();
}

BlockFlags classify_block(const FiniteWord& w, const BlockSplit& split) {
    if (!split.fits(w.size())) throw std::out_of_range("block split exceeds word");
    const std::size_t m = split.order, d = split.cell_width;
    std::vector<FiniteWord> cells;
    std::vector<ParikhVector> vectors;
    for (std::size_t t = 0; t < m; ++t) {
        cells.push_back(w.factor(split.start - 1 + t * d, d));
        vectors.push_back(parikh(cells.back()));
    }
    BlockFlags f;
    f.is_power = std::all_of(cells.begin(), cells.end(), [&](const auto& c) { return c == cells.front(); });
    f.is_abelian_power =
        std::all_of(vectors.begin(), vectors.end(), [&](const auto& v) { return v == vectors.front(); });
    f.is_antipower = f.is_abelian_antipower = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (cells[i] == cells[j]) f.is_antipower = false;
            if (vectors[i] == vectors[j]) f.is_abelian_antipower = false;
        }
    return f;
}

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kHashBase = 0x1f3d5b79a3c1e5ULL % kMersenne61;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kMersenne61) + static_cast<std::uint64_t>(p >> 61);
    if (r >= kMersenne61) r -= kMersenne61;
    return r;
}

/// Constant-time cell signatures. Word keys are polynomial hashes (collisions are
/// resolved by comparing letters); abelian keys pack the Parikh vector exactly
/// when it fits in 64 bits and otherwise hash it and compare vectors.
class CellIndex {
public:
    explicit CellIndex(const FiniteWord& w)
        : w_(w), table_(w), prefix_(w.size() + 1, 0), powers_(w.size() + 1, 1) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            prefix_[i + 1] = mul_mod(prefix_[i], kHashBase) + w[i] + 1;
            if (prefix_[i + 1] >= kMersenne61) prefix_[i + 1] -= kMersenne61;
            powers_[i + 1] = mul_mod(powers_[i], kHashBase);
        }
    }

    std::uint64_t word_key(std::size_t pos, std::size_t d) const {
        const std::uint64_t sub = mul_mod(prefix_[pos], powers_[d]);
        return prefix_[pos + d] >= sub ? prefix_[pos + d] - sub : prefix_[pos + d] + kMersenne61 - sub;
    }

    bool words_equal(std::size_t a, std::size_t b, std::size_t d) const {
        const auto& x = w_.letters();
        return std::equal(x.begin() + static_cast<std::ptrdiff_t>(a), x.begin() + static_cast<std::ptrdiff_t>(a + d),
                          x.begin() + static_cast<std::ptrdiff_t>(b));
    }

    /// True when abelian_key is injective for cells of width d.
    bool abelian_key_exact(std::size_t d) const {
        const std::size_t sigma = table_.alphabet_size();
        return sigma <= 1 || (sigma - 1) * static_cast<std::size_t>(std::bit_width(d)) <= 64;
    }

    std::uint64_t abelian_key(std::size_t pos, std::size_t d) const {
        const std::size_t sigma = table_.alphabet_size();
        if (abelian_key_exact(d)) {
            const auto bits = static_cast<unsigned>(std::bit_width(d));
            std::uint64_t key = 0;
            for (std::size_t a = 0; a + 1 < sigma; ++a)
                key = (bits >= 64 ? 0 : key << bits) | table_.count(static_cast<Letter>(a), pos, d);
            return key;
        }
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::size_t a = 0; a < sigma; ++a) h = (h ^ table_.count(static_cast<Letter>(a), pos, d)) * 0x100000001b3ULL;
        return h;
    }

    bool parikh_equal(std::size_t a, std::size_t b, std::size_t d) const {
        if (abelian_key_exact(d)) return true;
        for (std::size_t c = 0; c < table_.alphabet_size(); ++c)
            if (table_.count(static_cast<Letter>(c), a, d) != table_.count(static_cast<Letter>(c), b, d)) return false;
        return true;
    }

private:
    const FiniteWord& w_;
    ParikhTable table_;
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> powers_;
};

/// Open-addressing set reused across splits; clearing is O(1) via epochs.
class SplitSet {
public:
    void reset(std::size_t m) {
        const std::size_t cap = std::bit_ceil(std::max<std::size_t>(4, 2 * m));
        if (cap != keys_.size()) {
            keys_.assign(cap, 0);
            cells_.assign(cap, 0);
            stamps_.assign(cap, 0);
            epoch_ = 0;
        }
        if (++epoch_ == 0) {
            std::fill(stamps_.begin(), stamps_.end(), 0);
            epoch_ = 1;
        }
    }

    /// Inserts (key, cell); returns true if an element with the same key and
    /// exactly equal cell is already present.
    template <class ExactEqual>
    bool insert_finds_duplicate(std::uint64_t key, std::size_t cell, ExactEqual&& equal) {
        const std::size_t mask = keys_.size() - 1;
        std::size_t h = static_cast<std::size_t>((key * 0x9e3779b97f4a7c15ULL) >> 32) & mask;
        while (stamps_[h] == epoch_) {
            if (keys_[h] == key && equal(cells_[h], cell)) return true;
            h = (h + 1) & mask;
        }
        stamps_[h] = epoch_;
        keys_[h] = key;
        cells_[h] = cell;
        return false;
    }

private:
    std::vector<std::uint64_t> keys_;
    std::vector<std::size_t> cells_;
    std::vector<std::uint32_t> stamps_;
    std::uint32_t epoch_ = 0;
};

/// Decides whether the m cells of width d starting at 0-based `pos` form an occurrence of `kind`.
bool split_matches(const CellIndex& index, SplitSet& set, std::size_t pos, std::size_t d, std::size_t m,
                   ScanKind kind) {
    switch (kind) {
        case ScanKind::power: {
            const auto key = index.word_key(pos, d);
            for (std::size_t t = 1; t < m; ++t) {
                const std::size_t cell = pos + t * d;
                if (index.word_key(cell, d) != key || !index.words_equal(pos, cell, d)) return false;
            }
            return true;
        }
        case ScanKind::abelian_power: {
            const auto key = index.abelian_key(pos, d);
            for (std::size_t t = 1; t < m; ++t) {
                const std::size_t cell = pos + t * d;
                if (index.abelian_key(cell, d) != key || !index.parikh_equal(pos, cell, d)) return false;
            }
            return true;
        }
        case ScanKind::antipower: {
            set.reset(m);
            auto eq = [&](std::size_t a, std::size_t b) { return index.words_equal(a, b, d); };
            for (std::size_t t = 0; t < m; ++t) {
                const std::size_t cell = pos + t * d;
                if (set.insert_finds_duplicate(index.word_key(cell, d), cell, eq)) return false;
            }
            return true;
        }
        case ScanKind::abelian_antipower: {
            set.reset(m);
            auto eq = [&](std::size_t a, std::size_t b) { return index.parikh_equal(a, b, d); };
            for (std::size_t t = 0; t < m; ++t) {
                const std::size_t cell = pos + t * d;
                if (set.insert_finds_duplicate(index.abelian_key(cell, d), cell, eq)) return false;
            }
            return true;
        }
    }
    return false;
}

void require_order(std::size_t m) {
    if (m < 2) throw std::invalid_argument("scan order must be at least 2");
}

}  // namespace

std::optional<ScanHit> find_first(const FiniteWord& w, std::size_t m, ScanKind kind, std::size_t d_max) {
    require_order(m);
    const CellIndex index(w);
    SplitSet set;
    const std::size_t n = w.size();
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t room = (n - pos) / m;
        for (std::size_t d = 1; d <= std::min(room, d_max); ++d)
            if (split_matches(index, set, pos, d, m, kind)) return ScanHit{pos + 1, d, m, kind};
    }
    return std::nullopt;
}

bool avoidance_scan(const FiniteWord& w, std::size_t m, ScanKind kind, unsigned threads) {
    require_order(m);
    const CellIndex index(w);
    const std::size_t n = w.size();
    const std::size_t d_limit = n / m;
    std::atomic<bool> found{false};

    auto worker = [&](std::size_t first_d, std::size_t stride) {
        SplitSet set;
        for (std::size_t d = first_d; d <= d_limit && !found.load(std::memory_order_relaxed); d += stride)
            for (std::size_t pos = 0; pos + m * d <= n; ++pos)
                if (split_matches(index, set, pos, d, m, kind)) {
                    found.store(true, std::memory_order_relaxed);
                    return;
                }
    };

    const unsigned workers = std::max(1u, threads);
    if (workers == 1) {
        worker(1, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker, std::size_t{1} + t, std::size_t{workers});
    }
    return !found.load();
}

}  // namespace antipow
