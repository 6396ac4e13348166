#include "antipow/calculus.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace antipow {

namespace {

void require_interval(const BigInt& a, const BigInt& n) {
    if (a < 0 || a >= n) throw std::invalid_argument("interval (a, n] needs 0 <= a < n");
}

void require_bit(int bit) {
    if (bit != 1 && bit != -1) throw std::invalid_argument("instruction bit must be +1 or -1");
}

// Positions i in [1, x] with i = 2^k (2 + bit) mod 2^{k+2}. The residue class is
// r = 2^k or 3 * 2^k, so the count is floor(x / 2^{k+2}) plus one when
// x mod 2^{k+2} >= r, i.e. when bits (k+1, k) of x, read as v, satisfy v >= 2 + bit.
BigInt residue_count_up_to(int bit, std::size_t k, const BigInt& x) {
    BigInt full = x >> (k + 2);
    const int v = (test_bit(x, k + 1) ? 2 : 0) + (test_bit(x, k) ? 1 : 0);
    if (v >= 2 + bit) ++full;
    return full;
}

std::size_t max_relevant_order(const BigInt& n) { return bit_length(n); }

}  // namespace

OrderDecomposition order_decompose(const BigInt& i) {
    if (i <= 0) throw std::invalid_argument("order_decompose needs i >= 1");
    OrderDecomposition d;
    d.order = two_adic_valuation(i);
    d.odd_index = ((i >> d.order) - 1) >> 1;
    return d;
}

BigInt ones_of_order_with_bit(int bit, std::size_t k, const BigInt& a, const BigInt& n) {
    require_bit(bit);
    require_interval(a, n);
    return residue_count_up_to(bit, k, n) - residue_count_up_to(bit, k, a);
}

BigInt ones_of_order_in_interval(const InstructionSequence& b, std::size_t k, const BigInt& a, const BigInt& n) {
    return ones_of_order_with_bit(b.at(k), k, a, n);
}

BigInt ones_in_interval(const InstructionSequence& b, const BigInt& a, const BigInt& n) {
    require_interval(a, n);
    BigInt total = 0;
    for (std::size_t k = 0; k <= max_relevant_order(n); ++k) total += ones_of_order_in_interval(b, k, a, n);
    return total;
}

BigInt baseline_ones(const BigInt& len) {
    if (len < 0) throw std::invalid_argument("negative length");
    BigInt total = 0;
    for (std::size_t k = 0; k <= max_relevant_order(len); ++k) total += len >> (k + 2);
    return total;
}

int epsilon(const InstructionSequence&, std::size_t k, int bit, const BigInt& a, const BigInt& n) {
    const BigInt extra = ones_of_order_with_bit(bit, k, a, n) - ((n - a) >> (k + 2));
    if (extra != 0 && extra != 1)
        throw ConstructionError("extra-ones count outside {0,1} at order " + std::to_string(k));
    return static_cast<int>(extra);
}

std::uint64_t delta_interval(const InstructionSequence& b, const BigInt& a, const BigInt& n) {
    require_interval(a, n);
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= max_relevant_order(n); ++k)
        total += static_cast<std::uint64_t>(epsilon(b, k, b.at(k), a, n));
    return total;
}

EVector e_vector(const InstructionSequence& b, std::size_t k, int bit, const BigInt& l, const BigInt& d,
                 std::size_t m) {
    if (d < 1 || m < 1 || l < 0) throw std::invalid_argument("e_vector needs l >= 0, d >= 1, m >= 1");
    EVector e{k, bit, {}};
    e.components.reserve(m);
    BigInt lo = l;
    for (std::size_t t = 0; t < m; ++t) {
        BigInt hi = lo + d;
        e.components.push_back(epsilon(b, k, bit, lo, hi));
        lo = std::move(hi);
    }
    return e;
}

bool DeltaVector::pairwise_distinct() const {
    auto sorted = components;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool DeltaVector::all_equal() const {
    return std::adjacent_find(components.begin(), components.end(), std::not_equal_to<>()) == components.end();
}

DeltaVector operator+(const DeltaVector& x, const DeltaVector& y) {
    if (x.components.size() != y.components.size()) throw std::invalid_argument("Delta vectors of different length");
    DeltaVector s = x;
    for (std::size_t t = 0; t < s.components.size(); ++t) s.components[t] += y.components[t];
    return s;
}

std::string to_string(const DeltaVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t t = 0; t < v.components.size(); ++t) os << (t ? "," : "") << v.components[t];
    os << ')';
    return os.str();
}

DeltaVector delta_vector(const InstructionSequence& b, const BigInt& l, const BigInt& d, std::size_t m) {
    if (d < 1 || m < 1 || l < 0) throw std::invalid_argument("delta_vector needs l >= 0, d >= 1, m >= 1");
    DeltaVector v;
    v.components.reserve(m);
    BigInt lo = l;
    for (std::size_t t = 0; t < m; ++t) {
        BigInt hi = lo + d;
        v.components.push_back(delta_interval(b, lo, hi));
        lo = std::move(hi);
    }
    return v;
}

std::string_view to_string(SplitCharacter c) {
    switch (c) {
        case SplitCharacter::abelian_power: return "abelian_power";
        case SplitCharacter::abelian_antipower: return "abelian_antipower";
        case SplitCharacter::neither: return "neither";
    }
    return "neither";
}

SplitCharacter characterize_split(const InstructionSequence& b, const BigInt& l, const BigInt& d, std::size_t m) {
    const auto v = delta_vector(b, l, d, m);
    if (v.all_equal()) return SplitCharacter::abelian_power;
    if (v.pairwise_distinct()) return SplitCharacter::abelian_antipower;
    return SplitCharacter::neither;
}

std::vector<std::size_t> sensitive_orders(const InstructionSequence& b, const Geometry& g, std::size_t m) {
    const std::size_t top = bit_length(g.start + g.cell_width * m) + 2;
    std::vector<std::size_t> orders;
    for (std::size_t k = 0; k <= top; ++k)
        if (e_vector(b, k, 1, g.start, g.cell_width, m).components !=
            e_vector(b, k, -1, g.start, g.cell_width, m).components)
            orders.push_back(k);
    return orders;
}

std::string AdditivityReport::describe() const {
    if (ok()) return "ok";
    std::ostringstream os;
    const char* sep = "";
    if (!addend_even) {
        os << sep << "(i) addend start and cell width must both be even";
        sep = "; ";
    }
    if (!exponent_large) {
        os << sep << "(ii) 2^r must exceed l + m d";
        sep = "; ";
    }
    if (!mismatched_orders.empty()) {
        os << sep << "(iii) b_k != b_{k+r} for sensitive orders k =";
        for (auto k : mismatched_orders) os << ' ' << k;
    }
    return os.str();
}

AdditivityReport additivity_precheck(const InstructionSequence& b, const Geometry& base, const Geometry& addend,
                                     std::size_t m, std::size_t r) {
    if (m < 1 || base.start < 0 || addend.start < 0 || base.cell_width < 1 || addend.cell_width < 1)
        throw std::invalid_argument("additivity needs l, l' >= 0 and m, d, d' >= 1");
    AdditivityReport report;
    report.addend_even = !test_bit(addend.start, 0) && !test_bit(addend.cell_width, 0);
    report.exponent_large = pow2(r) > base.start + base.cell_width * m;
    for (auto k : sensitive_orders(b, addend, m))
        if (b.at(k) != b.at(k + r)) report.mismatched_orders.push_back(k);
    return report;
}

Geometry additivity_combine(const InstructionSequence& b, const Geometry& base, const Geometry& addend,
                            std::size_t m, std::size_t r, bool verify_sum) {
    auto report = additivity_precheck(b, base, addend, m, r);
    if (!report.ok()) throw AdditivityViolation(std::move(report));
    Geometry combined{base.start + (addend.start << r), base.cell_width + (addend.cell_width << r)};
    if (verify_sum) {
        const auto expected = delta_vector(b, base.start, base.cell_width, m) +
                              delta_vector(b, addend.start, addend.cell_width, m);
        if (delta_vector(b, combined.start, combined.cell_width, m) != expected)
            throw ConstructionError("Delta vectors failed to add under the combined geometry");
    }
    return combined;
}

std::size_t choose_r(const InstructionSequence& b, const BigInt& bound, const std::vector<std::size_t>& orders) {
    if (bound < 0) throw std::invalid_argument("choose_r needs a nonnegative bound");
    const std::size_t first = bit_length(bound);  // smallest r with 2^r > bound
    const std::size_t last = first + 8 * b.period().size();
    for (std::size_t r = first; r <= last; ++r)
        if (std::all_of(orders.begin(), orders.end(), [&](std::size_t k) { return b.at(k) == b.at(k + r); }))
            return r;
    throw std::invalid_argument("no exponent r satisfies the instruction-matching constraint");
}

SeedBlock find_seed_block(const InstructionSequence& b, std::size_t u, std::size_t k) {
    if (k < 1) throw std::invalid_argument("find_seed_block needs k >= 1");
    if (u < b.preperiod().size() + 1) throw std::invalid_argument("find_seed_block needs u >= |preperiod| + 1");
    const std::size_t center_order = u + k;
    const BigInt half = pow2(center_order + 1);  // |w 1| = |w|+1
    const std::size_t cells = std::size_t{1} << k;
    const BigInt width = pow2(u);

    for (std::size_t t = 0; t <= 1024; ++t) {
        const BigInt center = pow2(center_order) * (2 + b.at(center_order) + 4 * BigInt(t));
        if (center < half) continue;  // the block would start before position 1
        const BigInt l = center - half;

        if (paperfolding_letter(b, center) != 1) throw ConstructionError("seed center is not a one");
        bool halves_equal = true;
        for (BigInt x = 1; x < half && halves_equal; ++x)
            halves_equal = paperfolding_letter(b, l + x) == paperfolding_letter(b, center + x);
        if (!halves_equal) continue;

        bool bounded_order = true;
        for (BigInt p = l + 1; p < center + half && bounded_order; ++p)
            bounded_order = two_adic_valuation(p) <= center_order + 4;
        if (!bounded_order) continue;

        const BigInt start = test_bit(l, 0) ? BigInt(l + 1) : l;
        std::vector<DeltaVector> base;
        for (std::size_t i = 0; i < cells; ++i) base.push_back(delta_vector(b, start + width * i, width, cells));
        bool distinct = true;
        for (std::size_t i = 0; i < cells && distinct; ++i)
            for (std::size_t j = i + 1; j < cells && distinct; ++j) distinct = base[i] != base[j];
        if (!distinct) continue;

        return SeedBlock{start, center, u, k, t + 1};
    }
    throw ConstructionError("no seed block found among the first 1025 centers");
}

std::vector<BigInt> alpha_sequence(const std::vector<DeltaVector>& base) {
    if (base.empty()) throw std::invalid_argument("alpha_sequence needs at least one base vector");
    std::vector<BigInt> alpha;
    BigInt weighted = 0;  // sum_{i<r} alpha_i * spread_i
    for (const auto& v : base) {
        alpha.push_back(weighted + 1);
        if (!v.components.empty()) {
            const auto [lo, hi] = std::minmax_element(v.components.begin(), v.components.end());
            weighted += alpha.back() * (*hi - *lo);
        }
    }
    return alpha;
}

namespace {

constexpr std::size_t kMaxAdditivitySteps = std::size_t{1} << 20;

}  // namespace

AntipowerCertificate construct_antipower(const InstructionSequence& b, std::size_t m) {
    if (m < 2) throw std::invalid_argument("construct_antipower needs m >= 2");
    std::size_t k = 0;
    while ((std::size_t{1} << k) < m) ++k;
    const std::size_t cells = std::size_t{1} << k;
    const std::size_t u = b.preperiod().size() + 1;

    const SeedBlock seed = find_seed_block(b, u, k);
    const BigInt width = pow2(u);

    std::vector<Geometry> base_geometry;
    std::vector<DeltaVector> base;
    std::vector<std::vector<std::size_t>> constraints;
    for (std::size_t i = 0; i < cells; ++i) {
        base_geometry.push_back({seed.start + width * i, width});
        base.push_back(delta_vector(b, base_geometry.back().start, width, cells));
        constraints.push_back(sensitive_orders(b, base_geometry.back(), cells));
    }
    const auto alpha = alpha_sequence(base);

    BigInt steps = 0;
    for (const auto& a : alpha) steps += a;
    if (steps > kMaxAdditivitySteps)
        throw std::length_error("construction needs " + to_decimal(steps) + " additivity steps; order too large");

    // Fold alpha_i copies of each base geometry into one occurrence, one copy at a time.
    Geometry acc = base_geometry[0];
    DeltaVector sum = base[0];
    for (std::size_t i = 0; i < cells; ++i) {
        const auto copies = static_cast<std::size_t>(alpha[i]) - (i == 0 ? 1 : 0);
        for (std::size_t c = 0; c < copies; ++c) {
            const std::size_t r = choose_r(b, acc.start + acc.cell_width * cells, constraints[i]);
            acc = additivity_combine(b, acc, base_geometry[i], cells, r, /*verify_sum=*/false);
            sum = sum + base[i];
        }
    }

    if (delta_vector(b, acc.start, acc.cell_width, cells) != sum)
        throw ConstructionError("folded Delta vector differs from the sum of its parts");
    if (!sum.pairwise_distinct()) throw ConstructionError("folded Delta vector has repeated components");

    AntipowerCertificate cert;
    cert.instructions = b;
    cert.order = m;
    cert.power_exponent = k;
    cert.block_exponent = u;
    cert.start = acc.start;
    cert.cell_width = acc.cell_width;
    cert.alpha = alpha;
    BigInt lo = acc.start;
    for (std::size_t t = 0; t < m; ++t) {
        BigInt hi = lo + acc.cell_width;
        cert.cell_one_counts.push_back(ones_in_interval(b, lo, hi));
        lo = std::move(hi);
    }
    cert.verified = verify_certificate(b, cert);
    return cert;
}

bool verify_certificate(const InstructionSequence& b, const AntipowerCertificate& cert) {
    if (cert.instructions != b || cert.cell_width < 1 || cert.start < 0 ||
        cert.cell_one_counts.size() != cert.order || cert.order < 1)
        return false;
    const BigInt baseline = baseline_ones(cert.cell_width);
    std::vector<BigInt> counts;
    BigInt lo = cert.start;
    for (std::size_t t = 0; t < cert.order; ++t) {
        BigInt hi = lo + cert.cell_width;
        BigInt count = ones_in_interval(b, lo, hi);
        if (count != baseline + delta_interval(b, lo, hi)) return false;
        if (count != cert.cell_one_counts[t]) return false;
        counts.push_back(std::move(count));
        lo = std::move(hi);
    }
    std::sort(counts.begin(), counts.end());
    return std::adjacent_find(counts.begin(), counts.end()) == counts.end();
}

std::string to_json(const AntipowerCertificate& cert) {
    nlohmann::ordered_json j;
    j["instructions"] = cert.instructions.str();
    j["m"] = cert.order;
    j["k"] = cert.power_exponent;
    j["u"] = cert.block_exponent;
    j["start"] = to_decimal(cert.start);
    j["cell_width"] = to_decimal(cert.cell_width);
    auto counts = nlohmann::ordered_json::array();
    for (const auto& c : cert.cell_one_counts) counts.push_back(to_decimal(c));
    j["cell_one_counts"] = std::move(counts);
    auto alpha = nlohmann::ordered_json::array();
    for (const auto& a : cert.alpha) alpha.push_back(to_decimal(a));
    j["alpha"] = std::move(alpha);
    j["verified"] = cert.verified;
    return j.dump();
}

bool order_shift_check(const InstructionSequence& b, const BigInt& i, std::size_t s) {
    const std::size_t order = order_decompose(i).order;
    const int here = paperfolding_letter(b, i);
    return paperfolding_letter(b, i + pow2(order + 2 + s)) == here &&
           paperfolding_letter(b, i + pow2(order + 1)) != here;
}

}  // namespace antipow
