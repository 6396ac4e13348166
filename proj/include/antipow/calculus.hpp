#pragma once

// Closed-form one-counting in paperfolding words and the synthesis of abelian
// antipower occurrences at arbitrary-precision coordinates.
//
// Interval convention: the pair (a, n) with a < n denotes positions a+1 .. n.
// Letters of order k equal to 1 sit at positions congruent to 2^k (2 + b_k)
// modulo 2^{k+2}; the extra-ones count of order k in (a, n] is the excess over
// floor((n - a) / 2^{k+2}) and is always 0 or 1.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "antipow/bigint.hpp"
#include "antipow/word.hpp"

namespace antipow {

/// Raised when an internal invariant of the construction fails; never expected.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct OrderDecomposition {
    std::size_t order = 0;  // 2-adic valuation
    BigInt odd_index;       // j in i = 2^order (2j + 1)
};

OrderDecomposition order_decompose(const BigInt& i);

/// Number of ones of order k in (a, n], by residue counting.
BigInt ones_of_order_in_interval(const InstructionSequence& b, std::size_t k, const BigInt& a, const BigInt& n);

/// As above with b_k replaced by `bit`.
BigInt ones_of_order_with_bit(int bit, std::size_t k, const BigInt& a, const BigInt& n);

/// Total number of ones in (a, n]: the sum over all orders.
BigInt ones_in_interval(const InstructionSequence& b, const BigInt& a, const BigInt& n);

/// Sum over k of floor(len / 2^{k+2}): the ones every interval of this length contains.
BigInt baseline_ones(const BigInt& len);

/// Extra one of order k in (a, n] under the hypothesis b_k = bit; 0 or 1.
int epsilon(const InstructionSequence& b, std::size_t k, int bit, const BigInt& a, const BigInt& n);

/// Extra ones in (a, n] summed over all orders.
std::uint64_t delta_interval(const InstructionSequence& b, const BigInt& a, const BigInt& n);

struct EVector {
    std::size_t order = 0;
    int bit = 1;
    std::vector<int> components;
};

/// Component t is epsilon over the cell (l + t d, l + (t+1) d], t = 0 .. m-1.
EVector e_vector(const InstructionSequence& b, std::size_t k, int bit, const BigInt& l, const BigInt& d,
                 std::size_t m);

struct DeltaVector {
    std::vector<std::uint64_t> components;

    bool pairwise_distinct() const;
    bool all_equal() const;
    friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
};

DeltaVector operator+(const DeltaVector& x, const DeltaVector& y);
std::string to_string(const DeltaVector& v);  // "(0,1)"

DeltaVector delta_vector(const InstructionSequence& b, const BigInt& l, const BigInt& d, std::size_t m);

enum class SplitCharacter { abelian_power, abelian_antipower, neither };

std::string_view to_string(SplitCharacter c);

/// Abelian power iff all Delta components agree; antipower iff pairwise distinct.
/// m = 1 counts as an abelian power.
SplitCharacter characterize_split(const InstructionSequence& b, const BigInt& l, const BigInt& d, std::size_t m);

/// Occurrence geometry: m cells of width `cell_width` after position `start`.
struct Geometry {
    BigInt start;
    BigInt cell_width;

    friend bool operator==(const Geometry&, const Geometry&) = default;
};

/// Orders k whose E vector over g depends on the value of b_k.
std::vector<std::size_t> sensitive_orders(const InstructionSequence& b, const Geometry& g, std::size_t m);

struct AdditivityReport {
    bool addend_even = true;                   // l' and d' even
    bool exponent_large = true;                // 2^r > l + m d
    std::vector<std::size_t> mismatched_orders;  // sensitive k with b_k != b_{k+r}

    bool ok() const noexcept { return addend_even && exponent_large && mismatched_orders.empty(); }
    std::string describe() const;
};

class AdditivityViolation : public std::runtime_error {
public:
    explicit AdditivityViolation(AdditivityReport report)
        : std::runtime_error("additivity precondition violated: " + report.describe()), report_(std::move(report)) {}
    const AdditivityReport& report() const noexcept { return report_; }

private:
    AdditivityReport report_;
};

/// Checks the hypotheses under which Delta(base) + Delta(addend) = Delta(combined).
AdditivityReport additivity_precheck(const InstructionSequence& b, const Geometry& base, const Geometry& addend,
                                     std::size_t m, std::size_t r);

/// (l + 2^r l', d + 2^r d'). Throws AdditivityViolation when the precheck fails.
/// With `verify_sum` the Delta identity is recomputed and a ConstructionError
/// is thrown if it does not hold.
Geometry additivity_combine(const InstructionSequence& b, const Geometry& base, const Geometry& addend,
                            std::size_t m, std::size_t r, bool verify_sum = true);

/// Smallest r with 2^r > bound and b_k = b_{k+r} for every k in `orders`.
std::size_t choose_r(const InstructionSequence& b, const BigInt& bound, const std::vector<std::size_t>& orders);

struct SeedBlock {
    BigInt start;   // even l'; base cells start here
    BigInt center;  // position of the central one of order u + k
    std::size_t block_exponent = 0;  // u
    std::size_t power_exponent = 0;  // k
    std::size_t candidates_tried = 0;
};

/// Scans ones of order u+k for a block w 1 w with |w| = 2^{u+k+1} - 1, no letter
/// of order above u+k+4, and pairwise distinct base vectors
/// Delta(l' + 2^u i, 2^u, 2^k), i < 2^k.
SeedBlock find_seed_block(const InstructionSequence& b, std::size_t u, std::size_t k);

/// alpha_0 = 1, alpha_r = 1 + sum_{i<r} alpha_i (max_i - min_i).
std::vector<BigInt> alpha_sequence(const std::vector<DeltaVector>& base);

struct AntipowerCertificate {
    InstructionSequence instructions = InstructionSequence::regular();
    std::size_t order = 0;           // m
    std::size_t power_exponent = 0;  // k with 2^k >= m
    std::size_t block_exponent = 0;  // u
    BigInt start;                    // L
    BigInt cell_width;               // D
    std::vector<BigInt> cell_one_counts;
    std::vector<BigInt> alpha;
    bool verified = false;
};

/// Synthesizes an abelian m-antipower (m >= 2) occurring in the paperfolding word of b.
AntipowerCertificate construct_antipower(const InstructionSequence& b, std::size_t m);

/// Recounts every cell in closed form; true iff the counts match and are pairwise distinct.
bool verify_certificate(const InstructionSequence& b, const AntipowerCertificate& cert);

std::string to_json(const AntipowerCertificate& cert);

/// For k' the order of i: f(i + 2^{k'+2+s}) = f(i) != f(i + 2^{k'+1}).
bool order_shift_check(const InstructionSequence& b, const BigInt& i, std::size_t s);

}  // namespace antipow
