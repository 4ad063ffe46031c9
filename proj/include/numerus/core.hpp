#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/*
 * Problem instances for the two-generator coin problem: a validated pair of
 * coprime positive integers (a, b), witnesses of ax+by = n, and the set of
 * nonrepresentable numbers ("gaps") together with the two classical
 * Sylvester facts (largest gap, gap count).
 *
 * Degenerate pairs with a = 1 or b = 1 are accepted: every nonnegative
 * integer is representable, so the gap set is empty and frobenius_number is
 * an absent optional rather than a sentinel.
 */
namespace numerus {

using i64 = std::int64_t;

enum class PairError {
    NonPositive,  // a <= 0 or b <= 0
    NotCoprime,   // gcd(a, b) != 1
    Overflow,     // a*b exceeds the safety cap
};

const char* describe(PairError err);

class InvalidPair : public std::invalid_argument {
public:
    InvalidPair(PairError code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    PairError code() const noexcept { return code_; }

private:
    PairError code_;
};

/// Coprime positive generators (a, b). Immutable once constructed; stored as
/// given, not sorted (symmetry in a,b is a tested property, not a
/// normalization).
class CoprimePair {
public:
    /// Default cap on a*b; the CLI can move it via NUMERUS_MAX_PRODUCT.
    static constexpr i64 kDefaultMaxProduct = 100'000'000;

    /// Absolute ceiling on a*b regardless of the requested cap. Keeps every
    /// derived quantity in int64: the largest one is the gap sum, below
    /// (a*b)^2 / 2.
    static constexpr i64 kHardMaxProduct = 4'000'000'000;

    static CoprimePair create(i64 a, i64 b, i64 max_product = kDefaultMaxProduct);
    static std::optional<PairError> validate(i64 a, i64 b,
                                             i64 max_product = kDefaultMaxProduct) noexcept;

    i64 a() const noexcept { return a_; }
    i64 b() const noexcept { return b_; }
    i64 half_a() const noexcept { return a_ / 2; }
    i64 half_b() const noexcept { return b_ / 2; }
    i64 product() const noexcept { return a_ * b_; }

    bool operator==(const CoprimePair& other) const noexcept = default;

private:
    CoprimePair(i64 a, i64 b) : a_(a), b_(b) {}
    i64 a_;
    i64 b_;
};

/// A witness that ax + by = n for the pair and target it was produced for.
struct Representation {
    i64 x;
    i64 y;
    bool operator==(const Representation&) const noexcept = default;
};

/// Largest nonrepresentable number: ab - a - b for a, b >= 2, absent when
/// a = 1 or b = 1 (then nothing is nonrepresentable).
std::optional<i64> frobenius_number(const CoprimePair& pair);

/// Number of nonrepresentable numbers, (a-1)(b-1)/2. The product (a-1)(b-1)
/// is always even for coprime a, b.
i64 gap_count(const CoprimePair& pair);

/// a*floor(b/2) + b*floor(a/2): ceiling of the enumeration interval, strictly
/// above the Frobenius number whenever a, b >= 2.
i64 theorem_bound(const CoprimePair& pair);

/// The sorted set of nonrepresentable numbers of a pair. Construction
/// revalidates the full invariant set (strictly increasing, inside
/// (0, bound], Sylvester count and maximum), so a bug in either producer
/// (closed form or sieve) surfaces immediately.
class GapSet {
public:
    GapSet(CoprimePair pair, std::vector<i64> gaps, i64 bound);

    const CoprimePair& pair() const noexcept { return pair_; }
    const std::vector<i64>& values() const noexcept { return gaps_; }
    i64 bound() const noexcept { return bound_; }
    i64 size() const noexcept { return static_cast<i64>(gaps_.size()); }
    bool empty() const noexcept { return gaps_.empty(); }
    bool contains(i64 n) const;  // binary search

    bool operator==(const GapSet& other) const noexcept = default;

private:
    CoprimePair pair_;
    std::vector<i64> gaps_;
    i64 bound_;
};

}  // namespace numerus
