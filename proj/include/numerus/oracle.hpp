#pragma once

#include <optional>
#include <stdexcept>

#include "numerus/core.hpp"

/*
 * Ground-truth representability, independent of the closed-form description:
 * a modular scan for single queries and an additive sieve for whole-range
 * enumeration. The two deliberately share no logic with each other or with
 * the closed form, so agreement between all three is meaningful.
 */
namespace numerus::oracle {

class NegativeTarget : public std::domain_error {
public:
    explicit NegativeTarget(i64 n)
        : std::domain_error("representability target must be nonnegative, got " +
                            std::to_string(n)) {}
};

/// Witness (x, y) with ax + by = n, or absent if none exists. Among all
/// witnesses returns the one with minimal x (equivalently maximal y).
/// Runs one pass over the residues of the smaller generator.
std::optional<Representation> is_representable(const CoprimePair& pair, i64 n);

/// Boolean sieve over [0, theorem_bound]: mark 0, propagate +a and +b;
/// the gaps are the unmarked positions.
GapSet gaps_bruteforce(const CoprimePair& pair);

struct GapStatistics {
    i64 count = 0;
    std::optional<i64> max;
    i64 sum = 0;

    bool operator==(const GapStatistics&) const noexcept = default;
};

/// Count, maximum and sum of a gap set, with overflow-checked summation.
GapStatistics gap_statistics(const GapSet& gaps);

}  // namespace numerus::oracle
