#pragma once

#include <vector>

#include "numerus/core.hpp"

/*
 * Explicit description of the representable numbers up to the theorem bound
 * B = a*floor(b/2) + b*floor(a/2):
 *
 *   R(a,b) = { a*i + b*j          : 0 <= i <= floor(b/2), 0 <= j <= floor(a/2) }
 *          u { B - |a*i - b*j|    : 1 <= i <= floor(b/2), 1 <= j <= floor(a/2) },
 *
 * and the gap set NR(a,b) = [0, B] \ R(a,b). The two branches are kept as
 * provenance-carrying term lists before deduplication so the disjointness
 * and cardinality identities can be asserted rather than silently absorbed.
 */
namespace numerus::closed_form {

/// Origin of a candidate term: the two branches above, or one of the four
/// case sets of the three-variable construction (see proof_machinery).
enum class TermBranch { Grid, Mirror, A1, A2, A3, A4 };

struct CandidateTerm {
    i64 value;
    i64 i;
    i64 j;
    TermBranch branch;

    bool operator==(const CandidateTerm&) const noexcept = default;
};

/// All grid-branch terms a*i + b*j, outer loop j, inner loop i.
/// Exactly (floor(b/2)+1)(floor(a/2)+1) terms, pairwise distinct values.
std::vector<CandidateTerm> grid_terms(const CoprimePair& pair);

/// All mirror-branch terms B - |a*i - b*j| with i, j >= 1, outer loop j.
/// Exactly floor(b/2)*floor(a/2) terms, pairwise distinct values, disjoint
/// from the grid values.
std::vector<CandidateTerm> mirror_terms(const CoprimePair& pair);

struct RepresentableSet {
    CoprimePair pair;
    std::vector<i64> members;  // sorted, duplicate-free, inside [0, bound]

    bool contains(i64 n) const;
};

/// (floor(a/2)+1)(floor(b/2)+1) + floor(a/2)*floor(b/2), the exact size of
/// the representable set up to the bound.
i64 remark_cardinality(const CoprimePair& pair);

/// Sorted union of the two branches. Throws std::logic_error if the branch
/// values collide or the total misses remark_cardinality.
RepresentableSet representable_set(const CoprimePair& pair);

/// Complement of representable_set in [0, theorem_bound].
GapSet gap_set(const CoprimePair& pair);

/// Contributions of the three-case split of { ax+by <= B }:
///   grid:     x <= floor(b/2), y <= floor(a/2)
///   excess_x: x >  floor(b/2)  (terms B + (aX - bY) with aX <= bY)
///   excess_y: y >  floor(a/2)  (terms B - (aX - bY) with aX >= bY)
/// Each sequence is sorted and duplicate-free; excess_x and excess_y together
/// are exactly the mirror values. aX = bY never happens for coprime a, b
/// (checked, not assumed).
struct CaseContributions {
    std::vector<i64> grid;
    std::vector<i64> excess_x;
    std::vector<i64> excess_y;
};

CaseContributions case_contributions(const CoprimePair& pair);

}  // namespace numerus::closed_form
