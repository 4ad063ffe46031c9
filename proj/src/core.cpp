#include "numerus/core.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace numerus {

const char* describe(PairError err) {
    switch (err) {
        case PairError::NonPositive: return "generators must be positive";
        case PairError::NotCoprime: return "generators must be coprime";
        case PairError::Overflow: return "product a*b exceeds the safety cap";
    }
    return "unknown pair error";
}

std::optional<PairError> CoprimePair::validate(i64 a, i64 b, i64 max_product) noexcept {
    if (a <= 0 || b <= 0) {
        return PairError::NonPositive;
    }
    if (std::gcd(a, b) != 1) {
        return PairError::NotCoprime;
    }
    const i64 cap = std::min(max_product, kHardMaxProduct);
    if (cap <= 0 || a > cap / b) {
        return PairError::Overflow;
    }
    return std::nullopt;
}

CoprimePair CoprimePair::create(i64 a, i64 b, i64 max_product) {
    if (auto err = validate(a, b, max_product)) {
        throw InvalidPair(*err, std::string(describe(*err)) + " (a=" + std::to_string(a) +
                                    ", b=" + std::to_string(b) + ")");
    }
    return CoprimePair(a, b);
}

std::optional<i64> frobenius_number(const CoprimePair& pair) {
    if (pair.a() == 1 || pair.b() == 1) {
        return std::nullopt;
    }
    return pair.a() * pair.b() - pair.a() - pair.b();
}

i64 gap_count(const CoprimePair& pair) {
    const i64 product = (pair.a() - 1) * (pair.b() - 1);
    assert(product % 2 == 0);  // coprime generators are never both even
    return product / 2;
}

i64 theorem_bound(const CoprimePair& pair) {
    return pair.a() * pair.half_b() + pair.b() * pair.half_a();
}

namespace {

[[noreturn]] void invariant_failure(const std::string& what) {
    throw std::logic_error("GapSet invariant violated: " + what);
}

}  // namespace

GapSet::GapSet(CoprimePair pair, std::vector<i64> gaps, i64 bound)
    : pair_(pair), gaps_(std::move(gaps)), bound_(bound) {
    if (bound_ != theorem_bound(pair_)) {
        invariant_failure("bound " + std::to_string(bound_) + " != a*floor(b/2)+b*floor(a/2)");
    }
    for (std::size_t k = 0; k < gaps_.size(); ++k) {
        if (gaps_[k] <= 0 || gaps_[k] > bound_) {
            invariant_failure("element " + std::to_string(gaps_[k]) + " outside (0, bound]");
        }
        if (k > 0 && gaps_[k - 1] >= gaps_[k]) {
            invariant_failure("sequence not strictly increasing at " + std::to_string(gaps_[k]));
        }
    }
    if (pair_.a() == 1 || pair_.b() == 1) {
        if (!gaps_.empty()) {
            invariant_failure("degenerate pair must have no gaps");
        }
        return;
    }
    if (size() != gap_count(pair_)) {
        invariant_failure("count " + std::to_string(size()) + " != (a-1)(b-1)/2");
    }
    if (!gaps_.empty() && gaps_.back() != *frobenius_number(pair_)) {
        invariant_failure("max " + std::to_string(gaps_.back()) + " != ab-a-b");
    }
}

bool GapSet::contains(i64 n) const {
    return std::binary_search(gaps_.begin(), gaps_.end(), n);
}

}  // namespace numerus
