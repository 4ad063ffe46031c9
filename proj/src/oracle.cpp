#include "numerus/oracle.hpp"

#include <vector>

namespace numerus::oracle {

namespace {

// Minimal-x witness from any witness: x mod b is still feasible because each
// step x -> x-b is compensated by y -> y+a.
Representation normalize_min_x(const CoprimePair& pair, i64 x, i64 y) {
    const i64 shifts = x / pair.b();
    return Representation{x - shifts * pair.b(), y + shifts * pair.a()};
}

}  // namespace

std::optional<Representation> is_representable(const CoprimePair& pair, i64 n) {
    if (n < 0) {
        throw NegativeTarget(n);
    }
    const i64 a = pair.a();
    const i64 b = pair.b();
    if (a <= b) {
        // Unique y in [0, a) with b*y = n (mod a); feasible iff b*y <= n.
        for (i64 y = 0; y < a; ++y) {
            const i64 rest = n - b * y;
            if (rest < 0) {
                break;
            }
            if (rest % a == 0) {
                return normalize_min_x(pair, rest / a, y);
            }
        }
    } else {
        for (i64 x = 0; x < b; ++x) {
            const i64 rest = n - a * x;
            if (rest < 0) {
                break;
            }
            if (rest % b == 0) {
                return normalize_min_x(pair, x, rest / b);
            }
        }
    }
    return std::nullopt;
}

GapSet gaps_bruteforce(const CoprimePair& pair) {
    const i64 bound = theorem_bound(pair);
    std::vector<bool> representable(static_cast<std::size_t>(bound) + 1, false);
    representable[0] = true;
    for (i64 n = 0; n <= bound; ++n) {
        if (!representable[static_cast<std::size_t>(n)]) {
            continue;
        }
        if (n + pair.a() <= bound) {
            representable[static_cast<std::size_t>(n + pair.a())] = true;
        }
        if (n + pair.b() <= bound) {
            representable[static_cast<std::size_t>(n + pair.b())] = true;
        }
    }
    std::vector<i64> gaps;
    for (i64 n = 1; n <= bound; ++n) {
        if (!representable[static_cast<std::size_t>(n)]) {
            gaps.push_back(n);
        }
    }
    return GapSet(pair, std::move(gaps), bound);
}

GapStatistics gap_statistics(const GapSet& gaps) {
    GapStatistics stats;
    stats.count = gaps.size();
    if (!gaps.empty()) {
        stats.max = gaps.values().back();
    }
    for (i64 g : gaps.values()) {
        if (__builtin_add_overflow(stats.sum, g, &stats.sum)) {
            // Unreachable: construction caps a*b, and the sum stays below
            // (a*b)^2 / 2.
            throw std::overflow_error("gap sum overflow");
        }
    }
    return stats;
}

}  // namespace numerus::oracle
