#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

// A composition of k-1 cycle types: theta1 counts the big cycle (at most 1),
// theta2..theta4 count the remaining structural types. For the k-1 = 5 system
// the cycle order is parameterized as r = 3a + b with a >= 1 and b in {0,1,2}.
struct TypeCounts {
    int theta1 = 0;
    int theta2 = 0;
    int theta3 = 0;
    int theta4 = 0;
    int k_minus_1 = 0;
    std::optional<long long> a;
    std::optional<int> b;
};

struct Feasibility {
    bool feasible = false;
    std::vector<TypeCounts> witnesses;
};

// Enumerates all theta vectors with theta1 <= 1 summing to k_minus_1 and
// tests, in exact rationals, the strict constraints
//   (2/3)(k-1) - 1/3 < theta1 + theta2 + theta3/3 + theta4/2
//   (2/3)(k-1) - 1/3 < theta1/3 + theta3 + (7/9) theta4.
// Throws when k_minus_1 < 1.
Feasibility check_linear_system(int k_minus_1);

// For the k-1 = 5 refinement: the feasible range of a >= 1 for one
// (theta, b) assignment under the non-strict constraints
//   9a + 3b + 1 <= (3a+b)(theta1+theta2) + a*theta3 + ((3a+b)/2) theta4
//   9a + 3b + 1 <= (ceil(a + b/3) - 1) theta1 + (3a+b) theta3 + (2a+1) theta4.
// Both are affine in a, so the range is an interval; a missing upper bound
// means unbounded. Returns nullopt when no a >= 1 satisfies both.
std::optional<std::pair<long long, std::optional<long long>>> quadratic_case_a_range(
    const TypeCounts& theta, int b);

// Sweeps all theta with theta1 <= 1 summing to 5 and all b in {0,1,2};
// feasible when some case admits an a >= 1 (witness carries the smallest).
Feasibility check_quadratic_system_k5();

}  // namespace cyclepack
