#include "cyclepack/ineq.hpp"

#include <stdexcept>

namespace cyclepack {

namespace {

long long floor_div(long long num, long long den) {
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

long long ceil_div(long long num, long long den) {
    return -floor_div(-num, den);
}

// Integer solutions a >= 1 of alpha * a <= beta, as an interval.
std::optional<std::pair<long long, std::optional<long long>>> affine_range(long long alpha,
                                                                           long long beta) {
    if (alpha > 0) {
        long long hi = floor_div(beta, alpha);
        if (hi < 1) return std::nullopt;
        return {{1, hi}};
    }
    if (alpha == 0) {
        if (beta < 0) return std::nullopt;
        return {{1, std::nullopt}};
    }
    long long lo = std::max<long long>(1, ceil_div(beta, alpha));
    return {{lo, std::nullopt}};
}

template <typename Fn>
void for_each_theta(int total, Fn&& fn) {
    for (int t1 = 0; t1 <= std::min(1, total); ++t1)
        for (int t2 = 0; t2 <= total - t1; ++t2)
            for (int t3 = 0; t3 <= total - t1 - t2; ++t3) {
                int t4 = total - t1 - t2 - t3;
                fn(t1, t2, t3, t4);
            }
}

}  // namespace

Feasibility check_linear_system(int k_minus_1) {
    if (k_minus_1 < 1) throw std::invalid_argument("check_linear_system: k_minus_1 >= 1 required");
    Feasibility result;
    Rat threshold = Rat(2 * static_cast<long long>(k_minus_1) - 1, 3);
    for_each_theta(k_minus_1, [&](int t1, int t2, int t3, int t4) {
        Rat lhs1 = Rat(t1) + Rat(t2) + Rat(t3, 3) + Rat(t4, 2);
        Rat lhs2 = Rat(t1, 3) + Rat(t3) + Rat(7 * static_cast<long long>(t4), 9);
        if (threshold < lhs1 && threshold < lhs2) {
            result.feasible = true;
            result.witnesses.push_back({t1, t2, t3, t4, k_minus_1, std::nullopt, std::nullopt});
        }
    });
    return result;
}

std::optional<std::pair<long long, std::optional<long long>>> quadratic_case_a_range(
    const TypeCounts& theta, int b) {
    if (b < 0 || b > 2) throw std::invalid_argument("quadratic_case_a_range: b in {0,1,2}");
    long long t1 = theta.theta1, t2 = theta.theta2, t3 = theta.theta3, t4 = theta.theta4;

    // First constraint, doubled to clear the /2:
    //   18a + 6b + 2 <= 2(3a+b)(t1+t2) + 2a*t3 + (3a+b) t4
    long long alpha1 = 18 - 6 * (t1 + t2) - 2 * t3 - 3 * t4;
    long long beta1 = 2 * b * (t1 + t2) + b * t4 - 6 * b - 2;

    // Second constraint with ceil(a + b/3) = a + (b > 0 ? 1 : 0):
    //   9a + 3b + 1 <= (a + e - 1) t1 + (3a+b) t3 + (2a+1) t4
    long long e = (b > 0) ? 1 : 0;
    long long alpha2 = 9 - t1 - 3 * t3 - 2 * t4;
    long long beta2 = (e - 1) * t1 + b * t3 + t4 - 3 * b - 1;

    auto r1 = affine_range(alpha1, beta1);
    auto r2 = affine_range(alpha2, beta2);
    if (!r1 || !r2) return std::nullopt;
    long long lo = std::max(r1->first, r2->first);
    std::optional<long long> hi;
    if (r1->second && r2->second)
        hi = std::min(*r1->second, *r2->second);
    else if (r1->second)
        hi = r1->second;
    else if (r2->second)
        hi = r2->second;
    if (hi && *hi < lo) return std::nullopt;
    return {{lo, hi}};
}

Feasibility check_quadratic_system_k5() {
    Feasibility result;
    for_each_theta(5, [&](int t1, int t2, int t3, int t4) {
        for (int b = 0; b <= 2; ++b) {
            TypeCounts theta{t1, t2, t3, t4, 5, std::nullopt, std::nullopt};
            if (auto range = quadratic_case_a_range(theta, b)) {
                result.feasible = true;
                theta.a = range->first;
                theta.b = b;
                result.witnesses.push_back(theta);
            }
        }
    });
    return result;
}

}  // namespace cyclepack
