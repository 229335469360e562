#include <doctest.h>

#include "cyclepack/ineq.hpp"

using namespace cyclepack;

namespace {

// Direct evaluation of the two order constraints at one point, written
// against the printed forms rather than the affine reduction.
bool direct_feasible(const TypeCounts& t, int b, long long a) {
    long long e = (b > 0) ? 1 : 0;
    long long c1_lhs = 18 * a + 6 * b + 2;
    long long c1_rhs = 2 * (3 * a + b) * (t.theta1 + t.theta2) + 2 * a * t.theta3 +
                       (3 * a + b) * t.theta4;
    long long c2_lhs = 9 * a + 3 * b + 1;
    long long c2_rhs = (a + e - 1) * t.theta1 + (3 * a + b) * t.theta3 + (2 * a + 1) * t.theta4;
    return c1_lhs <= c1_rhs && c2_lhs <= c2_rhs;
}

bool in_range(const std::optional<std::pair<long long, std::optional<long long>>>& range,
              long long a) {
    return range && range->first <= a && (!range->second || a <= *range->second);
}

void check_witness_strictly(const TypeCounts& w) {
    int k = w.k_minus_1;
    CHECK(w.theta1 + w.theta2 + w.theta3 + w.theta4 == k);
    CHECK(w.theta1 <= 1);
    CHECK(w.theta1 >= 0);
    CHECK(w.theta2 >= 0);
    CHECK(w.theta3 >= 0);
    CHECK(w.theta4 >= 0);
    Rat threshold(2LL * k - 1, 3);
    Rat lhs1 = Rat(w.theta1) + Rat(w.theta2) + Rat(w.theta3, 3) + Rat(w.theta4, 2);
    Rat lhs2 = Rat(w.theta1, 3) + Rat(w.theta3) + Rat(7LL * w.theta4, 9);
    CHECK(threshold < lhs1);
    CHECK(threshold < lhs2);
}

}  // namespace

TEST_CASE("linear system argument validation") {
    CHECK_THROWS_AS(check_linear_system(0), std::invalid_argument);
    CHECK_THROWS_AS(check_linear_system(-3), std::invalid_argument);
}

TEST_CASE("linear system is feasible up to five") {
    for (int k : {1, 2, 3, 4, 5}) {
        auto result = check_linear_system(k);
        CHECK(result.feasible);
        REQUIRE(!result.witnesses.empty());
        for (const auto& w : result.witnesses) check_witness_strictly(w);
    }

    auto first = [](int k) {
        auto w = check_linear_system(k).witnesses.front();
        return std::array{w.theta1, w.theta2, w.theta3, w.theta4};
    };
    CHECK(first(1) == std::array{0, 0, 0, 1});
    CHECK(first(2) == std::array{1, 0, 0, 1});
    CHECK(first(3) == std::array{0, 1, 1, 1});
    CHECK(first(4) == std::array{1, 0, 0, 3});
    CHECK(first(5) == std::array{1, 1, 2, 1});
}

TEST_CASE("linear system is infeasible from six on") {
    for (int k = 6; k <= 100; ++k) {
        auto result = check_linear_system(k);
        CHECK(!result.feasible);
        CHECK(result.witnesses.empty());
    }
}

TEST_CASE("quadratic refinement closes the k-1 = 5 case") {
    auto result = check_quadratic_system_k5();
    CHECK(!result.feasible);
    CHECK(result.witnesses.empty());
}

TEST_CASE("quadratic case ranges") {
    CHECK_THROWS_AS(quadratic_case_a_range({0, 5, 0, 0, 5, {}, {}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_case_a_range({0, 5, 0, 0, 5, {}, {}}, -1), std::invalid_argument);

    CHECK(!quadratic_case_a_range({0, 5, 0, 0, 5, {}, {}}, 0));
    CHECK(!quadratic_case_a_range({0, 0, 5, 0, 5, {}, {}}, 0));

    auto unbounded = quadratic_case_a_range({0, 0, 10, 0, 10, {}, {}}, 0);
    REQUIRE(unbounded);
    CHECK(unbounded->first == 1);
    CHECK(!unbounded->second);

    auto bounded = quadratic_case_a_range({0, 2, 0, 4, 6, {}, {}}, 0);
    REQUIRE(bounded);
    CHECK(bounded->first == 1);
    REQUIRE(bounded->second);
    CHECK(*bounded->second == 3);
}

TEST_CASE("quadratic ranges agree with direct constraint evaluation") {
    for (int total : {5, 6}) {
        for (int t1 = 0; t1 <= 1; ++t1)
            for (int t2 = 0; t2 <= total - t1; ++t2)
                for (int t3 = 0; t3 <= total - t1 - t2; ++t3) {
                    int t4 = total - t1 - t2 - t3;
                    TypeCounts theta{t1, t2, t3, t4, total, {}, {}};
                    for (int b = 0; b <= 2; ++b) {
                        auto range = quadratic_case_a_range(theta, b);
                        for (long long a = 1; a <= 200; ++a)
                            REQUIRE(direct_feasible(theta, b, a) == in_range(range, a));
                    }
                }
    }
}
