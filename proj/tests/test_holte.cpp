#include <doctest.h>

#include "carry/combinatorics.hpp"
#include "carry/holte.hpp"

using namespace carry;

TEST_CASE("digit-sum profile") {
    const auto p = digit_sum_counts(3, 2);
    CHECK(p.counts == std::vector<BigInt>{1, 3, 3, 1});
    CHECK(p.total() == 8);
    CHECK(p.is_symmetric());
    CHECK(p.is_log_concave());
    CHECK(p.at(-1) == 0);
    CHECK(p.at(4) == 0);
    for (int k = 2; k <= 5; ++k)
        for (int n : {2, 3, 7}) {
            const auto q = digit_sum_counts(k, n);
            CHECK(q.total() == ipow(BigInt(n), static_cast<unsigned long>(k)));
            CHECK(q.is_symmetric());
            CHECK(q.is_log_concave());
        }
}

TEST_CASE("count matrix for k=3, N=2") {
    const auto sys = build_holte(3, 2);
    CHECK(sys.count_matrix() == Matrix::from_rows({{4, 1, 0}, {4, 6, 4}, {0, 1, 4}}));
    CHECK(sys.scale() == 8);
    CHECK(sys.prob_matrix()(1, 1) == Rational(3, 4));
}

TEST_CASE("count matrix agrees with brute-force enumeration") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 2; n <= 4; ++n) CHECK(build_holte(k, n).count_matrix() == count_matrix_brute_force(k, n));
    CHECK_THROWS_AS(count_matrix_brute_force(8, 10, 1000), BudgetExceeded);
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS(build_holte(0, 2));
    CHECK_THROWS(build_holte(3, 1));
    CHECK_THROWS(HolteSystem(2, 2, Matrix::from_rows({{3, 1}, {0, 3}})));   // column sums differ
    CHECK_THROWS(HolteSystem(2, 2, Matrix::from_rows({{5, 1}, {-1, 3}})));  // negative entry
}

TEST_CASE("stationary distribution is the Eulerian row") {
    CHECK_THROWS(stationary_distribution(1));
    for (int k = 2; k <= 7; ++k) {
        const Vector pi = stationary_distribution(k);
        for (int i = 0; i < k; ++i)
            CHECK(pi[static_cast<std::size_t>(i)] == Rational(eulerian(k, i), factorial(k)));
        for (int n : {2, 3}) {
            const Matrix t = build_holte(k, n).prob_matrix();
            CHECK(t * pi == pi);
        }
    }
}

TEST_CASE("centrosymmetry") {
    for (int k = 2; k <= 6; ++k)
        for (int n : {2, 3, 5}) CHECK(check_centrosymmetry(build_holte(k, n)));
    CHECK_FALSE(check_centrosymmetry(Matrix::from_rows({{1, 2}, {3, 4}})));
}

TEST_CASE("return count identity") {
    for (int k = 2; k <= 5; ++k)
        for (int n : {2, 3}) CHECK(verify_return_count(build_holte(k, n), 3));
}

TEST_CASE("total nonnegativity and oscillation") {
    for (int k = 2; k <= 5; ++k) {
        const Matrix c = build_holte(k, 2).count_matrix();
        CHECK(is_totally_nonnegative(c));
        CHECK(is_oscillatory(c));
    }
    CHECK_FALSE(is_totally_nonnegative(Matrix::from_rows({{1, 2}, {3, 4}})));
    CHECK_FALSE(is_oscillatory(Matrix::identity(3)));
    CHECK_THROWS_AS(is_totally_nonnegative(Matrix::identity(kMaxMinorDimension + 1)), DimensionTooLarge);
}

TEST_CASE("reversibility defects") {
    const auto defects = reversibility_defect(build_holte(4, 2));
    REQUIRE_FALSE(defects.empty());
    CHECK(defects.front().c == 0);
    CHECK(defects.front().c_prime == 1);
    CHECK(defects.front().forward == Rational(10, 384));
    CHECK(defects.front().backward == Rational(11, 384));
    for (int n : {2, 3, 5}) {
        CHECK(reversibility_defect(build_holte(2, n)).empty());
        CHECK(reversibility_defect(build_holte(3, n)).empty());
    }
}

TEST_CASE("uniform residue") {
    for (int k = 2; k <= 4; ++k)
        for (int c = 0; c < k; ++c) CHECK(verify_uniform_residue(k, 3, c));
    CHECK_THROWS_AS(verify_uniform_residue(9, 10, 0, 100), BudgetExceeded);
}

TEST_CASE("interlacing certificate") {
    for (int k = 2; k <= 6; ++k) CHECK(interlacing_certificate(build_holte(k, 2)));
}
