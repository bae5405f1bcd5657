#include <doctest.h>

#include <random>
#include <stdexcept>

#include "carry/combinatorics.hpp"
#include "carry/matrix.hpp"
#include "carry/polynomial.hpp"
#include "carry/rational.hpp"

using namespace carry;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    return Rational(num(rng), den(rng));
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    Matrix m(n, n);
    std::uniform_int_distribution<long> e(-6, 6);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(e(rng), 1 + (r + c) % 3);
    return m;
}

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("normalizes to lowest terms with positive denominator") {
        const Rational r(6, -4);
        CHECK(r.num() == -3);
        CHECK(r.den() == 2);
        CHECK(r.str() == "-3/2");
        CHECK(Rational(0, 5).str() == "0");
        CHECK(Rational(10, 5).is_integer());
    }

    TEST_CASE("parse round-trips") {
        CHECK(Rational::parse("7") == Rational(7));
        CHECK(Rational::parse("-12/18") == Rational(-2, 3));
        CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
        CHECK_THROWS(Rational::parse("1/0"));
        CHECK_THROWS(Rational::parse("abc"));
        CHECK_THROWS(Rational::parse(""));
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
        CHECK_THROWS(Rational(1) / Rational(0));
        CHECK_THROWS(Rational(0).inverse());
        CHECK_THROWS_AS(Rational(1, 2).to_integer(), std::domain_error);
        CHECK(Rational(9, 3).to_integer() == 3);
    }

    TEST_CASE("pow handles negative exponents") {
        CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
        CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
        CHECK(Rational(5).pow(0) == Rational(1));
    }

    TEST_CASE("field laws on random triples") {
        std::mt19937_64 rng(20261016);
        for (int i = 0; i < 500; ++i) {
            const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Rational(0));
            if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }

    TEST_CASE("ordering") {
        CHECK(Rational(1, 3) < Rational(1, 2));
        CHECK(Rational(-1, 2) < Rational(-1, 3));
        CHECK(Rational(-5, 2).abs() == Rational(5, 2));
        CHECK(Rational(-5, 2).sign() == -1);
    }
}

TEST_SUITE("polynomial") {
    TEST_CASE("trims and reports degree") {
        CHECK(Polynomial({1, 2, 0, 0}).degree() == 1);
        CHECK(Polynomial().degree() == -1);
        CHECK(Polynomial({0}).is_zero());
    }

    TEST_CASE("rendering") {
        CHECK(Polynomial({7, -10, 1}).str() == "x^2 - 10*x + 7");
        CHECK(Polynomial({20, -10, 1}).str("lambda") == "lambda^2 - 10*lambda + 20");
        CHECK(Polynomial().str() == "0");
    }

    TEST_CASE("arithmetic and evaluation") {
        const Polynomial p({1, 1});
        CHECK(p.pow(3) == Polynomial({1, 3, 3, 1}));
        CHECK(p.pow(3).eval(Rational(2)) == Rational(27));
        CHECK(Polynomial({1, 2, 3}).derivative() == Polynomial({2, 6}));
        CHECK(Polynomial({1, 2, 3}).reversed() == Polynomial({3, 2, 1}));
        CHECK(Polynomial({2, 4}).monic() == Polynomial({Rational(1, 2), 1}));
        CHECK(Polynomial({1, 1}).scale_argument(Rational(3)) == Polynomial({1, 3}));
        CHECK(Polynomial({1, 2, 3, 4}).truncated(2) == Polynomial({1, 2}));
    }

    TEST_CASE("exact division") {
        const Polynomial q({1, -1, 1});
        const Polynomial d({1, 1});
        CHECK(divide_exact(q * d, d) == q);
        CHECK_THROWS_AS(divide_exact(Polynomial({1, 8, 1}), Polynomial({1, 2, 1})), InexactDivision);
        CHECK_THROWS(divide_exact(q, Polynomial()));
        const auto dm = divmod(Polynomial({1, 0, 1}), Polynomial({1, 1}));
        CHECK(dm.quotient * Polynomial({1, 1}) + dm.remainder == Polynomial({1, 0, 1}));
    }

    TEST_CASE("gcd is monic") {
        const Polynomial a = Polynomial({-1, 1}) * Polynomial({-2, 1});
        const Polynomial b = Polynomial({-1, 1}) * Polynomial({3, 1});
        CHECK(gcd(a * Rational(5), b) == Polynomial({-1, 1}));
        CHECK(gcd(Polynomial({1, 1}), Polynomial({2, 1})).degree() == 0);
    }

    TEST_CASE("rational roots") {
        const std::vector<Rational> roots{Rational(-3), Rational(0), Rational(1, 2), Rational(4)};
        const auto found = rational_roots(Polynomial::from_roots(roots));
        CHECK(found == roots);
        CHECK(rational_roots(Polynomial({-280, 165, -25, 1})).empty());
        CHECK(rational_roots(Polynomial({-2, 0, 1})).empty());
    }

    TEST_CASE("squarefree") {
        CHECK(is_squarefree(Polynomial({-2, 0, 1})));
        CHECK_FALSE(is_squarefree(Polynomial({1, 1}).pow(2)));
    }

    TEST_CASE("polynomial determinants agree") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> e(-4, 4);
        for (std::size_t n = 1; n <= 5; ++n) {
            std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
            for (auto& row : m)
                for (auto& p : row) p = Polynomial({e(rng), e(rng)});
            CHECK(determinant_cofactor(m) == determinant_bareiss(m));
            CHECK(determinant(m) == determinant_bareiss(m));
        }
    }
}

TEST_SUITE("matrix") {
    TEST_CASE("identity, transpose, trace") {
        const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
        CHECK(m * Matrix::identity(2) == m);
        CHECK(m.transpose()(0, 1) == Rational(3));
        CHECK(m.trace() == Rational(5));
        CHECK(determinant(m) == Rational(-2));
        CHECK(m.pow(5) == m * m * m * m * m);
    }

    TEST_CASE("dimension mismatches throw") {
        const Matrix a(2, 3);
        const Matrix b(2, 3);
        CHECK_THROWS(a * b);
        CHECK_THROWS(determinant(a));
        CHECK_THROWS(characteristic_polynomial(a));
    }

    TEST_CASE("nullspace") {
        const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
        const auto basis = nullspace(m);
        REQUIRE(basis.size() == 1);
        const Vector image = m * basis.front();
        for (const auto& x : image) CHECK(x.is_zero());
        CHECK(nullspace(Matrix::identity(3)).empty());
    }

    TEST_CASE("charpoly: Faddeev-LeVerrier agrees with Bareiss") {
        std::mt19937_64 rng(11);
        for (std::size_t n = 1; n <= 6; ++n) {
            const Matrix m = random_matrix(rng, n);
            const Polynomial chi = characteristic_polynomial(m);
            CHECK(chi == characteristic_polynomial_bareiss(m));
            CHECK(chi.coeff(n - 1) == -m.trace());
            CHECK(eval_polynomial(chi, m) == Matrix(n, n));  // Cayley-Hamilton
        }
    }
}

TEST_SUITE("combinatorics") {
    TEST_CASE("Eulerian rows") {
        CHECK(eulerian(3, 1) == 4);
        CHECK(eulerian(5, 2) == 66);
        CHECK(eulerian(4, 7) == 0);
        CHECK(eulerian(4, -1) == 0);
        CHECK_THROWS(eulerian(0, 0));
        CHECK(eulerian_polynomial(4) == Polynomial({1, 11, 11, 1}));
    }

    TEST_CASE("Eulerian symmetry, row sums, explicit formula") {
        for (long n = 1; n <= 14; ++n) {
            BigInt sum = 0;
            for (long i = 0; i < n; ++i) {
                CHECK(eulerian(n, i) == eulerian(n, n - 1 - i));
                CHECK(eulerian(n, i) == eulerian_explicit(n, i));
                sum += eulerian(n, i);
            }
            CHECK(sum == factorial(n));
        }
    }

    TEST_CASE("Stirling numbers of the first kind") {
        CHECK(stirling_first_unsigned(4, 2) == 11);
        CHECK(stirling_first_unsigned(5, 5) == 1);
        CHECK(stirling_first_unsigned(5, 0) == 0);
        for (long n = 1; n <= 12; ++n) {
            BigInt sum = 0;
            for (long m = 0; m <= n; ++m) sum += stirling_first_unsigned(n, m);
            CHECK(sum == factorial(n));
        }
    }

    TEST_CASE("elementary symmetric polynomials match Stirling numbers") {
        const std::vector<long> values{1, 2, 3, 4, 5};
        for (long j = 0; j <= 5; ++j) CHECK(elementary_symmetric(j, values) == stirling_first_unsigned(6, 6 - j));
    }

    TEST_CASE("binomial edge cases") {
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(5, -1) == 0);
        CHECK(binomial(5, 6) == 0);
        CHECK_THROWS(binomial(-1, 0));
    }

    TEST_CASE("scaled Chebyshev and Fibonacci") {
        CHECK(scaled_chebyshev(0, Rational(3), Rational(1)) == Rational(1));
        CHECK(scaled_chebyshev(1, Rational(3), Rational(1)) == Rational(3));
        for (long l = 0; l <= 15; ++l) CHECK(scaled_chebyshev(l, Rational(3), Rational(1)) == Rational(fibonacci(2 * l + 2)));
        CHECK(fibonacci(0) == 0);
        CHECK(fibonacci(10) == 55);
    }

    TEST_CASE("Worpitzky identity and a corrupted weight") {
        for (long k = 1; k <= 7; ++k) CHECK(verify_worpitzky(k, 6));
        std::vector<BigInt> weights{1, 4, 2};
        CHECK_FALSE(verify_worpitzky(3, 4, weights));
    }
}
