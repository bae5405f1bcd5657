#include <doctest.h>

#include <random>

#include "carry/cascade.hpp"
#include "carry/combinatorics.hpp"

using namespace carry;

namespace {

// Power series of P(z)/Q(z) to n terms.
std::vector<Rational> series(const Polynomial& p, const Polynomial& q, std::size_t n) {
    std::vector<Rational> out(n);
    const Rational q0 = q.coeff(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = p.coeff(i);
        for (std::size_t j = 1; j <= i; ++j) acc -= q.coeff(j) * out[i - j];
        out[i] = acc / q0;
    }
    return out;
}

}  // namespace

TEST_SUITE("binary chain") {
    TEST_CASE("construction") {
        const auto c = BinaryChain::make(3, 1, 1, 1);
        CHECK(c.transfer() == Matrix::from_rows({{2, 1}, {1, 1}}));
        CHECK(c.trace() == Rational(3));
        CHECK(c.determinant() == Rational(1));
        CHECK_THROWS(BinaryChain::make(3, 1, 1, 2));
        CHECK_THROWS(BinaryChain::make(3, -1, 2, 2));
    }

    TEST_CASE("dispersion index") {
        const auto d = dispersion_index(BinaryChain::make(3, 1, 1, 1));
        CHECK(d.index == Rational(1));
        CHECK(d.regime == DispersionRegime::Poisson);
        CHECK(d.poisson_condition);
        CHECK(dispersion_index(BinaryChain::make(4, 1, 2, 1)).regime != DispersionRegime::Poisson);
        CHECK_THROWS(dispersion_index(BinaryChain::make(3, 0, 3, 0)));
    }
}

TEST_SUITE("restriction") {
    TEST_CASE("forbidden-set validation") {
        const auto sys = build_holte(4, 2);
        CHECK_THROWS(restrict(sys, {}));
        CHECK_THROWS(restrict(sys, {0}));
        CHECK_THROWS(restrict(sys, {4}));
        CHECK_THROWS(restrict(sys, {0, 1, 2, 3}));
        const auto spec = restrict(sys, {3, 2});
        CHECK(spec.dimension() == 2);
        CHECK(spec.table_coverage);
        CHECK_FALSE(restrict(sys, {1}).table_coverage);
    }

    TEST_CASE("k=4 cascade-free sequence") {
        const auto spec = restrict(build_holte(4, 2), {3});
        const std::vector<BigInt> expected{1, 16, 255, 4015, 62780, 978425, 15226125, 236791400};
        CHECK(avoidance_sequence(spec, 7) == expected);
        CHECK(characteristic_polynomial(spec.restricted) == Polynomial({-280, 165, -25, 1}));
        CHECK(verify_recurrence(spec, 20));
        const std::vector<BigInt> initial(expected.begin(), expected.begin() + 3);
        CHECK(extend_by_recurrence(initial, recurrence_coefficients(spec), 7) == expected);
    }

    TEST_CASE("brute force oracle") {
        for (int k = 2; k <= 4; ++k)
            for (int n = 2; n <= 3; ++n) {
                const std::vector<std::size_t> f{static_cast<std::size_t>(k - 1)};
                const auto spec = restrict(build_holte(k, n), f);
                for (long len = 0; len <= 2; ++len) CHECK(avoidance_brute_force(k, n, f, len) == avoidance_count(spec, len));
            }
        CHECK_THROWS_AS(avoidance_brute_force(4, 3, {3}, 10, 1000), BudgetExceeded);
    }
}

TEST_SUITE("Chebyshev forms") {
    TEST_CASE("pure form holds when a(1) equals the trace") {
        const auto spec = restrict(build_holte(4, 2), {2, 3});
        CHECK(chebyshev_check(spec, 20));
        CHECK(chebyshev_check_shifted(spec, 20));
    }

    TEST_CASE("shifted form covers every two-state restriction") {
        for (int n : {2, 3, 5}) {
            const auto spec = restrict(build_holte(3, n), {2});
            CHECK(chebyshev_check_shifted(spec, 20));
        }
        CHECK_FALSE(chebyshev_check(restrict(build_holte(3, 2), {2}), 5));
    }

    TEST_CASE("dimension guard") {
        CHECK_THROWS_AS(chebyshev_check(restrict(build_holte(4, 2), {3}), 5), std::invalid_argument);
    }
}

TEST_SUITE("Stirling-Lagrange") {
    TEST_CASE("k=3, N=2") {
        CHECK(stirling_lagrange_charpoly(3, 2) == Polynomial({20, -10, 1}));
    }

    TEST_CASE("matches direct charpoly and determinant") {
        for (int k = 2; k <= 6; ++k)
            for (int n : {2, 3, 5}) {
                const auto spec = restrict(build_holte(k, n), {static_cast<std::size_t>(k - 1)});
                CHECK(stirling_lagrange_charpoly(k, n) == characteristic_polynomial(spec.restricted));
                CHECK(det_restricted_formula(k, n) == determinant(spec.restricted));
            }
    }

    TEST_CASE("perturbed weights are detected") {
        std::vector<BigInt> w;
        for (int j = 0; j < 4; ++j) w.push_back(stirling_first_unsigned(4, 4 - j));
        const auto spec = restrict(build_holte(4, 3), {3});
        CHECK(stirling_lagrange_from_weights(4, 3, w) == characteristic_polynomial(spec.restricted));
        w.back() += 1;
        CHECK(stirling_lagrange_from_weights(4, 3, w) != characteristic_polynomial(spec.restricted));
    }
}

TEST_SUITE("threshold") {
    TEST_CASE("generating function matches the count series") {
        for (int k = 3; k <= 5; ++k)
            for (int n : {2, 3}) {
                const auto spec = restrict(build_holte(k, n), {static_cast<std::size_t>(k - 1)});
                const auto a = avoidance_sequence(spec, 12);
                const auto s = series(transfer_numerator(spec.restricted), transfer_denominator(spec.restricted), 13);
                for (std::size_t i = 0; i < a.size(); ++i) CHECK(s[i] == Rational(a[i]));
            }
    }

    TEST_CASE("denominator is the reversed charpoly") {
        const auto spec = restrict(build_holte(5, 2), {4});
        CHECK(transfer_denominator(spec.restricted) == characteristic_polynomial(spec.restricted).reversed());
    }

    TEST_CASE("verdicts") {
        const auto cubic = threshold_classify(restrict(build_holte(4, 2), {3}));
        CHECK(cubic.kind == VerdictKind::NoChebyshev);
        CHECK(cubic.h1);
        CHECK(cubic.h2);
        CHECK(cubic.reduced_denominator_degree == 3);
        CHECK(cubic.gcd_chi_derivative.degree() == 0);
        CHECK(cubic.gcd_numerator_denominator.degree() == 0);

        const auto quad = threshold_classify(restrict(build_holte(4, 2), {2, 3}));
        CHECK(quad.kind == VerdictKind::Chebyshev);
        CHECK(quad.tau == Rational(15));
        CHECK(quad.delta == Rational(40));

        const auto geo = threshold_classify(restrict(build_holte(2, 3), {1}));
        CHECK(geo.kind == VerdictKind::Geometric);
        CHECK(geo.dimension == 1);

        CHECK(to_string(VerdictKind::NoChebyshev) == "NoChebyshev");
    }

    TEST_CASE("random binary chains satisfy the two-state Chebyshev identity") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 40; ++i) {
            const long n = std::uniform_int_distribution<long>(1, 12)(rng);
            const long g = std::uniform_int_distribution<long>(0, n)(rng);
            const long t = std::uniform_int_distribution<long>(0, n - g)(rng);
            const auto chain = BinaryChain::make(n, g, t, n - g - t);
            const auto spec = restrict(chain);
            CHECK(chebyshev_check_shifted(spec, 12));
            if (chain.gen == chain.kill) CHECK(chebyshev_check(spec, 12));
        }
    }
}
