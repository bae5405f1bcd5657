#pragma once

#include <span>
#include <vector>

#include "carry/polynomial.hpp"
#include "carry/rational.hpp"

namespace carry {

BigInt factorial(long n);

/// Binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Eulerian number A(n, i): permutations of n elements with i descents.
/// Zero for i < 0 or i >= n. Requires n >= 1.
BigInt eulerian(long n, long i);

/// A(n, i) via the alternating-sum closed form; independent of the recurrence.
BigInt eulerian_explicit(long n, long i);

/// A_n(x) = sum_i A(n, i) x^i.
Polynomial eulerian_polynomial(long n);

/// Unsigned Stirling number of the first kind |s(n, m)|; zero outside 0 <= m <= n.
BigInt stirling_first_unsigned(long n, long m);

/// j-th elementary symmetric polynomial of the given integers (e_0 = 1).
BigInt elementary_symmetric(long j, std::span<const long> values);

/// S_L(tau, delta): S_0 = 1, S_1 = tau, S_L = tau S_{L-1} - delta S_{L-2}.
/// Equal to (sqrt delta)^L U_L(tau / (2 sqrt delta)) with all square roots cancelled.
Rational scaled_chebyshev(long length, const Rational& tau, const Rational& delta);

BigInt fibonacci(long n);

/// Checks n^k = sum_c weights[c] * C(n + k - 1 - c, k) for 0 <= n <= n_max.
bool verify_worpitzky(long k, long n_max, std::span<const BigInt> weights);

/// Worpitzky check with the Eulerian row A(k, .) as weights.
bool verify_worpitzky(long k, long n_max);

}  // namespace carry
