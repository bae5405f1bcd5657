#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carry/holte.hpp"
#include "carry/matrix.hpp"
#include "carry/polynomial.hpp"

namespace carry {

/// Two-state GEN/PROP/KILL carry chain with integer class sizes g + t + r = N.
struct BinaryChain {
    long base = 0;
    long gen = 0;
    long prop = 0;
    long kill = 0;

    static BinaryChain make(long base, long gen, long prop, long kill);

    /// [[r + t, g], [r, g]]: trace N, determinant t g.
    Matrix transfer() const;
    Rational trace() const { return Rational(base); }
    /// The invariant t * g.
    Rational determinant() const { return Rational(prop * gen); }
};

/// Restricted transfer problem: the principal submatrix of a count matrix on
/// the states outside the forbidden set. For a BinaryChain source the whole
/// 2x2 transfer matrix is kept and the forbidden set is empty.
struct CascadeSpec {
    std::size_t states = 0;
    std::vector<std::size_t> forbidden;
    std::vector<std::size_t> kept;
    Matrix restricted;
    /// Forbidden set is {k-1} or {k-2, k-1} of a carry chain, or a binary chain.
    bool table_coverage = true;

    std::size_t dimension() const { return kept.size(); }
};

/// Principal submatrix of sys.count_matrix() on the complement of `forbidden`.
/// Throws std::invalid_argument for an empty or full forbidden set, or one
/// that contains state 0.
CascadeSpec restrict(const HolteSystem& sys, std::vector<std::size_t> forbidden);
CascadeSpec restrict(const Matrix& count_matrix, std::vector<std::size_t> forbidden);
CascadeSpec restrict(const BinaryChain& chain);

/// 1^T T~^L e_0
BigInt avoidance_count(const CascadeSpec& spec, long length);
/// a(0), ..., a(L_max)
std::vector<BigInt> avoidance_sequence(const CascadeSpec& spec, long max_length);

inline constexpr std::uint64_t kBruteForceBudget = 10'000'000;

/// Direct enumeration of length-L sequences of digit k-tuples whose carry,
/// started at 0 and updated by c' = floor((S + c) / N), never enters F.
BigInt avoidance_brute_force(int k, int base, const std::vector<std::size_t>& forbidden, long length,
                             std::uint64_t budget = kBruteForceBudget);

/// Coefficients r_1..r_d with a(L) = sum_i r_i a(L-i), read off chi_{T~}.
std::vector<Rational> recurrence_coefficients(const CascadeSpec& spec);

/// Extends the first d terms by the recurrence up to index max_length.
std::vector<BigInt> extend_by_recurrence(std::vector<BigInt> initial, const std::vector<Rational>& coefficients,
                                         long max_length);

/// Matrix-power sequence satisfies the chi-derived recurrence for d <= L <= L_max.
bool verify_recurrence(const CascadeSpec& spec, long max_length);

/// a(L) == S_L(tr T~, det T~) for all L <= L_max. Requires d = 2.
bool chebyshev_check(const CascadeSpec& spec, long max_length);

/// a(L) == S_L(tau, delta) + (a(1) - tau) S_{L-1}(tau, delta), the general
/// two-state form. Requires d = 2.
bool chebyshev_check_shifted(const CascadeSpec& spec, long max_length);

/// (1/k!) sum_j w_j prod_{i != j} (lambda - N^{k-i}) with caller-supplied weights.
Polynomial stirling_lagrange_from_weights(int k, int base, const std::vector<BigInt>& weights);
/// Weights w_j = |s(k, k-j)|.
Polynomial stirling_lagrange_charpoly(int k, int base);

/// N^{C(k,2)} / k! * prod_{i=1}^{k-1} (iN + 1)
Rational det_restricted_formula(int k, int base);

enum class VerdictKind { Geometric, Chebyshev, NoChebyshev, Undetermined };

std::string to_string(VerdictKind kind);

struct ThresholdVerdict {
    VerdictKind kind = VerdictKind::Undetermined;
    std::size_t dimension = 0;
    Polynomial charpoly;
    Rational tau;    // trace (d <= 2)
    Rational delta;  // determinant (d == 2)
    // Generating function A(z) = P(z) / Q(z); filled for d >= 3.
    Polynomial numerator;
    Polynomial denominator;
    Polynomial gcd_chi_derivative;
    Polynomial gcd_numerator_denominator;
    bool h1 = false;
    bool h2 = false;
    int reduced_denominator_degree = -1;
    bool table_coverage = true;
    std::vector<std::string> notes;
};

/// Q(z) = det(I - z T~)
Polynomial transfer_denominator(const Matrix& restricted);
/// P(z) = 1^T adj(I - z T~) e_0
Polynomial transfer_numerator(const Matrix& restricted);

ThresholdVerdict threshold_classify(const CascadeSpec& spec);

enum class DispersionRegime { Underdispersed, Poisson, Overdispersed };

std::string to_string(DispersionRegime regime);

struct Dispersion {
    Rational index;
    DispersionRegime regime = DispersionRegime::Poisson;
    /// 2 r t == g (g + r)
    bool poisson_condition = false;
};

/// D_inf = pi_0 (1 + mu) / (1 - mu), pi_0 = r / (g + r), mu = t / N.
Dispersion dispersion_index(const BinaryChain& chain);

}  // namespace carry
