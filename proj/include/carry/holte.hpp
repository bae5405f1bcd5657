#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "carry/matrix.hpp"
#include "carry/rational.hpp"

namespace carry {

/// Raised when an exhaustive operation would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the all-minors check is asked for a matrix that is too large.
class DimensionTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Distribution of the sum of k uniform base-N digits: counts[s] is the
/// number of k-tuples with digit sum s, for s = 0 .. k(N-1).
struct DigitSumProfile {
    int k = 0;
    int base = 0;
    std::vector<BigInt> counts;

    /// Zero off the support.
    BigInt at(long s) const;
    BigInt total() const;
    bool is_symmetric() const;
    bool is_log_concave() const;
};

DigitSumProfile digit_sum_counts(int k, int base);

/// Carry chain of k-summand base-N addition. Entry [c', c] of both matrices
/// is the transition from incoming carry c to outgoing carry c'; columns of
/// the count matrix sum to N^k, columns of the probability matrix to 1.
class HolteSystem {
public:
    HolteSystem(int k, int base, Matrix count_matrix);

    int k() const { return k_; }
    int base() const { return base_; }
    const Matrix& count_matrix() const { return count_; }
    const Matrix& prob_matrix() const { return prob_; }
    /// N^k
    BigInt scale() const;

private:
    int k_;
    int base_;
    Matrix count_;
    Matrix prob_;
};

HolteSystem build_holte(int k, int base);

inline constexpr std::uint64_t kCountBruteForceBudget = 100'000;

/// Count matrix by direct enumeration of all N^k digit tuples per incoming carry.
Matrix count_matrix_brute_force(int k, int base, std::uint64_t budget = kCountBruteForceBudget);

/// pi_i = A(k, i) / k!
Vector stationary_distribution(int k);

bool check_centrosymmetry(const Matrix& m);
inline bool check_centrosymmetry(const HolteSystem& sys) { return check_centrosymmetry(sys.count_matrix()); }

/// (T_count)^n [0,0] == C(N^n + k - 1, k) for 1 <= n <= n_max.
bool verify_return_count(const HolteSystem& sys, int n_max);

inline constexpr std::size_t kMaxMinorDimension = 8;

/// Every minor of every order is >= 0. Square matrices of dimension <= 8 only.
bool is_totally_nonnegative(const Matrix& m);

/// Totally nonnegative, nonsingular, and some power m^p (p <= dim^2) entrywise positive.
bool is_oscillatory(const Matrix& m);

struct ReversibilityDefect {
    std::size_t c = 0;
    std::size_t c_prime = 0;
    Rational forward;   // pi_c T[c', c]
    Rational backward;  // pi_{c'} T[c, c']
};

/// Every unordered pair c < c' violating detailed balance.
std::vector<ReversibilityDefect> reversibility_defect(const HolteSystem& sys);

inline constexpr std::uint64_t kUniformResidueBudget = 1'000'000;

/// Brute force over all N^k digit tuples: (S + c) mod N hits each residue N^{k-1} times.
bool verify_uniform_residue(int k, int base, int carry_in, std::uint64_t budget = kUniformResidueBudget);

/// Sign pattern of chi(N^{k-j}), j = 0..k-1, for the leading (k-1)x(k-1)
/// principal submatrix of T_count; true when the signs strictly alternate.
bool interlacing_certificate(const HolteSystem& sys);

}  // namespace carry
