#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carry/cascade.hpp"
#include "carry/matrix.hpp"
#include "carry/polynomial.hpp"

namespace carry {

enum class ModuliStatus { Achievable, AMGMOnlyExcluded, BelowAMGM };

std::string to_string(ModuliStatus status);

struct ModuliPoint {
    long base = 0;
    long det = 0;
    ModuliStatus status = ModuliStatus::BelowAMGM;
    /// Some (g, t) with g t = det and g + t <= N, when achievable.
    std::optional<std::pair<long, long>> witness;
};

/// min over divisors q <= sqrt(d) of q + d/q; requires d >= 1.
long sigma(long det);

/// Explicit search for (g, t) with g t = det, g + t <= N.
std::optional<std::pair<long, long>> achievable_witness(long base, long det);

ModuliPoint classify_point(long base, long det);

/// Grid N = 1..N_max, d = 0..d_max, ordered by N then d.
std::vector<ModuliPoint> moduli_space(long base_max, long det_max);

/// Column-stochastic chain matrix with rational entries.
class MarkovCarrySystem {
public:
    /// Throws std::invalid_argument unless square, entries in [0, 1], columns sum to 1.
    explicit MarkovCarrySystem(Matrix matrix, long alphabet = 0);

    /// Two-state GEN/PROP/KILL chain with digit-class probabilities g, t, l (sum 1).
    static MarkovCarrySystem gen_prop_kill(const Rational& gen, const Rational& prop, const Rational& kill,
                                           long alphabet = 0);
    /// Uniform k-summand chain (the probability Holte matrix).
    static MarkovCarrySystem uniform(int k, int base);

    std::size_t states() const { return matrix_.rows(); }
    long alphabet() const { return alphabet_; }
    const Matrix& matrix() const { return matrix_; }
    Polynomial charpoly() const { return characteristic_polynomial(matrix_); }

private:
    Matrix matrix_;
    long alphabet_;
};

/// Raised when a classification hypothesis (simple spectrum) is violated.
class HypothesisViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integer chains: (N1, d1) == (N2, d2).
bool shadow_equivalent_binary(const BinaryChain& a, const BinaryChain& b);
/// Two-state stochastic chains: equal trace and determinant.
bool shadow_equivalent_binary(const MarkovCarrySystem& a, const MarkovCarrySystem& b);

/// Equal characteristic polynomials; both must have simple spectrum.
bool classify_general(const MarkovCarrySystem& a, const MarkovCarrySystem& b);

/// chi(1) == 0
bool stochasticity_check(const Matrix& m);
inline bool stochasticity_check(const MarkovCarrySystem& s) { return stochasticity_check(s.matrix()); }

/// Explicit similarity witness M with b = M a M^{-1} for 2x2 matrices with a
/// shared characteristic polynomial and rational distinct eigenvalues.
std::optional<Matrix> similarity_witness(const Matrix& a, const Matrix& b);

struct MultShadowWitness {
    /// encoding[a] = digit vector of residue a.
    std::vector<std::vector<int>> encoding;
    /// table[x * N + y] = g(x, y); -1 where no constraint defined it.
    std::vector<int> table;
};

inline constexpr long kMultShadowMaxModulus = 8;

/// Every bijection h: Z/N^L -> (Z/N)^L admitting a componentwise operation g
/// with h(ab)_i = g(h(a)_i, h(b)_i). Requires N^L <= 8.
std::vector<MultShadowWitness> mult_shadow_search(long base, long length);

}  // namespace carry
