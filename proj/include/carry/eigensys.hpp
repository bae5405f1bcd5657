#pragma once

#include <stdexcept>
#include <vector>

#include "carry/matrix.hpp"
#include "carry/polynomial.hpp"
#include "carry/rational.hpp"

namespace carry {

/// Raised when a closed-form eigen identity fails to hold exactly.
class EigenIdentityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Biorthogonal eigenvector system of the k-state carry chain. Left vectors
/// u_j, right vectors v_j (v_j[0] = 1) and quotient polynomials Q_j are all
/// independent of the base; only the eigenvalues N^{-j} depend on it.
struct EigenSystem {
    int k = 0;
    std::vector<Vector> left;
    std::vector<Vector> right;
    /// c_{k,j} = |s(k, k-j)| / k!  (E_j[0,0])
    std::vector<Rational> constants;
    std::vector<Polynomial> quotients;

    /// 1, N^{-1}, ..., N^{-(k-1)}
    std::vector<Rational> eigenvalues(int base) const;
};

/// Normalisation constant |s(k, k-j)| / k!.
Rational normalization_constant(int k, int j);
/// Same constant via e_j(1, ..., k-1) / k!.
Rational normalization_constant_esym(int k, int j);

/// Coefficients of (-1)^j |s(k,k-j)|/k! (x-1)^j A_{k-j}(x), padded to length k.
Vector left_eigenvector(int k, int j);
/// Entry-wise backward-difference form of the same vector.
Vector left_eigenvector_entrywise(int k, int j);

inline constexpr int kDefaultWitnessBase = 2;

/// Exact nullspace vector of T_count - N^{k-j} I at the witness base,
/// normalised to v[0] = 1, and confirmed identical at witness_base + 1.
Vector right_eigenvector(int k, int j, int witness_base = kDefaultWitnessBase);

/// Single-base computation without the second-witness confirmation.
Vector right_eigenvector_at(int k, int j, int base);

/// (sum_i C(k-1,i) v_j[i] x^i) / (1+x)^{k-1-j}
Polynomial quotient_polynomial(int k, int j);
Polynomial quotient_polynomial(int k, int j, const Vector& right);

/// ((3k-1)(1+x^2) - 2(3k-5)x) / (3k-1); k >= 4.
Polynomial q2_closed_form(int k);
/// -(x-1)(k x^2 - 2(k-4)x + k) / k; k >= 5.
Polynomial q3_closed_form(int k);

EigenSystem build_eigensystem(int k, int witness_base = kDefaultWitnessBase);

/// E_j = u_j v_j^T (T is column-stochastic, so T u_j = lambda_j u_j and v_j^T T = lambda_j v_j^T).
Matrix spectral_projector(const EigenSystem& sys, int j);
Matrix spectral_projector(int k, int j, int witness_base = kDefaultWitnessBase);

/// u_m . v_j == delta_{mj} for all m, j.
bool verify_biorthogonality(const EigenSystem& sys);
bool verify_biorthogonality(int k);

/// E_j^2 = E_j, sum E_j = I, T = sum N^{-j} E_j, E_j[0,0] = c_{k,j}.
bool verify_projectors(const EigenSystem& sys, int base);

/// u_j^T T = N^{-j} u_j^T and T v_j = N^{-j} v_j at the given base.
bool verify_eigen_equations(const EigenSystem& sys, int base);

/// sum_j |s(k,k-j)| / k! == 1
bool verify_ckj_sum(int k);

/// sum_j c_{k,j} M^{-j} == C(M+k-1, k) / M^k for M = N^n, 1 <= n <= n_max.
bool verify_spectral_return_identity(int k, int base, int n_max);

/// c_{k,j} from Stirling, elementary-symmetric and projector routes agree;
/// throws EigenIdentityError otherwise.
void check_constant_routes(const EigenSystem& sys);

}  // namespace carry
