#include "carry/eigensys.hpp"

#include <numeric>
#include <string>

#include "carry/combinatorics.hpp"
#include "carry/holte.hpp"

namespace carry {

namespace {

void require_index(int k, int j) {
    if (k < 2) throw std::domain_error("eigen system requires k >= 2");
    if (j < 0 || j >= k) throw std::domain_error("eigen index j must satisfy 0 <= j < k");
}

Rational sign_pow(int j) { return j % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

std::vector<Rational> EigenSystem::eigenvalues(int base) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) out.push_back(Rational(base).pow(-j));
    return out;
}

Rational normalization_constant(int k, int j) {
    require_index(k, j);
    return Rational(stirling_first_unsigned(k, k - j), factorial(k));
}

Rational normalization_constant_esym(int k, int j) {
    require_index(k, j);
    std::vector<long> values(static_cast<std::size_t>(k - 1));
    std::iota(values.begin(), values.end(), 1L);
    return Rational(elementary_symmetric(j, values), factorial(k));
}

Vector left_eigenvector(int k, int j) {
    require_index(k, j);
    const Polynomial gf = Polynomial({-1, 1}).pow(static_cast<unsigned>(j)) * eulerian_polynomial(k - j) *
                          (sign_pow(j) * normalization_constant(k, j));
    Vector u(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i)] = gf.coeff(static_cast<std::size_t>(i));
    return u;
}

Vector left_eigenvector_entrywise(int k, int j) {
    require_index(k, j);
    const Rational c = normalization_constant(k, j);
    Vector u(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        BigInt acc = 0;
        for (int m = 0; m <= j; ++m) {
            BigInt term = binomial(j, m) * eulerian(k - j, i - m);
            if (m % 2 == 0) acc += term;
            else acc -= term;
        }
        u[static_cast<std::size_t>(i)] = c * Rational(acc);
    }
    return u;
}

Vector right_eigenvector_at(int k, int j, int base) {
    require_index(k, j);
    const HolteSystem sys = build_holte(k, base);
    const Rational eigenvalue(ipow(BigInt(base), static_cast<unsigned long>(k - j)));
    const Matrix shifted = sys.count_matrix().transpose() - Matrix::identity(static_cast<std::size_t>(k)) * eigenvalue;
    auto basis = nullspace(shifted);
    if (basis.size() != 1)
        throw EigenIdentityError("eigenspace for j=" + std::to_string(j) + " has dimension " +
                                 std::to_string(basis.size()) + ", expected 1");
    Vector v = std::move(basis.front());
    if (v[0].is_zero()) throw EigenIdentityError("right eigenvector has v[0] = 0");
    const Rational inv = v[0].inverse();
    for (auto& x : v) x *= inv;
    return v;
}

Vector right_eigenvector(int k, int j, int witness_base) {
    if (witness_base < 2) throw std::domain_error("witness base must be >= 2");
    Vector v = right_eigenvector_at(k, j, witness_base);
    if (v != right_eigenvector_at(k, j, witness_base + 1))
        throw EigenIdentityError("right eigenvector differs between witness bases " + std::to_string(witness_base) +
                                 " and " + std::to_string(witness_base + 1));
    return v;
}

Polynomial quotient_polynomial(int k, int j, const Vector& right) {
    require_index(k, j);
    std::vector<Rational> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = Rational(binomial(k - 1, i)) * right.at(static_cast<std::size_t>(i));
    const Polynomial divisor = Polynomial({1, 1}).pow(static_cast<unsigned>(k - 1 - j));
    try {
        return divide_exact(Polynomial(std::move(c)), divisor);
    } catch (const InexactDivision& e) {
        throw EigenIdentityError(std::string("binomial-weighted right eigenvector not divisible: ") + e.what());
    }
}

Polynomial quotient_polynomial(int k, int j) { return quotient_polynomial(k, j, right_eigenvector(k, j)); }

Polynomial q2_closed_form(int k) {
    if (k < 4) throw std::domain_error("Q_2 closed form requires k >= 4");
    const Rational a(3L * k - 1);
    const Rational b(-2L * (3L * k - 5));
    return Polynomial({a, b, a}) * a.inverse();
}

Polynomial q3_closed_form(int k) {
    if (k < 5) throw std::domain_error("Q_3 closed form requires k >= 5");
    const Rational kk(k);
    const Polynomial quad({kk, Rational(-2L * (k - 4)), kk});
    return Polynomial({-1, 1}) * quad * (-kk.inverse());
}

EigenSystem build_eigensystem(int k, int witness_base) {
    if (k < 2) throw std::domain_error("eigen system requires k >= 2");
    EigenSystem sys;
    sys.k = k;
    for (int j = 0; j < k; ++j) {
        sys.left.push_back(left_eigenvector(k, j));
        if (sys.left.back() != left_eigenvector_entrywise(k, j))
            throw EigenIdentityError("left eigenvector product and entry-wise forms disagree at j=" + std::to_string(j));
        sys.right.push_back(right_eigenvector(k, j, witness_base));
        sys.constants.push_back(normalization_constant(k, j));
        sys.quotients.push_back(quotient_polynomial(k, j, sys.right.back()));
    }
    check_constant_routes(sys);
    return sys;
}

Matrix spectral_projector(const EigenSystem& sys, int j) {
    require_index(sys.k, j);
    return outer(sys.left[static_cast<std::size_t>(j)], sys.right[static_cast<std::size_t>(j)]);
}

Matrix spectral_projector(int k, int j, int witness_base) {
    return outer(left_eigenvector(k, j), right_eigenvector(k, j, witness_base));
}

bool verify_biorthogonality(const EigenSystem& sys) {
    for (int m = 0; m < sys.k; ++m)
        for (int j = 0; j < sys.k; ++j)
            if (dot(sys.left[static_cast<std::size_t>(m)], sys.right[static_cast<std::size_t>(j)]) !=
                Rational(m == j ? 1 : 0))
                return false;
    return true;
}

bool verify_biorthogonality(int k) { return verify_biorthogonality(build_eigensystem(k)); }

bool verify_projectors(const EigenSystem& sys, int base) {
    const auto n = static_cast<std::size_t>(sys.k);
    const Matrix t = build_holte(sys.k, base).prob_matrix();
    const auto eigenvalues = sys.eigenvalues(base);
    Matrix sum(n, n);
    Matrix recomposed(n, n);
    for (int j = 0; j < sys.k; ++j) {
        const Matrix e = spectral_projector(sys, j);
        if (e * e != e) return false;
        if (e(0, 0) != sys.constants[static_cast<std::size_t>(j)]) return false;
        sum += e;
        recomposed += e * eigenvalues[static_cast<std::size_t>(j)];
    }
    return sum == Matrix::identity(n) && recomposed == t;
}

bool verify_eigen_equations(const EigenSystem& sys, int base) {
    const Matrix t = build_holte(sys.k, base).prob_matrix();
    const auto eigenvalues = sys.eigenvalues(base);
    for (int j = 0; j < sys.k; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        Vector lhs_left = t * sys.left[jj];
        Vector lhs_right = left_multiply(sys.right[jj], t);
        for (std::size_t i = 0; i < lhs_left.size(); ++i) {
            if (lhs_left[i] != eigenvalues[jj] * sys.left[jj][i]) return false;
            if (lhs_right[i] != eigenvalues[jj] * sys.right[jj][i]) return false;
        }
    }
    return true;
}

bool verify_ckj_sum(int k) {
    Rational s;
    for (int j = 0; j < k; ++j) s += normalization_constant(k, j);
    return s == Rational(1);
}

bool verify_spectral_return_identity(int k, int base, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const BigInt m = ipow(BigInt(base), static_cast<unsigned long>(n));
        Rational lhs;
        for (int j = 0; j < k; ++j) lhs += normalization_constant(k, j) * Rational(m).pow(-j);
        const Rational rhs(binomial(m.get_si() + k - 1, k), ipow(m, static_cast<unsigned long>(k)));
        if (lhs != rhs) return false;
    }
    return true;
}

void check_constant_routes(const EigenSystem& sys) {
    for (int j = 0; j < sys.k; ++j) {
        const Rational& stirling = sys.constants[static_cast<std::size_t>(j)];
        const Rational esym = normalization_constant_esym(sys.k, j);
        const Rational projector = spectral_projector(sys, j)(0, 0);
        if (stirling != esym || stirling != projector)
            throw EigenIdentityError("c_{k,j} routes disagree at k=" + std::to_string(sys.k) +
                                     " j=" + std::to_string(j) + ": stirling " + stirling.str() + ", esym " +
                                     esym.str() + ", projector " + projector.str());
    }
}

}  // namespace carry
