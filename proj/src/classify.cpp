#include "carry/classify.hpp"

#include <algorithm>
#include <numeric>

#include "carry/holte.hpp"

namespace carry {

std::string to_string(ModuliStatus status) {
    switch (status) {
        case ModuliStatus::Achievable: return "Achievable";
        case ModuliStatus::AMGMOnlyExcluded: return "AMGMOnlyExcluded";
        case ModuliStatus::BelowAMGM: return "BelowAMGM";
    }
    return "BelowAMGM";
}

long sigma(long det) {
    if (det < 1) throw std::domain_error("sigma requires d >= 1");
    long best = det + 1;
    for (long q = 1; q * q <= det; ++q)
        if (det % q == 0) best = std::min(best, q + det / q);
    return best;
}

std::optional<std::pair<long, long>> achievable_witness(long base, long det) {
    if (det == 0) return std::pair<long, long>{0, 0};
    for (long g = 1; g <= base; ++g) {
        if (det % g != 0) continue;
        const long t = det / g;
        if (g + t <= base) return std::pair<long, long>{g, t};
    }
    return std::nullopt;
}

ModuliPoint classify_point(long base, long det) {
    ModuliPoint p{base, det, ModuliStatus::BelowAMGM, achievable_witness(base, det)};
    if (p.witness) p.status = ModuliStatus::Achievable;
    else if (base * base >= 4 * det) p.status = ModuliStatus::AMGMOnlyExcluded;
    return p;
}

std::vector<ModuliPoint> moduli_space(long base_max, long det_max) {
    if (base_max < 1 || det_max < 1) throw std::domain_error("moduli bounds must be >= 1");
    std::vector<ModuliPoint> out;
    for (long n = 1; n <= base_max; ++n)
        for (long d = 0; d <= det_max; ++d) out.push_back(classify_point(n, d));
    return out;
}

MarkovCarrySystem::MarkovCarrySystem(Matrix matrix, long alphabet) : matrix_(std::move(matrix)), alphabet_(alphabet) {
    if (!matrix_.is_square() || matrix_.rows() == 0) throw std::invalid_argument("carry system matrix must be square");
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
        Rational sum;
        for (std::size_t r = 0; r < matrix_.rows(); ++r) {
            const Rational& x = matrix_(r, c);
            if (x.sign() < 0 || x > Rational(1)) throw std::invalid_argument("transition probability outside [0, 1]");
            sum += x;
        }
        if (sum != Rational(1)) throw std::invalid_argument("carry system columns must sum to 1");
    }
}

MarkovCarrySystem MarkovCarrySystem::gen_prop_kill(const Rational& gen, const Rational& prop, const Rational& kill,
                                                   long alphabet) {
    // Incoming carry 0 stays on KILL/PROP, moves on GEN; incoming 1 drops on KILL.
    return MarkovCarrySystem(Matrix::from_rows({{kill + prop, kill}, {gen, gen + prop}}), alphabet);
}

MarkovCarrySystem MarkovCarrySystem::uniform(int k, int base) {
    return MarkovCarrySystem(build_holte(k, base).prob_matrix(), base);
}

bool shadow_equivalent_binary(const BinaryChain& a, const BinaryChain& b) {
    return a.base == b.base && a.prop * a.gen == b.prop * b.gen;
}

bool shadow_equivalent_binary(const MarkovCarrySystem& a, const MarkovCarrySystem& b) {
    if (a.states() != 2 || b.states() != 2) throw std::invalid_argument("binary classification requires 2 states");
    return a.matrix().trace() == b.matrix().trace() && determinant(a.matrix()) == determinant(b.matrix());
}

bool classify_general(const MarkovCarrySystem& a, const MarkovCarrySystem& b) {
    const Polynomial ca = a.charpoly();
    const Polynomial cb = b.charpoly();
    if (!is_squarefree(ca) || !is_squarefree(cb))
        throw HypothesisViolated("classification requires simple spectrum (gcd(chi, chi') constant)");
    return ca == cb;
}

bool stochasticity_check(const Matrix& m) { return characteristic_polynomial(m).eval(1).is_zero(); }

namespace {

// Eigenvector of a 2x2 matrix for the eigenvalue lambda.
Vector eigenvector2(const Matrix& m, const Rational& lambda) {
    Matrix shifted = m - Matrix::identity(2) * lambda;
    auto basis = nullspace(shifted);
    return basis.front();
}

Matrix columns(const Vector& a, const Vector& b) { return Matrix::from_rows({{a[0], b[0]}, {a[1], b[1]}}); }

Matrix inverse2(const Matrix& m) {
    const Rational det = determinant(m);
    return Matrix::from_rows({{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}}) * det.inverse();
}

}  // namespace

std::optional<Matrix> similarity_witness(const Matrix& a, const Matrix& b) {
    if (a.rows() != 2 || b.rows() != 2 || !a.is_square() || !b.is_square())
        throw std::invalid_argument("similarity witness implemented for 2x2 matrices");
    const Polynomial chi = characteristic_polynomial(a);
    if (chi != characteristic_polynomial(b)) return std::nullopt;
    const auto roots = rational_roots(chi);
    if (roots.size() != 2 || roots[0] == roots[1]) return std::nullopt;
    const Matrix pa = columns(eigenvector2(a, roots[0]), eigenvector2(a, roots[1]));
    const Matrix pb = columns(eigenvector2(b, roots[0]), eigenvector2(b, roots[1]));
    return pb * inverse2(pa);
}

std::vector<MultShadowWitness> mult_shadow_search(long base, long length) {
    if (base < 2 || length < 1) throw std::domain_error("mult_shadow_search requires N >= 2, L >= 1");
    long modulus = 1;
    for (long i = 0; i < length; ++i) {
        modulus *= base;
        if (modulus > kMultShadowMaxModulus) throw BudgetExceeded("N^L exceeds the bijection-search limit of 8");
    }
    const auto m = static_cast<std::size_t>(modulus);
    const auto len = static_cast<std::size_t>(length);
    const auto n = static_cast<std::size_t>(base);

    // code_digits[x] = base-N digit vector of code word x.
    std::vector<std::vector<int>> code_digits(m, std::vector<int>(len));
    for (std::size_t x = 0; x < m; ++x) {
        std::size_t v = x;
        for (std::size_t i = 0; i < len; ++i) {
            code_digits[x][i] = static_cast<int>(v % n);
            v /= n;
        }
    }

    std::vector<MultShadowWitness> witnesses;
    std::vector<std::size_t> perm(m);  // perm[a] = code word of residue a
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> table(n * n, -1);
        bool consistent = true;
        for (std::size_t a = 0; a < m && consistent; ++a) {
            for (std::size_t b = 0; b < m && consistent; ++b) {
                const auto& ha = code_digits[perm[a]];
                const auto& hb = code_digits[perm[b]];
                const auto& hab = code_digits[perm[(a * b) % m]];
                for (std::size_t i = 0; i < len; ++i) {
                    int& cell = table[static_cast<std::size_t>(ha[i]) * n + static_cast<std::size_t>(hb[i])];
                    if (cell == -1) cell = hab[i];
                    else if (cell != hab[i]) {
                        consistent = false;
                        break;
                    }
                }
            }
        }
        if (consistent) {
            MultShadowWitness w;
            for (std::size_t a = 0; a < m; ++a) w.encoding.push_back(code_digits[perm[a]]);
            w.table = std::move(table);
            witnesses.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return witnesses;
}

}  // namespace carry
