#include "carry/holte.hpp"

#include <algorithm>
#include <numeric>

#include "carry/combinatorics.hpp"

namespace carry {

BigInt DigitSumProfile::at(long s) const {
    if (s < 0 || s >= static_cast<long>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(s)];
}

BigInt DigitSumProfile::total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

bool DigitSumProfile::is_symmetric() const {
    return std::equal(counts.begin(), counts.end(), counts.rbegin());
}

bool DigitSumProfile::is_log_concave() const {
    for (std::size_t s = 1; s + 1 < counts.size(); ++s)
        if (counts[s] * counts[s] < counts[s - 1] * counts[s + 1]) return false;
    return true;
}

DigitSumProfile digit_sum_counts(int k, int base) {
    if (k < 1) throw std::domain_error("digit_sum_counts requires k >= 1");
    if (base < 2) throw std::domain_error("digit_sum_counts requires N >= 2");
    std::vector<BigInt> cur{BigInt(1)};
    for (int step = 0; step < k; ++step) {
        std::vector<BigInt> next(cur.size() + static_cast<std::size_t>(base) - 1, BigInt(0));
        for (std::size_t s = 0; s < cur.size(); ++s)
            for (int d = 0; d < base; ++d) next[s + static_cast<std::size_t>(d)] += cur[s];
        cur = std::move(next);
    }
    return {k, base, std::move(cur)};
}

HolteSystem::HolteSystem(int k, int base, Matrix count_matrix)
    : k_(k), base_(base), count_(std::move(count_matrix)) {
    if (count_.rows() != static_cast<std::size_t>(k) || !count_.is_square())
        throw std::invalid_argument("count matrix must be k x k");
    const Rational s(scale());
    for (std::size_t c = 0; c < count_.cols(); ++c) {
        Rational col_sum;
        for (std::size_t r = 0; r < count_.rows(); ++r) {
            if (!count_(r, c).is_integer() || count_(r, c).sign() < 0)
                throw std::invalid_argument("count matrix entries must be nonnegative integers");
            col_sum += count_(r, c);
        }
        if (col_sum != s) throw std::invalid_argument("count matrix columns must sum to N^k");
    }
    prob_ = count_ * s.inverse();
}

BigInt HolteSystem::scale() const { return ipow(BigInt(base_), static_cast<unsigned long>(k_)); }

HolteSystem build_holte(int k, int base) {
    if (k < 2) throw std::domain_error("build_holte requires k >= 2");
    if (base < 2) throw std::domain_error("build_holte requires N >= 2");
    const auto profile = digit_sum_counts(k, base);
    Matrix count(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        for (int cp = 0; cp < k; ++cp) {
            BigInt total = 0;
            for (long s = static_cast<long>(cp) * base - c; s <= static_cast<long>(cp + 1) * base - c - 1; ++s)
                total += profile.at(s);
            count(static_cast<std::size_t>(cp), static_cast<std::size_t>(c)) = Rational(total);
        }
    }
    return HolteSystem(k, base, std::move(count));
}

Matrix count_matrix_brute_force(int k, int base, std::uint64_t budget) {
    if (k < 2 || base < 2) throw std::domain_error("count_matrix_brute_force requires k >= 2, N >= 2");
    std::uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) {
        tuples *= static_cast<std::uint64_t>(base);
        if (tuples > budget) throw BudgetExceeded("N^k exceeds the brute-force count budget");
    }
    const auto n = static_cast<std::size_t>(k);
    std::vector<BigInt> counts(n * n, BigInt(0));
    std::vector<int> digits(n, 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        int sum = 0;
        for (int d : digits) sum += d;
        for (int c = 0; c < k; ++c) ++counts[static_cast<std::size_t>((sum + c) / base) * n + static_cast<std::size_t>(c)];
        for (auto& d : digits) {
            if (++d < base) break;
            d = 0;
        }
    }
    std::vector<Rational> entries(counts.begin(), counts.end());
    return Matrix(n, n, std::move(entries));
}

Vector stationary_distribution(int k) {
    if (k < 2) throw std::domain_error("stationary_distribution requires k >= 2");
    const BigInt kf = factorial(k);
    Vector pi;
    pi.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pi.emplace_back(eulerian(k, i), kf);
    return pi;
}

bool check_centrosymmetry(const Matrix& m) {
    if (!m.is_square()) return false;
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (m(r, c) != m(n - 1 - r, n - 1 - c)) return false;
    return true;
}

bool verify_return_count(const HolteSystem& sys, int n_max) {
    if (n_max < 1) throw std::domain_error("verify_return_count requires n_max >= 1");
    Matrix power = Matrix::identity(static_cast<std::size_t>(sys.k()));
    for (int n = 1; n <= n_max; ++n) {
        power = power * sys.count_matrix();
        const BigInt m = ipow(BigInt(sys.base()), static_cast<unsigned long>(n));
        const BigInt expected = binomial(m.get_si() + sys.k() - 1, sys.k());
        if (power(0, 0) != Rational(expected)) return false;
    }
    return true;
}

namespace {

void require_minor_dimension(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minor check requires a square matrix");
    if (m.rows() > kMaxMinorDimension)
        throw DimensionTooLarge("exhaustive minor check limited to dimension " + std::to_string(kMaxMinorDimension));
}

// All size-r subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

bool is_totally_nonnegative(const Matrix& m) {
    require_minor_dimension(m);
    const std::size_t n = m.rows();
    for (std::size_t r = 1; r <= n; ++r) {
        const auto sets = subsets(n, r);
        for (const auto& rows : sets)
            for (const auto& cols : sets)
                if (determinant(m.submatrix(rows, cols)).sign() < 0) return false;
    }
    return true;
}

bool is_oscillatory(const Matrix& m) {
    if (!is_totally_nonnegative(m)) return false;
    if (determinant(m).is_zero()) return false;
    // Positivity of powers of a nonnegative matrix depends only on its zero pattern.
    const std::size_t n = m.rows();
    std::vector<bool> base(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) base[i * n + j] = m(i, j).sign() > 0;
    std::vector<bool> power = base;
    for (std::size_t p = 1; p <= n * n; ++p) {
        if (std::all_of(power.begin(), power.end(), [](bool b) { return b; })) return true;
        std::vector<bool> next(n * n, false);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (power[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (base[k * n + j]) next[i * n + j] = true;
        power = std::move(next);
    }
    return false;
}

std::vector<ReversibilityDefect> reversibility_defect(const HolteSystem& sys) {
    const Vector pi = stationary_distribution(sys.k());
    const Matrix& t = sys.prob_matrix();
    std::vector<ReversibilityDefect> out;
    for (std::size_t c = 0; c < pi.size(); ++c) {
        for (std::size_t cp = c + 1; cp < pi.size(); ++cp) {
            Rational forward = pi[c] * t(cp, c);
            Rational backward = pi[cp] * t(c, cp);
            if (forward != backward) out.push_back({c, cp, std::move(forward), std::move(backward)});
        }
    }
    return out;
}

bool verify_uniform_residue(int k, int base, int carry_in, std::uint64_t budget) {
    if (k < 1 || base < 2) throw std::domain_error("verify_uniform_residue requires k >= 1, N >= 2");
    std::uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) {
        tuples *= static_cast<std::uint64_t>(base);
        if (tuples > budget) throw BudgetExceeded("N^k exceeds the uniform-residue enumeration budget");
    }
    std::vector<std::uint64_t> hits(static_cast<std::size_t>(base), 0);
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        long sum = carry_in;
        for (int d : digits) sum += d;
        ++hits[static_cast<std::size_t>(((sum % base) + base) % base)];
        for (auto& d : digits) {
            if (++d < base) break;
            d = 0;
        }
    }
    const std::uint64_t expected = tuples / static_cast<std::uint64_t>(base);
    return std::all_of(hits.begin(), hits.end(), [&](std::uint64_t h) { return h == expected; });
}

bool interlacing_certificate(const HolteSystem& sys) {
    const int k = sys.k();
    std::vector<std::size_t> keep(static_cast<std::size_t>(k - 1));
    std::iota(keep.begin(), keep.end(), 0);
    const Polynomial chi = characteristic_polynomial(sys.count_matrix().principal_submatrix(keep));
    int prev_sign = 0;
    for (int j = 0; j < k; ++j) {
        const Rational node(ipow(BigInt(sys.base()), static_cast<unsigned long>(k - j)));
        const int s = chi.eval(node).sign();
        if (s == 0 || s == prev_sign) return false;
        prev_sign = s;
    }
    return true;
}

}  // namespace carry
