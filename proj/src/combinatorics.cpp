#include "carry/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace carry {

namespace {

// Rows of a triangular recurrence, memoized per n; shared across threads.
class TriangleCache {
public:
    using RowFn = std::vector<BigInt> (*)(const std::vector<BigInt>& prev, long n);

    TriangleCache(std::vector<BigInt> first_row, long first_n, RowFn next)
        : next_(next), first_n_(first_n) {
        rows_.push_back(std::move(first_row));
    }

    std::vector<BigInt> row(long n) {
        std::lock_guard lock(mutex_);
        while (static_cast<long>(rows_.size()) + first_n_ <= n) {
            const long next_n = static_cast<long>(rows_.size()) + first_n_;
            rows_.push_back(next_(rows_.back(), next_n));
        }
        return rows_[static_cast<std::size_t>(n - first_n_)];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
    RowFn next_;
    long first_n_;
};

// A(n, i) = (i + 1) A(n-1, i) + (n - i) A(n-1, i-1)
std::vector<BigInt> next_eulerian_row(const std::vector<BigInt>& prev, long n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        BigInt v = 0;
        if (i < n - 1) v += (i + 1) * prev[static_cast<std::size_t>(i)];
        if (i >= 1) v += (n - i) * prev[static_cast<std::size_t>(i - 1)];
        row[static_cast<std::size_t>(i)] = v;
    }
    return row;
}

// |s(n, m)| = |s(n-1, m-1)| + (n-1) |s(n-1, m)|
std::vector<BigInt> next_stirling_row(const std::vector<BigInt>& prev, long n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n + 1));
    for (long m = 0; m <= n; ++m) {
        BigInt v = 0;
        if (m >= 1) v += prev[static_cast<std::size_t>(m - 1)];
        if (m <= n - 1) v += (n - 1) * prev[static_cast<std::size_t>(m)];
        row[static_cast<std::size_t>(m)] = v;
    }
    return row;
}

TriangleCache& eulerian_cache() {
    static TriangleCache cache({BigInt(1)}, 1, &next_eulerian_row);
    return cache;
}

TriangleCache& stirling_cache() {
    static TriangleCache cache({BigInt(1)}, 0, &next_stirling_row);
    return cache;
}

}  // namespace

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial with negative n");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt eulerian(long n, long i) {
    if (n < 1) throw std::domain_error("eulerian requires n >= 1");
    if (i < 0 || i >= n) return 0;
    return eulerian_cache().row(n)[static_cast<std::size_t>(i)];
}

BigInt eulerian_explicit(long n, long i) {
    if (n < 1) throw std::domain_error("eulerian requires n >= 1");
    if (i < 0 || i >= n) return 0;
    // A(n, i) = sum_{m=0}^{i+1} (-1)^m C(n+1, m) (i + 1 - m)^n
    BigInt acc = 0;
    for (long m = 0; m <= i + 1; ++m) {
        BigInt term = binomial(n + 1, m) * ipow(BigInt(i + 1 - m), static_cast<unsigned long>(n));
        if (m % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

Polynomial eulerian_polynomial(long n) {
    const auto row = eulerian_cache().row(n);
    std::vector<Rational> c;
    c.reserve(row.size());
    for (const auto& v : row) c.emplace_back(v);
    return Polynomial(std::move(c));
}

BigInt stirling_first_unsigned(long n, long m) {
    if (n < 0) throw std::domain_error("stirling requires n >= 0");
    if (m < 0 || m > n) return 0;
    return stirling_cache().row(n)[static_cast<std::size_t>(m)];
}

BigInt elementary_symmetric(long j, std::span<const long> values) {
    if (j < 0 || j > static_cast<long>(values.size()))
        throw std::domain_error("elementary_symmetric index out of range");
    // e[m] after processing a prefix; classic DP over prod (1 + v t).
    std::vector<BigInt> e(static_cast<std::size_t>(j) + 1, BigInt(0));
    e[0] = 1;
    for (long v : values) {
        for (long m = j; m >= 1; --m) e[static_cast<std::size_t>(m)] += v * e[static_cast<std::size_t>(m - 1)];
    }
    return e[static_cast<std::size_t>(j)];
}

Rational scaled_chebyshev(long length, const Rational& tau, const Rational& delta) {
    if (length < 0) throw std::domain_error("scaled_chebyshev requires L >= 0");
    Rational prev2 = 1;
    if (length == 0) return prev2;
    Rational prev1 = tau;
    for (long l = 2; l <= length; ++l) {
        Rational next = tau * prev1 - delta * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

BigInt fibonacci(long n) {
    if (n < 0) throw std::domain_error("fibonacci requires n >= 0");
    BigInt a = 0;
    BigInt b = 1;
    for (long i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

bool verify_worpitzky(long k, long n_max, std::span<const BigInt> weights) {
    if (k < 1) throw std::domain_error("worpitzky requires k >= 1");
    for (long n = 0; n <= n_max; ++n) {
        BigInt rhs = 0;
        for (std::size_t c = 0; c < weights.size(); ++c) {
            const long top = n + k - 1 - static_cast<long>(c);
            if (top < 0) continue;
            rhs += weights[c] * binomial(top, k);
        }
        if (rhs != ipow(BigInt(n), static_cast<unsigned long>(k))) return false;
    }
    return true;
}

bool verify_worpitzky(long k, long n_max) {
    if (k < 1) throw std::domain_error("worpitzky requires k >= 1");
    const auto row = eulerian_cache().row(k);
    return verify_worpitzky(k, n_max, row);
}

}  // namespace carry
