#include "carry/cascade.hpp"

#include <algorithm>
#include <functional>

#include "carry/combinatorics.hpp"

namespace carry {

BinaryChain BinaryChain::make(long base, long gen, long prop, long kill) {
    if (gen < 0 || prop < 0 || kill < 0) throw std::invalid_argument("binary chain class sizes must be >= 0");
    if (gen + prop + kill != base) throw std::invalid_argument("binary chain requires g + t + r = N");
    return {base, gen, prop, kill};
}

Matrix BinaryChain::transfer() const {
    return Matrix::from_rows({{Rational(kill + prop), Rational(gen)}, {Rational(kill), Rational(gen)}});
}

CascadeSpec restrict(const Matrix& count_matrix, std::vector<std::size_t> forbidden) {
    if (!count_matrix.is_square()) throw std::invalid_argument("restrict requires a square matrix");
    const std::size_t n = count_matrix.rows();
    std::sort(forbidden.begin(), forbidden.end());
    forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
    if (forbidden.empty()) throw std::invalid_argument("forbidden set must be nonempty");
    if (forbidden.back() >= n) throw std::invalid_argument("forbidden state out of range");
    if (forbidden.size() >= n) throw std::invalid_argument("forbidden set must be a proper subset");
    if (forbidden.front() == 0) throw std::invalid_argument("state 0 is the start state and cannot be forbidden");

    CascadeSpec spec;
    spec.states = n;
    spec.forbidden = forbidden;
    for (std::size_t s = 0; s < n; ++s)
        if (!std::binary_search(forbidden.begin(), forbidden.end(), s)) spec.kept.push_back(s);
    spec.restricted = count_matrix.principal_submatrix(spec.kept);
    const bool top = forbidden == std::vector<std::size_t>{n - 1};
    const bool top_two = n >= 3 && forbidden == std::vector<std::size_t>{n - 2, n - 1};
    spec.table_coverage = top || top_two;
    return spec;
}

CascadeSpec restrict(const HolteSystem& sys, std::vector<std::size_t> forbidden) {
    return restrict(sys.count_matrix(), std::move(forbidden));
}

CascadeSpec restrict(const BinaryChain& chain) {
    CascadeSpec spec;
    spec.states = 2;
    spec.kept = {0, 1};
    spec.restricted = chain.transfer();
    spec.table_coverage = true;
    return spec;
}

std::vector<BigInt> avoidance_sequence(const CascadeSpec& spec, long max_length) {
    if (max_length < 0) throw std::domain_error("sequence length must be >= 0");
    const std::size_t d = spec.dimension();
    Vector state(d);
    state[0] = 1;
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_length) + 1);
    for (long l = 0; l <= max_length; ++l) {
        if (l > 0) state = spec.restricted * state;
        Rational total;
        for (const auto& x : state) total += x;
        out.push_back(total.to_integer());
    }
    return out;
}

BigInt avoidance_count(const CascadeSpec& spec, long length) {
    if (length < 0) throw std::domain_error("sequence length must be >= 0");
    const Matrix power = spec.restricted.pow(static_cast<unsigned long>(length));
    Rational total;
    for (std::size_t r = 0; r < power.rows(); ++r) total += power(r, 0);
    return total.to_integer();
}

BigInt avoidance_brute_force(int k, int base, const std::vector<std::size_t>& forbidden, long length,
                             std::uint64_t budget) {
    if (k < 1 || base < 2 || length < 0) throw std::domain_error("invalid brute-force parameters");
    std::uint64_t leaves = 1;
    for (long i = 0; i < static_cast<long>(k) * length; ++i) {
        leaves *= static_cast<std::uint64_t>(base);
        if (leaves > budget) throw BudgetExceeded("N^(kL) exceeds the brute-force budget");
    }
    std::vector<bool> is_forbidden(static_cast<std::size_t>(k), false);
    for (auto f : forbidden) {
        if (f >= static_cast<std::size_t>(k)) throw std::invalid_argument("forbidden state out of range");
        is_forbidden[f] = true;
    }
    if (is_forbidden[0]) return 0;

    // All digit sums of one position, one entry per k-tuple.
    std::vector<int> tuple_sums;
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    while (true) {
        int s = 0;
        for (int d : digits) s += d;
        tuple_sums.push_back(s);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == base) digits[i++] = 0;
        if (i == digits.size()) break;
    }

    std::function<BigInt(long, int)> walk = [&](long remaining, int carry) -> BigInt {
        if (remaining == 0) return 1;
        BigInt total = 0;
        for (int s : tuple_sums) {
            const int next = (s + carry) / base;
            if (is_forbidden[static_cast<std::size_t>(next)]) continue;
            total += walk(remaining - 1, next);
        }
        return total;
    };
    return walk(length, 0);
}

std::vector<Rational> recurrence_coefficients(const CascadeSpec& spec) {
    const Polynomial chi = characteristic_polynomial(spec.restricted);
    const int d = chi.degree();
    std::vector<Rational> r(static_cast<std::size_t>(d));
    // chi = lambda^d + c_{d-1} lambda^{d-1} + ... + c_0  =>  r_i = -c_{d-i}
    for (int i = 1; i <= d; ++i) r[static_cast<std::size_t>(i - 1)] = -chi.coeff(static_cast<std::size_t>(d - i));
    return r;
}

std::vector<BigInt> extend_by_recurrence(std::vector<BigInt> initial, const std::vector<Rational>& coefficients,
                                         long max_length) {
    const std::size_t d = coefficients.size();
    if (initial.size() < d) throw std::invalid_argument("need at least d initial terms");
    while (static_cast<long>(initial.size()) <= max_length) {
        Rational next;
        const std::size_t l = initial.size();
        for (std::size_t i = 1; i <= d; ++i) next += coefficients[i - 1] * Rational(initial[l - i]);
        initial.push_back(next.to_integer());
    }
    initial.resize(static_cast<std::size_t>(std::max(max_length + 1, 0L)));
    return initial;
}

bool verify_recurrence(const CascadeSpec& spec, long max_length) {
    const auto coeffs = recurrence_coefficients(spec);
    const auto d = static_cast<long>(coeffs.size());
    if (max_length < d) throw std::domain_error("verify_recurrence requires L_max >= d");
    const auto a = avoidance_sequence(spec, max_length);
    for (long l = d; l <= max_length; ++l) {
        Rational rhs;
        for (long i = 1; i <= d; ++i)
            rhs += coeffs[static_cast<std::size_t>(i - 1)] * Rational(a[static_cast<std::size_t>(l - i)]);
        if (rhs != Rational(a[static_cast<std::size_t>(l)])) return false;
    }
    return true;
}

namespace {

void require_two_states(const CascadeSpec& spec) {
    if (spec.dimension() != 2) throw std::invalid_argument("Chebyshev check requires a 2x2 restricted matrix");
}

}  // namespace

bool chebyshev_check(const CascadeSpec& spec, long max_length) {
    require_two_states(spec);
    const Rational tau = spec.restricted.trace();
    const Rational delta = determinant(spec.restricted);
    const auto a = avoidance_sequence(spec, max_length);
    for (long l = 0; l <= max_length; ++l)
        if (Rational(a[static_cast<std::size_t>(l)]) != scaled_chebyshev(l, tau, delta)) return false;
    return true;
}

bool chebyshev_check_shifted(const CascadeSpec& spec, long max_length) {
    require_two_states(spec);
    const Rational tau = spec.restricted.trace();
    const Rational delta = determinant(spec.restricted);
    const auto a = avoidance_sequence(spec, std::max(max_length, 1L));
    const Rational offset = Rational(a[1]) - tau;
    for (long l = 0; l <= max_length; ++l) {
        Rational expected = scaled_chebyshev(l, tau, delta);
        if (l >= 1) expected += offset * scaled_chebyshev(l - 1, tau, delta);
        if (Rational(a[static_cast<std::size_t>(l)]) != expected) return false;
    }
    return true;
}

Polynomial stirling_lagrange_from_weights(int k, int base, const std::vector<BigInt>& weights) {
    if (k < 2) throw std::domain_error("Stirling–Lagrange formula requires k >= 2");
    if (weights.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("need k weights");
    std::vector<Rational> nodes;
    for (int i = 0; i < k; ++i) nodes.emplace_back(ipow(BigInt(base), static_cast<unsigned long>(k - i)));
    Polynomial acc;
    for (int j = 0; j < k; ++j) {
        Polynomial term = Polynomial::constant(Rational(weights[static_cast<std::size_t>(j)]));
        for (int i = 0; i < k; ++i)
            if (i != j) term *= Polynomial::linear_root(nodes[static_cast<std::size_t>(i)]);
        acc += term;
    }
    return acc * Rational(factorial(k)).inverse();
}

Polynomial stirling_lagrange_charpoly(int k, int base) {
    std::vector<BigInt> weights;
    for (int j = 0; j < k; ++j) weights.push_back(stirling_first_unsigned(k, k - j));
    return stirling_lagrange_from_weights(k, base, weights);
}

Rational det_restricted_formula(int k, int base) {
    if (k < 2) throw std::domain_error("determinant formula requires k >= 2");
    BigInt prod = ipow(BigInt(base), static_cast<unsigned long>(k * (k - 1) / 2));
    for (long i = 1; i <= k - 1; ++i) prod *= i * base + 1;
    return Rational(prod, factorial(k));
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Geometric: return "Geometric";
        case VerdictKind::Chebyshev: return "Chebyshev";
        case VerdictKind::NoChebyshev: return "NoChebyshev";
        case VerdictKind::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

namespace {

std::vector<std::vector<Polynomial>> identity_minus_z(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial>> out(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = Polynomial({Rational(i == j ? 1 : 0), -m(i, j)});
    return out;
}

}  // namespace

Polynomial transfer_denominator(const Matrix& restricted) { return determinant(identity_minus_z(restricted)); }

Polynomial transfer_numerator(const Matrix& restricted) {
    const auto a = identity_minus_z(restricted);
    const std::size_t n = a.size();
    if (n == 1) return Polynomial::constant(1);
    // sum_i adj[i][0] = sum_i (-1)^i det(A without row 0, column i)
    Polynomial acc;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != i) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = determinant(minor);
        if (i % 2 == 0) acc += cof;
        else acc -= cof;
    }
    return acc;
}

ThresholdVerdict threshold_classify(const CascadeSpec& spec) {
    ThresholdVerdict v;
    v.dimension = spec.dimension();
    v.table_coverage = spec.table_coverage;
    v.charpoly = characteristic_polynomial(spec.restricted);
    v.tau = spec.restricted.trace();
    if (!spec.table_coverage) v.notes.emplace_back("forbidden set outside the {k-1} / {k-2,k-1} coverage");

    if (v.dimension == 1) {
        v.kind = VerdictKind::Geometric;
        v.delta = 0;
        if (spec.states == 2) {
            v.notes.emplace_back(
                "two-summand restriction: tau taken from the count matrix (N(N+1)/2), "
                "not the per-digit N of the geometric statement");
        }
        return v;
    }
    if (v.dimension == 2) {
        v.kind = VerdictKind::Chebyshev;
        v.delta = determinant(spec.restricted);
        return v;
    }

    v.denominator = transfer_denominator(spec.restricted);
    v.numerator = transfer_numerator(spec.restricted);
    v.gcd_chi_derivative = gcd(v.charpoly, v.charpoly.derivative());
    v.gcd_numerator_denominator = gcd(v.numerator, v.denominator);
    v.h1 = v.gcd_chi_derivative.is_constant();
    v.h2 = v.gcd_numerator_denominator.is_constant();
    v.reduced_denominator_degree = v.denominator.degree() - v.gcd_numerator_denominator.degree();
    if (!v.h1 || !v.h2) {
        v.kind = VerdictKind::Undetermined;
        v.notes.emplace_back(!v.h1 ? "H1 (simple eigenvalues) fails: gcd(chi, chi') = " + v.gcd_chi_derivative.str("z")
                                   : "H2 (non-vanishing residues) fails: gcd(P, Q) = " +
                                         v.gcd_numerator_denominator.str("z"));
        return v;
    }
    v.kind = v.reduced_denominator_degree >= 3 ? VerdictKind::NoChebyshev : VerdictKind::Undetermined;
    return v;
}

std::string to_string(DispersionRegime regime) {
    switch (regime) {
        case DispersionRegime::Underdispersed: return "underdispersed";
        case DispersionRegime::Poisson: return "Poisson";
        case DispersionRegime::Overdispersed: return "overdispersed";
    }
    return "Poisson";
}

Dispersion dispersion_index(const BinaryChain& chain) {
    if (chain.gen + chain.kill == 0) throw std::domain_error("dispersion index undefined for g + r = 0");
    if (chain.prop == chain.base) throw std::domain_error("dispersion index undefined for t = N");
    const Rational pi0(chain.kill, chain.gen + chain.kill);
    const Rational mu(chain.prop, chain.base);
    Dispersion out;
    out.index = pi0 * (Rational(1) + mu) / (Rational(1) - mu);
    out.regime = out.index < Rational(1)   ? DispersionRegime::Underdispersed
                 : out.index > Rational(1) ? DispersionRegime::Overdispersed
                                           : DispersionRegime::Poisson;
    out.poisson_condition = 2 * chain.kill * chain.prop == chain.gen * (chain.gen + chain.kill);
    return out;
}

}  // namespace carry
