#include "carry/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace carry {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& root) { return Polynomial({-root, 1}); }

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
    Polynomial out = constant(1);
    for (const auto& r : roots) out *= linear_root(r);
    return out;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Polynomial Polynomial::reversed() const {
    return Polynomial(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

Polynomial Polynomial::truncated(std::size_t n) const {
    if (n >= coeffs_.size()) return *this;
    return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
    std::vector<Rational> v(coeffs_);
    Rational p = 1;
    for (auto& x : v) {
        x *= p;
        p *= c;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v(coeffs_);
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (i == 0) {
            os << mag;
        } else {
            if (!unit) os << mag << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<std::string> Polynomial::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

DivMod divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(p.coefficients());
    const int dq = q.degree();
    const int dp = p.degree();
    if (dp < dq) return {Polynomial{}, p};
    std::vector<Rational> quot(static_cast<std::size_t>(dp - dq + 1));
    const Rational lead_inv = q.leading().inverse();
    for (int i = dp; i >= dq; --i) {
        const Rational f = rem[static_cast<std::size_t>(i)] * lead_inv;
        quot[static_cast<std::size_t>(i - dq)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(i - dq + j)] -= f * q.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
    auto [quot, rem] = divmod(p, q);
    if (!rem.is_zero()) throw InexactDivision("non-exact division: " + p.str() + " by " + q.str());
    return quot;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    Polynomial a = p;
    Polynomial b = q;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<BigInt> primitive_integer_form(const Polynomial& p) {
    if (p.is_zero()) return {};
    BigInt lcm_den = 1;
    for (const auto& c : p.coefficients()) lcm_den = lcm(lcm_den, c.den());
    std::vector<BigInt> ints;
    ints.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) ints.push_back((c * Rational(lcm_den)).to_integer());
    BigInt content = 0;
    for (const auto& v : ints) content = gcd(content, v);
    if (ints.back() < 0) content = -content;
    for (auto& v : ints) v /= content;
    return ints;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    n = abs(n);
    std::vector<BigInt> small;
    std::vector<BigInt> large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    Polynomial rest = p;
    // Zero roots first, so the constant term is nonzero for the divisor test.
    while (!rest.is_constant() && rest.coeff(0).is_zero()) {
        roots.emplace_back(0);
        rest = divide_exact(rest, Polynomial({0, 1}));
    }
    bool found = true;
    while (found && !rest.is_constant()) {
        found = false;
        const auto ints = primitive_integer_form(rest);
        const auto lead_divs = positive_divisors(ints.back());
        const auto const_divs = positive_divisors(ints.front());
        for (const auto& a : const_divs) {
            for (const auto& b : lead_divs) {
                for (int s : {1, -1}) {
                    const Rational cand(BigInt(s * a), b);
                    if (rest.eval(cand).is_zero()) {
                        roots.push_back(cand);
                        rest = divide_exact(rest, Polynomial::linear_root(cand));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_squarefree(const Polynomial& p) { return gcd(p, p.derivative()).is_constant(); }

Polynomial determinant_cofactor(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial acc;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * determinant_cofactor(minor);
        if (col % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

Polynomial determinant_bareiss(std::vector<std::vector<Polynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(1);
    bool negate = false;
    Polynomial prev = Polynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return negate ? -det : det;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square polynomial matrix");
    return m.size() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

}  // namespace carry
