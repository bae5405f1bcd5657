#include "carry/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

#include "carry/cascade.hpp"
#include "carry/classify.hpp"
#include "carry/combinatorics.hpp"
#include "carry/eigensys.hpp"
#include "carry/holte.hpp"

namespace carry {

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "SKIP";
    }
    return "FAIL";
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

class Recorder {
public:
    explicit Recorder(std::string params) : params_(std::move(params)) {}

    void check(std::string name, std::string anchor, const std::function<Outcome()>& body) {
        CheckResult r{std::move(name), std::move(anchor), params_, CheckStatus::Pass, {}};
        try {
            Outcome o = body();
            r.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
            r.detail = std::move(o.detail);
        } catch (const BudgetExceeded& e) {
            r.status = CheckStatus::Skip;
            r.detail = e.what();
        } catch (const DimensionTooLarge& e) {
            r.status = CheckStatus::Skip;
            r.detail = e.what();
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.detail = std::string("exception: ") + e.what();
        }
        results_.push_back(std::move(r));
    }

    void check(std::string name, std::string anchor, const std::function<bool()>& body) {
        check(std::move(name), std::move(anchor), std::function<Outcome()>([&] { return Outcome{body(), {}}; }));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string params_;
    std::vector<CheckResult> results_;
};

std::string join(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<std::size_t> top_state(int k) { return {static_cast<std::size_t>(k - 1)}; }

std::vector<CheckResult> cell_checks(int k, int base, const VerifyOptions& opt) {
    Recorder rec("k=" + std::to_string(k) + " N=" + std::to_string(base));
    const HolteSystem sys = build_holte(k, base);
    const Matrix& count = sys.count_matrix();
    const auto n = static_cast<std::size_t>(k);

    rec.check("count-matrix-column-sums", "holte-entry", std::function<bool()>([&] {
        for (std::size_t c = 0; c < n; ++c) {
            Rational s;
            for (std::size_t r = 0; r < n; ++r) s += count(r, c);
            if (s != Rational(sys.scale())) return false;
        }
        return true;
    }));
    rec.check("count-matrix-brute-force", "holte-entry",
              std::function<bool()>([&] { return count_matrix_brute_force(k, base, opt.budget) == count; }));
    rec.check("digit-sum-profile", "digit-sum-convolution", std::function<bool()>([&] {
        const auto p = digit_sum_counts(k, base);
        return p.is_symmetric() && p.total() == sys.scale() && p.is_log_concave();
    }));
    rec.check("holte-spectrum", "holte-spectrum", std::function<Outcome()>([&] {
        std::vector<Rational> roots;
        for (int j = 0; j < k; ++j) roots.emplace_back(ipow(BigInt(base), static_cast<unsigned long>(k - j)));
        const Polynomial chi = characteristic_polynomial(count);
        return Outcome{chi == Polynomial::from_roots(roots), chi.str("lambda")};
    }));
    rec.check("stationarity", "holte-spectrum", std::function<bool()>([&] {
        const Vector pi = stationary_distribution(k);
        return sys.prob_matrix() * pi == pi;
    }));
    rec.check("centrosymmetry", "centrosymmetry", std::function<bool()>([&] { return check_centrosymmetry(sys); }));
    rec.check("return-count", "return-count", std::function<bool()>([&] { return verify_return_count(sys, 3); }));
    rec.check("spectral-return", "spectral-return",
              std::function<bool()>([&] { return verify_spectral_return_identity(k, base, 3); }));
    rec.check("eigen-equations", "biorthogonal-system", std::function<bool()>([&] {
        return verify_eigen_equations(build_eigensystem(k), base);
    }));
    rec.check("spectral-projectors", "spectral-expansion",
              std::function<bool()>([&] { return verify_projectors(build_eigensystem(k), base); }));

    rec.check("stirling-lagrange", "stirling-lagrange", std::function<Outcome()>([&] {
        std::vector<BigInt> weights;
        for (int j = 0; j < k; ++j) weights.push_back(stirling_first_unsigned(k, k - j));
        if (opt.corrupt_stirling) weights.back() += 1;
        const Polynomial formula = stirling_lagrange_from_weights(k, base, weights);
        const auto spec = restrict(sys, top_state(k));
        const Polynomial direct = characteristic_polynomial(spec.restricted);
        return Outcome{formula == direct, direct.str("lambda")};
    }));
    rec.check("det-restricted", "det-restricted", std::function<Outcome()>([&] {
        const auto spec = restrict(sys, top_state(k));
        const Rational direct = determinant(spec.restricted);
        const Rational formula = det_restricted_formula(k, base);
        const Polynomial sl = stirling_lagrange_charpoly(k, base);
        const Rational signed_const = (k - 1) % 2 == 0 ? formula : -formula;
        return Outcome{direct == formula && sl.coeff(0) == signed_const, "det=" + direct.str()};
    }));
    rec.check("interlacing", "simple-evals", std::function<bool()>([&] { return interlacing_certificate(sys); }));
    rec.check("oscillatory-count-matrix", "simple-evals",
              std::function<bool()>([&] { return is_totally_nonnegative(count) && is_oscillatory(count); }));
    rec.check("oscillatory-restricted", "nonzero-res", std::function<bool()>([&] {
        const auto spec = restrict(sys, top_state(k));
        return is_totally_nonnegative(spec.restricted) && is_oscillatory(spec.restricted);
    }));

    rec.check("reversibility", "non-reversibility", std::function<Outcome()>([&] {
        const auto defects = reversibility_defect(sys);
        if (k <= 3) return Outcome{defects.empty(), std::to_string(defects.size()) + " defects"};
        if (defects.empty()) return Outcome{false, "expected detailed-balance violations"};
        const auto& d = defects.front();
        std::string detail = "pi_" + std::to_string(d.c) + " T[" + std::to_string(d.c_prime) + "," +
                             std::to_string(d.c) + "] = " + d.forward.str() + " vs " + d.backward.str();
        if (k == 4 && base == 2) {
            const bool witness = d.c == 0 && d.c_prime == 1 && d.forward == Rational(10, 384) &&
                                 d.backward == Rational(11, 384);
            return Outcome{witness, detail};
        }
        return Outcome{true, detail};
    }));
    rec.check("uniform-residue", "uniform-residue", std::function<bool()>([&] {
        for (int c = 0; c < k; ++c)
            if (!verify_uniform_residue(k, base, c, opt.budget)) return false;
        return true;
    }));

    rec.check("threshold-verdict", "cheb-threshold", std::function<Outcome()>([&] {
        const auto v = threshold_classify(restrict(sys, top_state(k)));
        const std::string detail = to_string(v.kind) + " chi=" + v.charpoly.str("lambda");
        if (k == 2) return Outcome{v.kind == VerdictKind::Geometric, detail};
        if (k == 3) return Outcome{v.kind == VerdictKind::Chebyshev, detail};
        return Outcome{v.kind == VerdictKind::NoChebyshev && v.h1 && v.h2 && v.reduced_denominator_degree == k - 1,
                       detail};
    }));
    rec.check("recurrence", "universality", std::function<bool()>([&] {
        return verify_recurrence(restrict(sys, top_state(k)), 30);
    }));
    rec.check("oracle-equivalence", "cascade-free-count", std::function<Outcome()>([&] {
        std::vector<std::vector<std::size_t>> sets{top_state(k)};
        if (k >= 3) sets.push_back({n - 2, n - 1});
        long compared = 0;
        for (const auto& f : sets) {
            const auto spec = restrict(sys, f);
            for (long len = 0; len <= opt.length_max; ++len) {
                BigInt brute;
                try {
                    brute = avoidance_brute_force(k, base, f, len, opt.budget);
                } catch (const BudgetExceeded&) {
                    break;
                }
                if (brute != avoidance_count(spec, len)) return Outcome{false, "mismatch at L=" + std::to_string(len)};
                ++compared;
            }
        }
        if (compared == 0) throw BudgetExceeded("no length within the brute-force budget");
        return Outcome{true, std::to_string(compared) + " lengths compared"};
    }));
    return rec.take();
}

std::vector<CheckResult> k_checks(int k) {
    Recorder rec("k=" + std::to_string(k));
    rec.check("eulerian-row", "eulerian", std::function<bool()>([&] {
        BigInt total = 0;
        for (int i = 0; i < k; ++i) {
            if (eulerian(k, i) != eulerian(k, k - 1 - i)) return false;
            if (eulerian(k, i) != eulerian_explicit(k, i)) return false;
            total += eulerian(k, i);
        }
        return total == factorial(k);
    }));
    rec.check("worpitzky", "worpitzky", std::function<bool()>([&] { return verify_worpitzky(k, 20); }));
    rec.check("biorthogonality", "right-ev", std::function<bool()>([&] { return verify_biorthogonality(k); }));
    rec.check("n-independence", "holte-spectrum", std::function<bool()>([&] {
        for (int j = 0; j < k; ++j)
            if (right_eigenvector_at(k, j, 2) != right_eigenvector_at(k, j, 3)) return false;
        return true;
    }));
    rec.check("quotient-palindrome", "right-ev-gf", std::function<bool()>([&] {
        const EigenSystem sys = build_eigensystem(k);
        for (int j = 0; j < k; ++j) {
            const Polynomial& q = sys.quotients[static_cast<std::size_t>(j)];
            if (q.degree() != j || q.coeff(0) != Rational(1)) return false;
            const Polynomial mirrored = j % 2 == 0 ? q : -q;
            if (q.reversed() != mirrored) return false;
        }
        return true;
    }));
    if (k >= 4) {
        rec.check("q2-closed-form", "Q2-closed", std::function<bool()>([&] {
            const Polynomial q = quotient_polynomial(k, 2);
            const Polynomial err = q - Polynomial({1, -1}).pow(2);
            return q == q2_closed_form(k) && err == Polynomial::monomial(Rational(8, 3L * k - 1), 1);
        }));
    }
    if (k >= 5) {
        rec.check("q3-closed-form", "Q3-closed", std::function<bool()>([&] {
            const Polynomial q = quotient_polynomial(k, 3);
            const Polynomial err = q - Polynomial({1, -1}).pow(3);
            return q == q3_closed_form(k) && err == Polynomial({0, 1, -1}) * Rational(8, k);
        }));
    }
    rec.check("ckj-sum", "ckj-sum", std::function<bool()>([&] { return verify_ckj_sum(k); }));
    rec.check("ckj-routes", "ckj-esym", std::function<bool()>([&] {
        check_constant_routes(build_eigensystem(k));
        return true;
    }));
    return rec.take();
}

std::vector<CheckResult> global_checks(const VerifyOptions& opt) {
    Recorder rec("global");
    rec.check("cubic-sequence", "cubic-recurrence", std::function<Outcome()>([&] {
        const auto spec = restrict(build_holte(4, 2), {3});
        const auto a = avoidance_sequence(spec, 7);
        const std::vector<BigInt> expected{1, 16, 255, 4015, 62780, 978425, 15226125, 236791400};
        const auto rec3 = extend_by_recurrence({1, 16, 255}, {25, -165, 280}, 7);
        return Outcome{a == expected && rec3 == expected, join(a)};
    }));
    rec.check("two-state-threshold", "cheb-threshold", std::function<Outcome()>([&] {
        const auto spec = restrict(build_holte(4, 2), {2, 3});
        const auto v = threshold_classify(spec);
        const bool ok = v.charpoly == Polynomial({40, -15, 1}) && v.kind == VerdictKind::Chebyshev &&
                        chebyshev_check(spec, 20);
        return Outcome{ok, v.charpoly.str("lambda")};
    }));
    rec.check("cubic-threshold", "cheb-threshold", std::function<Outcome()>([&] {
        const auto spec = restrict(build_holte(4, 2), {3});
        const auto v = threshold_classify(spec);
        const bool ok = v.charpoly == Polynomial({-280, 165, -25, 1}) && rational_roots(v.charpoly).empty() &&
                        v.kind == VerdictKind::NoChebyshev && v.h1 && v.h2;
        return Outcome{ok, v.charpoly.str("lambda")};
    }));
    rec.check("fibonacci-bisection", "fibonacci-bisection", std::function<bool()>([&] {
        const auto chain = BinaryChain::make(3, 1, 1, 1);
        const auto a = avoidance_sequence(restrict(chain), 20);
        for (long l = 0; l <= 20; ++l) {
            if (a[static_cast<std::size_t>(l)] != fibonacci(2 * l + 2)) return false;
            if (scaled_chebyshev(l, chain.trace(), chain.determinant()) != Rational(fibonacci(2 * l + 2))) return false;
        }
        return true;
    }));
    rec.check("dispersion", "fib-poisson", std::function<bool()>([&] {
        const auto d = dispersion_index(BinaryChain::make(3, 1, 1, 1));
        return d.index == Rational(1) && d.regime == DispersionRegime::Poisson && d.poisson_condition;
    }));
    rec.check("moduli", "moduli", std::function<bool()>([&] {
        return sigma(7) == 8 && classify_point(6, 7).status == ModuliStatus::AMGMOnlyExcluded &&
               classify_point(9, 14).status == ModuliStatus::Achievable &&
               classify_point(8, 13).status == ModuliStatus::AMGMOnlyExcluded;
    }));
    rec.check("gen-prop-kill-example", "stoch-general", std::function<bool()>([&] {
        const auto a = MarkovCarrySystem::gen_prop_kill({1, 3}, {1, 3}, {1, 3}, 3);
        const auto b = MarkovCarrySystem::gen_prop_kill({1, 2}, {1, 4}, {1, 4}, 3);
        const auto c = MarkovCarrySystem::gen_prop_kill({1, 4}, {1, 2}, {1, 4}, 3);
        const auto d = MarkovCarrySystem::gen_prop_kill({1, 6}, {1, 2}, {1, 3}, 3);
        return a.charpoly() == Polynomial({Rational(1, 3), Rational(-4, 3), 1}) &&
               b.charpoly() == Polynomial({Rational(1, 4), Rational(-5, 4), 1}) &&
               c.charpoly() == Polynomial({Rational(1, 2), Rational(-3, 2), 1}) && d.charpoly() == c.charpoly() &&
               classify_general(c, d) && !classify_general(a, b) && !classify_general(b, c) &&
               !classify_general(a, c);
    }));
    rec.check("mult-shadow", "mult-impossible", std::function<bool()>([&] {
        return mult_shadow_search(2, 2).empty() && !mult_shadow_search(2, 1).empty();
    }));
    (void)opt;
    return rec.take();
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    std::vector<std::function<std::vector<CheckResult>()>> tasks;
    for (int k = 2; k <= options.k_max; ++k) {
        tasks.emplace_back([k] { return k_checks(k); });
        for (int base : options.bases) tasks.emplace_back([k, base, &options] { return cell_checks(k, base, options); });
    }
    tasks.emplace_back([&options] { return global_checks(options); });

    std::vector<std::vector<CheckResult>> buckets(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) buckets[i] = tasks[i]();
    };
    unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    std::vector<CheckResult> out;
    for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace carry
