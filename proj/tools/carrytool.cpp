// carrytool: command-line front end for the carry-chain library.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "carry/cascade.hpp"
#include "carry/holte.hpp"
#include "carry/report.hpp"
#include "carry/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    int k = 4;
    int base = 2;
    std::vector<std::size_t> forbid;
    std::vector<long> chain;  // N, g, t, r
    long len = 7;
    std::string format = "text";
    std::string out;
    int grid_kmax = 5;
    std::vector<int> grid_bases{2, 3};
    std::uint64_t budget = 10'000'000;
    long nmax = 12;
    long dmax = 21;
    std::string input = "-";
    bool corrupt_stirling = false;
    bool oracle = false;
    unsigned threads = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty() || opt.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + opt.out + "'");
    f << text;
}

std::vector<std::size_t> forbidden_or_default(const Options& opt) {
    if (!opt.forbid.empty()) return opt.forbid;
    return {static_cast<std::size_t>(opt.k - 1)};
}

carry::CascadeSpec make_spec(const Options& opt) {
    if (!opt.chain.empty()) {
        if (opt.chain.size() != 4) throw UsageError("--chain expects N,g,t,r");
        return carry::restrict(carry::BinaryChain::make(opt.chain[0], opt.chain[1], opt.chain[2], opt.chain[3]));
    }
    return carry::restrict(carry::build_holte(opt.k, opt.base), forbidden_or_default(opt));
}

bool oracle_agrees(const Options& opt, const carry::CascadeSpec& spec) {
    if (!opt.chain.empty()) throw UsageError("--oracle applies to k-summand chains only");
    const auto forbidden = forbidden_or_default(opt);
    for (long len = 0; len <= opt.len; ++len) {
        if (carry::avoidance_brute_force(opt.k, opt.base, forbidden, len, opt.budget) !=
            carry::avoidance_count(spec, len)) {
            std::cerr << "oracle mismatch at L=" << len << "\n";
            return false;
        }
    }
    return true;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact carry-chain spectra, cascade-free counts and shadow classification"};
    app.require_subcommand(1);
    Options opt;

    auto add_kn = [&](CLI::App* sub) {
        sub->add_option("--k", opt.k, "number of summands")->check(CLI::Range(2, 64));
        sub->add_option("--base", opt.base, "digit base N")->check(CLI::Range(2, 1 << 20));
    };

    auto* holte = app.add_subcommand("holte", "emit the carry count matrix");
    add_kn(holte);
    holte->add_option("--format", opt.format, "json|csv|text");
    holte->add_option("--out", opt.out, "output path");

    auto* spectrum = app.add_subcommand("spectrum", "stationary distribution, Eulerian row and eigenvalues");
    add_kn(spectrum);
    spectrum->add_option("--format", opt.format, "json|csv|text");
    spectrum->add_option("--out", opt.out, "output path");

    auto* eigen = app.add_subcommand("eigensystem", "biorthogonal left/right eigenvectors and quotient polynomials");
    eigen->add_option("--k", opt.k, "number of summands")->check(CLI::Range(2, 16));
    eigen->add_option("--format", opt.format, "json|csv|text");
    eigen->add_option("--out", opt.out, "output path");

    auto* cascade = app.add_subcommand("cascade", "cascade-free counts a(0..len)");
    cascade->alias("sequence");
    add_kn(cascade);
    cascade->add_option("--forbid", opt.forbid, "forbidden carry states (default k-1)")->delimiter(',');
    cascade->add_option("--chain", opt.chain, "binary chain N,g,t,r instead of a k-summand chain")->delimiter(',');
    cascade->add_option("--len", opt.len, "maximum length L")->check(CLI::NonNegativeNumber);
    cascade->add_flag("--oracle", opt.oracle, "cross-check every term against brute-force enumeration");
    cascade->add_option("--budget", opt.budget, "enumeration budget for --oracle");
    cascade->add_option("--format", opt.format, "json|csv|text|bfile");
    cascade->add_option("--out", opt.out, "output path");

    auto* threshold = app.add_subcommand("threshold", "Chebyshev threshold verdict with certificates");
    add_kn(threshold);
    threshold->add_option("--forbid", opt.forbid, "forbidden carry states (default k-1)")->delimiter(',');
    threshold->add_option("--chain", opt.chain, "binary chain N,g,t,r")->delimiter(',');
    threshold->add_option("--format", opt.format, "json|text");
    threshold->add_option("--out", opt.out, "output path");

    auto* moduli = app.add_subcommand("moduli", "achievable (N, d) pairs for binary chains");
    moduli->add_option("--nmax", opt.nmax, "largest N")->check(CLI::PositiveNumber);
    moduli->add_option("--dmax", opt.dmax, "largest d")->check(CLI::PositiveNumber);
    moduli->add_option("--format", opt.format, "csv|json|text");
    moduli->add_option("--out", opt.out, "output path");

    auto* classify = app.add_subcommand("classify", "compare two column-stochastic matrices given as JSON {a, b}");
    classify->add_option("--input", opt.input, "JSON file ('-' for stdin)");
    classify->add_option("--format", opt.format, "json|text");
    classify->add_option("--out", opt.out, "output path");

    auto* verify = app.add_subcommand("verify", "run every identity check over a (k, N) grid");
    verify->add_option("--grid-kmax", opt.grid_kmax, "largest k")->check(CLI::Range(2, 8));
    verify->add_option("--grid-bases", opt.grid_bases, "bases N")->delimiter(',')->check(CLI::Range(2, 16));
    verify->add_option("--len", opt.len, "largest brute-force length")->check(CLI::NonNegativeNumber);
    verify->add_option("--budget", opt.budget, "enumeration budget for brute-force checks");
    verify->add_option("--threads", opt.threads, "worker threads (0: all cores)");
    verify->add_option("--format", opt.format, "text|json|csv");
    verify->add_option("--out", opt.out, "output path");
    verify->add_flag("--corrupt-stirling", opt.corrupt_stirling, "perturb Stirling weights (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!opt.chain.empty()) {
            opt.k = 2;
            opt.base = static_cast<int>(opt.chain.front());
        }
        if (moduli->parsed() && opt.format == "text" && moduli->count("--format") == 0) opt.format = "csv";
        const auto format = carry::report::parse_format(opt.format);
        if (holte->parsed()) {
            emit(opt, carry::report::holte_matrix(opt.k, opt.base, format));
        } else if (spectrum->parsed()) {
            emit(opt, carry::report::spectrum(opt.k, opt.base, format));
        } else if (eigen->parsed()) {
            emit(opt, carry::report::eigensystem(opt.k, format));
        } else if (cascade->parsed()) {
            const auto spec = make_spec(opt);
            if (opt.oracle && !oracle_agrees(opt, spec)) return kExitCheckFailure;
            emit(opt, carry::report::sequence(spec, opt.k, opt.base, opt.len, format));
        } else if (threshold->parsed()) {
            emit(opt, carry::report::threshold(make_spec(opt), opt.k, opt.base, format));
        } else if (moduli->parsed()) {
            emit(opt, carry::report::moduli(opt.nmax, opt.dmax, format));
        } else if (classify->parsed()) {
            const auto input = carry::report::ordered_json::parse(read_input(opt.input));
            emit(opt, carry::report::classify(input, format));
        } else if (verify->parsed()) {
            carry::VerifyOptions vo;
            vo.k_max = opt.grid_kmax;
            vo.bases = opt.grid_bases;
            vo.length_max = opt.len;
            vo.budget = opt.budget;
            vo.corrupt_stirling = opt.corrupt_stirling;
            vo.threads = opt.threads;
            const auto results = carry::run_verify(vo);
            emit(opt, carry::report::verify(results, vo, format));
            return carry::all_passed(results) ? kExitOk : kExitCheckFailure;
        }
    } catch (const carry::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const carry::report::ordered_json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}
