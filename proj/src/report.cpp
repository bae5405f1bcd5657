#include "carry/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "carry/combinatorics.hpp"
#include "carry/eigensys.hpp"
#include "carry/holte.hpp"

namespace carry::report {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    if (name == "bfile") return Format::Bfile;
    throw std::invalid_argument("unknown format '" + name + "' (expected json|csv|text|bfile)");
}

ordered_json integer_json(const BigInt& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(r, c);
            row.push_back(x.is_integer() ? integer_json(x.num()) : ordered_json(x.str()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json fractions_json(const std::vector<Rational>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

ordered_json envelope(const ordered_json& k, const ordered_json& base, ordered_json data,
                      std::vector<std::string> anchors) {
    ordered_json j;
    j["k"] = k;
    j["N"] = base;
    j["data"] = std::move(data);
    j["anchors"] = std::move(anchors);
    return j;
}

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

[[noreturn]] void reject(const std::string& command) {
    throw std::invalid_argument("format not supported by " + command);
}

}  // namespace

std::string holte_matrix(int k, int base, Format format) {
    const HolteSystem sys = build_holte(k, base);
    const Matrix& m = sys.count_matrix();
    switch (format) {
        case Format::Json: {
            ordered_json data;
            data["count_matrix"] = matrix_json(m);
            data["scale"] = integer_json(sys.scale());
            return dump(envelope(k, base, std::move(data), {"holte-entry"}));
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "c_out";
            for (std::size_t c = 0; c < m.cols(); ++c) os << ",c_in_" << c;
            os << "\n";
            for (std::size_t r = 0; r < m.rows(); ++r) {
                os << r;
                for (std::size_t c = 0; c < m.cols(); ++c) os << "," << m(r, c);
                os << "\n";
            }
            return os.str();
        }
        case Format::Text: {
            std::ostringstream os;
            os << "count matrix k=" << k << " N=" << base << " (columns sum to " << sys.scale() << ")\n";
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) os << std::setw(10) << m(r, c).str();
                os << "\n";
            }
            return os.str();
        }
        case Format::Bfile: reject("holte");
    }
    return {};
}

std::string spectrum(int k, int base, Format format) {
    const Vector pi = stationary_distribution(k);
    const BigInt kf = factorial(k);
    std::vector<std::string> scaled;
    std::vector<std::string> eulerian_row;
    for (int i = 0; i < k; ++i) {
        scaled.push_back((pi[static_cast<std::size_t>(i)] * Rational(kf)).str());
        eulerian_row.push_back(eulerian(k, i).get_str());
    }
    std::vector<Rational> eigenvalues;
    for (int j = 0; j < k; ++j) eigenvalues.push_back(Rational(base).pow(-j));
    switch (format) {
        case Format::Json: {
            ordered_json data;
            data["stationary_scaled"] = scaled;
            data["scale"] = integer_json(kf);
            data["eulerian"] = eulerian_row;
            data["eigenvalues"] = fractions_json(eigenvalues);
            return dump(envelope(k, base, std::move(data), {"holte-spectrum", "eulerian"}));
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "i,stationary_scaled,eulerian,eigenvalue\n";
            for (int i = 0; i < k; ++i)
                os << i << "," << scaled[static_cast<std::size_t>(i)] << "," << eulerian_row[static_cast<std::size_t>(i)]
                   << "," << eigenvalues[static_cast<std::size_t>(i)] << "\n";
            return os.str();
        }
        case Format::Text: {
            std::ostringstream os;
            os << "k=" << k << " N=" << base << "\n";
            os << "pi * " << kf << " = [" << join(scaled, ",") << "]\n";
            os << "A(" << k << ", .)  = [" << join(eulerian_row, ",") << "]\n";
            os << "eigenvalues  = " << join(strings(eigenvalues), ", ") << "\n";
            return os.str();
        }
        case Format::Bfile: reject("spectrum");
    }
    return {};
}

std::string eigensystem(int k, Format format) {
    const EigenSystem sys = build_eigensystem(k);
    const Rational kf(factorial(k));
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    std::ostringstream csv;
    text << "k=" << k << " (left vectors scaled by " << kf << ")\n";
    csv << "j,scaled_left,right,quotient\n";
    for (int j = 0; j < k; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        std::vector<std::string> left;
        for (const auto& x : sys.left[jj]) left.push_back((x * kf).str());
        const auto right = strings(sys.right[jj]);
        const auto quotient = sys.quotients[jj].coefficient_strings();
        ordered_json row;
        row["j"] = j;
        row["scaled_left"] = left;
        row["right"] = right;
        row["quotient"] = quotient;
        row["quotient_text"] = sys.quotients[jj].str();
        row["constant"] = sys.constants[jj].str();
        rows.push_back(std::move(row));
        text << "j=" << j << "  " << kf << "*u = (" << join(left, ", ") << ")  v = (" << join(right, ", ")
             << ")  Q = " << sys.quotients[jj].str() << "\n";
        csv << j << "," << csv_field(join(left, " ")) << "," << csv_field(join(right, " ")) << ","
            << csv_field(join(quotient, " ")) << "\n";
    }
    switch (format) {
        case Format::Json: {
            ordered_json data;
            data["scale"] = integer_json(kf.num());
            data["rows"] = std::move(rows);
            return dump(envelope(k, nullptr, std::move(data), {"left-ev-gf", "right-ev", "right-ev-gf"}));
        }
        case Format::Csv: return csv.str();
        case Format::Text: return text.str();
        case Format::Bfile: reject("eigensystem");
    }
    return {};
}

std::string sequence(const CascadeSpec& spec, int k, int base, long max_length, Format format) {
    const auto a = avoidance_sequence(spec, max_length);
    switch (format) {
        case Format::Json: {
            ordered_json data = ordered_json::array();
            for (const auto& v : a) data.push_back(integer_json(v));
            ordered_json j = envelope(k, base, std::move(data), {"cascade-free-count"});
            std::vector<std::size_t> forbidden(spec.forbidden);
            j["forbidden"] = forbidden;
            return dump(j);
        }
        case Format::Bfile: {
            std::ostringstream os;
            for (std::size_t i = 0; i < a.size(); ++i) os << i << " " << a[i] << "\n";
            return os.str();
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "L,a\n";
            for (std::size_t i = 0; i < a.size(); ++i) os << i << "," << a[i] << "\n";
            return os.str();
        }
        case Format::Text: {
            std::vector<std::string> s;
            for (const auto& v : a) s.push_back(v.get_str());
            return join(s, " ") + "\n";
        }
    }
    return {};
}

std::string threshold(const CascadeSpec& spec, int k, int base, Format format) {
    const ThresholdVerdict v = threshold_classify(spec);
    ordered_json data;
    data["verdict"] = to_string(v.kind);
    data["dimension"] = v.dimension;
    data["forbidden"] = spec.forbidden;
    data["charpoly"] = v.charpoly.coefficient_strings();
    data["charpoly_text"] = v.charpoly.str("lambda");
    if (v.dimension <= 2) data["trace"] = v.tau.str();
    if (v.dimension == 2) data["det"] = v.delta.str();
    if (v.dimension >= 3) {
        data["numerator"] = v.numerator.coefficient_strings();
        data["denominator"] = v.denominator.coefficient_strings();
        data["gcd_chi_dchi"] = v.gcd_chi_derivative.coefficient_strings();
        data["gcd_numerator_denominator"] = v.gcd_numerator_denominator.coefficient_strings();
        data["h1"] = v.h1;
        data["h2"] = v.h2;
        data["reduced_denominator_degree"] = v.reduced_denominator_degree;
        data["rational_roots"] = fractions_json(rational_roots(v.charpoly));
    }
    data["table_coverage"] = v.table_coverage;
    data["notes"] = v.notes;
    switch (format) {
        case Format::Json:
            return dump(envelope(k, base, std::move(data), {"cheb-threshold", "simple-evals", "nonzero-res"}));
        case Format::Text: {
            std::ostringstream os;
            os << "k=" << k << " N=" << base << " d=" << v.dimension << " verdict=" << to_string(v.kind) << "\n";
            os << "chi = " << v.charpoly.str("lambda") << "\n";
            if (v.dimension >= 3) {
                os << "Q(z) = " << v.denominator.str("z") << "\n";
                os << "P(z) = " << v.numerator.str("z") << "\n";
                os << "H1 gcd(chi, chi') = " << v.gcd_chi_derivative.str("lambda") << (v.h1 ? " (holds)" : " (fails)")
                   << "\n";
                os << "H2 gcd(P, Q) = " << v.gcd_numerator_denominator.str("z") << (v.h2 ? " (holds)" : " (fails)")
                   << "\n";
                os << "reduced denominator degree = " << v.reduced_denominator_degree << "\n";
            }
            for (const auto& n : v.notes) os << "note: " << n << "\n";
            return os.str();
        }
        case Format::Csv:
        case Format::Bfile: reject("threshold");
    }
    return {};
}

std::string moduli(long base_max, long det_max, Format format) {
    const auto points = moduli_space(base_max, det_max);
    switch (format) {
        case Format::Csv: {
            std::ostringstream os;
            os << "N,d,status,g,t\n";
            for (const auto& p : points) {
                os << p.base << "," << p.det << "," << to_string(p.status) << ",";
                if (p.witness) os << p.witness->first << "," << p.witness->second;
                else os << ",";
                os << "\n";
            }
            return os.str();
        }
        case Format::Json: {
            ordered_json data = ordered_json::array();
            for (const auto& p : points) {
                ordered_json row;
                row["N"] = p.base;
                row["d"] = p.det;
                row["status"] = to_string(p.status);
                row["g"] = p.witness ? ordered_json(p.witness->first) : ordered_json(nullptr);
                row["t"] = p.witness ? ordered_json(p.witness->second) : ordered_json(nullptr);
                data.push_back(std::move(row));
            }
            return dump(envelope(2, nullptr, std::move(data), {"moduli"}));
        }
        case Format::Text: {
            std::ostringstream os;
            os << "rows N, columns d = 0.." << det_max << "; # achievable, o AM-GM only, . below AM-GM\n";
            for (long n = base_max; n >= 1; --n) {
                os << std::setw(3) << n << " ";
                for (const auto& p : points) {
                    if (p.base != n) continue;
                    os << (p.status == ModuliStatus::Achievable         ? '#'
                           : p.status == ModuliStatus::AMGMOnlyExcluded ? 'o'
                                                                        : '.');
                }
                os << "\n";
            }
            return os.str();
        }
        case Format::Bfile: reject("moduli");
    }
    return {};
}

Matrix parse_matrix(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        std::vector<Rational> r;
        for (const auto& x : row) {
            if (x.is_number_integer()) r.emplace_back(static_cast<long>(x.get<std::int64_t>()));
            else if (x.is_string()) r.push_back(Rational::parse(x.get<std::string>()));
            else throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings");
        }
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(rows);
}

std::string classify(const ordered_json& input, Format format) {
    const MarkovCarrySystem a(parse_matrix(input.at("a")));
    const MarkovCarrySystem b(parse_matrix(input.at("b")));
    const bool equivalent = classify_general(a, b);
    ordered_json data;
    data["equivalent"] = equivalent;
    data["charpoly_a"] = a.charpoly().coefficient_strings();
    data["charpoly_b"] = b.charpoly().coefficient_strings();
    data["stochastic_a"] = stochasticity_check(a);
    data["stochastic_b"] = stochasticity_check(b);
    switch (format) {
        case Format::Json:
            return dump(envelope(static_cast<std::int64_t>(a.states()), nullptr, std::move(data),
                                 {"stoch-general", "stochastic-shadow"}));
        case Format::Text: {
            std::ostringstream os;
            os << "chi_a = " << a.charpoly().str("lambda") << "\n";
            os << "chi_b = " << b.charpoly().str("lambda") << "\n";
            os << (equivalent ? "shadow-equivalent" : "not equivalent") << "\n";
            return os.str();
        }
        case Format::Csv:
        case Format::Bfile: reject("classify");
    }
    return {};
}

std::string verify(const std::vector<CheckResult>& results, const VerifyOptions& options, Format format) {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& r : results) {
        if (r.status == CheckStatus::Pass) ++passed;
        else if (r.status == CheckStatus::Fail) ++failed;
        else ++skipped;
    }
    switch (format) {
        case Format::Json: {
            ordered_json data = ordered_json::array();
            std::vector<std::string> anchors;
            for (const auto& r : results) {
                ordered_json row;
                row["name"] = r.name;
                row["params"] = r.params;
                row["status"] = to_string(r.status);
                row["anchor"] = r.anchor;
                row["detail"] = r.detail;
                data.push_back(std::move(row));
                if (std::find(anchors.begin(), anchors.end(), r.anchor) == anchors.end()) anchors.push_back(r.anchor);
            }
            ordered_json j = envelope(options.k_max, options.bases, std::move(data), std::move(anchors));
            j["summary"] = {{"pass", passed}, {"fail", failed}, {"skip", skipped}};
            return dump(j);
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "name,params,status,anchor,detail\n";
            for (const auto& r : results)
                os << csv_field(r.name) << "," << csv_field(r.params) << "," << to_string(r.status) << ","
                   << csv_field(r.anchor) << "," << csv_field(r.detail) << "\n";
            return os.str();
        }
        case Format::Text: {
            std::ostringstream os;
            for (const auto& r : results) {
                os << to_string(r.status) << "  " << std::left << std::setw(26) << r.name << std::setw(10) << r.params
                   << " [" << r.anchor << "]";
                if (!r.detail.empty()) os << "  " << r.detail;
                os << "\n";
            }
            os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
            return os.str();
        }
        case Format::Bfile: reject("verify");
    }
    return {};
}

}  // namespace carry::report
