#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "carry/cascade.hpp"
#include "carry/classify.hpp"
#include "carry/matrix.hpp"
#include "carry/verify.hpp"

namespace carry::report {

using nlohmann::ordered_json;

enum class Format { Json, Csv, Text, Bfile };

/// Parses "json", "csv", "text" or "bfile"; throws std::invalid_argument.
Format parse_format(const std::string& name);

/// Integer as a JSON number when it fits in 64 bits, otherwise as a decimal string.
ordered_json integer_json(const BigInt& v);
ordered_json matrix_json(const Matrix& m);
ordered_json fractions_json(const std::vector<Rational>& v);

/// {"k": ..., "N": ..., "data": ..., "anchors": [...]}
ordered_json envelope(const ordered_json& k, const ordered_json& base, ordered_json data,
                      std::vector<std::string> anchors);

std::string holte_matrix(int k, int base, Format format);
std::string spectrum(int k, int base, Format format);
std::string eigensystem(int k, Format format);
std::string sequence(const CascadeSpec& spec, int k, int base, long max_length, Format format);
std::string threshold(const CascadeSpec& spec, int k, int base, Format format);
std::string moduli(long base_max, long det_max, Format format);
/// Input: {"a": [[...], ...], "b": [[...], ...]} with "p/q" strings or integers.
std::string classify(const ordered_json& input, Format format);
std::string verify(const std::vector<CheckResult>& results, const VerifyOptions& options, Format format);

/// Parses a JSON matrix of integers or "p/q" strings.
Matrix parse_matrix(const ordered_json& j);

}  // namespace carry::report
