#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlq/classical.hpp"
#include "mlq/message_matrix.hpp"
#include "mlq/schumacher.hpp"

namespace mlq {

using Json = nlohmann::json;

// Reads a JSON document; MalformedInput on I/O or syntax errors.
Json load_config(const std::string& path);

// Complex numbers are either plain numbers or [re, im] pairs.
Complex parse_complex(const Json& value, const std::string& where);
Eigen::VectorXcd parse_vector(const Json& value, const std::string& where);
Eigen::MatrixXcd parse_matrix(const Json& value, const std::string& where);

// Typed field access with MalformedInput naming the key on absence or type errors.
double get_double(const Json& config, const std::string& key);
std::size_t get_size(const Json& config, const std::string& key);
std::vector<double> get_doubles(const Json& config, const std::string& key);
// Accepts a single number or a list.
std::vector<std::size_t> get_sizes(const Json& config, const std::string& key);
std::vector<double> get_double_list(const Json& config, const std::string& key);

// "alphabet": {"letters": [[...], ...]} or {"dim": d}; when absent, the
// orthonormal alphabet of dimension `fallback_dim`.
AlphabetPtr load_alphabet(const Json& config, std::size_t fallback_dim);

// The letter matrix: "rho" (basis-letter coordinates) or "letter_probs" over
// the alphabet letters. Returns the alphabet it lives on.
struct LetterSource {
  AlphabetPtr alphabet;
  Eigen::MatrixXcd rho;
  std::optional<LetterEnsemble> letters;  // set when given via letter_probs
};
LetterSource load_letter_source(const Json& config);

// "ensemble": {"members": [{"p": x, "amplitudes": [{"string": "01", "amp": a}, ...]}]}.
MessageEnsemble load_ensemble(const Json& config, const AlphabetPtr& alphabet);

// The source message matrix: "ensemble", or "lambdas" with a letter source,
// or a letter source with a single "N" (canonical rho^{(x)N}).
MessageMatrix load_message_matrix(const Json& config, const TruncationConfig& trunc);

// "probs" with optional "symbols" and "alphabet_size".
ClassicalEnsemble load_classical(const Json& config);

}  // namespace mlq
