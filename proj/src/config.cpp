#include "mlq/config.hpp"

#include <fstream>

#include "mlq/errors.hpp"

namespace mlq {
namespace {

const Json& require(const Json& config, const std::string& key) {
  if (!config.is_object() || !config.contains(key)) throw MalformedInput("config: missing key '" + key + "'");
  return config.at(key);
}

double as_double(const Json& v, const std::string& where) {
  if (!v.is_number()) throw MalformedInput("config: '" + where + "' must be a number");
  return v.get<double>();
}

std::size_t as_size(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw MalformedInput("config: '" + where + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("config: cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput("config: " + path + ": " + e.what());
  }
}

Complex parse_complex(const Json& value, const std::string& where) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number())
    return {value[0].get<double>(), value[1].get<double>()};
  throw MalformedInput("config: '" + where + "' must be a number or an [re, im] pair");
}

Eigen::VectorXcd parse_vector(const Json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) throw MalformedInput("config: '" + where + "' must be a nonempty list");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = parse_complex(value[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Eigen::MatrixXcd parse_matrix(const Json& value, const std::string& where) {
  if (!value.is_array() || value.empty()) throw MalformedInput("config: '" + where + "' must be a nonempty list of rows");
  const auto n = static_cast<Eigen::Index>(value.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXcd row = parse_vector(value[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
    if (row.size() != n) throw MalformedInput("config: '" + where + "' must be square");
    m.row(i) = row.transpose();
  }
  return m;
}

double get_double(const Json& config, const std::string& key) { return as_double(require(config, key), key); }

std::size_t get_size(const Json& config, const std::string& key) { return as_size(require(config, key), key); }

std::vector<double> get_doubles(const Json& config, const std::string& key) {
  const Json& v = require(config, key);
  if (!v.is_array() || v.empty()) throw MalformedInput("config: '" + key + "' must be a nonempty list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_double(v[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::size_t> get_sizes(const Json& config, const std::string& key) {
  const Json& v = require(config, key);
  if (!v.is_array()) return {as_size(v, key)};
  if (v.empty()) throw MalformedInput("config: '" + key + "' must not be empty");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_size(v[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> get_double_list(const Json& config, const std::string& key) {
  const Json& v = require(config, key);
  if (!v.is_array()) return {as_double(v, key)};
  return get_doubles(config, key);
}

AlphabetPtr load_alphabet(const Json& config, std::size_t fallback_dim) {
  if (!config.contains("alphabet")) return QuantumAlphabet::orthonormal(fallback_dim);
  const Json& a = config.at("alphabet");
  if (a.contains("dim")) return QuantumAlphabet::orthonormal(as_size(a.at("dim"), "alphabet.dim"));
  const Json& letters = require(a, "letters");
  if (!letters.is_array() || letters.empty()) throw MalformedInput("config: 'alphabet.letters' must be a nonempty list");
  std::vector<Eigen::VectorXcd> vs;
  for (std::size_t i = 0; i < letters.size(); ++i) vs.push_back(parse_vector(letters[i], "alphabet.letters[" + std::to_string(i) + "]"));
  return std::make_shared<const QuantumAlphabet>(std::move(vs));
}

LetterSource load_letter_source(const Json& config) {
  if (config.contains("rho")) {
    const Eigen::MatrixXcd rho = parse_matrix(config.at("rho"), "rho");
    return {load_alphabet(config, static_cast<std::size_t>(rho.rows())), rho, std::nullopt};
  }
  if (config.contains("letter_probs")) {
    if (!config.contains("alphabet")) throw MalformedInput("config: 'letter_probs' needs an 'alphabet'");
    const AlphabetPtr alphabet = load_alphabet(config, 0);
    LetterEnsemble letters{alphabet, get_doubles(config, "letter_probs")};
    return {alphabet, letters.letter_matrix(), letters};
  }
  throw MalformedInput("config: need 'rho' or 'letter_probs'");
}

MessageEnsemble load_ensemble(const Json& config, const AlphabetPtr& alphabet) {
  const Json& members = require(require(config, "ensemble"), "members");
  if (!members.is_array() || members.empty()) throw MalformedInput("config: 'ensemble.members' must be a nonempty list");
  std::vector<MessageEnsemble::Member> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string where = "ensemble.members[" + std::to_string(i) + "]";
    const Json& m = members[i];
    const double p = as_double(require(m, "p"), where + ".p");
    ManyLetterVector state(alphabet);
    const Json& amps = require(m, "amplitudes");
    if (!amps.is_array()) throw MalformedInput("config: '" + where + ".amplitudes' must be a list");
    for (const Json& entry : amps) {
      const Json& s = require(entry, "string");
      if (!s.is_string()) throw MalformedInput("config: '" + where + ".amplitudes.string' must be a string");
      state.add(BasisString::from_digits(s.get<std::string>()), parse_complex(require(entry, "amp"), where + ".amplitudes.amp"));
    }
    out.push_back({p, state});
  }
  return MessageEnsemble(alphabet, std::move(out));
}

MessageMatrix load_message_matrix(const Json& config, const TruncationConfig& trunc) {
  if (config.contains("ensemble")) {
    std::size_t dim = 2;
    if (config.contains("rho")) dim = static_cast<std::size_t>(parse_matrix(config.at("rho"), "rho").rows());
    const MessageEnsemble e = load_ensemble(config, load_alphabet(config, dim));
    require_within(e.max_length(), trunc.max_length, "ensemble message length");
    return ensemble_to_matrix(e);
  }
  const LetterSource src = load_letter_source(config);
  if (config.contains("lambdas")) return grand_canonical(src.alphabet, get_doubles(config, "lambdas"), src.rho, trunc);
  const std::vector<std::size_t> n = get_sizes(config, "N");
  if (n.size() != 1) throw MalformedInput("config: a canonical message needs a single 'N'");
  std::vector<double> lambdas(n.front() + 1, 0.0);
  lambdas.back() = 1.0;
  return grand_canonical(src.alphabet, lambdas, src.rho, trunc);
}

ClassicalEnsemble load_classical(const Json& config) {
  std::vector<double> probs = get_doubles(config, "probs");
  std::size_t alphabet_size = config.contains("alphabet_size") ? get_size(config, "alphabet_size") : 0;
  if (!config.contains("symbols")) {
    ClassicalEnsemble base = ClassicalEnsemble::from_probabilities(std::move(probs));
    return ClassicalEnsemble(base.symbols(), base.probabilities(), alphabet_size);
  }
  const Json& s = config.at("symbols");
  if (!s.is_array()) throw MalformedInput("config: 'symbols' must be a list of strings");
  std::vector<std::string> symbols;
  for (const Json& x : s) {
    if (!x.is_string()) throw MalformedInput("config: 'symbols' must be a list of strings");
    symbols.push_back(x.get<std::string>());
  }
  return ClassicalEnsemble(std::move(symbols), std::move(probs), alphabet_size);
}

}  // namespace mlq
