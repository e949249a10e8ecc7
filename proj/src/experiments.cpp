#include "mlq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include <Eigen/Core>

#include "mlq/channel.hpp"
#include "mlq/errors.hpp"
#include "mlq/lossless.hpp"
#include "mlq/schumacher.hpp"
#include "mlq/translation.hpp"

namespace mlq {
namespace {

TruncationConfig truncation(const Json& config, const RunOptions& options, std::size_t fallback) {
  TruncationConfig t;
  t.max_length = options.lmax ? *options.lmax : config.contains("lmax") ? get_size(config, "lmax") : fallback;
  t.max_code_length = config.contains("code_lmax") ? get_size(config, "code_lmax") : 0;
  return t;
}

std::size_t code_dim(const Json& config) {
  return config.contains("code_alphabet_dim") ? get_size(config, "code_alphabet_dim") : 2;
}

void add_kraus_checks(Report& r, const KrausChannel& ch, double tolerance) {
  const IdentityReport k = check_kraus(ch, tolerance);
  r.check_at_most("kraus completeness: " + ch.name(), k.frobenius_deviation, 0.0, tolerance);
}

// Letters = eigenvectors of rho with probabilities = eigenvalues.
LetterEnsemble eigen_letters(const AlphabetPtr& alphabet, const Eigen::MatrixXcd& rho) {
  const LetterSpectrum spec = letter_spectrum(rho);
  std::vector<Eigen::VectorXcd> letters;
  std::vector<double> probs;
  const Eigen::MatrixXcd columns = alphabet->basis() * spec.eigenvectors;
  for (Eigen::Index k = 0; k < columns.cols(); ++k) {
    letters.push_back(columns.col(k).normalized());
    probs.push_back(spec.eigenvalues(k));
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (double& p : probs) p /= total;
  return {std::make_shared<const QuantumAlphabet>(std::move(letters)), std::move(probs)};
}

// ---------------------------------------------------------------- classical

Report run_entropy(const Json& config, const RunOptions& o) {
  Report r{"entropy", {}, {}};
  if (config.contains("ensemble") || config.contains("lambdas")) {
    const TruncationConfig trunc = truncation(config, o, 8);
    const MessageMatrix sigma = load_message_matrix(config, trunc);
    sigma.validate_density();
    auto& t = r.table("entropy", {"S_sigma", "I_sigma", "mean_length"});
    t.add({fmt(von_neumann_entropy(sigma)), fmt(raw_information(sigma)), fmt(length_expectation(sigma))});
    auto& sp = r.table("spectrum", {"k", "eigenvalue"});
    std::vector<double> q = spectrum(sigma);
    std::sort(q.rbegin(), q.rend());
    for (std::size_t k = 0; k < q.size(); ++k)
      if (q[k] > kEigenCutoff) sp.add({fmt(k), fmt(q[k])});
    if (config.contains("lambdas") && !config.contains("ensemble")) {
      const LetterSource src = load_letter_source(config);
      const std::vector<double> lambdas = get_doubles(config, "lambdas");
      double mean_n = 0.0;
      for (std::size_t n = 0; n < lambdas.size(); ++n) mean_n += lambdas[n] * static_cast<double>(n);
      r.check_close("S(sigma) = H(lambda) + sum lambda_n n S(rho)", von_neumann_entropy(sigma),
                    shannon_entropy(lambdas) + mean_n * von_neumann_entropy(src.rho), 1e-9);
    }
    return r;
  }
  const LetterSource src = load_letter_source(config);
  validate_letter_matrix(src.rho, kStateTolerance);
  const double s1 = von_neumann_entropy(src.rho);
  const std::vector<std::size_t> powers = config.contains("n") ? get_sizes(config, "n") : std::vector<std::size_t>{1, 2, 3, 4};
  const TruncationConfig trunc = truncation(config, o, *std::max_element(powers.begin(), powers.end()));
  auto& t = r.table("entropy", {"n", "S_rho_n", "n_S_rho", "I_rho_n"});
  for (std::size_t n : powers) {
    std::vector<double> lambdas(n + 1, 0.0);
    lambdas.back() = 1.0;
    const MessageMatrix sigma = grand_canonical(src.alphabet, lambdas, src.rho, trunc);
    const double s = von_neumann_entropy(sigma);
    t.add({fmt(n), fmt(s), fmt(static_cast<double>(n) * s1), fmt(raw_information(sigma))});
    r.check_close("S(rho^n) = n S(rho), n=" + std::to_string(n), s, static_cast<double>(n) * s1, 1e-9);
  }
  auto& sp = r.table("spectrum", {"k", "eigenvalue"});
  const LetterSpectrum spec = letter_spectrum(src.rho);
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) sp.add({fmt(static_cast<std::size_t>(k)), fmt(spec.eigenvalues(k))});
  return r;
}

Report run_huffman(const Json& config, const RunOptions& o) {
  Report r{"huffman", {}, {}};
  const ClassicalEnsemble ens = load_classical(config);
  const PrefixCode huff = huffman_build(ens);
  const PrefixCode code = o.mode == LengthMode::ideal ? PrefixCode::ideal(ens.probabilities()) : huff;
  auto& t = r.table("code", {"symbol", "p", "codeword", "length", "ideal_length"});
  for (std::size_t i = 0; i < ens.size(); ++i)
    t.add({ens.symbols()[i], fmt(ens.probability(i)), huff.codewords()[i], fmt(code.lengths()[i]), fmt(-std::log2(ens.probability(i)))});
  const double h = shannon_entropy(ens.probabilities());
  const double mean = expected_length(code, ens.probabilities());
  auto& s = r.table("summary", {"mode", "entropy", "mean_length", "kraft_sum", "prefix_free"});
  s.add({to_string(code.mode()), fmt(h), fmt(mean), fmt(kraft_sum(code)), fmt(code.is_prefix_free())});
  r.check_true("kraft inequality", kraft_ok(code));
  r.check_true("prefix free", huff.is_prefix_free());
  if (o.mode == LengthMode::ideal) {
    r.check_close("ideal mean length = H", mean, h, o.tolerance);
  } else {
    r.check_at_most("H <= mean length", h, mean, kStateTolerance);
    if (ens.size() >= 2) r.check_true("mean length < H + 1", mean < h + 1.0);
  }
  if (config.contains("message")) {
    if (!config.at("message").is_string()) throw MalformedInput("config: 'message' must be a string");
    const Message m = ens.parse(config.at("message").get<std::string>());
    const std::string bits = symbol_encode(huff, m);
    const Message back = symbol_decode(huff, bits);
    auto& mt = r.table("message", {"message", "bits", "decoded"});
    mt.add({ens.format(m), bits.empty() ? "-" : bits, ens.format(back)});
    r.check_true("symbol round trip", back == m);
  }
  return r;
}

Report run_kraft(const Json& config, const RunOptions& o) {
  Report r{"kraft", {}, {}};
  std::optional<PrefixCode> code;
  if (config.contains("codewords")) {
    std::vector<std::string> words;
    const Json& w = config.at("codewords");
    if (!w.is_array() || w.empty()) throw MalformedInput("config: 'codewords' must be a nonempty list of strings");
    for (const Json& x : w) {
      if (!x.is_string()) throw MalformedInput("config: 'codewords' must be a nonempty list of strings");
      words.push_back(x.get<std::string>());
    }
    code = PrefixCode::from_codewords(std::move(words));
  } else {
    const ClassicalEnsemble ens = load_classical(config);
    code = o.mode == LengthMode::ideal ? PrefixCode::ideal(ens.probabilities()) : huffman_build(ens);
  }
  auto& t = r.table("codewords", {"index", "codeword", "length"});
  for (std::size_t i = 0; i < code->size(); ++i)
    t.add({fmt(i), code->mode() == LengthMode::ideal ? "-" : code->codewords()[i], fmt(code->lengths()[i])});
  auto& s = r.table("summary", {"mode", "kraft_sum", "kraft_ok", "prefix_free"});
  s.add({to_string(code->mode()), fmt(kraft_sum(*code)), fmt(kraft_ok(*code)), fmt(code->is_prefix_free())});
  return r;
}

Report run_typical(const Json& config, const RunOptions&) {
  Report r{"typical", {}, {}};
  const ClassicalEnsemble ens = load_classical(config);
  const std::vector<std::size_t> ns = get_sizes(config, "N");
  const std::vector<double> deltas = get_double_list(config, "delta");
  const bool list = config.value("list_members", false);
  auto& t = r.table("typical", {"N", "delta", "size", "P_T", "bits_per_letter", "size_bound"});
  Table members{"members", {"N", "delta", "member", "probability"}, {}};
  for (std::size_t n : ns)
    for (double delta : deltas) {
      const TypicalSet ts = typical_set(ens, n, delta);
      std::size_t width = 0;
      while ((std::size_t{1} << width) < ts.size()) ++width;
      t.add({fmt(n), fmt(delta), fmt(ts.size()), fmt(ts.total_probability),
             fmt(n == 0 ? 0.0 : static_cast<double>(width) / static_cast<double>(n)), fmt(ts.size_upper_bound())});
      r.check_at_most("|T| <= 2^{N(H+delta)}, N=" + std::to_string(n) + " delta=" + fmt(delta), static_cast<double>(ts.size()),
                      ts.size_upper_bound(), 0.0);
      if (list)
        for (std::size_t k = 0; k < ts.size(); ++k) members.add({fmt(n), fmt(delta), ens.format(ts.members[k]), fmt(ts.probabilities[k])});
    }
  if (list) r.tables.push_back(std::move(members));
  return r;
}

Report run_block_code(const Json& config, const RunOptions& o) {
  Report r{"block-code", {}, {}};
  const ClassicalEnsemble ens = load_classical(config);
  auto& t = r.table("block_code", {"N", "delta", "size", "width", "P_T", "success_probability", "bits_per_letter", "junk_bits"});
  for (std::size_t n : get_sizes(config, "N"))
    for (double delta : get_double_list(config, "delta")) {
      const BlockCode code = block_code(ens, n, delta);
      const double success = code.success_probability();
      t.add({fmt(n), fmt(delta), fmt(code.typical().size()), fmt(code.width()), fmt(code.typical().total_probability), fmt(success),
             fmt(code.bits_per_letter()), code.junk_bits().empty() ? "-" : code.junk_bits()});
      r.check_close("success probability = P_T, N=" + std::to_string(n) + " delta=" + fmt(delta), success,
                    code.typical().total_probability, o.tolerance);
    }
  return r;
}

// -------------------------------------------------------------- translation

Report run_translate(const Json& config, const RunOptions& o) {
  Report r{"translate", {}, {}};
  const std::size_t source_dim = config.contains("source_dim") ? get_size(config, "source_dim") : 2;
  const AlphabetPtr source = load_alphabet(config, source_dim);
  const AlphabetPtr code = QuantumAlphabet::orthonormal(code_dim(config));
  const std::size_t n = config.contains("N") ? get_sizes(config, "N").front() : 1;
  const BlockTranslator t = build_translator(source, code, n);
  TruncationConfig trunc = truncation(config, o, 4 * n);
  if (trunc.max_code_length == 0) trunc.max_code_length = trunc.max_length / n * t.code_block();
  const KrausChannel channel = message_translator(t, trunc);
  add_kraus_checks(r, channel, o.tolerance);

  auto& table = r.table("translator", {"source_block", "code_block"});
  for (const auto& b : all_strings(source->basis_dim(), n)) table.add({b.to_string(), t.translate_block(b).to_string()});
  auto& rate = r.table("rate", {"N", "M", "R", "ideal_rate", "predicted_factor"});
  rate.add({fmt(t.source_block()), fmt(t.code_block()), fmt(t.rate()), fmt(t.ideal_rate()), fmt(t.information_factor())});

  std::vector<std::pair<std::string, MessageMatrix>> sigmas;
  if (config.contains("ensemble") || config.contains("lambdas") || config.contains("rho"))
    sigmas.emplace_back("config", load_message_matrix(config, trunc));
  std::mt19937_64 rng(o.seed);
  std::vector<std::size_t> aligned;
  for (std::size_t len = 0; len <= trunc.max_length; len += n) aligned.push_back(len);
  const std::size_t count = config.contains("random_states") ? get_size(config, "random_states") : 10;
  for (std::size_t k = 0; k < count; ++k) sigmas.emplace_back("random" + std::to_string(k), random_density(source, aligned, 3, 4, rng));

  auto& audit = r.table("audit", {"sigma", "I", "I_c", "ratio", "compressive"});
  for (const auto& [label, sigma] : sigmas) {
    const TranslationAudit a = translation_information_audit(t, sigma, trunc);
    audit.add({label, fmt(a.information), fmt(a.encoded_information), fmt(a.ratio), fmt(is_compressive(channel, sigma, o.tolerance))});
    r.check_at_most("I <= I_c (" + label + ")", a.information, a.encoded_information, o.tolerance);
    if (a.information > 0.0)
      r.check_close("I_c = factor * I (" + label + ")", a.encoded_information, a.predicted_factor * a.information, o.tolerance);
    if (t.ideal_rate()) r.check_close("ideal rate: I_c = I (" + label + ")", a.encoded_information, a.information, o.tolerance);
  }
  return r;
}

// --------------------------------------------------------------- schumacher

Report run_schumacher(const Json& config, const RunOptions& o) {
  Report r{"schumacher", {}, {}};
  const LetterSource src = load_letter_source(config);
  const LetterEnsemble letters = src.letters ? *src.letters : eigen_letters(src.alphabet, src.rho);
  const AlphabetPtr code = QuantumAlphabet::orthonormal(code_dim(config));
  const std::vector<std::size_t> ns = get_sizes(config, "N");
  const std::vector<double> deltas = get_double_list(config, "delta");
  const TruncationConfig trunc = truncation(config, o, *std::max_element(ns.begin(), ns.end()));
  auto& t = r.table("schumacher", {"N", "delta", "dimV", "R", "ideal_R", "P_T", "confidence", "bound", "I", "I_c_physical",
                                   "I_c_discarded_junk", "I_c_ideal", "compressive"});
  for (std::size_t n : ns)
    for (double delta : deltas) {
      const SchumacherCode sc = build_schumacher(src.alphabet, src.rho, n, delta, code, trunc);
      const SchumacherConfidence conf = schumacher_confidence(sc, letters);
      const SchumacherInformation info = schumacher_information(sc);
      std::vector<double> lambdas(n + 1, 0.0);
      lambdas.back() = 1.0;
      const MessageMatrix sigma = grand_canonical(src.alphabet, lambdas, src.rho, trunc);
      t.add({fmt(n), fmt(delta), fmt(sc.typical.dimension()), fmt(sc.rate), fmt(sc.ideal_rate), fmt(sc.typical.total_probability),
             fmt(conf.confidence), fmt(conf.bound), fmt(info.information), fmt(info.physical), fmt(info.discarded_junk),
             fmt(info.ideal), fmt(is_compressive(sc.pair.encoder(), sigma, o.tolerance))});
      const std::string tag = " N=" + std::to_string(n) + " delta=" + fmt(delta);
      r.check_at_most("confidence >= 2 P_T - 1" + tag, conf.bound, conf.confidence, o.tolerance);
      add_kraus_checks(r, sc.pair.encoder(), o.tolerance);
      add_kraus_checks(r, sc.pair.decoder(), o.tolerance);
      const std::size_t strings = guarded_power(letters.alphabet->letter_count(), n, kEnumerationGuard);
      if (strings <= 4096)
        r.check_close("confidence closed form = Kraus double sum" + tag, conf.confidence,
                      confidence(canonical_ensemble(letters, n), sc.pair), o.tolerance);
    }
  return r;
}

Report run_schumacher_grand(const Json& config, const RunOptions& o) {
  Report r{"schumacher-grand", {}, {}};
  const LetterSource src = load_letter_source(config);
  const std::vector<double> lambdas = get_doubles(config, "lambdas");
  const double delta = get_double(config, "delta");
  const AlphabetPtr code = QuantumAlphabet::orthonormal(code_dim(config));
  const TruncationConfig trunc = truncation(config, o, lambdas.size() - 1);
  const GrandSchumacherCode gs = generalized_schumacher(src.alphabet, lambdas, src.rho, delta, code, trunc);
  const MessageMatrix sigma = grand_canonical(src.alphabet, lambdas, src.rho, trunc);

  auto& t = r.table("sectors", {"n", "lambda", "dimV", "rate", "P_T"});
  for (const auto& s : gs.sectors) t.add({fmt(s.length), fmt(s.weight), fmt(s.dimension), fmt(s.rate), fmt(s.total_probability)});
  const double measured = encoded_information(gs.pair.encoder(), sigma);
  auto& s = r.table("summary", {"P_T", "I", "I_c", "I_c_measured", "compressive"});
  s.add({fmt(gs.total_probability()), fmt(raw_information(sigma)), fmt(gs.encoded_information()), fmt(measured),
         fmt(is_compressive(gs.pair.encoder(), sigma, o.tolerance))});
  r.check_close("I_c formula = measured", gs.encoded_information(), measured, o.tolerance);
  add_kraus_checks(r, gs.pair.encoder(), o.tolerance);
  add_kraus_checks(r, gs.pair.decoder(), o.tolerance);
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& sec : gs.sectors)
    if (sec.dimension > 0)
      worst = std::max(worst, static_cast<double>(sec.rate) * code->log2_dim() - static_cast<double>(sec.length) * src.alphabet->log2_dim());
  if (std::isfinite(worst)) r.check_at_most("I_c <= I on typical strings (max excess)", worst, 0.0, o.tolerance);
  return r;
}

// ----------------------------------------------------------------- lossless

Report run_lossless_grand(const Json& config, const RunOptions& o) {
  Report r{"lossless-grand", {}, {}};
  const LetterSource src = load_letter_source(config);
  const std::vector<double> lambdas = get_doubles(config, "lambdas");
  const QuantumSymbolCode code = build_symbol_code(src.alphabet, src.rho, o.mode);
  TruncationConfig trunc = truncation(config, o, lambdas.size() - 1);
  std::size_t longest = 0;
  for (const auto& c : code.codewords) longest = std::max(longest, c.size());
  if (trunc.max_code_length == 0) trunc.max_code_length = std::max<std::size_t>(1, longest * trunc.max_length);

  auto& cb = r.table("codebook", {"letter", "eigenvalue", "codeword", "length"});
  for (std::size_t a = 0; a < code.codewords.size(); ++a)
    cb.add({fmt(a), fmt(code.spectrum.eigenvalues(static_cast<Eigen::Index>(a))), code.codewords[a], fmt(code.lengths[a])});
  const GrandCompression g = compress_grand_canonical(lambdas, code, trunc);
  auto& s = r.table("summary", {"mode", "I", "I_c", "I_c_measured", "S_sigma", "sum_lambda_n_S_rho", "H_lambda", "gap"});
  s.add({to_string(o.mode), fmt(g.information), fmt(g.encoded_information), fmt(g.measured_information), fmt(g.entropy),
         fmt(g.sector_entropy), fmt(g.length_entropy), fmt(g.entropy - g.sector_entropy)});
  r.check_close("I_c formula = measured", g.encoded_information, g.measured_information, o.tolerance);
  r.check_close("S(sigma) = H(lambda) + sum lambda_n n S(rho)", g.entropy, g.length_entropy + g.sector_entropy, 1e-9);
  if (o.mode == LengthMode::ideal) {
    r.check_close("ideal: I_c = sum lambda_n n S(rho)", g.encoded_information, g.sector_entropy, o.tolerance);
  } else {
    double mean_n = 0.0;
    for (std::size_t n = 0; n < lambdas.size(); ++n) mean_n += lambdas[n] * static_cast<double>(n);
    r.check_at_most("integer: sum lambda_n n S(rho) <= I_c", g.sector_entropy, g.encoded_information, o.tolerance);
    r.check_true("integer: I_c < sum lambda_n n (S(rho) + 1)", mean_n == 0.0 || g.encoded_information < g.sector_entropy + mean_n);
  }
  add_kraus_checks(r, symbol_encoder(code, trunc), o.tolerance);
  return r;
}

Report run_lossless_general(const Json& config, const RunOptions& o) {
  Report r{"lossless-general", {}, {}};
  TruncationConfig trunc = truncation(config, o, 4);
  const MessageMatrix sigma = load_message_matrix(config, trunc);
  sigma.validate_density();
  if (trunc.max_code_length == 0) trunc.max_code_length = 4 * trunc.max_length + 8;
  const GeneralLosslessCode code = build_general_code(sigma, o.mode, trunc);

  auto& cb = r.table("codebook", {"index", "eigenvalue", "length", "codeword"});
  for (std::size_t i = 0; i < code.codebook.size(); ++i)
    cb.add({fmt(i), fmt(code.codebook[i].eigenvalue), fmt(code.codebook[i].length), code.codebook[i].codeword.to_string()});
  const double s = von_neumann_entropy(sigma);
  const double info = raw_information(sigma);
  const double ic = encoded_information_general(code, sigma);
  auto& sum = r.table("summary", {"mode", "S_sigma", "I", "I_c", "ratio", "escape", "letter_width"});
  sum.add({to_string(o.mode), fmt(s), fmt(info), fmt(ic), fmt(info == 0.0 ? std::nan("") : ic / info), code.escape.to_string(),
           fmt(code.letter_width)});
  if (o.mode == LengthMode::ideal) {
    r.check_close("ideal: I_c = S(sigma)", ic, s, o.tolerance);
  } else {
    r.check_at_most("integer: S(sigma) <= I_c", s, ic, o.tolerance);
    r.check_true("integer: I_c < S(sigma) + 1", ic < s + 1.0);
    r.check_close("integer: I_c = measured code length", ic, encoded_information(code.encoder, sigma), o.tolerance);
  }
  add_kraus_checks(r, code.encoder, o.tolerance);

  std::mt19937_64 rng(o.seed);
  const std::size_t trials = config.contains("round_trips") ? get_size(config, "round_trips") : 20;
  double worst = 0.0;
  for (std::size_t k = 0; k < trials; ++k) {
    const ManyLetterVector phi = random_state(sigma.alphabet(), lengths_up_to(trunc.max_length), 4, rng);
    const DecodeResult back = decode(code, encode(code, phi));
    worst = std::max(worst, max_abs_difference(back.message, phi));
  }
  auto& rt = r.table("round_trips", {"trials", "max_error"});
  rt.add({fmt(trials), fmt(worst)});
  r.check_at_most("round trip error", worst, 0.0, o.tolerance);
  return r;
}

Report run_core_info(const Json& config, const RunOptions& o) {
  Report r{"core-info", {}, {}};
  const TruncationConfig trunc = truncation(config, o, 4);
  const MessageMatrix sigma = load_message_matrix(config, trunc);
  sigma.validate_density();
  const CoreInformationObservable obs = CoreInformationObservable::from_matrix(sigma);
  auto& t = r.table("eigenvectors", {"index", "eigenvalue", "I0", "minus_log2_q"});
  for (std::size_t i = 0; i < obs.pairs().size(); ++i) {
    const auto& p = obs.pairs()[i];
    const double i0 = core_information(obs, p.eigenvector);
    t.add({fmt(i), fmt(p.eigenvalue), fmt(i0), fmt(-std::log2(p.eigenvalue))});
    r.check_close("I0(e_" + std::to_string(i) + ") = -log2 q", i0, -std::log2(p.eigenvalue), o.tolerance);
  }
  const double i0 = core_information(obs, sigma);
  const double s = von_neumann_entropy(sigma);
  auto& sum = r.table("summary", {"I0_sigma", "S_sigma", "I_sigma"});
  sum.add({fmt(i0), fmt(s), fmt(raw_information(sigma))});
  r.check_close("I0(sigma) = S(sigma)", i0, s, o.tolerance);
  return r;
}

// ------------------------------------------------------------------- audit

KrausChannel scaled(const KrausChannel& ch, double factor) {
  std::vector<SparseOperator> ops = ch.operators();
  for (auto& op : ops)
    for (auto& [s, col] : op)
      for (auto& [c, a] : col) a *= factor;
  return KrausChannel(ch.name() + " x" + fmt(factor), ch.source(), ch.code(), std::move(ops), ch.source_lengths(), ch.code_lengths());
}

Report run_audit_channel(const Json& config, const RunOptions& o) {
  Report r{"audit-channel", {}, {}};
  if (!config.contains("channel") || !config.at("channel").is_string())
    throw MalformedInput("config: 'channel' must name one of translation, schumacher, schumacher-grand, symbol, general");
  const std::string kind = config.at("channel").get<std::string>();
  std::vector<KrausChannel> channels;
  std::optional<MessageMatrix> sigma;
  if (kind == "translation") {
    const std::size_t source_dim = config.contains("source_dim") ? get_size(config, "source_dim") : 2;
    const AlphabetPtr source = load_alphabet(config, source_dim);
    const std::size_t n = config.contains("N") ? get_sizes(config, "N").front() : 1;
    const BlockTranslator t = build_translator(source, QuantumAlphabet::orthonormal(code_dim(config)), n);
    TruncationConfig trunc = truncation(config, o, 2 * n);
    if (trunc.max_code_length == 0) trunc.max_code_length = trunc.max_length / n * t.code_block();
    const CodePair pair = lossless_pair(message_translator(t, trunc));
    channels = {pair.encoder(), pair.decoder()};
  } else if (kind == "schumacher") {
    const LetterSource src = load_letter_source(config);
    const std::size_t n = get_sizes(config, "N").front();
    const TruncationConfig trunc = truncation(config, o, n);
    const SchumacherCode sc =
        build_schumacher(src.alphabet, src.rho, n, get_double(config, "delta"), QuantumAlphabet::orthonormal(code_dim(config)), trunc);
    channels = {sc.pair.encoder(), sc.pair.decoder()};
    std::vector<double> lambdas(n + 1, 0.0);
    lambdas.back() = 1.0;
    sigma = grand_canonical(src.alphabet, lambdas, src.rho, trunc);
  } else if (kind == "schumacher-grand") {
    const LetterSource src = load_letter_source(config);
    const std::vector<double> lambdas = get_doubles(config, "lambdas");
    const TruncationConfig trunc = truncation(config, o, lambdas.size() - 1);
    const GrandSchumacherCode gs = generalized_schumacher(src.alphabet, lambdas, src.rho, get_double(config, "delta"),
                                                          QuantumAlphabet::orthonormal(code_dim(config)), trunc);
    channels = {gs.pair.encoder(), gs.pair.decoder()};
    sigma = grand_canonical(src.alphabet, lambdas, src.rho, trunc);
  } else if (kind == "symbol") {
    const LetterSource src = load_letter_source(config);
    const QuantumSymbolCode code = build_symbol_code(src.alphabet, src.rho, o.mode);
    TruncationConfig trunc = truncation(config, o, 3);
    std::size_t longest = 0;
    for (const auto& c : code.codewords) longest = std::max(longest, c.size());
    if (trunc.max_code_length == 0) trunc.max_code_length = std::max<std::size_t>(1, longest * trunc.max_length);
    channels = {symbol_encoder(code, trunc)};
  } else if (kind == "general") {
    TruncationConfig trunc = truncation(config, o, 3);
    sigma = load_message_matrix(config, trunc);
    if (trunc.max_code_length == 0) trunc.max_code_length = 4 * trunc.max_length + 8;
    channels = {build_general_code(*sigma, o.mode, trunc).encoder};
  } else {
    throw MalformedInput("config: unknown channel kind '" + kind + "'");
  }
  if (config.contains("scale")) channels.front() = scaled(channels.front(), get_double(config, "scale"));

  auto& t = r.table("audit", {"channel", "kraus_dimension", "kraus_max_deviation", "kraus_frobenius", "kraus_pass",
                              "unital_dimension", "unital_max_deviation", "unital_pass"});
  for (const auto& ch : channels) {
    const IdentityReport k = check_kraus(ch, o.tolerance);
    const IdentityReport u = check_unital(ch, o.tolerance);
    t.add({ch.name(), fmt(k.dimension), fmt(k.max_deviation), fmt(k.frobenius_deviation), fmt(k.passed), fmt(u.dimension),
           fmt(u.max_deviation), fmt(u.passed)});
    r.check_at_most("kraus completeness: " + ch.name(), k.frobenius_deviation, 0.0, o.tolerance);
  }
  if (sigma) {
    auto& c = r.table("compressivity", {"channel", "I", "I_c", "compressive"});
    c.add({channels.front().name(), fmt(raw_information(*sigma)), fmt(encoded_information(channels.front(), *sigma)),
           fmt(is_compressive(channels.front(), *sigma, o.tolerance))});
  }
  return r;
}

using Runner = std::function<Report(const Json&, const RunOptions&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"entropy", run_entropy},
      {"huffman", run_huffman},
      {"kraft", run_kraft},
      {"typical", run_typical},
      {"block-code", run_block_code},
      {"translate", run_translate},
      {"schumacher", run_schumacher},
      {"schumacher-grand", run_schumacher_grand},
      {"lossless-grand", run_lossless_grand},
      {"lossless-general", run_lossless_general},
      {"core-info", run_core_info},
      {"audit-channel", run_audit_channel},
  };
  return table;
}

}  // namespace

std::pair<ExitCode, std::string> classify(const std::exception& e) {
  if (dynamic_cast<const MalformedInput*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e)) return {ExitCode::parse, "parse"};
  if (dynamic_cast<const GuardExceeded*>(&e) || dynamic_cast<const TruncationOverflow*>(&e)) return {ExitCode::guard, "guard"};
  if (dynamic_cast<const InvariantViolation*>(&e)) return {ExitCode::invariant, "invariant"};
  if (dynamic_cast<const ConvergenceError*>(&e)) return {ExitCode::numerics, "numerics"};
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const DomainError*>(&e) || dynamic_cast<const AlphabetMismatch*>(&e))
    return {ExitCode::input, "input"};
  return {ExitCode::failure, "error"};
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"entropy",          "huffman",        "kraft",          "typical",
                                              "block-code",       "translate",      "schumacher",     "schumacher-grand",
                                              "lossless-grand",   "lossless-general", "core-info",    "audit-channel"};
  return names;
}

Report run_experiment(const std::string& subcommand, const Json& config, const RunOptions& options) {
  auto it = runners().find(subcommand);
  if (it == runners().end()) throw MalformedInput("unknown subcommand '" + subcommand + "'");
  return it->second(config, options);
}

Json run_manifest(const std::string& subcommand, const Json& config, const RunOptions& options, const Report& report) {
  Json opts{{"seed", options.seed}, {"mode", to_string(options.mode)}, {"tolerance", fmt(options.tolerance)}};
  opts["lmax"] = options.lmax ? Json(*options.lmax) : Json(nullptr);
  opts["config"] = options.config_path ? Json(*options.config_path) : Json(nullptr);
  return Json{
      {"tool", "mlq"},
      {"subcommand", subcommand},
      {"config", config},
      {"options", opts},
      {"versions",
       {{"mlq", kVersion},
        {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                      std::to_string(EIGEN_MINOR_VERSION)},
        {"compiler", __VERSION__}}},
      {"tolerances",
       {{"state", fmt(kStateTolerance)},
        {"operator", fmt(kOperatorTolerance)},
        {"eigen_cutoff", fmt(kEigenCutoff)},
        {"rank_cutoff", fmt(kRankCutoff)},
        {"enumeration_guard", kEnumerationGuard},
        {"checks", fmt(options.tolerance)}}},
      {"checks", checks_json(report)},
      {"status", report.ok() ? "ok" : "invariant violation"},
  };
}

int run_cli(const std::string& subcommand, const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const Json config = options.config_path ? load_config(*options.config_path) : Json::object();
    const Report report = run_experiment(subcommand, config, options);
    write_report(out, report);
    if (options.out_dir) {
      std::filesystem::create_directories(*options.out_dir);
      const std::filesystem::path dir(*options.out_dir);
      std::ofstream tsv(dir / (subcommand + ".tsv"));
      write_report(tsv, report);
      std::ofstream manifest(dir / "manifest.json");
      manifest << run_manifest(subcommand, config, options, report).dump(2) << '\n';
      if (!tsv || !manifest) throw std::runtime_error("cannot write reports to " + *options.out_dir);
    }
    if (!report.ok()) {
      for (const auto& c : report.checks)
        if (!c.passed) err << "error[invariant]: " << c.name << ": value " << fmt(c.value) << ", expected " << fmt(c.expected) << '\n';
      return static_cast<int>(ExitCode::invariant);
    }
    return static_cast<int>(ExitCode::ok);
  } catch (const std::exception& e) {
    const auto [code, tag] = classify(e);
    err << "error[" << tag << "]: " << e.what() << '\n';
    return static_cast<int>(code);
  }
}

ManyLetterVector random_state(const AlphabetPtr& alphabet, const std::vector<std::size_t>& lengths, std::size_t terms,
                              std::mt19937_64& rng) {
  if (lengths.empty()) throw InvalidArgument("random state: no lengths");
  std::normal_distribution<double> gauss;
  ManyLetterVector v(alphabet);
  const std::size_t d = alphabet->basis_dim();
  if (terms == 0) {
    for (const auto& s : strings_with_lengths(d, lengths)) v.add(s, Complex{gauss(rng), gauss(rng)});
  } else {
    std::uniform_int_distribution<std::size_t> pick_length(0, lengths.size() - 1);
    for (std::size_t k = 0; k < terms; ++k) {
      const std::size_t n = lengths[pick_length(rng)];
      std::uniform_int_distribution<std::size_t> pick(0, guarded_power(d, n, kEnumerationGuard) - 1);
      v.add(BasisString::from_index(pick(rng), d, n), Complex{gauss(rng), gauss(rng)});
    }
  }
  return v.normalized();
}

MessageMatrix random_density(const AlphabetPtr& alphabet, const std::vector<std::size_t>& lengths, std::size_t rank,
                             std::size_t terms, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<std::pair<double, ManyLetterVector>> states;
  double total = 0.0;
  for (std::size_t k = 0; k < rank; ++k) {
    states.emplace_back(expo(rng), random_state(alphabet, lengths, terms, rng));
    total += states.back().first;
  }
  for (auto& s : states) s.first /= total;
  return MessageMatrix::from_weighted_states(alphabet, states);
}

}  // namespace mlq
