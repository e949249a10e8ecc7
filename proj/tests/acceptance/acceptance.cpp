// Acceptance suite: one pass/fail line per criterion.
//   mlq_acceptance               run all criteria
//   mlq_acceptance --criterion K run criterion K only

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/classical_oracle.hpp"
#include "../oracles/dense_oracle.hpp"
#include "mlq/channel.hpp"
#include "mlq/classical.hpp"
#include "mlq/lossless.hpp"
#include "mlq/message_matrix.hpp"
#include "mlq/schumacher.hpp"
#include "mlq/translation.hpp"

namespace {

using namespace mlq;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) passed_ = false;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const {
    std::ostringstream out;
    out << count_ << " checks";
    if (!notes_.empty()) out << "; " << notes_;
    for (const auto& f : failures_) out << "; failed: " << f;
    return {passed_, out.str()};
  }

 private:
  bool passed_ = true;
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string num(double x, int precision = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

Eigen::MatrixXcd diag2(double a, double b) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

std::vector<double> random_distribution(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& x : p) total += (x = expo(rng) + 1e-6);
  for (double& x : p) x /= total;
  return p;
}

// Normalized state with Gaussian amplitudes on `terms` random strings of the
// given lengths (all strings when terms == 0).
ManyLetterVector random_vector(const AlphabetPtr& a, const std::vector<std::size_t>& lengths, std::size_t terms,
                               std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ManyLetterVector v(a);
  const auto all = strings_with_lengths(a->basis_dim(), lengths);
  if (terms == 0) {
    for (const auto& s : all) v.add(s, {g(rng), g(rng)});
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t k = 0; k < terms; ++k) v.add(all[pick(rng)], {g(rng), g(rng)});
  }
  return v.normalized();
}

MessageMatrix random_sigma(const AlphabetPtr& a, const std::vector<std::size_t>& lengths, std::size_t rank, std::size_t terms,
                           std::mt19937_64& rng) {
  const std::vector<double> w = random_distribution(rank, rng);
  std::vector<std::pair<double, ManyLetterVector>> states;
  for (std::size_t k = 0; k < rank; ++k) states.emplace_back(w[k], random_vector(a, lengths, terms, rng));
  return MessageMatrix::from_weighted_states(a, states);
}

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// 1. Entropy identities.
Outcome criterion_1() {
  const auto start = Clock::now();
  Tally t;
  const auto q = QuantumAlphabet::orthonormal(2);
  const double half = von_neumann_entropy(diag2(0.5, 0.5));
  t.expect(std::abs(half - 1.0) <= 1e-12, "S(diag(0.5,0.5)) = " + num(half));
  const Eigen::MatrixXcd rho = diag2(0.9, 0.1);
  const double s1 = von_neumann_entropy(rho);
  TruncationConfig trunc;
  trunc.max_length = 8;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<double> lambdas(n + 1, 0.0);
    lambdas.back() = 1.0;
    const double s = von_neumann_entropy(grand_canonical(q, lambdas, rho, trunc));
    worst = std::max(worst, std::abs(s - static_cast<double>(n) * s1));
    t.expect(std::abs(s - static_cast<double>(n) * s1) <= 1e-9, "S(rho^" + std::to_string(n) + ")");
  }
  const double secs = elapsed(start);
  t.expect(secs < 1.0, "runtime " + num(secs, 3) + " s");
  t.note("max |S(rho^n) - nS| = " + num(worst, 3) + ", runtime " + num(secs, 3) + " s");
  return t.outcome();
}

// 2. Huffman optimality sandwich.
Outcome criterion_2() {
  const auto start = Clock::now();
  Tally t;
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> size(2, 32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = trial < 30 ? 2 + static_cast<std::size_t>(trial % 3) : size(rng);
    const std::vector<double> p = random_distribution(n, rng);
    const PrefixCode code = huffman_build(ClassicalEnsemble::from_probabilities(p));
    const double h = oracle::entropy(p);
    const double mean = expected_length(code, p);
    const std::string tag = "trial " + std::to_string(trial);
    t.expect(h <= mean + 1e-12 && mean < h + 1.0, tag + " sandwich");
    t.expect(kraft_sum(code) <= 1.0 + 1e-12, tag + " kraft");
    t.expect(code.is_prefix_free(), tag + " prefix free");
    if (n <= 4) t.expect(std::abs(mean - oracle::optimal_prefix_length(p)) <= 1e-12, tag + " exhaustive optimum");
  }
  const double secs = elapsed(start);
  t.expect(secs < 30.0, "runtime " + num(secs, 3) + " s");
  t.note("runtime " + num(secs, 3) + " s");
  return t.outcome();
}

// 3. Typical-subspace membership against brute-force enumeration.
Outcome criterion_3() {
  const auto start = Clock::now();
  Tally t;
  const auto q = QuantumAlphabet::orthonormal(2);
  Eigen::MatrixXcd mixed(2, 2);
  mixed << 0.95, 0.05, 0.05, 0.05;
  Eigen::MatrixXcd complex_rho(2, 2);
  complex_rho << 0.7, Complex(0.1, -0.15), Complex(0.1, 0.15), 0.3;
  const std::vector<Eigen::MatrixXcd> rhos{diag2(0.9, 0.1), mixed, complex_rho};
  for (std::size_t r = 0; r < rhos.size(); ++r) {
    const auto [l0, l1] = oracle::eigenvalues_2x2(rhos[r]);
    for (std::size_t n = 1; n <= 12; ++n)
      for (double delta : {0.1, 0.2, 0.3}) {
        const QuantumTypicalSubspace sub = quantum_typical_subspace(q, rhos[r], n, delta);
        const oracle::Typical brute = oracle::typical_set({l0, l1}, n, delta);
        std::set<BasisString> expected;
        for (const auto& m : brute.members) expected.insert(BasisString(std::vector<BasisString::Letter>(m.begin(), m.end())));
        const std::set<BasisString> got(sub.basis.begin(), sub.basis.end());
        t.expect(got == expected, "rho " + std::to_string(r) + " N=" + std::to_string(n) + " delta=" + num(delta));
        for (const auto& s : sub.basis) t.expect(sub.contains(s), "contains");
      }
  }
  const QuantumTypicalSubspace ref = quantum_typical_subspace(q, diag2(0.9, 0.1), 10, 0.3);
  t.expect(ref.dimension() == 10, "|T| = " + std::to_string(ref.dimension()));
  t.expect(std::abs(ref.total_probability - 0.3874) <= 1e-4, "P_T = " + num(ref.total_probability));
  const double secs = elapsed(start);
  t.expect(secs < 10.0, "runtime " + num(secs, 3) + " s");
  t.note("|T| = " + std::to_string(ref.dimension()) + ", P_T = " + num(ref.total_probability, 6) + ", runtime " + num(secs, 3) +
         " s");
  return t.outcome();
}

// 4. Schumacher bound, confidence computed two ways.
Outcome criterion_4() {
  Tally t;
  const auto code = QuantumAlphabet::orthonormal(2);
  std::vector<LetterEnsemble> ensembles;
  ensembles.push_back({QuantumAlphabet::orthonormal(2), {0.9, 0.1}});
  ensembles.push_back({QuantumAlphabet::orthonormal(2), {0.7, 0.3}});
  for (double theta : {0.3, 0.8, 1.2}) {
    Eigen::VectorXcd a(2), b(2);
    a << 1.0, 0.0;
    b << std::cos(theta), std::sin(theta);
    ensembles.push_back({std::make_shared<const QuantumAlphabet>(std::vector<Eigen::VectorXcd>{a, b}), {0.5, 0.5}});
  }
  {
    Eigen::VectorXcd a(2), b(2), c(2);
    a << 1.0, 0.0;
    b << 0.6, Complex(0.0, 0.8);
    c << std::sqrt(0.5), -std::sqrt(0.5);
    ensembles.push_back({std::make_shared<const QuantumAlphabet>(std::vector<Eigen::VectorXcd>{a, b, c}), {0.6, 0.25, 0.15}});
  }
  std::size_t configs = 0;
  double worst_gap = 0.0;
  double min_margin = 1e300;
  for (std::size_t e = 0; e < ensembles.size(); ++e) {
    const auto& letters = ensembles[e];
    const Eigen::MatrixXcd rho = letters.letter_matrix();
    for (std::size_t n : {2, 3, 4})
      for (double delta : {0.2, 0.5}) {
        TruncationConfig trunc;
        trunc.max_length = n;
        const SchumacherCode sc = build_schumacher(letters.alphabet, rho, n, delta, code, trunc);
        const SchumacherConfidence closed = schumacher_confidence(sc, letters);
        const double brute = oracle::confidence_dense(canonical_ensemble(letters, n), sc.pair);
        const std::string tag = "ensemble " + std::to_string(e) + " N=" + std::to_string(n) + " delta=" + num(delta);
        worst_gap = std::max(worst_gap, std::abs(closed.confidence - brute));
        min_margin = std::min(min_margin, closed.confidence - closed.bound);
        t.expect(std::abs(closed.confidence - brute) <= 1e-10, tag + " closed form vs double sum");
        t.expect(closed.confidence >= closed.bound - 1e-10, tag + " F >= 2P_T - 1");
        ++configs;
      }
  }
  t.expect(configs >= 20, "configurations " + std::to_string(configs));
  t.note(std::to_string(configs) + " configurations, max |closed - brute| = " + num(worst_gap, 3) +
         ", min F - (2P_T - 1) = " + num(min_margin, 6));
  return t.outcome();
}

// 5. Kraus completeness of every constructed code.
Outcome criterion_5() {
  Tally t;
  double worst = 0.0;
  auto audit = [&](const KrausChannel& ch) {
    const IdentityReport r = check_kraus(ch);
    const double dense = oracle::kraus_deviation(ch);
    worst = std::max({worst, r.max_deviation, dense});
    t.expect(r.max_deviation <= 1e-10 && dense <= 1e-10, ch.name() + " deviation " + num(std::max(r.max_deviation, dense), 3));
  };
  const auto q2 = QuantumAlphabet::orthonormal(2);
  for (auto [ds, dc, n] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{{2, 2, 1}, {3, 2, 2}, {4, 2, 1}, {2, 3, 3}}) {
    const BlockTranslator bt = build_translator(QuantumAlphabet::orthonormal(ds), QuantumAlphabet::orthonormal(dc), n);
    TruncationConfig trunc;
    trunc.max_length = 2 * n;
    trunc.max_code_length = 2 * bt.code_block();
    const KrausChannel enc = message_translator(bt, trunc);
    audit(enc);
    audit(lossless_pair(enc).decoder());
  }
  Eigen::MatrixXcd mixed(2, 2);
  mixed << 0.95, 0.05, 0.05, 0.05;
  for (const auto& rho : {diag2(0.9, 0.1), mixed}) {
    for (std::size_t n : {3, 6}) {
      TruncationConfig trunc;
      trunc.max_length = n;
      const SchumacherCode sc = build_schumacher(q2, rho, n, 0.3, q2, trunc);
      audit(sc.pair.encoder());
      audit(sc.pair.decoder());
    }
    TruncationConfig trunc;
    trunc.max_length = 4;
    const GrandSchumacherCode gs = generalized_schumacher(q2, {0.1, 0.2, 0.3, 0.2, 0.2}, rho, 0.8, q2, trunc);
    audit(gs.pair.encoder());
    audit(gs.pair.decoder());
    for (LengthMode mode : {LengthMode::integer, LengthMode::ideal}) {
      const QuantumSymbolCode sym = build_symbol_code(q2, rho, mode);
      TruncationConfig st;
      st.max_length = 4;
      st.max_code_length = 4;
      audit(symbol_encoder(sym, st));
    }
  }
  std::mt19937_64 rng(5);
  for (int k = 0; k < 4; ++k) {
    TruncationConfig trunc;
    trunc.max_length = 2;
    trunc.max_code_length = 16;
    const MessageMatrix sigma = random_sigma(q2, {0, 1, 2}, 2 + static_cast<std::size_t>(k), 3, rng);
    audit(build_general_code(sigma, k % 2 ? LengthMode::ideal : LengthMode::integer, trunc).encoder);
  }
  t.note("max deviation " + num(worst, 3));
  return t.outcome();
}

// 6. Translation never compresses; equality exactly at the ideal rate.
Outcome criterion_6() {
  Tally t;
  std::mt19937_64 rng(6);
  std::string summary;
  for (auto [ds, dc, n] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{{2, 2, 1}, {3, 2, 2}, {4, 2, 1}}) {
    const auto source = QuantumAlphabet::orthonormal(ds);
    const BlockTranslator bt = build_translator(source, QuantumAlphabet::orthonormal(dc), n);
    TruncationConfig trunc;
    trunc.max_length = 2 * n;
    trunc.max_code_length = 2 * bt.code_block();
    const KrausChannel enc = message_translator(bt, trunc);
    std::vector<std::size_t> lengths{0, n, 2 * n};
    double worst_gap = 1e300;
    double max_equal_gap = 0.0;
    for (int k = 0; k < 50; ++k) {
      const MessageMatrix sigma = random_sigma(source, lengths, 3, 4, rng);
      const double info = raw_information(sigma);
      const double ic = encoded_information(enc, sigma);
      const std::string tag = std::to_string(ds) + "->" + std::to_string(dc) + " sigma " + std::to_string(k);
      t.expect(ic >= info - 1e-10, tag + " I_c >= I");
      const bool equal = std::abs(ic - info) <= 1e-10;
      if (info > 1e-10) t.expect(equal == bt.ideal_rate(), tag + " equality iff ideal rate");
      worst_gap = std::min(worst_gap, ic - info);
      max_equal_gap = std::max(max_equal_gap, std::abs(ic - info));
    }
    summary += (summary.empty() ? "" : ", ") + std::to_string(ds) + "->" + std::to_string(dc) + " N=" + std::to_string(n) +
               " M=" + std::to_string(bt.code_block()) + (bt.ideal_rate() ? " ideal" : "") + " min(I_c-I)=" + num(worst_gap, 4);
  }
  t.note(summary);
  return t.outcome();
}

// 7. Lossless round trip.
Outcome criterion_7() {
  Tally t;
  std::mt19937_64 rng(7);
  const auto q2 = QuantumAlphabet::orthonormal(2);
  double worst = 1.0;
  auto record = [&](const ManyLetterVector& phi, const ManyLetterVector& back, const std::string& tag) {
    const double f = std::norm(inner_product(phi, express_in(back, phi.alphabet())));
    worst = std::min(worst, f);
    t.expect(f >= 1.0 - 1e-10, tag + " fidelity " + num(f));
  };
  for (int c = 0; c < 4; ++c) {
    TruncationConfig trunc;
    trunc.max_length = 3;
    trunc.max_code_length = 20;
    const MessageMatrix sigma = random_sigma(q2, {0, 1, 2, 3}, 2 + static_cast<std::size_t>(c), 3, rng);
    const GeneralLosslessCode code = build_general_code(sigma, c % 2 ? LengthMode::ideal : LengthMode::integer, trunc);
    for (int k = 0; k < 100; ++k) {
      ManyLetterVector phi(q2);
      if (k % 3 == 0) {
        // superposition of eigen-codewords of different lengths plus an outside component
        std::normal_distribution<double> g;
        for (const auto& cw : code.codebook) phi += Complex{g(rng), g(rng)} * express_in(cw.eigenvector, q2);
        phi += Complex{g(rng), 0.0} * random_vector(q2, {0, 1, 2, 3}, 0, rng);
        phi = phi.normalized();
      } else {
        phi = random_vector(q2, {0, 1, 2, 3}, k % 3 == 1 ? 0 : 3, rng);
      }
      record(phi, decode(code, encode(code, phi)).message, "general " + std::to_string(c));
    }
  }
  Eigen::MatrixXcd mixed(2, 2);
  mixed << 0.95, 0.05, 0.05, 0.05;
  const QuantumSymbolCode sym = build_symbol_code(q2, mixed, LengthMode::integer);
  TruncationConfig st;
  st.max_length = 4;
  st.max_code_length = 4;
  const KrausChannel enc = symbol_encoder(sym, st);
  for (int k = 0; k < 100; ++k) {
    const ManyLetterVector phi = random_vector(q2, {0, 1, 2, 3, 4}, k % 2 ? 0 : 4, rng);
    record(phi, decode(enc, encode(enc, phi)).message, "symbol");
  }
  const auto q3 = QuantumAlphabet::orthonormal(3);
  const BlockTranslator bt = build_translator(q3, q2, 2);
  TruncationConfig tt;
  tt.max_length = 4;
  tt.max_code_length = 2 * bt.code_block();
  const KrausChannel tr = message_translator(bt, tt);
  for (int k = 0; k < 100; ++k) {
    const ManyLetterVector phi = random_vector(q3, {0, 2, 4}, k % 2 ? 0 : 5, rng);
    record(phi, decode(tr, encode(tr, phi)).message, "translation");
  }
  t.note("min fidelity " + num(worst, 15));
  return t.outcome();
}

// 8. Optimal lossless compression identity.
Outcome criterion_8() {
  Tally t;
  std::mt19937_64 rng(8);
  const auto q2 = QuantumAlphabet::orthonormal(2);
  double worst_ideal = 0.0;
  for (int k = 0; k < 20; ++k) {
    TruncationConfig trunc;
    trunc.max_length = 3;
    trunc.max_code_length = 24;
    const std::size_t rank = 1 + static_cast<std::size_t>(k % 8);
    const MessageMatrix sigma = random_sigma(q2, {0, 1, 2, 3}, rank, k % 2 ? 0 : 4, rng);
    const double s = von_neumann_entropy(sigma);
    const double ideal = encoded_information_general(build_general_code(sigma, LengthMode::ideal, trunc), sigma);
    const double integer = encoded_information_general(build_general_code(sigma, LengthMode::integer, trunc), sigma);
    const std::string tag = "sigma " + std::to_string(k) + " rank " + std::to_string(rank);
    worst_ideal = std::max(worst_ideal, std::abs(ideal - s));
    t.expect(std::abs(ideal - s) <= 1e-10, tag + " ideal I_c " + num(ideal) + " vs S " + num(s));
    t.expect(s <= integer + 1e-10 && integer < s + 1.0, tag + " integer sandwich");
  }
  Eigen::MatrixXcd mixed(2, 2);
  mixed << 0.95, 0.05, 0.05, 0.05;
  double worst_canonical = 0.0;
  for (const auto& rho : {diag2(0.9, 0.1), mixed}) {
    const double s1 = oracle::entropy_dense(rho);
    const QuantumSymbolCode sym = build_symbol_code(q2, rho, LengthMode::ideal);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<double> lambdas(n + 1, 0.0);
      lambdas.back() = 1.0;
      TruncationConfig trunc;
      trunc.max_length = n;
      trunc.max_code_length = n;
      const GrandCompression g = compress_grand_canonical(lambdas, sym, trunc);
      worst_canonical = std::max(worst_canonical, std::abs(g.encoded_information - static_cast<double>(n) * s1));
      t.expect(std::abs(g.encoded_information - static_cast<double>(n) * s1) <= 1e-9, "canonical N=" + std::to_string(n));
    }
  }
  t.note("max |I_c - S| ideal " + num(worst_ideal, 3) + ", canonical " + num(worst_canonical, 3));
  return t.outcome();
}

// 9. Core information.
Outcome criterion_9() {
  Tally t;
  std::mt19937_64 rng(9);
  const auto q2 = QuantumAlphabet::orthonormal(2);
  for (int k = 0; k < 20; ++k) {
    const MessageMatrix sigma = random_sigma(q2, {0, 1, 2}, 1 + static_cast<std::size_t>(k % 5), 3, rng);
    const CoreInformationObservable obs = CoreInformationObservable::from_matrix(sigma);
    const double s = von_neumann_entropy(sigma);
    t.expect(std::abs(core_information(obs, sigma) - s) <= 1e-10, "I0(sigma) = S, sigma " + std::to_string(k));
    for (const auto& p : obs.pairs())
      t.expect(std::abs(core_information(obs, p.eigenvector) + std::log2(p.eigenvalue)) <= 1e-10, "I0(e_i) = -log2 q_i");
  }
  // Degenerate spectrum: rotate inside the degenerate eigenspace.
  const ManyLetterVector a = ManyLetterVector::basis(q2, BasisString::from_digits("0"));
  const ManyLetterVector b = ManyLetterVector::basis(q2, BasisString::from_digits("11"));
  const ManyLetterVector c = ManyLetterVector::basis(q2, BasisString::from_digits("-"));
  const MessageMatrix sigma = MessageMatrix::from_weighted_states(q2, {{0.3, a}, {0.3, b}, {0.4, c}});
  double worst = 0.0;
  for (double theta : {0.2, 0.9, 2.1}) {
    const ManyLetterVector ra = Complex{std::cos(theta), 0.0} * a + Complex{0.0, std::sin(theta)} * b;
    const ManyLetterVector rb = Complex{0.0, std::sin(theta)} * a + Complex{std::cos(theta), 0.0} * b;
    const CoreInformationObservable base(q2, {{0.3, a}, {0.3, b}, {0.4, c}});
    const CoreInformationObservable rotated(q2, {{0.3, ra}, {0.3, rb}, {0.4, c}});
    worst = std::max(worst, std::abs(core_information(base, sigma) - core_information(rotated, sigma)));
    const ManyLetterVector probe = random_vector(q2, {0, 1, 2}, 0, rng);
    worst = std::max(worst, std::abs(core_information(base, probe) - core_information(rotated, probe)));
  }
  t.expect(worst <= 1e-9, "rotation invariance " + num(worst, 3));
  t.note("max rotation difference " + num(worst, 3));
  return t.outcome();
}

// 10. Typical-set probability trend.
Outcome criterion_10() {
  const auto start = Clock::now();
  Tally t;
  const ClassicalEnsemble ens = ClassicalEnsemble::from_probabilities({0.9, 0.1});
  std::vector<double> pt;
  std::string values;
  for (std::size_t n : {4, 8, 12, 16}) {
    const double lib = typical_set(ens, n, 0.15).total_probability;
    const double brute = oracle::typical_set({0.9, 0.1}, n, 0.15).total;
    t.expect(std::abs(lib - brute) <= 1e-12, "N=" + std::to_string(n) + " library vs enumeration");
    pt.push_back(lib);
    values += (values.empty() ? "" : ", ") + num(lib, 10);
  }
  for (std::size_t i = 1; i < pt.size(); ++i)
    t.expect(pt[i] > pt[i - 1], "P_T strictly increasing at step " + std::to_string(i) + " (" + num(pt[i - 1], 10) + " -> " +
                                    num(pt[i], 10) + ")");
  const double secs = elapsed(start);
  t.expect(secs < 60.0, "runtime " + num(secs, 3) + " s");
  t.note("P_T(N=4,8,12,16) = " + values);
  return t.outcome();
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"entropy identities", criterion_1},
      {"Huffman optimality sandwich", criterion_2},
      {"typical-set oracle equivalence", criterion_3},
      {"Schumacher confidence bound", criterion_4},
      {"Kraus completeness audits", criterion_5},
      {"translation non-compressivity", criterion_6},
      {"lossless round trip", criterion_7},
      {"optimal lossless compression identity", criterion_8},
      {"core information", criterion_9},
      {"typical-set probability trend", criterion_10},
  };
  return list;
}

bool run_one(std::size_t k) {
  const Criterion& c = criteria().at(k - 1);
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("criterion %zu [%s]: %s (%s)\n", k, c.title, o.passed ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  return o.passed;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const long k = std::strtol(argv[++i], nullptr, 10);
      if (k < 1 || k > static_cast<long>(criteria().size())) {
        std::fprintf(stderr, "unknown criterion %s\n", argv[i]);
        return 2;
      }
      selected.push_back(static_cast<std::size_t>(k));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion K]\n", argv[0]);
      return 2;
    }
  }
  if (selected.empty())
    for (std::size_t k = 1; k <= criteria().size(); ++k) selected.push_back(k);
  bool ok = true;
  for (std::size_t k : selected) ok = run_one(k) && ok;
  return ok ? 0 : 1;
}
