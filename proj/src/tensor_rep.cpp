#include "qgw/tensor_rep.hpp"

#include "qgw/qalg.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgw {

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::E: return "E";
    case GeneratorKind::F: return "F";
    case GeneratorKind::K: return "K";
    case GeneratorKind::Kinv: return "Kinv";
  }
  return "?";
}

Integer multinomial(const std::vector<int>& content) {
  Integer result = 1;
  int total = 0;
  for (int part : content) {
    if (part < 0) return 0;
    for (int k = 1; k <= part; ++k) {
      ++total;
      result *= total;
      result /= k;
    }
  }
  return result;
}

// --- MatrixCache ----------------------------------------------------------------

namespace {

std::string content_token(const Weight& w) {
  if (!w.content()) throw std::invalid_argument("cache needs a content weight");
  std::string s = "(";
  for (std::size_t k = 0; k < w.content()->size(); ++k)
    s += (k ? "," : "") + std::to_string((*w.content())[k]);
  return s + ")";
}

const char* spec_dir(Specialization s) { return s == Specialization::generic ? "generic" : "q1"; }

}  // namespace

MatrixCache::MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::string MatrixCache::header(int n, int N, GeneratorKind kind, int i, int r,
                                const Weight& lambda, int rows, int cols) {
  std::ostringstream os;
  os << n << ' ' << N << ' ' << to_string(kind) << ' ' << i << ' ' << r << ' '
     << content_token(lambda) << ' ' << rows << ' ' << cols;
  return os.str();
}

std::filesystem::path MatrixCache::file_for(Specialization spec, int n, int N, GeneratorKind kind,
                                            int i, int r, const Weight& lambda) const {
  std::string name = "n" + std::to_string(n) + "_N" + std::to_string(N) + "_" +
                     to_string(kind) + std::to_string(i) + "_r" + std::to_string(r) + "_l";
  for (int part : *lambda.content()) name += "_" + std::to_string(part);
  return dir_ / spec_dir(spec) / (name + ".mat");
}

std::optional<OperatorMatrix> MatrixCache::load(Specialization spec, int n, int N,
                                                GeneratorKind kind, int i, int r,
                                                const Weight& lambda,
                                                const Weight& target) const {
  const auto path = file_for(spec, n, N, kind, i, r, lambda);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string head;
  std::getline(in, head);
  std::istringstream hs(head);
  int hn = 0, hN = 0, hi = 0, hr = 0, rows = -1, cols = -1;
  std::string hkind, hlambda;
  hs >> hn >> hN >> hkind >> hi >> hr >> hlambda >> rows >> cols;
  if (!hs || hn != n || hN != N || hkind != to_string(kind) || hi != i || hr != r ||
      hlambda != content_token(lambda) || rows < 0 || cols < 0) {
    throw std::runtime_error("cache file " + path.string() + " header '" + head +
                             "' does not match request '" +
                             header(n, N, kind, i, r, lambda, rows, cols) + "'");
  }
  SparseMatrix<LaurentPoly> m(rows, cols);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int row = 0, col = 0;
    ls >> row >> col;
    std::string rest;
    std::getline(ls, rest);
    if (!ls && !ls.eof()) throw std::runtime_error("malformed cache line in " + path.string());
    m.set(row, col, LaurentPoly::parse(rest));
  }
  return OperatorMatrix{lambda, target, std::move(m)};
}

void MatrixCache::store(Specialization spec, int n, int N, GeneratorKind kind, int i, int r,
                        const OperatorMatrix& m) const {
  const auto path = file_for(spec, n, N, kind, i, r, m.source);
  std::filesystem::create_directories(path.parent_path());
  // Write to a temporary name first so concurrent readers never see a
  // partial file.
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(path.string()) ^
                                 reinterpret_cast<std::uintptr_t>(&m));
  {
    std::ofstream out(tmp);
    out << header(n, N, kind, i, r, m.source, m.matrix.rows(), m.matrix.cols()) << '\n';
    out << m.matrix.to_text([](const LaurentPoly& p) { return p.to_string(); });
  }
  std::filesystem::rename(tmp, path);
}

MatrixCache::Stats MatrixCache::stats() const {
  Stats s;
  if (!std::filesystem::exists(dir_)) return s;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir_)) {
    if (e.is_regular_file() && e.path().extension() == ".mat") {
      ++s.files;
      s.bytes += e.file_size();
    }
  }
  return s;
}

std::size_t MatrixCache::clear() const {
  std::size_t removed = 0;
  if (!std::filesystem::exists(dir_)) return 0;
  std::vector<std::filesystem::path> victims;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".mat") victims.push_back(e.path());
  for (const auto& p : victims) removed += std::filesystem::remove(p) ? 1 : 0;
  return removed;
}

// --- WeightModule ---------------------------------------------------------------

WeightModule::WeightModule(int n, int N, Specialization spec, ModuleLimits limits)
    : n_(n), N_(N), spec_(spec), cartan_(CartanData::type_a(n - 1 < 1 ? 1 : n - 1)) {
  if (n < 2) throw std::invalid_argument("build_module needs n >= 2");
  if (N < 1) throw std::invalid_argument("build_module needs N >= 1");
  if (n > limits.max_n || N > limits.max_N)
    throw std::invalid_argument("module (n=" + std::to_string(n) + ", N=" + std::to_string(N) +
                                ") exceeds size cap (n <= " + std::to_string(limits.max_n) +
                                ", N <= " + std::to_string(limits.max_N) + ")");
  std::uint64_t total = 1;
  for (int k = 0; k < N; ++k) total *= static_cast<std::uint64_t>(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> content(n, 0);
    std::uint64_t c = code;
    for (int p = N - 1; p >= 0; --p) {
      ++content[c % n];
      c /= n;
    }
    spaces_[content].words.push_back(code);
  }
  for (auto it = spaces_.rbegin(); it != spaces_.rend(); ++it)
    weights_.push_back(Weight::from_content(it->first));
}

WeightModule build_module(int n, int N, Specialization spec, ModuleLimits limits) {
  return WeightModule(n, N, spec, limits);
}

std::uint64_t WeightModule::encode(const std::vector<int>& word) const {
  std::uint64_t code = 0;
  for (int letter : word) code = code * n_ + static_cast<std::uint64_t>(letter - 1);
  return code;
}

std::vector<int> WeightModule::decode(std::uint64_t code) const {
  std::vector<int> word(N_);
  for (int p = N_ - 1; p >= 0; --p) {
    word[p] = static_cast<int>(code % n_) + 1;
    code /= n_;
  }
  return word;
}

void WeightModule::check_shape(const Weight& lambda) const {
  if (!lambda.content() || static_cast<int>(lambda.content()->size()) != n_)
    throw std::invalid_argument("weight " + lambda.to_string() + " is not an sl_" +
                                std::to_string(n_) + " content");
  const auto& c = *lambda.content();
  if (std::accumulate(c.begin(), c.end(), 0) != N_)
    throw std::invalid_argument("weight " + lambda.to_string() + " does not sum to N=" +
                                std::to_string(N_));
}

void WeightModule::check_index(int i) const {
  if (i < 1 || i >= n_)
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n_ - 1));
}

bool WeightModule::has_weight(const Weight& lambda) const {
  if (!lambda.content() || static_cast<int>(lambda.content()->size()) != n_) return false;
  return spaces_.count(*lambda.content()) > 0;
}

const WeightModule::Space* WeightModule::space(const Weight& lambda) const {
  check_shape(lambda);
  auto it = spaces_.find(*lambda.content());
  return it == spaces_.end() ? nullptr : &it->second;
}

int WeightModule::dimension(const Weight& lambda) const {
  const Space* s = space(lambda);
  return s ? static_cast<int>(s->words.size()) : 0;
}

std::uint64_t WeightModule::total_dimension() const {
  std::uint64_t t = 0;
  for (const auto& [c, s] : spaces_) t += s.words.size();
  return t;
}

std::vector<std::vector<int>> WeightModule::basis(const Weight& lambda) const {
  std::vector<std::vector<int>> out;
  if (const Space* s = space(lambda))
    for (auto code : s->words) out.push_back(decode(code));
  return out;
}

int WeightModule::index_of(const Weight& lambda, const std::vector<int>& word) const {
  const Space* s = space(lambda);
  if (!s || static_cast<int>(word.size()) != N_) return -1;
  const auto code = encode(word);
  auto it = std::lower_bound(s->words.begin(), s->words.end(), code);
  if (it == s->words.end() || *it != code) return -1;
  return static_cast<int>(it - s->words.begin());
}

LaurentPoly WeightModule::scalar(const LaurentPoly& p) const {
  if (spec_ == Specialization::generic) return p;
  return LaurentPoly(evaluate_at_one(p));
}

OperatorMatrix WeightModule::identity(const Weight& lambda) const {
  return {lambda, lambda, SparseMatrix<LaurentPoly>::identity(dimension(lambda))};
}

OperatorMatrix WeightModule::zero(const Weight& source, const Weight& target) const {
  return {source, target, SparseMatrix<LaurentPoly>(dimension(target), dimension(source))};
}

OperatorMatrix WeightModule::generator(GeneratorKind kind, int i, const Weight& lambda) const {
  check_index(i);
  check_shape(lambda);
  if (kind == GeneratorKind::K || kind == GeneratorKind::Kinv) {
    const int sign = kind == GeneratorKind::K ? 1 : -1;
    const LaurentPoly k = scalar(LaurentPoly::q(sign * lambda.pairing(i)));
    OperatorMatrix id = identity(lambda);
    id.matrix = id.matrix.scaled(k);
    return id;
  }
  const bool raise = kind == GeneratorKind::E;
  const Weight target = lambda.shifted(cartan_, i, raise ? 1 : -1);
  OperatorMatrix out = zero(lambda, target);
  const Space* src = space(lambda);
  if (!src || out.matrix.rows() == 0) return out;
  const Space* dst = space(target);
  // <e_l, alpha_i> for a letter l.
  auto weight_of = [i](int letter) { return (letter == i + 1) - (letter == i); };
  const int from = raise ? i : i + 1;
  const int to = raise ? i + 1 : i;
  for (int col = 0; col < static_cast<int>(src->words.size()); ++col) {
    std::vector<int> word = decode(src->words[col]);
    for (int p = 0; p < N_; ++p) {
      if (word[p] != from) continue;
      // Delta(E) = E⊗1 + K⊗E picks up K from the factors to the left;
      // Delta(F) = F⊗K^{-1} + 1⊗F picks up K^{-1} from the factors to the right.
      int exponent = 0;
      if (raise) {
        for (int k = 0; k < p; ++k) exponent += weight_of(word[k]);
      } else {
        for (int k = p + 1; k < N_; ++k) exponent -= weight_of(word[k]);
      }
      word[p] = to;
      const auto code = encode(word);
      word[p] = from;
      auto it = std::lower_bound(dst->words.begin(), dst->words.end(), code);
      const int row = static_cast<int>(it - dst->words.begin());
      out.matrix.add_to(row, col, scalar(LaurentPoly::q(exponent)));
    }
  }
  return out;
}

OperatorMatrix WeightModule::compute_divided_power(GeneratorKind kind, int i, int r,
                                                   const Weight& lambda) const {
  const int step = kind == GeneratorKind::E ? 1 : -1;
  OperatorMatrix acc = identity(lambda);
  Weight current = lambda;
  for (int k = 0; k < r; ++k) {
    acc = compose(generator(kind, i, current), acc);
    current = current.shifted(cartan_, i, step);
  }
  const LaurentPoly divisor = scalar(qfact(r));
  if (divisor == LaurentPoly(1)) return acc;
  SparseMatrix<LaurentPoly> divided(acc.matrix.rows(), acc.matrix.cols());
  for (auto& [row, col, v] : acc.matrix.triplets()) {
    auto quotient = v.divide_exact(divisor);
    if (!quotient) {
      throw std::logic_error("divided power " + to_string(kind) + std::to_string(i) + "^(" +
                             std::to_string(r) + ") at " + lambda.to_string() +
                             ": entry " + v.to_string() + " not divisible by " +
                             divisor.to_string());
    }
    divided.set(row, col, std::move(*quotient));
  }
  acc.matrix = std::move(divided);
  return acc;
}

OperatorMatrix WeightModule::divided_power(GeneratorKind kind, int i, int r,
                                           const Weight& lambda) const {
  if (kind != GeneratorKind::E && kind != GeneratorKind::F)
    throw std::invalid_argument("divided powers exist only for E and F");
  if (r < 0) throw std::invalid_argument("negative divided power");
  check_index(i);
  check_shape(lambda);
  if (r == 0) return identity(lambda);
  Key key{kind, i, r, *lambda.content()};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  }
  const Weight target = lambda.shifted(cartan_, i, kind == GeneratorKind::E ? r : -r);
  std::optional<OperatorMatrix> value;
  bool loaded = false;
  if (disk_ && !lambda.is_null()) {
    value = disk_->load(spec_, n_, N_, kind, i, r, lambda, target);
    loaded = value.has_value();
  }
  if (!value) {
    value = compute_divided_power(kind, i, r, lambda);
    if (disk_ && !lambda.is_null()) disk_->store(spec_, n_, N_, kind, i, r, *value);
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.emplace(key, std::make_shared<const OperatorMatrix>(*value));
  if (inserted) (loaded ? counters_.loaded : counters_.computed) += 1;
  return *it->second;
}

WeightModule::CacheCounters WeightModule::cache_counters() const {
  std::lock_guard lock(mutex_);
  return counters_;
}

Weight WeightModule::word_target(std::span<const GeneratorLetter> word,
                                 const Weight& source) const {
  Weight current = source;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int sign = it->kind == GeneratorKind::E ? 1 : -1;
    current = current.shifted(cartan_, it->index, sign * it->power);
  }
  return current;
}

OperatorMatrix WeightModule::evaluate_word(std::span<const GeneratorLetter> word,
                                           const Weight& source) const {
  OperatorMatrix acc = identity(source);
  Weight current = source;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind != GeneratorKind::E && it->kind != GeneratorKind::F)
      throw std::invalid_argument("word letters must be E or F");
    if (current.is_null()) return zero(source, word_target(word, source));
    acc = compose(divided_power(it->kind, it->index, it->power, current), acc);
    current = acc.target;
  }
  return acc;
}

// --- Verifiers ------------------------------------------------------------------

bool expect_equal(VerificationReport& report, const OperatorMatrix& lhs, const OperatorMatrix& rhs,
                  const std::string& what) {
  ++report.comparisons;
  if (lhs == rhs) return true;
  Counterexample ce;
  ce.weight = lhs.source.to_string();
  ce.note = what;
  auto text = [](const OperatorMatrix& m) {
    return m.source.to_string() + " -> " + m.target.to_string() + " [" + m.matrix.shape() +
           "]\n" + m.matrix.to_text([](const LaurentPoly& p) { return p.to_string(); });
  };
  ce.matrices.emplace_back("lhs", text(lhs));
  ce.matrices.emplace_back("rhs", text(rhs));
  report.fail(std::move(ce));
  return false;
}

namespace {

VerificationReport make_report(const WeightModule& m, std::string check, std::string citation) {
  VerificationReport r;
  r.check = std::move(check);
  r.citation = std::move(citation);
  r.param("n", m.n()).param("N", m.N());
  r.param("q", m.specialization() == Specialization::generic ? "generic" : "1");
  return r;
}

}  // namespace

VerificationReport verify_divided_power_rule(const WeightModule& m, int i, int r1, int r2) {
  auto report = make_report(m, "divided_power_rule", "prop-4.1");
  report.param("i", i).param("r1", r1).param("r2", r2);
  ReportTimer timer(report);
  const LaurentPoly coeff = m.scalar(qbinom(r1 + r2, r1));
  for (const auto& lambda : m.weights()) {
    for (auto kind : {GeneratorKind::E, GeneratorKind::F}) {
      const auto inner = m.divided_power(kind, i, r2, lambda);
      const auto lhs = compose(m.divided_power(kind, i, r1, inner.target), inner);
      const auto rhs = scaled(m.divided_power(kind, i, r1 + r2, lambda), coeff);
      expect_equal(report, lhs, rhs,
                   to_string(kind) + "^(" + std::to_string(r1) + ") " + to_string(kind) + "^(" +
                       std::to_string(r2) + ") vs qbinom * " + to_string(kind) + "^(" +
                       std::to_string(r1 + r2) + ")");
    }
  }
  return report;
}

VerificationReport verify_weight_dimensions(const WeightModule& m) {
  auto report = make_report(m, "weight_dimensions", "sec-3.1");
  ReportTimer timer(report);
  Integer total = 0;
  for (const auto& lambda : m.weights()) {
    ++report.comparisons;
    const Integer expected = multinomial(*lambda.content());
    const Integer got = m.dimension(lambda);
    total += got;
    if (got != expected)
      report.fail({lambda.to_string(), {}, {{"dimension", got.get_str()}, {"multinomial", expected.get_str()}},
                   "weight space dimension differs from the multinomial"});
  }
  ++report.comparisons;
  Integer expected_total = 1;
  for (int k = 0; k < m.N(); ++k) expected_total *= m.n();
  if (total != expected_total)
    report.fail({"", {}, {{"total", total.get_str()}}, "weight spaces do not add up to n^N"});
  return report;
}

VerificationReport verify_ef_straightening(const WeightModule& m, int i, int a, int b,
                                           const Weight& lambda) {
  auto report = make_report(m, "ef_straightening", "cor-4.3");
  report.param("i", i).param("a", a).param("b", b).param("lambda", lambda.to_string());
  ReportTimer timer(report);
  const auto& cartan = m.cartan();
  const int pair = lambda.pairing(i);
  // (outer kind, outer power, inner power, binomial top)
  GeneratorKind left = GeneratorKind::E, right = GeneratorKind::F;
  int left_power = b, right_power = a, top = pair - a + b;
  if (top < 0) {
    left = GeneratorKind::F;
    right = GeneratorKind::E;
    left_power = a;
    right_power = b;
    top = a - b - pair;
  }
  const auto inner = m.divided_power(right, i, right_power, lambda);
  const auto lhs = compose(m.divided_power(left, i, left_power, inner.target), inner);
  OperatorMatrix rhs = m.zero(lambda, lhs.target);
  for (int j = 0; j <= std::min(a, b); ++j) {
    const LaurentPoly c = m.scalar(qbinom(top, j));
    if (c.is_zero()) continue;
    const auto first = m.divided_power(left, i, left_power - j, lambda);
    const auto term = compose(m.divided_power(right, i, right_power - j, first.target), first);
    rhs += scaled(term, c);
  }
  expect_equal(report, lhs, rhs,
               to_string(left) + "^(" + std::to_string(left_power) + ") " + to_string(right) +
                   "^(" + std::to_string(right_power) + ") straightening");
  if (a == 1 && b == 1) {
    const auto e = m.generator(GeneratorKind::E, i, lambda);
    const auto f = m.generator(GeneratorKind::F, i, lambda);
    const auto ef = compose(m.generator(GeneratorKind::E, i, f.target), f);
    const auto fe = compose(m.generator(GeneratorKind::F, i, e.target), e);
    expect_equal(report, ef - fe, scaled(m.identity(lambda), m.scalar(qint(pair))),
                 "ef - fe = [<lambda,alpha_i>] id");
  }
  (void)cartan;
  return report;
}

VerificationReport verify_ef_straightening_all(const WeightModule& m, int i, int a, int b) {
  auto report = make_report(m, "ef_straightening", "cor-4.3");
  report.param("i", i).param("a", a).param("b", b);
  ReportTimer timer(report);
  for (const auto& lambda : m.weights()) report.absorb(verify_ef_straightening(m, i, a, b, lambda));
  return report;
}

VerificationReport verify_serre(const WeightModule& m, int i, int j) {
  if (i == j) throw std::invalid_argument("verify_serre needs i != j");
  const bool adjacent = m.cartan().adjacent(i, j);
  auto report = make_report(m, adjacent ? "serre" : "distant_commutation", "cond-viii");
  report.param("i", i).param("j", j);
  ReportTimer timer(report);
  for (const auto& lambda : m.weights()) {
    for (auto kind : {GeneratorKind::E, GeneratorKind::F}) {
      const std::string k = to_string(kind);
      if (adjacent) {
        const GeneratorLetter xi{kind, i, 1}, xj{kind, j, 1}, xi2{kind, i, 2};
        const std::vector<GeneratorLetter> lhs{xi, xj, xi}, r1{xi2, xj}, r2{xj, xi2};
        expect_equal(report, m.evaluate_word(lhs, lambda),
                     m.evaluate_word(r1, lambda) + m.evaluate_word(r2, lambda),
                     k + "i " + k + "j " + k + "i = " + k + "i^(2) " + k + "j + " + k + "j " + k +
                         "i^(2)");
      } else {
        const GeneratorLetter xi{kind, i, 1}, xj{kind, j, 1};
        const std::vector<GeneratorLetter> l{xi, xj}, r{xj, xi};
        expect_equal(report, m.evaluate_word(l, lambda), m.evaluate_word(r, lambda),
                     k + "i " + k + "j = " + k + "j " + k + "i");
      }
    }
  }
  return report;
}

VerificationReport verify_mixed_decompositions(const WeightModule& m, int i, int j, int a, int b) {
  if (!m.cartan().adjacent(i, j))
    throw std::invalid_argument("verify_mixed_decompositions needs adjacent i, j");
  if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("need a, b >= 0 and a + b >= 1");
  auto report = make_report(m, "mixed_decomposition", a == 1 || b == 1 ? "prop-4.7" : "cor-4.8");
  report.param("i", i).param("j", j).param("a", a).param("b", b);
  ReportTimer timer(report);
  const LaurentPoly c_left = m.scalar(qbinom(a + b - 1, b));
  const LaurentPoly c_right = m.scalar(qbinom(a + b - 1, a));
  for (const auto& lambda : m.weights()) {
    for (auto kind : {GeneratorKind::E, GeneratorKind::F}) {
      const std::vector<GeneratorLetter> lhs{{kind, i, a}, {kind, j, 1}, {kind, i, b}};
      const std::vector<GeneratorLetter> r1{{kind, i, a + b}, {kind, j, 1}};
      const std::vector<GeneratorLetter> r2{{kind, j, 1}, {kind, i, a + b}};
      expect_equal(report, m.evaluate_word(lhs, lambda),
                   scaled(m.evaluate_word(r1, lambda), c_left) +
                       scaled(m.evaluate_word(r2, lambda), c_right),
                   to_string(kind) + " mixed decomposition");
    }
  }
  return report;
}

VerificationReport verify_distant_and_ef_commutations(const WeightModule& m, int i, int j) {
  if (i == j) throw std::invalid_argument("verify_distant_and_ef_commutations needs i != j");
  auto report = make_report(m, "distant_and_ef_commutation", "cond-ix");
  report.param("i", i).param("j", j);
  ReportTimer timer(report);
  const bool adjacent = m.cartan().adjacent(i, j);
  for (const auto& lambda : m.weights()) {
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        const std::vector<GeneratorLetter> fe{{GeneratorKind::F, j, b}, {GeneratorKind::E, i, a}};
        const std::vector<GeneratorLetter> ef{{GeneratorKind::E, i, a}, {GeneratorKind::F, j, b}};
        expect_equal(report, m.evaluate_word(fe, lambda), m.evaluate_word(ef, lambda),
                     "F_j^(" + std::to_string(b) + ") E_i^(" + std::to_string(a) + ")");
      }
    }
    if (!adjacent) {
      for (auto kind : {GeneratorKind::E, GeneratorKind::F}) {
        const std::vector<GeneratorLetter> l{{kind, i, 1}, {kind, j, 1}}, r{{kind, j, 1}, {kind, i, 1}};
        expect_equal(report, m.evaluate_word(l, lambda), m.evaluate_word(r, lambda),
                     to_string(kind) + " distant commutation");
      }
    }
  }
  return report;
}

}  // namespace qgw
