#include "qgw/rewrite.hpp"

#include "qgw/qalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace qgw {

std::string FormalWord::to_string() const {
  if (letters.empty()) return "id";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const auto& l = letters[k];
    if (k) os << ' ';
    os << (l.kind == GeneratorKind::E ? 'E' : 'F') << l.index;
    if (l.power != 1) os << "^(" << l.power << ')';
  }
  return os.str();
}

std::vector<Weight> weight_flow(const CartanData& cartan, const FormalWord& word,
                                const Weight& source) {
  std::vector<Weight> flow{source};
  flow.reserve(word.letters.size() + 1);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (it->kind != GeneratorKind::E && it->kind != GeneratorKind::F)
      throw std::invalid_argument("formal words contain only E and F letters");
    const int r = it->kind == GeneratorKind::E ? it->power : -it->power;
    flow.push_back(flow.back().shifted(cartan, it->index, r));
  }
  return flow;
}

bool is_null_word(const CartanData& cartan, const FormalWord& word, const Weight& source) {
  const auto flow = weight_flow(cartan, word, source);
  return std::any_of(flow.begin(), flow.end(), [](const Weight& w) { return w.is_null(); });
}

FormalSum::FormalSum(std::shared_ptr<const CartanData> cartan, Weight source)
    : cartan_(std::move(cartan)), source_(std::move(source)) {
  if (!cartan_) throw std::invalid_argument("FormalSum needs Cartan data");
  if (static_cast<int>(source_.pairings().size()) != cartan_->rank())
    throw std::invalid_argument("weight " + source_.to_string() + " does not match rank " +
                                std::to_string(cartan_->rank()));
  if (source_.has_content() && cartan_->matrix() != CartanData::type_a(cartan_->rank()).matrix())
    throw std::invalid_argument("content weights need a type A graph");
}

void FormalSum::add(const FormalWord& word, const LaurentPoly& c) {
  for (const auto& l : word.letters) {
    if (!cartan_->contains(l.index))
      throw std::invalid_argument("index " + std::to_string(l.index) + " is not a vertex");
    if (l.power < 1) throw std::invalid_argument("divided powers must be >= 1");
  }
  if (c.is_zero()) return;
  const auto flow = weight_flow(*cartan_, word, source_);
  if (target_ && !(flow.back() == *target_))
    throw std::invalid_argument("word " + word.to_string() + " ends at " +
                                flow.back().to_string() + ", other terms end at " +
                                target_->to_string());
  target_ = flow.back();
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalSum FormalSum::prune_null() const {
  FormalSum out = empty_like();
  for (const auto& [w, c] : terms_)
    if (!is_null_word(*cartan_, w, source_)) out.add(w, c);
  return out;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") * " + w.to_string();
  }
  return out;
}

// --- Parsing ---------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  std::size_t index;  // 1-based
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t k = 0;
  auto push = [&](std::string t) { out.push_back({std::move(t), out.size() + 1}); };
  while (k < s.size()) {
    const char ch = s[k];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++k;
    } else if (ch == '+' || ch == '*') {
      push(std::string(1, ch));
      ++k;
    } else if (ch == '(') {
      int depth = 0;
      std::size_t start = k;
      for (; k < s.size(); ++k) {
        if (s[k] == '(') ++depth;
        if (s[k] == ')' && --depth == 0) break;
      }
      if (k == s.size()) throw RewriteParseError(out.size() + 1, "unbalanced '('");
      push(std::string(s.substr(start, k - start + 1)));
      ++k;
    } else {
      std::size_t start = k;
      while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k])) && s[k] != '+' &&
             s[k] != '*') {
        if (s[k] == '^' && k + 1 < s.size() && s[k + 1] == '(') {
          const auto close = s.find(')', k);
          if (close == std::string_view::npos)
            throw RewriteParseError(out.size() + 1, "unbalanced '('");
          k = close + 1;
        } else {
          ++k;
        }
      }
      push(std::string(s.substr(start, k - start)));
    }
  }
  return out;
}

std::optional<GeneratorLetter> parse_letter(const std::string& t) {
  if (t.size() < 2 || (t[0] != 'E' && t[0] != 'F')) return std::nullopt;
  std::size_t k = 1;
  while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
  if (k == 1) return std::nullopt;
  GeneratorLetter letter{t[0] == 'E' ? GeneratorKind::E : GeneratorKind::F, 0, 1};
  try {
    letter.index = std::stoi(t.substr(1, k - 1));
    if (k < t.size()) {
      if (t.compare(k, 2, "^(") != 0 || t.back() != ')') return std::nullopt;
      const std::string p = t.substr(k + 2, t.size() - k - 3);
      if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(c); }))
        return std::nullopt;
      letter.power = std::stoi(p);
    }
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  return letter;
}

}  // namespace

std::vector<std::pair<LaurentPoly, FormalWord>> parse_terms(std::string_view text,
                                                            const CartanData& cartan) {
  std::vector<std::pair<LaurentPoly, FormalWord>> terms;
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw RewriteParseError(1, "empty expression");
  std::size_t begin = 0;
  while (begin <= tokens.size()) {
    std::size_t end = begin;
    while (end < tokens.size() && tokens[end].text != "+") ++end;
    const std::size_t where = begin < tokens.size() ? tokens[begin].index : tokens.size() + 1;
    if (end == begin) throw RewriteParseError(where, "expected a term");

    // The coefficient runs up to the last '*' of the term.
    std::size_t star = end;
    for (std::size_t k = begin; k < end; ++k)
      if (tokens[k].text == "*") star = k;
    LaurentPoly coeff(1);
    std::size_t word_begin = begin;
    if (star != end) {
      if (star == begin) throw RewriteParseError(tokens[star].index, "missing coefficient");
      std::string ctext;
      for (std::size_t k = begin; k < star; ++k) ctext += tokens[k].text;
      if (ctext.size() >= 2 && ctext.front() == '(' && ctext.back() == ')')
        ctext = ctext.substr(1, ctext.size() - 2);
      try {
        coeff = LaurentPoly::parse(ctext);
      } catch (const std::exception& e) {
        throw RewriteParseError(tokens[begin].index, std::string("bad coefficient: ") + e.what());
      }
      word_begin = star + 1;
    }
    if (word_begin == end) {
      const std::size_t pos = word_begin < tokens.size() ? tokens[word_begin].index
                                                         : tokens.size() + 1;
      throw RewriteParseError(pos, "expected a word");
    }
    FormalWord word;
    for (std::size_t k = word_begin; k < end; ++k) {
      const auto& t = tokens[k];
      if (t.text == "id" && end - word_begin == 1) break;
      auto letter = parse_letter(t.text);
      if (!letter) throw RewriteParseError(t.index, "expected E<i> or F<i>, got '" + t.text + "'");
      if (!cartan.contains(letter->index))
        throw RewriteParseError(t.index, "index " + std::to_string(letter->index) +
                                             " is not a vertex of the graph");
      if (letter->power < 1) throw RewriteParseError(t.index, "divided power must be >= 1");
      word.letters.push_back(*letter);
    }
    terms.emplace_back(std::move(coeff), std::move(word));
    if (end == tokens.size()) break;
    begin = end + 1;
    if (begin == tokens.size()) throw RewriteParseError(tokens.size() + 1, "expected a term");
  }
  return terms;
}

FormalSum parse_sum(std::string_view text, std::shared_ptr<const CartanData> cartan,
                    const Weight& source) {
  FormalSum sum(cartan, source);
  for (const auto& [c, w] : parse_terms(text, *cartan)) sum.add(w, c);
  return sum;
}

// --- Rules ----------------------------------------------------------------------------

std::string to_string(Rule r) {
  switch (r) {
    case Rule::merge: return "merge";
    case Rule::commute: return "commute";
    case Rule::straighten: return "straighten";
    case Rule::serre: return "serre";
  }
  return "?";
}

namespace {

using Replacement = std::vector<std::pair<FormalWord, LaurentPoly>>;
using Letters = std::vector<GeneratorLetter>;

bool is_e(const GeneratorLetter& l) { return l.kind == GeneratorKind::E; }
bool is_f(const GeneratorLetter& l) { return l.kind == GeneratorKind::F; }

// letters[0, p) + middle + letters[p + width, end); zero powers dropped.
FormalWord splice(const Letters& letters, std::size_t p, std::size_t width, const Letters& middle) {
  FormalWord w;
  w.letters.assign(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(p));
  for (const auto& l : middle)
    if (l.power > 0) w.letters.push_back(l);
  w.letters.insert(w.letters.end(), letters.begin() + static_cast<std::ptrdiff_t>(p + width),
                   letters.end());
  return w;
}

std::optional<Replacement> step_merge(const CartanData&, const FormalWord& w, const Weight&) {
  const auto& L = w.letters;
  for (std::size_t p = 0; p + 1 < L.size(); ++p) {
    if (L[p].kind == L[p + 1].kind && L[p].index == L[p + 1].index) {
      const int r1 = L[p].power, r2 = L[p + 1].power;
      return Replacement{{splice(L, p, 2, {{L[p].kind, L[p].index, r1 + r2}}), qbinom(r1 + r2, r1)}};
    }
  }
  return std::nullopt;
}

bool commutes_out_of_order(const CartanData& cartan, const GeneratorLetter& x,
                           const GeneratorLetter& y) {
  if (is_e(x) && is_f(y)) return x.index != y.index;
  if (x.kind == y.kind) return x.index > y.index && !cartan.adjacent(x.index, y.index);
  return false;
}

std::optional<Replacement> step_commute(const CartanData& cartan, const FormalWord& w,
                                        const Weight&) {
  const auto& L = w.letters;
  for (std::size_t p = 0; p + 1 < L.size(); ++p) {
    if (commutes_out_of_order(cartan, L[p], L[p + 1]))
      return Replacement{{splice(L, p, 2, {L[p + 1], L[p]}), LaurentPoly(1)}};
  }
  return std::nullopt;
}

std::optional<Replacement> step_straighten(const CartanData& cartan, const FormalWord& w,
                                           const Weight& source) {
  const auto& L = w.letters;
  for (std::size_t p = 0; p + 1 < L.size(); ++p) {
    if (!(is_e(L[p]) && is_f(L[p + 1]) && L[p].index == L[p + 1].index)) continue;
    const int i = L[p].index;
    const int b = L[p].power, a = L[p + 1].power;
    // Weight entering the F letter.
    const auto flow = weight_flow(cartan, w, source);
    const int m = flow[L.size() - 2 - p].pairing(i);
    const int top = m - a + b;
    Replacement out;
    if (top >= 0) {
      for (int j = 0; j <= std::min(a, b); ++j) {
        LaurentPoly c = qbinom(top, j);
        if (c.is_zero()) continue;
        out.emplace_back(splice(L, p, 2, {{GeneratorKind::F, i, a - j}, {GeneratorKind::E, i, b - j}}),
                         std::move(c));
      }
    } else {
      // F^(a) E^(b) = sum_j [a-b-m choose j] E^(b-j) F^(a-j), solved for the j = 0 term.
      out.emplace_back(splice(L, p, 2, {{GeneratorKind::F, i, a}, {GeneratorKind::E, i, b}}),
                       LaurentPoly(1));
      for (int j = 1; j <= std::min(a, b); ++j) {
        LaurentPoly c = qbinom(a - b - m, j);
        if (c.is_zero()) continue;
        out.emplace_back(splice(L, p, 2, {{GeneratorKind::E, i, b - j}, {GeneratorKind::F, i, a - j}}),
                         -c);
      }
    }
    return out;
  }
  return std::nullopt;
}

std::optional<Replacement> step_serre(const CartanData& cartan, const FormalWord& w,
                                      const Weight&) {
  const auto& L = w.letters;
  for (std::size_t p = 0; p + 2 < L.size(); ++p) {
    const auto &x = L[p], &y = L[p + 1], &z = L[p + 2];
    if (!(x.kind == y.kind && y.kind == z.kind)) continue;
    if (x.index != z.index || y.power != 1 || !cartan.adjacent(x.index, y.index)) continue;
    const int a = x.power, b = z.power;
    const GeneratorLetter big{x.kind, x.index, a + b};
    return Replacement{{splice(L, p, 3, {big, y}), qbinom(a + b - 1, b)},
                       {splice(L, p, 3, {y, big}), qbinom(a + b - 1, a)}};
  }
  return std::nullopt;
}

using Step = std::optional<Replacement> (*)(const CartanData&, const FormalWord&, const Weight&);

Step step_for(Rule r) {
  switch (r) {
    case Rule::merge: return step_merge;
    case Rule::commute: return step_commute;
    case Rule::straighten: return step_straighten;
    case Rule::serre: return step_serre;
  }
  throw std::logic_error("unknown rule");
}

// Applies `step` once to every word it matches; with `fixpoint`, repeats on the
// results until nothing matches.
FormalSum apply_rule(const FormalSum& sum, Step step, bool fixpoint) {
  FormalSum current = sum;
  while (true) {
    FormalSum next = current.empty_like();
    bool changed = false;
    for (const auto& [w, c] : current.terms()) {
      auto rep = step(current.cartan(), w, current.source());
      if (!rep) {
        next.add(w, c);
        continue;
      }
      changed = true;
      for (const auto& [nw, nc] : *rep) next.add(nw, c * nc);
    }
    if (!changed || !fixpoint) return next;
    current = std::move(next);
  }
}

}  // namespace

FormalSum rule_merge_divided(const FormalSum& sum) { return apply_rule(sum, step_merge, true); }
FormalSum rule_commute_distant(const FormalSum& sum) { return apply_rule(sum, step_commute, true); }
FormalSum rule_straighten_ef(const FormalSum& sum) {
  return apply_rule(sum, step_straighten, false);
}
FormalSum rule_serre(const FormalSum& sum) { return apply_rule(sum, step_serre, false); }

WordMeasure measure(const CartanData& cartan, const FormalWord& word) {
  WordMeasure m;
  const auto& L = word.letters;
  m.letters = static_cast<std::int64_t>(L.size());
  std::int64_t e_power_left = 0;
  for (std::size_t r = 0; r < L.size(); ++r) {
    if (is_f(L[r])) m.inversions += e_power_left * L[r].power;
    if (is_e(L[r])) e_power_left += L[r].power;
    for (std::size_t p = 0; p < r; ++p)
      if (L[p].kind == L[r].kind && L[p].index > L[r].index &&
          !cartan.adjacent(L[p].index, L[r].index))
        ++m.disorder;
  }
  return m;
}

std::int64_t measure_chain_bound(const WordMeasure& m) {
  return (m.inversions + 1) * (m.letters + 1) * (m.letters * (m.letters - 1) / 2 + 1);
}

FormalSum normal_form(const FormalSum& sum, const NormalFormOptions& options,
                      NormalFormStats* stats) {
  NormalFormStats local;
  for (const auto& [w, c] : sum.terms())
    local.bound = std::max(local.bound, measure_chain_bound(measure(sum.cartan(), w)));
  const std::int64_t cap = local.bound + options.slack;

  FormalSum current = sum;
  while (true) {
    FormalSum next = current.empty_like();
    bool changed = false;
    for (const auto& [w, c] : current.terms()) {
      std::optional<Replacement> rep;
      for (Rule r : options.priority) {
        rep = step_for(r)(current.cartan(), w, current.source());
        if (rep) break;
      }
      if (!rep) {
        next.add(w, c);
        continue;
      }
      changed = true;
      ++local.applications;
      const WordMeasure before = measure(current.cartan(), w);
      for (const auto& [nw, nc] : *rep) {
        if (!(measure(current.cartan(), nw) < before))
          throw std::logic_error("rewrite of " + w.to_string() + " to " + nw.to_string() +
                                 " does not lower the measure");
        next.add(nw, c * nc);
      }
    }
    if (!changed) break;
    ++local.passes;
    if (local.passes > cap) {
      if (stats) *stats = local;
      throw RewriteCapExceeded("normal form not reached within " + std::to_string(cap) + " passes",
                               next.to_string());
    }
    current = std::move(next);
  }
  if (stats) *stats = local;
  return current;
}

// --- Oracle -----------------------------------------------------------------------

std::optional<Weight> realize_weight(const Weight& w, int n, int N) {
  if (w.has_content()) {
    const auto& c = *w.content();
    if (static_cast<int>(c.size()) != n) return std::nullopt;
    int total = 0;
    for (int x : c) {
      if (x < 0) return std::nullopt;
      total += x;
    }
    if (total != N) return std::nullopt;
    return w;
  }
  const auto& d = w.pairings();
  if (static_cast<int>(d.size()) != n - 1) return std::nullopt;
  // lambda_{k+1} = lambda_k + d_k and sum lambda = N fix lambda_1.
  long long rest = N;
  for (int k = 1; k < n; ++k) rest -= static_cast<long long>(n - k) * d[k - 1];
  if (rest % n != 0) return std::nullopt;
  std::vector<int> content{static_cast<int>(rest / n)};
  for (int k = 1; k < n; ++k) content.push_back(content.back() + d[k - 1]);
  if (std::any_of(content.begin(), content.end(), [](int x) { return x < 0; })) return std::nullopt;
  return Weight::from_content(std::move(content));
}

OperatorMatrix evaluate_sum(const FormalSum& sum, const WeightModule& m) {
  if (sum.cartan().rank() != m.n() - 1)
    throw std::invalid_argument("sum lives on a rank " + std::to_string(sum.cartan().rank()) +
                                " graph, module is sl_" + std::to_string(m.n()));
  const auto lambda = realize_weight(sum.source(), m.n(), m.N());
  if (!lambda || !m.has_weight(*lambda))
    throw std::invalid_argument("weight " + sum.source().to_string() + " is not realized in (" +
                                std::to_string(m.n()) + "," + std::to_string(m.N()) + ")");
  std::optional<OperatorMatrix> total;
  for (const auto& [w, c] : sum.terms()) {
    auto term = scaled(m.evaluate_word(w.letters, *lambda), m.scalar(c));
    if (total) *total += term;
    else total = std::move(term);
  }
  return total ? *total : m.zero(*lambda, *lambda);
}

VerificationReport oracle_equal(const FormalSum& a, const FormalSum& b, const WeightModule& m) {
  VerificationReport report;
  report.check = "rewrite_oracle";
  report.citation = "oracle";
  report.param("n", m.n()).param("N", m.N()).param("lambda", a.source().to_string());
  ReportTimer timer(report);
  if (!(a.source() == b.source()))
    throw std::invalid_argument("oracle_equal needs a common source weight");
  const auto lhs = evaluate_sum(a, m);
  const auto rhs = evaluate_sum(b, m);
  if (lhs.target == rhs.target) {
    expect_equal(report, lhs, rhs, a.to_string() + " vs " + b.to_string());
  } else {
    ++report.comparisons;
    if (lhs.matrix.nonzeros() != 0 || rhs.matrix.nonzeros() != 0)
      report.fail({a.source().to_string(), {a.to_string(), b.to_string()}, {},
                   "sums land on different weights"});
  }
  return report;
}

VerificationReport oracle_equal(const FormalSum& a, const FormalSum& b, int n, int N) {
  return oracle_equal(a, b, WeightModule(n, N));
}

FormalWord random_word(std::mt19937_64& rng, const CartanData& cartan, int length, int max_power) {
  std::uniform_int_distribution<int> kind(0, 1), index(1, cartan.rank()), power(1, max_power);
  FormalWord w;
  for (int k = 0; k < length; ++k)
    w.letters.push_back({kind(rng) ? GeneratorKind::F : GeneratorKind::E, index(rng), power(rng)});
  return w;
}

namespace {

struct Sample {
  std::shared_ptr<const WeightModule> module;
  FormalSum sum;
};

class SampleSource {
 public:
  explicit SampleSource(const RewriteSweep& sweep) : sweep_(sweep), rng_(sweep.seed) {
    if (sweep.n_min < 2 || sweep.n_max < sweep.n_min || sweep.N_min < 1 || sweep.N_max < sweep.N_min)
      throw std::invalid_argument("bad rewrite sweep ranges");
  }

  Sample next() {
    const int n = pick(sweep_.n_min, sweep_.n_max);
    const int N = pick(sweep_.N_min, sweep_.N_max);
    auto& slot = modules_[{n, N}];
    if (!slot) {
      auto m = std::make_shared<WeightModule>(n, N);
      if (sweep_.cache) m->attach_cache(sweep_.cache);
      slot = std::move(m);
      cartans_[n] = std::make_shared<const CartanData>(CartanData::type_a(n - 1));
    }
    const auto& ws = slot->weights();
    const Weight& lambda = ws[static_cast<std::size_t>(pick(0, static_cast<int>(ws.size()) - 1))];
    const auto& cartan = cartans_[n];
    FormalSum sum(cartan, lambda);
    sum.add(random_word(rng_, *cartan, pick(1, sweep_.max_length), sweep_.max_power), LaurentPoly(1));
    return {slot, std::move(sum)};
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  const RewriteSweep& sweep_;
  std::mt19937_64 rng_;
  std::map<std::pair<int, int>, std::shared_ptr<const WeightModule>> modules_;
  std::map<int, std::shared_ptr<const CartanData>> cartans_;
};

VerificationReport sweep_report(const char* check, const RewriteSweep& sweep) {
  VerificationReport report;
  report.check = check;
  report.citation = "oracle";
  report.param("n", std::to_string(sweep.n_min) + ".." + std::to_string(sweep.n_max))
      .param("N", std::to_string(sweep.N_min) + ".." + std::to_string(sweep.N_max))
      .param("samples", sweep.samples)
      .param("max_length", sweep.max_length);
  return report;
}

// Runs normal_form and turns its exceptions into a failure on `report`.
std::optional<FormalSum> checked_normal_form(VerificationReport& report, const FormalSum& sum,
                                             const NormalFormOptions& options) {
  try {
    return normal_form(sum, options);
  } catch (const RewriteCapExceeded& e) {
    report.fail({sum.source().to_string(), {sum.to_string(), e.stuck_term}, {}, e.what()});
  } catch (const std::logic_error& e) {
    report.fail({sum.source().to_string(), {sum.to_string()}, {}, e.what()});
  }
  return std::nullopt;
}

}  // namespace

VerificationReport check_rewrite_soundness(const RewriteSweep& sweep) {
  auto report = sweep_report("rewrite_soundness", sweep);
  ReportTimer timer(report);
  SampleSource source(sweep);
  for (int t = 0; t < sweep.samples; ++t) {
    auto [module, sum] = source.next();
    ++report.comparisons;
    const auto nf = checked_normal_form(report, sum, sweep.options);
    if (!nf) continue;
    const auto verdict = oracle_equal(sum, *nf, *module);
    if (!verdict.passed()) {
      auto ce = *verdict.counterexample;
      ce.words = {sum.to_string(), nf->to_string()};
      report.fail(std::move(ce));
    }
  }
  return report;
}

VerificationReport check_rewrite_confluence(const RewriteSweep& sweep) {
  auto report = sweep_report("rewrite_confluence", sweep);
  ReportTimer timer(report);
  SampleSource source(sweep);
  for (int t = 0; t < sweep.samples; ++t) {
    auto [module, sum] = source.next();
    NormalFormOptions shuffled = sweep.options;
    std::shuffle(shuffled.priority.begin(), shuffled.priority.end(), source.rng());
    ++report.comparisons;
    const auto a = checked_normal_form(report, sum, sweep.options);
    const auto b = checked_normal_form(report, sum, shuffled);
    if (!a || !b) continue;
    const auto verdict = oracle_equal(*a, *b, *module);
    if (!verdict.passed()) {
      auto ce = *verdict.counterexample;
      ce.words = {sum.to_string(), a->to_string(), b->to_string()};
      report.fail(std::move(ce));
    }
  }
  return report;
}

VerificationReport check_rewrite_termination(std::shared_ptr<const CartanData> cartan,
                                             const RewriteSweep& sweep) {
  VerificationReport report;
  report.check = "rewrite_termination";
  report.citation = "oracle";
  report.param("rank", cartan->rank()).param("samples", sweep.samples);
  ReportTimer timer(report);
  std::mt19937_64 rng(sweep.seed);
  const Weight zero(std::vector<int>(static_cast<std::size_t>(cartan->rank()), 0));
  for (int t = 0; t < sweep.samples; ++t) {
    FormalSum sum(cartan, zero);
    const int length = std::uniform_int_distribution<int>(1, sweep.max_length)(rng);
    sum.add(random_word(rng, *cartan, length, sweep.max_power), LaurentPoly(1));
    ++report.comparisons;
    checked_normal_form(report, sum, sweep.options);
  }
  return report;
}

}  // namespace qgw
