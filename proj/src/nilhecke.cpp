#include "qgw/nilhecke.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qgw {

MultiPoly MultiPoly::constant(int variables, const Integer& c) {
  MultiPoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int variables, int k) {
  if (k < 1 || k > variables) throw std::out_of_range("no variable x_" + std::to_string(k));
  Exponents e(variables, 0);
  e[k - 1] = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponents e, const Integer& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    const int t = std::accumulate(e.begin(), e.end(), 0);
    if (d && *d != t) return false;
    d = t;
  }
  return true;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != m_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (m_ != o.m_) throw std::invalid_argument("polynomials in different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  MultiPoly out(a.m_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::swapped(int k) const {
  if (k < 1 || k >= m_) throw std::out_of_range("no transposition s_" + std::to_string(k));
  MultiPoly out(m_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    std::swap(s[k - 1], s[k]);
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

MultiPoly MultiPoly::times_variable(int k) const {
  if (k < 1 || k > m_) throw std::out_of_range("no variable x_" + std::to_string(k));
  MultiPoly out(m_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    ++s[k - 1];
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*x" << k + 1;
      if (e[k] != 1) os << '^' << e[k];
    }
  }
  return os.str();
}

MultiPoly demazure(int k, const MultiPoly& f) {
  const int m = f.variables();
  if (k < 1 || k >= m) throw std::out_of_range("demazure position " + std::to_string(k));
  MultiPoly rest = f - f.swapped(k);
  MultiPoly quotient(m);
  // Long division by x_k - x_{k+1}, highest power of x_k first.
  while (!rest.is_zero()) {
    auto lead = std::max_element(rest.terms().begin(), rest.terms().end(),
                                 [k](const auto& a, const auto& b) {
                                   return a.first[k - 1] < b.first[k - 1];
                                 });
    MultiPoly::Exponents e = lead->first;
    const Integer c = lead->second;
    if (e[k - 1] == 0) throw std::logic_error("demazure division left a remainder");
    --e[k - 1];
    MultiPoly t = MultiPoly::monomial(e, c);
    quotient += t;
    rest -= t.times_variable(k) - t.times_variable(k + 1);
  }
  return quotient;
}

namespace {

void compositions(int m, int total, std::vector<int>& cur, std::vector<MultiPoly::Exponents>& out) {
  if (static_cast<int>(cur.size()) == m - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = total; a >= 0; --a) {
    cur.push_back(a);
    compositions(m, total - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiPoly> all_monomials(int m, int degree_bound) {
  if (m < 1) throw std::invalid_argument("need at least one variable");
  std::vector<MultiPoly> out;
  for (int d = 0; d <= degree_bound; ++d) {
    std::vector<MultiPoly::Exponents> exps;
    std::vector<int> cur;
    compositions(m, d, cur, exps);
    for (auto& e : exps) out.push_back(MultiPoly::monomial(std::move(e)));
  }
  return out;
}

std::vector<MultiPoly> random_polynomials(int m, int degree_bound, int samples,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nterms(1, 4), coeff(-3, 3), deg(0, degree_bound),
      var(0, m - 1);
  std::vector<MultiPoly> out;
  for (int s = 0; s < samples; ++s) {
    MultiPoly p(m);
    const int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
      MultiPoly::Exponents e(m, 0);
      const int d = deg(rng);
      for (int j = 0; j < d; ++j) ++e[var(rng)];
      int c = coeff(rng);
      if (c == 0) c = 1;
      p.add_term(e, c);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<MultiPoly> test_polynomials(int m, int degree_bound, int samples, std::uint64_t seed) {
  return samples == 0 ? all_monomials(m, degree_bound)
                      : random_polynomials(m, degree_bound, samples, seed);
}

namespace {

VerificationReport poly_report(std::string check, std::string citation, int m, int degree_bound,
                               int samples, std::uint64_t seed) {
  VerificationReport r;
  r.check = std::move(check);
  r.citation = std::move(citation);
  r.param("m", m).param("degree", degree_bound);
  r.param("inputs", samples == 0 ? std::string("exhaustive") : std::to_string(samples));
  r.param("seed", static_cast<long long>(seed));
  return r;
}

bool expect_poly(VerificationReport& report, const MultiPoly& lhs, const MultiPoly& rhs,
                 const MultiPoly& input, const std::string& what) {
  ++report.comparisons;
  if (lhs == rhs) return true;
  report.fail({"", {input.to_string()}, {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}},
               what});
  return false;
}

bool expect_klr(VerificationReport& report, const KLRElement& lhs, const KLRElement& rhs,
                const KLRElement& input, const std::string& what) {
  ++report.comparisons;
  if (lhs == rhs) return true;
  report.fail({"", {input.to_string()}, {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}},
               what});
  return false;
}

}  // namespace

VerificationReport check_nilhecke(int m, int degree_bound, int samples, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("check_nilhecke needs m >= 2");
  auto report = poly_report("nilhecke", "sec-6.rel-i", m, degree_bound, samples, seed);
  ReportTimer timer(report);
  for (const auto& f : test_polynomials(m, degree_bound, samples, seed)) {
    for (int k = 1; k < m; ++k) {
      const MultiPoly df = demazure(k, f);
      const std::string at = " (k=" + std::to_string(k) + ")";
      expect_poly(report, demazure(k, df), MultiPoly(m), f, "d_k^2 = 0" + at);
      if (k + 1 < m) {
        expect_poly(report, demazure(k, demazure(k + 1, df)),
                    demazure(k + 1, demazure(k, demazure(k + 1, f))), f,
                    "d_k d_{k+1} d_k = d_{k+1} d_k d_{k+1}" + at);
      }
      expect_poly(report, df.times_variable(k) - demazure(k, f.times_variable(k + 1)), f, f,
                  "x_k d_k - d_k x_{k+1} = 1" + at);
      expect_poly(report, demazure(k, f.times_variable(k)) - df.times_variable(k + 1), f, f,
                  "-x_{k+1} d_k + d_k x_k = 1" + at);
      if (f.is_homogeneous() && !df.is_zero()) {
        ++report.comparisons;
        if (!df.is_homogeneous() || df.internal_degree() != f.internal_degree() - 2)
          report.fail({"", {f.to_string()}, {{"d_k f", df.to_string()}},
                       "demazure does not lower the internal degree by 2" + at});
      }
    }
  }
  return report;
}

KLRElement::KLRElement(ColoredWord w, MultiPoly f) { add(w, f); }

void KLRElement::add(const ColoredWord& w, const MultiPoly& f) {
  if (f.is_zero()) return;
  if (static_cast<int>(w.size()) != f.variables())
    throw std::invalid_argument("word length and variable count differ");
  auto [it, inserted] = parts_.try_emplace(w, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

KLRElement& KLRElement::operator+=(const KLRElement& o) {
  for (const auto& [w, f] : o.parts_) add(w, f);
  return *this;
}

KLRElement KLRElement::times_variable(int k) const {
  KLRElement out;
  for (const auto& [w, f] : parts_) out.add(w, f.times_variable(k));
  return out;
}

std::string KLRElement::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, f] : parts_) {
    if (!first) os << " + ";
    first = false;
    os << '(';
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
    os << ")[" << f.to_string() << ']';
  }
  return os.str();
}

KLRElement klr_crossing(const CartanData& cartan, const ColoredWord& w, int k, const MultiPoly& f) {
  const int m = static_cast<int>(w.size());
  if (k < 1 || k >= m) throw std::out_of_range("crossing position " + std::to_string(k));
  for (int c : w)
    if (!cartan.contains(c)) throw std::invalid_argument("color " + std::to_string(c) + " not in graph");
  const int a = w[k - 1], b = w[k];
  if (a == b) return KLRElement(w, demazure(k, f));
  ColoredWord swapped = w;
  std::swap(swapped[k - 1], swapped[k]);
  MultiPoly g = f.swapped(k);
  if (cartan.adjacent(a, b) && a > b) g = g.times_variable(k) + g.times_variable(k + 1);
  return KLRElement(std::move(swapped), std::move(g));
}

KLRElement klr_crossing(const CartanData& cartan, const KLRElement& v, int k) {
  KLRElement out;
  for (const auto& [w, f] : v.components()) out += klr_crossing(cartan, w, k, f);
  return out;
}

VerificationReport check_klr_double_crossing(const CartanData& cartan, int i, int j,
                                             int degree_bound, int samples, std::uint64_t seed) {
  auto report = poly_report("klr_double_crossing", "sec-6.rel-ii", 2, degree_bound, samples, seed);
  report.param("i", i).param("j", j);
  ReportTimer timer(report);
  const ColoredWord w{i, j};
  for (const auto& f : test_polynomials(2, degree_bound, samples, seed)) {
    const KLRElement v(w, f);
    const KLRElement twice = klr_crossing(cartan, klr_crossing(cartan, v, 1), 1);
    KLRElement expected;
    std::string what;
    if (i == j) {
      what = "same-color double crossing = 0";
    } else if (cartan.adjacent(i, j)) {
      expected = v.times_variable(1);
      expected += v.times_variable(2);
      what = "T_ji T_ij = X_i I + I X_j";
    } else {
      expected = v;
      what = "double crossing of distant colors = id";
    }
    expect_klr(report, twice, expected, v, what);
  }
  return report;
}

VerificationReport check_klr_edge_relation(const CartanData& cartan, int i, int j,
                                           int degree_bound, int samples, std::uint64_t seed) {
  if (!cartan.adjacent(i, j)) throw std::invalid_argument("check_klr_edge_relation needs an edge");
  auto report = check_klr_double_crossing(cartan, i, j, degree_bound, samples, seed);
  report.check = "klr_edge_relation";
  return report;
}

VerificationReport check_theorem6_computation(const CartanData& cartan, int i, int j,
                                              int degree_bound, int samples, std::uint64_t seed,
                                              Theorem6Variant variant) {
  if (!cartan.adjacent(i, j)) throw std::invalid_argument("the composite identity needs adjacent colors");
  auto report = poly_report("theorem6_composite", "thm-6.1", 3, degree_bound, samples, seed);
  report.param("i", i).param("j", j);
  if (variant == Theorem6Variant::drop_inner_demazure) report.param("variant", "drop_inner");
  ReportTimer timer(report);
  const ColoredWord w{j, i, i};
  for (const auto& f : test_polynomials(3, degree_bound, samples, seed)) {
    const KLRElement v(w, f);
    // Right to left: I T_ii, then T_ji I, then T_ij I, then I T_ii.
    KLRElement step = variant == Theorem6Variant::as_stated ? klr_crossing(cartan, v, 2) : v;
    step = klr_crossing(cartan, step, 1);
    step = klr_crossing(cartan, step, 1);
    const KLRElement lhs = klr_crossing(cartan, step, 2);
    const KLRElement rhs = klr_crossing(cartan, v, 2);
    expect_klr(report, lhs, rhs, v, "(I T_ii)(T_ij I)(T_ji I)(I T_ii) = I T_ii");

    // (I T_ii)(X_j I I + I X_i I)(I T_ii) = I T_ii
    const KLRElement inner = klr_crossing(cartan, v, 2);
    KLRElement dotted = inner.times_variable(1);
    dotted += inner.times_variable(2);
    expect_klr(report, klr_crossing(cartan, dotted, 2), rhs, v,
               "(I T_ii)(X_j I I + I X_i I)(I T_ii) = I T_ii");
    // The x_1 part dies by T_ii^2 = 0; the x_2 part gives back I T_ii.
    expect_klr(report, klr_crossing(cartan, inner.times_variable(1), 2), KLRElement(), v,
               "(I T_ii)(X_j I I)(I T_ii) = 0");
  }
  return report;
}

}  // namespace qgw
