#include "qgw/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qgw {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::q(int exponent) { return monomial(1, exponent); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

namespace {

// Merge two sorted term lists with a sign on the second.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b,
                                           bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Integer(-b[j].second) : b[j].second);
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].second - b[j].second)
                           : Integer(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly p = a;
    for (auto& t : p.terms_) {
      t.first += b.terms_[0].first;
      t.second *= b.terms_[0].second;
    }
    return p;
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentPoly p;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) p.terms_.emplace_back(lo + static_cast<int>(k), std::move(acc[k]));
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (is_zero()) return LaurentPoly{};
  if (divisor.is_monomial()) {
    const auto& [de, dc] = divisor.terms_[0];
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
      Integer qc;
      mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), dc.get_mpz_t());
      p.terms_.emplace_back(e - de, std::move(qc));
    }
    return p;
  }
  // Long division from the top; the quotient must span exactly
  // [min(this) - min(d), max(this) - max(d)].
  const int q_lo = min_exponent() - divisor.min_exponent();
  const int q_hi = max_exponent() - divisor.max_exponent();
  if (q_hi < q_lo) return std::nullopt;
  const int r_lo = min_exponent();
  std::vector<Integer> rem(static_cast<std::size_t>(max_exponent() - r_lo + 1));
  for (const auto& [e, c] : terms_) rem[e - r_lo] = c;
  const int d_hi = divisor.max_exponent();
  const Integer& lead = divisor.terms_.back().second;
  std::vector<Term> quotient;
  for (int qe = q_hi; qe >= q_lo; --qe) {
    Integer& top = rem[qe + d_hi - r_lo];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (const auto& [de, dc] : divisor.terms_)
      mpz_submul(rem[qe + de - r_lo].get_mpz_t(), qc.get_mpz_t(), dc.get_mpz_t());
    quotient.emplace_back(qe, std::move(qc));
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  std::reverse(quotient.begin(), quotient.end());
  LaurentPoly p;
  p.terms_ = std::move(quotient);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) out += " + ";
    out += terms_[k].second.get_str();
    out += "*q^";
    out += std::to_string(terms_[k].first);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly run() {
    std::vector<LaurentPoly::Term> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (!first) {
        if (pos_ == s_.size()) break;
        if (s_[pos_] == '+') {
          ++pos_;
        } else if (s_[pos_] == '-') {
          ++pos_;
          sign = -1;
        } else {
          fail("expected '+' or '-'");
        }
        skip();
      }
      while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        if (s_[pos_] == '-') sign = -sign;
        ++pos_;
        skip();
      }
      terms.push_back(term(sign));
      first = false;
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("Laurent polynomial parse error at offset " +
                                std::to_string(pos_) + ": " + what);
  }
  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  int exponent() {
    skip();
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      if (s_[pos_] == '-') sign = -1;
      ++pos_;
    }
    Integer e = integer();
    if (!e.fits_sint_p()) fail("exponent out of range");
    return sign * static_cast<int>(e.get_si());
  }
  LaurentPoly::Term term(int sign) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = integer();
      have_coeff = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
      } else {
        return {0, sign * coeff};
      }
    }
    if (pos_ >= s_.size() || s_[pos_] != 'q') fail(have_coeff ? "expected 'q'" : "expected term");
    ++pos_;
    skip();
    int e = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      e = exponent();
    }
    return {e, sign * coeff};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

// --- RationalFunction ---------------------------------------------------------

RationalFunction::RationalFunction(LaurentPoly numerator)
    : num_(std::move(numerator)), den_(1) {}

RationalFunction::RationalFunction(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.is_unit()) {
    const auto& [e, c] = den_.terms()[0];
    num_ = num_.shifted(-e).scaled(c);  // c = ±1 is its own inverse
    den_ = 1;
  }
}

std::optional<LaurentPoly> RationalFunction::as_laurent() const {
  if (den_ == LaurentPoly(1)) return num_;
  return num_.divide_exact(den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  num_ *= other.num_;
  if (!(other.den_ == LaurentPoly(1))) den_ *= other.den_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

}  // namespace qgw
