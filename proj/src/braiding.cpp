#include "qgw/braiding.hpp"

#include "qgw/qalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

namespace qgw {

std::string GradingConvention::to_string() const {
  std::ostringstream os;
  os << "c1=" << c1 << " c2=" << c2 << " eps=" << eps << " c=" << c << " eps_f=" << eps_f
     << " c_f=" << c_f;
  return os.str();
}

BlockOperator<RationalFunction> to_rational(const OperatorMatrix& op) {
  return {op.source, op.target, qgw::to_rational(op.matrix)};
}

namespace {

LaurentPoly sign_power(const WeightModule& m, int s, int exponent) {
  return m.scalar(LaurentPoly::monomial(s % 2 == 0 ? 1 : -1, exponent));
}

Weight add_root(const CartanData& cartan, const Weight& w, int i, int j, int times) {
  return w.shifted(cartan, i, times).shifted(cartan, j, times);
}

}  // namespace

OperatorMatrix rickard_block(const WeightModule& m, const GradingConvention& conv, int i,
                             const Weight& lambda, RickardBranch branch) {
  const int pair = lambda.pairing(i);
  if (branch == RickardBranch::automatic) branch = pair >= 0 ? RickardBranch::fe : RickardBranch::ef;
  if (branch == RickardBranch::fe && pair < 0)
    throw std::invalid_argument("F-then-E Rickard sum needs <lambda,alpha_i> >= 0");
  if (branch == RickardBranch::ef && pair > 0)
    throw std::invalid_argument("E-then-F Rickard sum needs <lambda,alpha_i> <= 0");
  const Weight target = reflect(m.cartan(), lambda, i);
  OperatorMatrix result = m.zero(lambda, target);
  const GeneratorKind first = branch == RickardBranch::fe ? GeneratorKind::E : GeneratorKind::F;
  const GeneratorKind second = branch == RickardBranch::fe ? GeneratorKind::F : GeneratorKind::E;
  const int offset = branch == RickardBranch::fe ? pair : -pair;
  for (int s = 0;; ++s) {
    const OperatorMatrix inner = m.divided_power(first, i, s, lambda);
    if (inner.target.is_null()) break;
    const OperatorMatrix term = compose(m.divided_power(second, i, offset + s, inner.target), inner);
    // Homological degree is the E exponent in both branches.
    const int degree = branch == RickardBranch::fe ? s : offset + s;
    result += scaled(term, sign_power(m, degree, conv.gamma(degree)));
  }
  return result;
}

BraidOperator braid_operator(const WeightModule& m, const GradingConvention& conv, int i) {
  BraidOperator t;
  t.index = i;
  for (const auto& lambda : m.weights()) {
    auto block = rickard_block(m, conv, i, lambda);
    if (!(block.target == reflect(m.cartan(), lambda, i)))
      throw std::logic_error("T_" + std::to_string(i) + " block at " + lambda.to_string() +
                             " lands on " + block.target.to_string());
    t.blocks.push_back(std::move(block));
  }
  return t;
}

InverseBraidOperator invert(const BraidOperator& t) {
  InverseBraidOperator inv;
  inv.index = t.index;
  for (const auto& block : t.blocks) {
    auto m = inverse(block.matrix);
    if (!m) throw SingularBlockError(block.source, t.index);
    const auto product = qgw::to_rational(block.matrix) * *m;
    if (!(product == SparseMatrix<RationalFunction>::identity(block.matrix.rows())))
      throw std::logic_error("T * T^{-1} != id at " + block.source.to_string());
    inv.blocks.push_back({block.target, block.source, std::move(*m)});
  }
  return inv;
}

InverseBraidOperator invert(const InverseBraidOperator& t) {
  InverseBraidOperator inv;
  inv.index = t.index;
  for (const auto& block : t.blocks) {
    // Clear denominators: M = A / D with A Laurent, so M^{-1} = D A^{-1}.
    LaurentPoly common(1);
    std::vector<LaurentPoly> seen;
    for (const auto& [r, c, v] : block.matrix.triplets()) {
      if (v.denominator() == LaurentPoly(1)) continue;
      if (std::find(seen.begin(), seen.end(), v.denominator()) != seen.end()) continue;
      seen.push_back(v.denominator());
      common *= v.denominator();
    }
    SparseMatrix<LaurentPoly> cleared(block.matrix.rows(), block.matrix.cols());
    for (const auto& [r, c, v] : block.matrix.triplets()) {
      auto entry = (v * RationalFunction(common)).as_laurent();
      if (!entry) throw std::logic_error("denominator clearing failed");
      cleared.set(r, c, std::move(*entry));
    }
    auto m = inverse(cleared);
    if (!m) throw SingularBlockError(block.source, t.index);
    inv.blocks.push_back({block.target, block.source, m->scaled(RationalFunction(common))});
  }
  return inv;
}

namespace {

struct Operators {
  std::map<int, BraidOperator> t;
  const OperatorMatrix& at(int i, const Weight& w) const { return t.at(i).block(w); }
};

Operators operators_for(const WeightModule& m, const GradingConvention& conv,
                        std::initializer_list<int> indices) {
  Operators ops;
  for (int i : indices)
    if (!ops.t.count(i)) ops.t.emplace(i, braid_operator(m, conv, i));
  return ops;
}

VerificationReport braid_report(const WeightModule& m, const GradingConvention& conv,
                                std::string check, std::string citation) {
  VerificationReport r;
  r.check = std::move(check);
  r.citation = std::move(citation);
  r.param("n", m.n()).param("N", m.N());
  r.param("q", m.specialization() == Specialization::generic ? "generic" : "1");
  r.sections.push_back({"convention",
                        {{"c1", conv.c1},
                         {"c2", conv.c2},
                         {"eps", conv.eps},
                         {"c", conv.c},
                         {"eps_f", conv.eps_f},
                         {"c_f", conv.c_f}}});
  return r;
}

void braid_relation_into(VerificationReport& report, const WeightModule& m, const Operators& ops,
                         int i, int j) {
  const auto& cartan = m.cartan();
  const bool adjacent = cartan.adjacent(i, j);
  for (const auto& lambda : m.weights()) {
    if (adjacent) {
      const auto& a1 = ops.at(i, lambda);
      const auto& a2 = ops.at(j, a1.target);
      const auto lhs = compose(ops.at(i, a2.target), compose(a2, a1));
      const auto& b1 = ops.at(j, lambda);
      const auto& b2 = ops.at(i, b1.target);
      const auto rhs = compose(ops.at(j, b2.target), compose(b2, b1));
      expect_equal(report, lhs, rhs, "T_i T_j T_i = T_j T_i T_j");
    } else {
      const auto& a1 = ops.at(j, lambda);
      const auto lhs = compose(ops.at(i, a1.target), a1);
      const auto& b1 = ops.at(i, lambda);
      const auto rhs = compose(ops.at(j, b1.target), b1);
      expect_equal(report, lhs, rhs, "T_i T_j = T_j T_i");
    }
  }
}

// r_ij T_i = T_i e_j, f-root T_i = T_i f_j and the squared E version.
void conjugation_into(VerificationReport& report, const WeightModule& m, const Operators& ops,
                      const GradingConvention& conv, int i, int j, bool e_part, bool f_part) {
  for (const auto& lambda : m.weights()) {
    const auto& ti = ops.at(i, lambda);
    if (e_part) {
      const auto ej = m.generator(GeneratorKind::E, j, lambda);
      if (!ej.target.is_null()) {
        const auto rhs = compose(ops.at(i, ej.target), ej);
        const auto lhs = compose(root_vector(m, conv, i, j, ti.target), ti);
        expect_equal(report, lhs, rhs, "E_ij T_i = T_i E_j");
        const auto ej2 = m.divided_power(GeneratorKind::E, j, 2, lambda);
        if (!ej2.target.is_null()) {
          const auto r1 = root_vector(m, conv, i, j, ti.target);
          const auto r2 = root_vector(m, conv, i, j, r1.target);
          const auto lhs2 = compose(r2, compose(r1, ti));
          const auto rhs2 = scaled(compose(ops.at(i, ej2.target), ej2), m.scalar(qfact(2)));
          expect_equal(report, lhs2, rhs2, "E_ij^2 T_i = [2]! T_i E_j^(2)");
        }
      }
    }
    if (f_part) {
      const auto fj = m.generator(GeneratorKind::F, j, lambda);
      if (!fj.target.is_null()) {
        const auto rhs = compose(ops.at(i, fj.target), fj);
        const auto lhs = compose(f_root_vector(m, conv, i, j, ti.target), ti);
        expect_equal(report, lhs, rhs, "F_ij T_i = T_i F_j");
      }
    }
  }
}

}  // namespace

VerificationReport check_braid_relation(const WeightModule& m, const GradingConvention& conv,
                                        int i, int j) {
  if (i == j) throw std::invalid_argument("check_braid_relation needs i != j");
  const bool adjacent = m.cartan().adjacent(i, j);
  auto report = braid_report(m, conv, adjacent ? "braid_relation" : "braid_commutation",
                             "thm-2.10");
  report.param("i", i).param("j", j);
  ReportTimer timer(report);
  braid_relation_into(report, m, operators_for(m, conv, {i, j}), i, j);
  return report;
}

VerificationReport check_weyl_compatibility(const WeightModule& m, const GradingConvention& conv,
                                            int i) {
  auto report = braid_report(m, conv, "weyl_compatibility", "thm-2.9");
  report.param("i", i);
  ReportTimer timer(report);
  const auto t = braid_operator(m, conv, i);
  for (const auto& block : t.blocks) {
    ++report.comparisons;
    const Weight expected = reflect(m.cartan(), block.source, i);
    if (!(block.target == expected)) {
      report.fail({block.source.to_string(), {}, {}, "block target " + block.target.to_string() +
                                                         " != " + expected.to_string()});
      continue;
    }
    const LaurentPoly det = determinant(block.matrix);
    ++report.comparisons;
    if (det.is_zero()) {
      report.fail({block.source.to_string(), {}, {{"det", "0"}}, "singular block"});
      continue;
    }
    if (m.specialization() == Specialization::q_one) {
      ++report.comparisons;
      if (!(det == LaurentPoly(1) || det == LaurentPoly(-1)))
        report.fail({block.source.to_string(), {}, {{"det", det.to_string()}},
                     "q=1 determinant is not ±1"});
    }
    if (block.source.pairing(i) == 0) {
      expect_equal(report, rickard_block(m, conv, i, block.source, RickardBranch::fe),
                   rickard_block(m, conv, i, block.source, RickardBranch::ef),
                   "branch formulas agree at <lambda,alpha_i> = 0");
    }
  }
  return report;
}

OperatorMatrix root_vector(const WeightModule& m, const GradingConvention& conv, int i, int j,
                           const Weight& lambda) {
  if (!m.cartan().adjacent(i, j)) throw std::invalid_argument("root_vector needs adjacent i, j");
  const std::vector<GeneratorLetter> ji{{GeneratorKind::E, j, 1}, {GeneratorKind::E, i, 1}};
  const std::vector<GeneratorLetter> ij{{GeneratorKind::E, i, 1}, {GeneratorKind::E, j, 1}};
  return m.evaluate_word(ji, lambda) +
         scaled(m.evaluate_word(ij, lambda), sign_power(m, conv.eps < 0 ? 1 : 0, conv.c));
}

OperatorMatrix f_root_vector(const WeightModule& m, const GradingConvention& conv, int i, int j,
                             const Weight& lambda) {
  if (!m.cartan().adjacent(i, j)) throw std::invalid_argument("f_root_vector needs adjacent i, j");
  const std::vector<GeneratorLetter> ij{{GeneratorKind::F, i, 1}, {GeneratorKind::F, j, 1}};
  const std::vector<GeneratorLetter> ji{{GeneratorKind::F, j, 1}, {GeneratorKind::F, i, 1}};
  return m.evaluate_word(ij, lambda) +
         scaled(m.evaluate_word(ji, lambda), sign_power(m, conv.eps_f < 0 ? 1 : 0, conv.c_f));
}

VerificationReport conjugation_check(const WeightModule& m, const GradingConvention& conv, int i,
                                     int j) {
  if (!m.cartan().adjacent(i, j)) throw std::invalid_argument("conjugation_check needs adjacent i, j");
  auto report = braid_report(m, conv, "root_vector_conjugation", "cor-5.4");
  report.param("i", i).param("j", j);
  ReportTimer timer(report);
  conjugation_into(report, m, operators_for(m, conv, {i}), conv, i, j, true, true);
  return report;
}

namespace {

// x^{(s)} for a root vector x starting at lambda: x^s / [s]!.
OperatorMatrix root_divided_power(const WeightModule& m, const GradingConvention& conv, int i,
                                  int j, int s, const Weight& lambda, bool raising) {
  OperatorMatrix acc = m.identity(lambda);
  for (int k = 0; k < s; ++k) {
    if (acc.target.is_null()) {
      const Weight target = add_root(m.cartan(), lambda, i, j, raising ? s : -s);
      return m.zero(lambda, target);
    }
    const auto step = raising ? root_vector(m, conv, i, j, acc.target)
                              : f_root_vector(m, conv, i, j, acc.target);
    acc = compose(step, acc);
  }
  const LaurentPoly divisor = m.scalar(qfact(s));
  SparseMatrix<LaurentPoly> out(acc.matrix.rows(), acc.matrix.cols());
  for (const auto& [r, c, v] : acc.matrix.triplets()) {
    auto quotient = v.divide_exact(divisor);
    if (!quotient) throw std::logic_error("root vector power not divisible by [s]!");
    out.set(r, c, std::move(*quotient));
  }
  acc.matrix = std::move(out);
  return acc;
}

// Alternating sum of root-vector divided powers: the Rickard operator of the
// sl_2 spanned by the E and F root vectors.
OperatorMatrix root_rickard_block(const WeightModule& m, const GradingConvention& conv, int i,
                                  int j, const Weight& lambda) {
  const int pair = lambda.pairing(i) + lambda.pairing(j);
  const bool fe = pair >= 0;
  const int offset = fe ? pair : -pair;
  const Weight target = add_root(m.cartan(), lambda, i, j, -pair);
  OperatorMatrix result = m.zero(lambda, target);
  for (int s = 0;; ++s) {
    const auto inner = root_divided_power(m, conv, i, j, s, lambda, fe);
    if (inner.target.is_null()) break;
    const auto outer = root_divided_power(m, conv, i, j, offset + s, inner.target, !fe);
    const int degree = fe ? s : offset + s;
    result += scaled(compose(outer, inner), sign_power(m, degree, conv.gamma(degree)));
  }
  return result;
}

}  // namespace

VerificationReport check_tij_factorization(const WeightModule& m, const GradingConvention& conv,
                                           int i, int j) {
  if (!m.cartan().adjacent(i, j))
    throw std::invalid_argument("check_tij_factorization needs adjacent i, j");
  auto report = braid_report(m, conv, "tij_factorization", "prop-5.6");
  report.param("i", i).param("j", j);
  ReportTimer timer(report);
  const auto ops = operators_for(m, conv, {i, j});
  const auto ti_inv = invert(ops.t.at(i));
  auto rat = [](const OperatorMatrix& op) { return to_rational(op); };
  auto record = [&](const BlockOperator<RationalFunction>& lhs,
                    const BlockOperator<RationalFunction>& rhs, const std::string& what) {
    ++report.comparisons;
    if (lhs == rhs) return;
    report.fail({lhs.source.to_string(), {}, {}, what});
  };
  for (const auto& lambda : m.weights()) {
    // t_ij on the lambda space: T_i^{-1} then T_j then T_i.
    const auto& inv = ti_inv.block(lambda);
    const auto& tj = ops.at(j, inv.target);
    const auto& ti = ops.at(i, tj.target);
    const auto t_ij = compose(rat(ti), compose(rat(tj), inv));

    // (a) t_ij T_i = T_i T_j, taken at the weight mu with s_i(mu) = lambda.
    const Weight mu = reflect(m.cartan(), lambda, i);
    const auto& ti_mu = ops.at(i, mu);
    const auto& tj_mu = ops.at(j, mu);
    record(compose(t_ij, rat(ti_mu)), rat(compose(ops.at(i, tj_mu.target), tj_mu)),
           "t_ij T_i = T_i T_j");

    // T_j t_ij = T_i T_j
    const auto& tj_after = ops.at(j, t_ij.target);
    const auto& tj_l = ops.at(j, lambda);
    record(compose(rat(tj_after), t_ij), rat(compose(ops.at(i, tj_l.target), tj_l)),
           "T_j t_ij = T_i T_j");

    // (b) t_ij equals the root-vector alternating sum.
    record(t_ij, rat(root_rickard_block(m, conv, i, j, lambda)),
           "t_ij = alternating sum in root-vector divided powers");
  }
  return report;
}

// --- Convention derivation ----------------------------------------------------------

namespace {

struct ModulePair {
  std::unique_ptr<WeightModule> generic;
  std::unique_ptr<WeightModule> q_one;
};

std::vector<ModulePair> build_pairs(const DerivationOptions& options) {
  std::vector<ModulePair> out;
  for (auto [n, N] : options.modules) {
    out.push_back({std::make_unique<WeightModule>(n, N, Specialization::generic),
                   std::make_unique<WeightModule>(n, N, Specialization::q_one)});
  }
  return out;
}

std::vector<std::pair<int, int>> candidate_order(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int c1 = -bound; c1 <= bound; ++c1)
    for (int c2 = -bound; c2 <= bound; ++c2) out.emplace_back(c1, c2);
  std::stable_sort(out.begin(), out.end(), [](auto a, auto b) {
    const int wa = std::abs(a.first) + std::abs(a.second);
    const int wb = std::abs(b.first) + std::abs(b.second);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

std::vector<std::pair<int, int>> adjacent_pairs(const CartanData& c) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= c.rank(); ++i)
    for (int j = 1; j <= c.rank(); ++j)
      if (c.adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<int> all_indices(const CartanData& c) {
  std::vector<int> v;
  for (int i = 1; i <= c.rank(); ++i) v.push_back(i);
  return v;
}

}  // namespace

VerificationReport check_q_one_baseline(const DerivationOptions& options) {
  VerificationReport report;
  report.check = "q_one_baseline";
  report.citation = "thm-2.10";
  ReportTimer timer(report);
  const GradingConvention zero{};
  for (auto [n, N] : options.modules) {
    WeightModule m(n, N, Specialization::q_one);
    for (int i : all_indices(m.cartan())) report.absorb(check_weyl_compatibility(m, zero, i));
    for (int i : all_indices(m.cartan()))
      for (int j : all_indices(m.cartan()))
        if (i < j) report.absorb(check_braid_relation(m, zero, i, j));
  }
  return report;
}

DerivationResult derive_grading_convention(int search_bound, const DerivationOptions& options) {
  if (search_bound < 0) throw std::invalid_argument("search_bound must be >= 0");
  DerivationResult result;
  result.q_one_baseline = check_q_one_baseline(options).passed();
  auto pairs = build_pairs(options);

  // q = 1 reference operators with gamma = 0.
  std::vector<std::map<int, BraidOperator>> reference(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k)
    for (int i : all_indices(pairs[k].q_one->cartan()))
      reference[k].emplace(i, braid_operator(*pairs[k].q_one, GradingConvention{}, i));

  for (auto [c1, c2] : candidate_order(search_bound)) {
    ConventionCandidate cand;
    cand.c1 = c1;
    cand.c2 = c2;
    GradingConvention conv;
    conv.c1 = c1;
    conv.c2 = c2;
    std::vector<Operators> ops(pairs.size());
    for (std::size_t k = 0; k < pairs.size() && cand.failure.empty(); ++k) {
      const WeightModule& m = *pairs[k].generic;
      const std::string where = "(" + std::to_string(m.n()) + "," + std::to_string(m.N()) + ")";
      for (int i : all_indices(m.cartan())) ops[k].t.emplace(i, braid_operator(m, conv, i));
      for (const auto& [i, t] : ops[k].t) {
        for (const auto& block : t.blocks) {
          if (determinant(block.matrix).is_zero()) {
            cand.invertible = false;
            cand.failure = "singular T_" + std::to_string(i) + " block at " +
                           block.source.to_string() + " in " + where;
          }
          const auto& ref = reference[k].at(i).block(block.source);
          const auto specialized =
              block.matrix.map([](const LaurentPoly& p) { return LaurentPoly(evaluate_at_one(p)); });
          if (!(specialized == ref.matrix)) {
            cand.q_one = false;
            cand.failure = "q=1 specialization differs at " + block.source.to_string() + " in " +
                           where;
          }
        }
      }
      VerificationReport braid;
      for (int i : all_indices(m.cartan()))
        for (int j : all_indices(m.cartan()))
          if (i < j) braid_relation_into(braid, m, ops[k], i, j);
      if (!braid.passed()) {
        cand.braid = false;
        if (cand.failure.empty())
          cand.failure = "braid relation fails at " + braid.counterexample->weight + " in " + where;
      }
    }
    if (cand.invertible && cand.braid && cand.q_one) {
      for (int which = 0; which < 2; ++which) {
        for (int eps : {-1, 1}) {
          for (int c = -options.unit_bound; c <= options.unit_bound; ++c) {
            GradingConvention trial = conv;
            if (which == 0) {
              trial.eps = eps;
              trial.c = c;
            } else {
              trial.eps_f = eps;
              trial.c_f = c;
            }
            VerificationReport conj;
            for (std::size_t k = 0; k < pairs.size(); ++k)
              for (auto [i, j] : adjacent_pairs(pairs[k].generic->cartan()))
                conjugation_into(conj, *pairs[k].generic, ops[k], trial, i, j, which == 0,
                                 which == 1);
            if (conj.passed()) (which == 0 ? cand.e_units : cand.f_units).emplace_back(eps, c);
          }
        }
      }
      if (cand.e_units.empty()) cand.failure = "no E root-vector unit within bound";
      else if (cand.f_units.empty()) cand.failure = "no F root-vector unit within bound";
    }
    if (cand.passes()) {
      for (auto [eps, c] : cand.e_units) {
        GradingConvention g = conv;
        g.eps = eps;
        g.c = c;
        g.eps_f = cand.f_units.front().first;
        g.c_f = cand.f_units.front().second;
        result.passing.push_back(g);
      }
    }
    result.candidates.push_back(std::move(cand));
  }
  if (result.passing.empty()) {
    std::ostringstream os;
    os << "no grading convention within bound " << search_bound << ":";
    for (const auto& c : result.candidates)
      os << "\n  (" << c.c1 << "," << c.c2 << "): " << c.failure;
    throw ConventionNotFound(os.str(), std::move(result));
  }
  result.chosen = result.passing.front();
  return result;
}

}  // namespace qgw
