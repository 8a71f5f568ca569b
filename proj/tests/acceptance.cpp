// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "qgw/braiding.hpp"
#include "qgw/nilhecke.hpp"
#include "qgw/rewrite.hpp"
#include "qgw/suite.hpp"
#include "qgw/tensor_rep.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <string>

namespace {

using namespace qgw;
namespace fs = std::filesystem;

// Collects verdicts for one criterion and remembers the first failure.
class Tally {
 public:
  void add(const VerificationReport& r) {
    ++checks_;
    if (r.status != Status::pass && failure_.empty()) failure_ = report_to_text(r);
  }
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  int checks() const { return checks_; }
  const std::string& failure() const { return failure_; }

 private:
  int checks_ = 0;
  std::string failure_;
};

const GradingConvention& convention() {
  static const GradingConvention c = derive_grading_convention(2).chosen;
  return c;
}

void criterion_dimensions(Tally& t) {
  for (int n = 2; n <= 4; ++n)
    for (int N = 1; N <= 6; ++N) t.add(verify_weight_dimensions(WeightModule(n, N)));
}

void criterion_sl2(Tally& t) {
  for (int n = 2; n <= 4; ++n)
    for (int N = 1; N <= 6; ++N) {
      const WeightModule m(n, N);
      for (int i = 1; i < n; ++i)
        for (int a = 0; a <= 4; ++a)
          for (int b = 0; a + b <= 4; ++b) {
            if (a >= 1 && b >= 1) t.add(verify_divided_power_rule(m, i, a, b));
            t.add(verify_ef_straightening_all(m, i, a, b));
          }
    }
}

void criterion_serre(Tally& t) {
  for (int n = 2; n <= 4; ++n)
    for (int N = 1; N <= 5; ++N) {
      const WeightModule m(n, N);
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
          if (i == j) continue;
          t.add(verify_serre(m, i, j));
          t.add(verify_distant_and_ef_commutations(m, i, j));
          if (!m.cartan().adjacent(i, j)) continue;
          for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b)
              if (a + b >= 1) t.add(verify_mixed_decompositions(m, i, j, a, b));
        }
    }
}

void criterion_convention(Tally& t) {
  const auto r = derive_grading_convention(2);
  t.expect(!r.passing.empty(), "no passing convention within bound 2");
  for (const auto& c : r.candidates)
    if (c.passes()) t.expect(c.invertible && c.braid, "passing candidate without invertible braid");
  t.expect(r.q_one_baseline, "q = 1 baseline failed during the search");
  t.add(check_q_one_baseline());
}

void criterion_braid(Tally& t) {
  for (int n : {3, 4})
    for (int N = 1; N <= 5; ++N)
      for (auto spec : {Specialization::generic, Specialization::q_one}) {
        const WeightModule m(n, N, spec);
        for (int i = 1; i < n; ++i) {
          t.add(check_weyl_compatibility(m, convention(), i));
          for (int j = i + 1; j < n; ++j) t.add(check_braid_relation(m, convention(), i, j));
        }
      }
}

void criterion_conjugation(Tally& t) {
  for (int N : {2, 3})
    for (auto spec : {Specialization::generic, Specialization::q_one}) {
      const WeightModule m(3, N, spec);
      for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
        t.add(conjugation_check(m, convention(), i, j));
        t.add(check_tij_factorization(m, convention(), i, j));
      }
    }
}

void criterion_rewrite(Tally& t) {
  RewriteSweep sweep;
  sweep.n_min = 2;
  sweep.n_max = 4;
  sweep.N_min = 1;
  sweep.N_max = 5;
  sweep.max_length = 6;
  sweep.seed = 20240601;
  sweep.samples = 1000;
  t.add(check_rewrite_soundness(sweep));
  sweep.samples = 200;
  sweep.seed += 1;
  t.add(check_rewrite_confluence(sweep));
}

void criterion_polynomial(Tally& t) {
  constexpr int deg = 10;
  for (int m = 2; m <= 4; ++m) t.add(check_nilhecke(m, deg, 0, 1));
  const auto a3 = CartanData::type_a(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      t.add(check_klr_double_crossing(a3, i, j, deg, 0, 1));
      if (!a3.adjacent(i, j)) continue;
      t.add(check_klr_edge_relation(a3, i, j, deg, 0, 1));
      t.add(check_theorem6_computation(a3, i, j, deg, 0, 1));
      t.add(negative_control(
          check_theorem6_computation(a3, i, j, deg, 0, 1, Theorem6Variant::drop_inner_demazure)));
    }
  const WeightModule m(3, 2);
  for (int eps : {-1, 1})
    for (int c = -2; c <= 2; ++c) {
      GradingConvention wrong = convention();
      wrong.eps = eps;
      wrong.c = c;
      if (wrong == convention()) continue;
      t.add(negative_control(conjugation_check(m, wrong, 1, 2)));
    }
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(QGW_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

std::string strip_millis(const std::string& s) {
  static const std::regex millis(R"("millis":[^,}]*,?)");
  return std::regex_replace(s, millis, "");
}

std::string verdicts(const std::string& jsonl) {
  static const std::regex fields(R"re("check":"([^"]*)".*?"params":(\{[^}]*\}).*?"status":"(\w+)")re");
  std::ostringstream out;
  std::istringstream in(jsonl);
  std::string line;
  std::smatch m;
  while (std::getline(in, line))
    if (std::regex_search(line, m, fields)) out << m[1] << m[2] << m[3] << '\n';
  return out.str();
}

void criterion_interfaces(Tally& t) {
  const auto cold = (fs::temp_directory_path() / "qgw_acceptance_cache").string();
  fs::remove_all(cold);
  const std::string args = "verify --n 2..3 --N 1..3 --json --seed 11 --jobs 3 --cache-dir ";
  const auto first = run_cli(args + cold);
  const auto warm = run_cli(args + cold);
  const auto nocache = run_cli("verify --n 2..3 --N 1..3 --json --seed 11 --no-cache");
  t.expect(first.code == 0, "verify exited " + std::to_string(first.code));
  t.expect(!first.out.empty() && strip_millis(first.out) == strip_millis(warm.out),
           "repeated runs differ beyond durations");
  t.expect(verdicts(first.out) == verdicts(warm.out) && verdicts(first.out) == verdicts(nocache.out),
           "warm and cold cache verdicts differ");
  t.expect(run_cli("verify --n 2 --N 2 --search-bound 0 --no-cache").code == 1,
           "a failing check must exit 1");
  t.expect(run_cli("verify --graph does-not-exist").code == 2, "bad graph must exit 2");
  t.expect(run_cli("verify --N 12").code == 2, "cap violation must exit 2");
  t.expect(run_cli("rewrite \"E1 +\" @ \"(1,1)\"").code == 2, "parse error must exit 2");
  t.expect(run_cli("derive-convention --search-bound 0 --cache-dir " + cold).code == 1,
           "empty convention search must exit 1");
  fs::remove_all(cold);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Tally&)> run;
  };
  const Criterion criteria[] = {
      {"1 weight-space dimensions", criterion_dimensions},
      {"2 sl2 relations", criterion_sl2},
      {"3 Serre and mixed relations", criterion_serre},
      {"4 convention derivation", criterion_convention},
      {"5 braid relations", criterion_braid},
      {"6 conjugation identities", criterion_conjugation},
      {"7 rewriter soundness", criterion_rewrite},
      {"8 nil-Hecke and KLR", criterion_polynomial},
      {"9 determinism and interfaces", criterion_interfaces},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << c.name << " (" << t.checks()
              << " checks, " << secs << " s)\n";
    if (!t.ok()) {
      ++failed;
      std::cout << "  " << t.failure() << '\n';
    }
    std::cout.flush();
  }
  return failed ? 1 : 0;
}
