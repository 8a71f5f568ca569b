#include "qgw/suite.hpp"

#include "qgw/nilhecke.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace qgw {

namespace {

using Json = nlohmann::ordered_json;

// Bound on a + b (and r1 + r2) for the sl_2 and mixed relations.
constexpr int kPowerBound = 4;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(what + ": not an integer: '" + text + "'");
  return v;
}

bool parse_bool(const std::string& text, const std::string& what) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(what + ": expected true or false, got '" + text + "'");
}

Rule parse_rule(const std::string& text) {
  for (Rule r : {Rule::merge, Rule::commute, Rule::straighten, Rule::serre})
    if (to_string(r) == text) return r;
  throw ConfigError("unknown rewrite rule '" + text + "'");
}

bool is_type_a(const CartanData& cartan) {
  return cartan.matrix() == CartanData::type_a(cartan.rank()).matrix();
}

}  // namespace

IntRange IntRange::parse(const std::string& text) {
  const std::string t = trim(text);
  const auto dots = t.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(t, "range");
    return {v, v};
  }
  IntRange r{parse_int(trim(t.substr(0, dots)), "range"), parse_int(trim(t.substr(dots + 2)), "range")};
  if (r.lo > r.hi) throw ConfigError("empty range '" + text + "'");
  return r;
}

std::string IntRange::to_string() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

void SuiteConfig::validate() const {
  if (limits.max_n < 2 || limits.max_N < 1) throw ConfigError("size caps must be at least n=2, N=1");
  if (n.lo < 2) throw ConfigError("n must be at least 2");
  if (N.lo < 1) throw ConfigError("N must be at least 1");
  if (n.hi > limits.max_n)
    throw ConfigError("n=" + std::to_string(n.hi) + " exceeds the cap " + std::to_string(limits.max_n) +
                      " (raise it with --max-n)");
  if (N.hi > limits.max_N)
    throw ConfigError("N=" + std::to_string(N.hi) + " exceeds the cap " + std::to_string(limits.max_N) +
                      " (raise it with --max-N)");
  if (search_bound < 0) throw ConfigError("search_bound must be non-negative");
  if (rules.empty()) throw ConfigError("at least one rewrite rule must be enabled");
  if (rewrite_samples < 0 || confluence_samples < 0 || poly_samples < 0)
    throw ConfigError("sample counts must be non-negative");
  if (word_length < 1) throw ConfigError("word_length must be at least 1");
  if (poly_degree < 0) throw ConfigError("poly_degree must be non-negative");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  for (int k = n.lo; k <= n.hi; ++k) suite_cartan(*this, k);
}

void apply_config_text(SuiteConfig& config, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string what = "line " + std::to_string(lineno) + " (" + key + ")";
    if (key == "graph") config.graph = value;
    else if (key == "n") config.n = IntRange::parse(value);
    else if (key == "N") config.N = IntRange::parse(value);
    else if (key == "search_bound") config.search_bound = parse_int(value, what);
    else if (key == "rules") {
      config.rules.clear();
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) config.rules.push_back(parse_rule(trim(item)));
    } else if (key == "rewrite_samples") config.rewrite_samples = parse_int(value, what);
    else if (key == "confluence_samples") config.confluence_samples = parse_int(value, what);
    else if (key == "word_length") config.word_length = parse_int(value, what);
    else if (key == "poly_degree") config.poly_degree = parse_int(value, what);
    else if (key == "poly_samples") config.poly_samples = parse_int(value, what);
    else if (key == "q_one") config.q_one = parse_bool(value, what);
    else if (key == "cache_dir") config.cache_dir = value;
    else if (key == "format") {
      if (value != "text" && value != "json") throw ConfigError(what + ": expected text or json");
      config.json = value == "json";
    } else if (key == "seed") {
      try {
        config.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw ConfigError(what + ": bad seed '" + value + "'");
      }
    } else if (key == "jobs") config.jobs = parse_int(value, what);
    else if (key == "max_n") config.limits.max_n = parse_int(value, what);
    else if (key == "max_N") config.limits.max_N = parse_int(value, what);
    else throw ConfigError(what + ": unknown key");
  }
}

void apply_config_file(SuiteConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(config, text.str());
}

CartanData suite_cartan(const SuiteConfig& config, int n) {
  if (config.graph.empty()) return CartanData::type_a(n - 1);
  SimpleGraph graph;
  try {
    if (std::filesystem::is_regular_file(config.graph)) {
      std::ifstream in(config.graph);
      std::ostringstream text;
      text << in.rdbuf();
      graph = parse_graph(text.str());
    } else {
      graph = preset_graph(config.graph);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("graph '" + config.graph + "': " + e.what());
  }
  CartanData cartan;
  try {
    cartan = cartan_from_graph(graph);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("graph '" + config.graph + "': " + e.what());
  }
  if (is_type_a(cartan) && cartan.rank() != n - 1)
    throw ConfigError("graph '" + config.graph + "' has rank " + std::to_string(cartan.rank()) +
                      " but n=" + std::to_string(n) + " needs rank " + std::to_string(n - 1));
  return cartan;
}

std::optional<GradingConvention> load_convention(const std::filesystem::path& cache_dir) {
  if (cache_dir.empty()) return std::nullopt;
  std::ifstream in(cache_dir / "convention.json");
  if (!in) return std::nullopt;
  try {
    const auto j = Json::parse(in);
    GradingConvention c;
    c.c1 = j.at("c1").get<int>();
    c.c2 = j.at("c2").get<int>();
    c.eps = j.at("eps").get<int>();
    c.c = j.at("c").get<int>();
    c.eps_f = j.at("eps_f").get<int>();
    c.c_f = j.at("c_f").get<int>();
    return c;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

void store_convention(const std::filesystem::path& cache_dir, const GradingConvention& conv) {
  std::filesystem::create_directories(cache_dir);
  const Json j = {{"c1", conv.c1},   {"c2", conv.c2},       {"eps", conv.eps},
                  {"c", conv.c},     {"eps_f", conv.eps_f}, {"c_f", conv.c_f}};
  const auto path = cache_dir / "convention.json";
  const auto tmp = cache_dir / "convention.json.tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

VerificationReport negative_control(VerificationReport inner) {
  VerificationReport r = inner;
  r.check = "negative_control." + inner.check;
  r.counterexample.reset();
  if (inner.status == Status::fail) {
    r.status = Status::pass;
  } else {
    r.status = Status::fail;
    r.counterexample = Counterexample{{}, {}, {}, "perturbed identity was not detected"};
  }
  return r;
}

namespace {

struct Task {
  VerificationReport stub;
  std::function<VerificationReport()> run;
};

VerificationReport stub(std::string check, std::string citation,
                        std::vector<std::pair<std::string, ParamValue>> params) {
  VerificationReport r;
  r.check = std::move(check);
  r.citation = std::move(citation);
  r.params = std::move(params);
  return r;
}

std::vector<std::pair<std::string, ParamValue>> module_params(const WeightModule& m) {
  return {{"n", static_cast<long long>(m.n())},
          {"N", static_cast<long long>(m.N())},
          {"q", std::string(m.specialization() == Specialization::generic ? "generic" : "1")}};
}

// Folds the reports of a family of parameter choices into one report.
template <class Fn>
VerificationReport fold_over(VerificationReport shell, Fn&& produce) {
  ReportTimer timer(shell);
  produce([&](const VerificationReport& r) { shell.absorb(r); });
  return shell;
}

VerificationReport skipped(VerificationReport r, const std::string& why) {
  r.status = Status::skipped;
  r.counterexample = Counterexample{{}, {}, {}, why};
  return r;
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const SuiteConfig& config) : config_(config) {
    if (!config.cache_dir.empty())
      disk_ = std::make_shared<const MatrixCache>(config.cache_dir / "matrices");
  }

  std::vector<Task> build() {
    add_convention();
    for (int n = config_.n.lo; n <= config_.n.hi; ++n) {
      const CartanData cartan = suite_cartan(config_, n);
      const bool type_a = is_type_a(cartan);
      for (int N = config_.N.lo; N <= config_.N.hi; ++N) {
        if (!type_a) {
          tasks_.push_back({stub("module_checks", "sec-3.1", {{"n", n}, {"N", N}}), [n, N] {
                              return skipped(stub("module_checks", "sec-3.1", {{"n", n}, {"N", N}}),
                                             "tensor and braid checks need a type A graph");
                            }});
          continue;
        }
        add_module_checks(module(n, N, Specialization::generic));
        add_braid_checks(module(n, N, Specialization::generic));
        if (config_.q_one) add_braid_checks(module(n, N, Specialization::q_one));
      }
    }
    add_rewrite();
    add_polynomial();
    add_negative_controls();
    return std::move(tasks_);
  }

 private:
  std::shared_ptr<const WeightModule> module(int n, int N, Specialization spec) {
    auto& slot = modules_[{n, N, static_cast<int>(spec)}];
    if (!slot) {
      auto m = std::make_shared<WeightModule>(n, N, spec, config_.limits);
      if (disk_) m->attach_cache(disk_);
      slot = std::move(m);
    }
    return slot;
  }

  // Convention shared by all braid tasks, resolved before they run.
  std::shared_ptr<const GradingConvention> convention() {
    if (!convention_) {
      auto cached = load_convention(config_.cache_dir);
      try {
        derivation_ = derive_grading_convention(config_.search_bound);
        convention_ = std::make_shared<const GradingConvention>(cached ? *cached : derivation_->chosen);
        if (!config_.cache_dir.empty() && !cached) store_convention(config_.cache_dir, *convention_);
      } catch (const ConventionNotFound& e) {
        derivation_ = e.result;
        convention_ = std::make_shared<const GradingConvention>(cached ? *cached : GradingConvention{});
        derivation_error_ = e.what();
      }
    }
    return convention_;
  }

  void add_convention() {
    auto conv = convention();
    const int bound = config_.search_bound;
    auto report = stub("convention_derivation", "thm-2.10", {{"search_bound", bound}});
    report.sections.push_back({"convention",
                               {{"c1", conv->c1},
                                {"c2", conv->c2},
                                {"eps", conv->eps},
                                {"c", conv->c},
                                {"eps_f", conv->eps_f},
                                {"c_f", conv->c_f}}});
    report.comparisons = static_cast<std::int64_t>(derivation_->candidates.size());
    if (!derivation_error_.empty()) {
      report.fail({{}, {}, {}, derivation_error_});
    } else if (std::find(derivation_->passing.begin(), derivation_->passing.end(), *conv) ==
               derivation_->passing.end()) {
      report.fail({{}, {}, {}, "cached convention " + conv->to_string() + " is not among the passing ones"});
    }
    tasks_.push_back({report, [report] { return report; }});
    tasks_.push_back({stub("q_one_baseline", "thm-2.10", {}), [] { return check_q_one_baseline(); }});
  }

  void add_module_checks(std::shared_ptr<const WeightModule> m) {
    const int rank = m->n() - 1;
    const auto base = module_params(*m);
    tasks_.push_back({stub("weight_dimensions", "sec-3.1", base), [m] { return verify_weight_dimensions(*m); }});
    for (int i = 1; i <= rank; ++i) {
      auto params = base;
      params.emplace_back("i", i);
      params.emplace_back("bound", kPowerBound);
      auto dp = stub("divided_power_rule", "prop-4.1", params);
      tasks_.push_back({dp, [m, dp, i] {
                          return fold_over(dp, [&](auto add) {
                            for (int r1 = 1; r1 < kPowerBound; ++r1)
                              for (int r2 = 1; r1 + r2 <= kPowerBound; ++r2)
                                add(verify_divided_power_rule(*m, i, r1, r2));
                          });
                        }});
      auto ef = stub("ef_straightening", "cor-4.3", params);
      tasks_.push_back({ef, [m, ef, i] {
                          return fold_over(ef, [&](auto add) {
                            for (int a = 0; a <= kPowerBound; ++a)
                              for (int b = 0; a + b <= kPowerBound; ++b)
                                add(verify_ef_straightening_all(*m, i, a, b));
                          });
                        }});
    }
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j) {
        if (i == j) continue;
        auto params = base;
        params.emplace_back("i", i);
        params.emplace_back("j", j);
        tasks_.push_back({stub("serre", "cond-viii", params), [m, i, j] { return verify_serre(*m, i, j); }});
        tasks_.push_back({stub("distant_and_ef_commutation", "cond-ix", params),
                          [m, i, j] { return verify_distant_and_ef_commutations(*m, i, j); }});
        if (m->cartan().adjacent(i, j)) {
          params.emplace_back("bound", kPowerBound);
          auto mixed = stub("mixed_decomposition", "prop-4.7", params);
          tasks_.push_back({mixed, [m, mixed, i, j] {
                              return fold_over(mixed, [&](auto add) {
                                for (int a = 0; a <= kPowerBound; ++a)
                                  for (int b = 0; a + b <= kPowerBound; ++b)
                                    if (a + b >= 1) add(verify_mixed_decompositions(*m, i, j, a, b));
                              });
                            }});
        }
      }
  }

  void add_braid_checks(std::shared_ptr<const WeightModule> m) {
    auto conv = convention();
    const int rank = m->n() - 1;
    auto with = [&](std::vector<std::pair<std::string, ParamValue>> extra) {
      auto p = module_params(*m);
      p.insert(p.end(), extra.begin(), extra.end());
      return p;
    };
    for (int i = 1; i <= rank; ++i) {
      tasks_.push_back({stub("weyl_compatibility", "thm-2.9", with({{"i", i}})),
                        [m, conv, i] { return check_weyl_compatibility(*m, *conv, i); }});
      for (int j = i + 1; j <= rank; ++j)
        tasks_.push_back({stub("braid_relation", "thm-2.10", with({{"i", i}, {"j", j}})),
                          [m, conv, i, j] { return check_braid_relation(*m, *conv, i, j); }});
    }
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j) {
        if (!m->cartan().adjacent(i, j)) continue;
        const auto p = with({{"i", i}, {"j", j}});
        tasks_.push_back({stub("root_vector_conjugation", "cor-5.4", p),
                          [m, conv, i, j] { return conjugation_check(*m, *conv, i, j); }});
        tasks_.push_back({stub("tij_factorization", "prop-5.6", p),
                          [m, conv, i, j] { return check_tij_factorization(*m, *conv, i, j); }});
      }
  }

  void add_rewrite() {
    RewriteSweep sweep;
    sweep.options.priority = config_.rules;
    sweep.max_length = config_.word_length;
    sweep.seed = config_.seed;
    sweep.cache = disk_;
    const CartanData top = suite_cartan(config_, config_.n.hi);
    if (!is_type_a(top)) {
      sweep.samples = config_.rewrite_samples;
      auto cartan = std::make_shared<const CartanData>(top);
      tasks_.push_back({stub("rewrite_termination", "oracle", {}),
                        [cartan, sweep] { return check_rewrite_termination(cartan, sweep); }});
      auto s = stub("rewrite_soundness", "oracle", {});
      tasks_.push_back({s, [s] { return skipped(s, "the oracle needs a type A graph"); }});
      return;
    }
    sweep.n_min = config_.n.lo;
    sweep.n_max = config_.n.hi;
    sweep.N_min = config_.N.lo;
    sweep.N_max = config_.N.hi;
    RewriteSweep sound = sweep;
    sound.samples = config_.rewrite_samples;
    RewriteSweep conf = sweep;
    conf.samples = config_.confluence_samples;
    // Confluence draws its own words.
    conf.seed = sweep.seed ^ 0x9e3779b97f4a7c15ULL;
    tasks_.push_back({stub("rewrite_soundness", "oracle", {}), [sound] { return check_rewrite_soundness(sound); }});
    tasks_.push_back({stub("rewrite_confluence", "oracle", {}), [conf] { return check_rewrite_confluence(conf); }});
  }

  void add_polynomial() {
    const int deg = config_.poly_degree;
    const int samples = config_.poly_samples;
    const auto seed = config_.seed;
    for (int m = 2; m <= 4; ++m)
      tasks_.push_back({stub("nilhecke", "sec-6.rel-i", {{"m", m}}),
                        [=] { return check_nilhecke(m, deg, samples, seed); }});
    auto cartan = std::make_shared<const CartanData>(suite_cartan(config_, config_.n.hi));
    for (int i = 1; i <= cartan->rank(); ++i)
      for (int j = 1; j <= cartan->rank(); ++j) {
        const std::vector<std::pair<std::string, ParamValue>> p{{"i", i}, {"j", j}};
        tasks_.push_back({stub("klr_double_crossing", "sec-6.rel-ii", p),
                          [=] { return check_klr_double_crossing(*cartan, i, j, deg, samples, seed); }});
        if (!cartan->adjacent(i, j)) continue;
        tasks_.push_back({stub("klr_edge_relation", "sec-6.rel-ii", p),
                          [=] { return check_klr_edge_relation(*cartan, i, j, deg, samples, seed); }});
        tasks_.push_back({stub("theorem6_composite", "thm-6.1", p),
                          [=] { return check_theorem6_computation(*cartan, i, j, deg, samples, seed); }});
      }
  }

  void add_negative_controls() {
    const int deg = config_.poly_degree;
    const int samples = config_.poly_samples;
    const auto seed = config_.seed;
    auto small = module(3, 2, Specialization::generic);
    auto conv = convention();
    tasks_.push_back({stub("negative_control.root_vector_conjugation", "cor-5.4", {}), [small, conv] {
                        GradingConvention flipped = *conv;
                        flipped.eps = -flipped.eps;
                        return negative_control(conjugation_check(*small, flipped, 1, 2));
                      }});
    tasks_.push_back({stub("negative_control.theorem6_composite", "thm-6.1", {}), [=] {
                        return negative_control(check_theorem6_computation(
                            CartanData::type_a(2), 1, 2, deg, samples, seed,
                            Theorem6Variant::drop_inner_demazure));
                      }});
    auto oracle_module = module(3, 3, Specialization::generic);
    tasks_.push_back({stub("negative_control.rewrite_oracle", "oracle", {}), [oracle_module] {
                        auto cartan = std::make_shared<const CartanData>(oracle_module->cartan());
                        const Weight source = Weight::from_content({2, 1, 0});
                        // Drops the e_2 e_1^{(2)} half of the Serre split.
                        return negative_control(oracle_equal(parse_sum("E1 E2 E1", cartan, source),
                                                             parse_sum("E1^(2) E2", cartan, source),
                                                             *oracle_module));
                      }});
  }

  const SuiteConfig& config_;
  std::shared_ptr<const MatrixCache> disk_;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const WeightModule>> modules_;
  std::shared_ptr<const GradingConvention> convention_;
  std::optional<DerivationResult> derivation_;
  std::string derivation_error_;
  std::vector<Task> tasks_;
};

VerificationReport run_task(const Task& task) {
  try {
    return task.run();
  } catch (const std::exception& e) {
    VerificationReport r = task.stub;
    r.fail({{}, {}, {}, std::string("exception: ") + e.what()});
    return r;
  }
}

}  // namespace

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  config.validate();
  SuiteBuilder builder(config);
  const auto tasks = builder.build();
  std::vector<VerificationReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) reports[k] = run_task(tasks[k]);
  };
  const int threads = std::min<int>(config.jobs, static_cast<int>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const auto& a, const auto& b) { return a.sort_key() < b.sort_key(); });
  return reports;
}

std::string report_to_json(const VerificationReport& r, std::uint64_t seed, bool with_millis) {
  Json j;
  j["check"] = r.check;
  j["citation"] = r.citation;
  Json params = Json::object();
  for (const auto& [k, v] : r.params)
    std::visit([&, &key = k](const auto& x) { params[key] = x; }, v);
  j["params"] = params;
  j["convention"] = nullptr;
  for (const auto& [name, fields] : r.sections) {
    Json section = Json::object();
    for (const auto& [k, v] : fields) section[k] = v;
    j[name] = section;
  }
  j["status"] = to_string(r.status);
  if (r.counterexample) {
    const auto& ce = *r.counterexample;
    j["counterexample_weight"] = ce.weight.empty() ? Json(nullptr) : Json(ce.weight);
    Json matrices = Json::object();
    for (const auto& [name, text] : ce.matrices) matrices[name] = text;
    j["counterexample"] = {{"words", ce.words}, {"matrices", matrices}, {"note", ce.note}};
  } else {
    j["counterexample_weight"] = nullptr;
    j["counterexample"] = nullptr;
  }
  j["comparisons"] = r.comparisons;
  if (with_millis) j["millis"] = r.millis;
  j["seed"] = seed;
  return j.dump();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  std::string status = to_string(r.status);
  std::transform(status.begin(), status.end(), status.begin(), ::toupper);
  os << status << ' ' << r.check << " [" << r.citation << ']';
  for (const auto& [k, v] : r.params) {
    os << ' ' << k << '=';
    std::visit([&](const auto& x) { os << x; }, v);
  }
  os << " (" << r.comparisons << " comparisons)";
  if (r.counterexample) {
    const auto& ce = *r.counterexample;
    if (!ce.note.empty()) os << "\n  " << ce.note;
    if (!ce.weight.empty()) os << "\n  at weight " << ce.weight;
    for (const auto& w : ce.words) os << "\n  word: " << w;
    for (const auto& [name, text] : ce.matrices) {
      os << "\n  " << name << ":";
      std::istringstream lines(text);
      std::string line;
      while (std::getline(lines, line)) os << "\n    " << line;
    }
  }
  return os.str();
}

}  // namespace qgw
