// qgw: verification suite, rewriter and convention search on the command line.

#include "qgw/braiding.hpp"
#include "qgw/rewrite.hpp"
#include "qgw/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace qgw;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("QGW_CACHE_DIR")) return env;
  return ".qgw-cache";
}

// Flags shared by verify; unset ones leave the config file values alone.
struct VerifyFlags {
  std::string config_file;
  std::optional<std::string> graph;
  std::optional<std::string> n;
  std::optional<std::string> N;
  bool json = false;
  std::optional<int> jobs;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  std::optional<int> max_n;
  std::optional<int> max_N;
  std::optional<int> search_bound;
  std::optional<int> samples;
};

SuiteConfig make_config(const VerifyFlags& f) {
  SuiteConfig c;
  c.cache_dir = default_cache_dir();
  if (!f.config_file.empty()) apply_config_file(c, f.config_file);
  if (f.graph) c.graph = *f.graph;
  if (f.n) c.n = IntRange::parse(*f.n);
  if (f.N) c.N = IntRange::parse(*f.N);
  if (f.json) c.json = true;
  if (f.jobs) c.jobs = *f.jobs;
  if (f.seed) c.seed = *f.seed;
  if (f.cache_dir) c.cache_dir = *f.cache_dir;
  if (f.no_cache) c.cache_dir.clear();
  if (f.max_n) c.limits.max_n = *f.max_n;
  if (f.max_N) c.limits.max_N = *f.max_N;
  if (f.search_bound) c.search_bound = *f.search_bound;
  if (f.samples) c.rewrite_samples = *f.samples;
  c.validate();
  return c;
}

int cmd_verify(const VerifyFlags& flags) {
  const SuiteConfig config = make_config(flags);
  const auto reports = run_suite(config);
  int failed = 0;
  int skipped = 0;
  for (const auto& r : reports) {
    if (r.status == Status::fail) ++failed;
    if (r.status == Status::skipped) ++skipped;
    std::cout << (config.json ? report_to_json(r, config.seed) : report_to_text(r)) << '\n';
  }
  if (!config.json)
    std::cout << reports.size() << " reports, " << failed << " failed, " << skipped << " skipped\n";
  return failed ? kExitFail : kExitPass;
}

struct RewriteFlags {
  std::vector<std::string> input;
  std::string graph;
  std::vector<int> oracle;
};

int cmd_rewrite(const RewriteFlags& flags) {
  std::string joined;
  for (const auto& part : flags.input) joined += part + ' ';
  const auto at = joined.rfind('@');
  if (at == std::string::npos) throw ConfigError("expected `<expr> @ <weight>`");
  const std::string expr = joined.substr(0, at);
  const Weight source = parse_weight(joined.substr(at + 1));

  std::shared_ptr<const CartanData> cartan;
  if (!flags.graph.empty()) {
    SuiteConfig c;
    c.graph = flags.graph;
    const int n = source.has_content() ? static_cast<int>(source.content()->size()) : 0;
    cartan = std::make_shared<const CartanData>(
        n ? suite_cartan(c, n) : cartan_from_graph(parse_graph(flags.graph)));
  } else if (source.has_content()) {
    cartan = std::make_shared<const CartanData>(
        CartanData::type_a(static_cast<int>(source.content()->size()) - 1));
  } else {
    throw ConfigError("--graph is required for a pairing weight");
  }

  const FormalSum sum = parse_sum(expr, cartan, source);
  NormalFormStats stats;
  const FormalSum nf = normal_form(sum, {}, &stats);
  std::cout << nf.to_string() << '\n';
  if (flags.oracle.empty()) return kExitPass;
  const auto verdict = oracle_equal(sum, nf, flags.oracle[0], flags.oracle[1]);
  std::cout << "oracle: " << (verdict.passed() ? "equal" : "not equal") << '\n';
  if (!verdict.passed()) std::cout << report_to_text(verdict) << '\n';
  return verdict.passed() ? kExitPass : kExitFail;
}

std::string units(const std::vector<std::pair<int, int>>& u) {
  if (u.empty()) return "-";
  std::ostringstream os;
  for (std::size_t k = 0; k < u.size(); ++k) os << (k ? " " : "") << '(' << u[k].first << ',' << u[k].second << ')';
  return os.str();
}

void print_candidates(const DerivationResult& r) {
  std::cout << "c1 c2 invertible braid q=1 e_units f_units\n";
  for (const auto& c : r.candidates) {
    std::cout << c.c1 << ' ' << c.c2 << ' ' << (c.invertible ? "yes" : "no") << ' '
              << (c.braid ? "yes" : "no") << ' ' << (c.q_one ? "yes" : "no") << ' '
              << units(c.e_units) << ' ' << units(c.f_units);
    if (!c.failure.empty()) std::cout << "  # " << c.failure;
    std::cout << '\n';
  }
}

struct DeriveFlags {
  int search_bound = 2;
  bool q_one = false;
  std::optional<std::string> cache_dir;
};

int cmd_derive(const DeriveFlags& flags) {
  if (flags.search_bound < 0) throw ConfigError("--search-bound must be non-negative");
  const auto cache = flags.cache_dir ? std::filesystem::path(*flags.cache_dir) : default_cache_dir();
  int code = kExitPass;
  if (flags.q_one) {
    const auto baseline = check_q_one_baseline();
    std::cout << "q=1 baseline (gamma = 0): " << to_string(baseline.status) << '\n';
    if (!baseline.passed()) code = kExitFail;
  }
  try {
    const auto r = derive_grading_convention(flags.search_bound);
    print_candidates(r);
    std::cout << "passing:\n";
    for (const auto& c : r.passing) std::cout << "  " << c.to_string() << '\n';
    std::cout << "chosen: " << r.chosen.to_string() << '\n';
    if (!cache.empty()) {
      store_convention(cache, r.chosen);
      std::cout << "stored in " << (cache / "convention.json").string() << '\n';
    }
  } catch (const ConventionNotFound& e) {
    print_candidates(e.result);
    std::cout << "no convention found: " << e.what() << '\n';
    return kExitFail;
  }
  return code;
}

int cmd_cache(const std::string& action, const std::optional<std::string>& dir) {
  const auto root = dir ? std::filesystem::path(*dir) : default_cache_dir();
  const MatrixCache matrices(root / "matrices");
  if (action == "stats") {
    const auto s = matrices.stats();
    std::cout << "directory: " << root.string() << '\n'
              << "matrix files: " << s.files << '\n'
              << "bytes: " << s.bytes << '\n'
              << "convention: " << (load_convention(root) ? load_convention(root)->to_string() : "none")
              << '\n';
    return kExitPass;
  }
  const auto removed = matrices.clear();
  std::error_code ec;
  const bool conv = std::filesystem::remove(root / "convention.json", ec);
  std::cout << "removed " << removed << " matrix files" << (conv ? " and the stored convention" : "") << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Weyl group and categorified sl_n checks"};
  app.require_subcommand(1);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--config", vf.config_file, "Key = value config file")->check(CLI::ExistingFile);
  verify->add_option("--graph", vf.graph, "Preset (A3, D4) or graph file");
  verify->add_option("--n", vf.n, "n or n1..n2");
  verify->add_option("--N", vf.N, "N or N1..N2");
  verify->add_flag("--json", vf.json, "JSON Lines output");
  verify->add_option("--jobs", vf.jobs, "Worker threads");
  verify->add_option("--seed", vf.seed, "Random seed");
  verify->add_option("--cache-dir", vf.cache_dir, "Cache directory");
  verify->add_flag("--no-cache", vf.no_cache, "Do not read or write the cache");
  verify->add_option("--max-n", vf.max_n, "Raise the cap on n");
  verify->add_option("--max-N", vf.max_N, "Raise the cap on N");
  verify->add_option("--search-bound", vf.search_bound, "Convention search bound");
  verify->add_option("--samples", vf.samples, "Random words for the rewrite check");

  RewriteFlags rf;
  auto* rewrite = app.add_subcommand("rewrite", "Normal form of `<expr> @ <weight>`");
  rewrite->add_option("input", rf.input, "Expression, `@`, weight")->required()->expected(1, 3);
  rewrite->add_option("--graph", rf.graph, "Preset or graph file");
  rewrite->add_option("--oracle", rf.oracle, "Compare on V^{(x)N} of sl_n")->expected(2);

  DeriveFlags df;
  auto* derive = app.add_subcommand("derive-convention", "Search the grading convention");
  derive->add_option("--search-bound", df.search_bound, "Bound on |c1|, |c2|");
  derive->add_flag("--q-one", df.q_one, "Also run the q = 1 baseline");
  derive->add_option("--cache-dir", df.cache_dir, "Where the chosen convention is stored");

  std::string cache_action;
  std::optional<std::string> cache_dir;
  auto* cache = app.add_subcommand("cache", "Inspect or clear the cache");
  cache->add_option("action", cache_action, "clear or stats")
      ->required()
      ->check(CLI::IsMember({"clear", "stats"}));
  cache->add_option("--cache-dir", cache_dir, "Cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vf);
    if (*rewrite) return cmd_rewrite(rf);
    if (*derive) return cmd_derive(df);
    return cmd_cache(cache_action, cache_dir);
  } catch (const RewriteParseError& e) {
    std::cerr << "parse error at " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
