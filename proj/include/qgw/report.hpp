#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qgw {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

using ParamValue = std::variant<long long, std::string>;

/// Evidence attached to a failing check.
struct Counterexample {
  std::string weight;
  std::vector<std::string> words;
  /// name -> textual matrix (triplet lines) or polynomial
  std::vector<std::pair<std::string, std::string>> matrices;
  std::string note;
};

/// Pass/fail record for one identity at one parameter set.
struct VerificationReport {
  std::string check;
  /// Stable anchor naming the identity checked, e.g. "cond-viii", "cor-4.3".
  std::string citation;
  std::vector<std::pair<std::string, ParamValue>> params;
  /// Extra structured fields (e.g. the grading convention), emitted verbatim.
  std::vector<std::pair<std::string, std::map<std::string, long long>>> sections;
  Status status = Status::pass;
  std::optional<Counterexample> counterexample;
  /// Number of individual comparisons that were made.
  std::int64_t comparisons = 0;
  double millis = 0.0;

  bool passed() const { return status == Status::pass; }

  VerificationReport& param(std::string key, long long v) {
    params.emplace_back(std::move(key), v);
    return *this;
  }
  VerificationReport& param(std::string key, std::string v) {
    params.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  /// Marks the report failed; the first counterexample wins.
  void fail(Counterexample ce);
  /// Folds `other` into this report (comparisons add up, first failure wins).
  void absorb(const VerificationReport& other);

  /// Key used to order reports independently of completion order.
  std::string sort_key() const;
};

/// Starts a stopwatch on construction and stamps `millis` on finish().
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r)
      : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() { finish(); }
  void finish() {
    report_.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
  }

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qgw
