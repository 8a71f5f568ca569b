#include "qgw/report.hpp"

#include <sstream>

namespace qgw {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

void VerificationReport::fail(Counterexample ce) {
  if (status != Status::fail) counterexample = std::move(ce);
  status = Status::fail;
}

void VerificationReport::absorb(const VerificationReport& other) {
  comparisons += other.comparisons;
  if (other.status == Status::fail) {
    if (status != Status::fail) counterexample = other.counterexample;
    status = Status::fail;
  }
}

std::string VerificationReport::sort_key() const {
  std::ostringstream os;
  os << check;
  for (const auto& [k, v] : params) {
    os << '|' << k << '=';
    // Zero-pad integers so lexicographic order matches numeric order.
    if (const auto* i = std::get_if<long long>(&v)) {
      std::ostringstream num;
      num << (*i < 0 ? '-' : '+');
      num.width(12);
      num.fill('0');
      num << (*i < 0 ? -*i : *i);
      os << num.str();
    } else {
      os << std::get<std::string>(v);
    }
  }
  return os.str();
}

}  // namespace qgw
