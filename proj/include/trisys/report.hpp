#ifndef TRISYS_REPORT_HPP
#define TRISYS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace trisys {

struct Witness {
  std::string chain;   // axiom / identity name
  std::string detail;  // assignment and both values, human-readable
};

// Outcome of an axiom or property check. Failures are data, not exceptions.
struct CheckReport {
  bool passed = true;
  std::uint64_t evaluations = 0;
  std::vector<Witness> failures;
  std::string note;

  void fail(const std::string& chain, const std::string& detail) {
    passed = false;
    failures.push_back({chain, detail});
  }
  void merge(const CheckReport& o) {
    passed = passed && o.passed;
    evaluations += o.evaluations;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    if (!o.note.empty()) note += (note.empty() ? "" : "; ") + o.note;
  }
  std::string summary() const;
};

}  // namespace trisys

#endif
