#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cmcflat/types.hpp"

namespace cmcflat {

struct Check {
  std::string name;
  Scalar residual = 0.0;
  Scalar tolerance = 0.0;
  bool passed = false;
};

// Per-property results of a verification run. A check passes exactly when its
// residual does not exceed its tolerance; non-finite residuals always fail.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::size_t sample_count) : sample_count_(sample_count) {}

  void add(std::string name, Scalar residual, Scalar tolerance);

  // Folds another report in: checks with the same name keep the larger
  // residual, sample counts add up.
  void merge(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  bool all_passed() const;
  std::vector<std::string> failed_names() const;

  std::size_t sample_count() const { return sample_count_; }
  void set_sample_count(std::size_t n) { sample_count_ = n; }

 private:
  std::vector<Check> checks_;
  std::size_t sample_count_ = 1;
};

}  // namespace cmcflat
