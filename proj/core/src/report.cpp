#include "cmcflat/report.hpp"

#include <algorithm>
#include <cmath>

namespace cmcflat {

namespace {
bool within(Scalar residual, Scalar tolerance) { return std::isfinite(residual) && residual <= tolerance; }
}  // namespace

void VerificationReport::add(std::string name, Scalar residual, Scalar tolerance) {
  checks_.push_back(Check{std::move(name), residual, tolerance, within(residual, tolerance)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const Check& c : other.checks_) {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& mine) { return mine.name == c.name; });
    if (it == checks_.end()) {
      checks_.push_back(c);
      continue;
    }
    if (!std::isfinite(c.residual) || c.residual > it->residual) it->residual = c.residual;
    it->tolerance = std::min(it->tolerance, c.tolerance);
    it->passed = within(it->residual, it->tolerance);
  }
  sample_count_ += other.sample_count_;
}

const Check* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> VerificationReport::failed_names() const {
  std::vector<std::string> out;
  for (const Check& c : checks_)
    if (!c.passed) out.push_back(c.name);
  return out;
}

}  // namespace cmcflat
