#include "asymclust/report.hpp"

namespace asymclust {

VerificationReport VerificationReport::pass(std::string name, std::size_t trials) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.passed = true;
  r.trials = trials;
  return r;
}

VerificationReport VerificationReport::fail(std::string name, std::size_t trials,
                                            Counterexample cx) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.passed = false;
  r.trials = trials;
  r.counterexample = std::move(cx);
  return r;
}

VerificationReport VerificationReport::combine(std::string name,
                                               std::vector<VerificationReport> children) {
  VerificationReport r;
  r.check_name = std::move(name);
  for (const auto& child : children) {
    r.trials += child.trials;
    if (r.passed && !child.passed) {
      r.passed = false;
      r.counterexample = child.counterexample;
      r.counterexample->violated = child.check_name + ": " + r.counterexample->violated;
    }
  }
  r.subchecks = std::move(children);
  return r;
}

}  // namespace asymclust
