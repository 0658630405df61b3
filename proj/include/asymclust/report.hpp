#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace asymclust {

struct Counterexample {
  std::vector<std::size_t> indices;
  std::vector<double> values;
  std::string violated;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// Outcome of one check. passed == !counterexample.has_value(); composite
// reports lift the first failing child's counterexample.
struct VerificationReport {
  std::string check_name;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::size_t trials = 0;
  std::vector<VerificationReport> subchecks;

  static VerificationReport pass(std::string name, std::size_t trials);
  static VerificationReport fail(std::string name, std::size_t trials, Counterexample cx);

  // Builds a parent whose verdict and trial count aggregate the children.
  static VerificationReport combine(std::string name, std::vector<VerificationReport> children);
};

}  // namespace asymclust
