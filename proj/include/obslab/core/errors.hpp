#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace obslab {

// A documented precondition was violated. `threshold` names the violated
// bound when there is one (e.g. "lambda < lambda_0 of the thinness lemma").
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what, std::string threshold = {})
      : std::invalid_argument(what), threshold_(std::move(threshold)) {}

  const std::string& threshold() const noexcept { return threshold_; }

 private:
  std::string threshold_;
};

// An iterative computation failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, std::vector<double> trace = {})
      : std::runtime_error(what), trace_(std::move(trace)) {}

  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

}  // namespace obslab
