#pragma once

#include <stdexcept>
#include <string>

namespace nvsensor {

// Physical constants failed a finiteness/positivity check.
class InvalidConstants : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The two-level reduction is not justified at the requested bias field.
// Carries the detuning ratio that failed the check.
class EffectiveModelInvalid : public std::runtime_error {
public:
  EffectiveModelInvalid(double ratio, double required)
      : std::runtime_error("effective model invalid: detuning ratio " +
                           std::to_string(ratio) + " below required " +
                           std::to_string(required)),
        detuning_ratio(ratio) {}
  double detuning_ratio;
};

// Estimator cannot be inverted (P in {0,1}, zero slope, or zero visibility).
class DegenerateEstimator : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Error propagation blows up (working point sits at a fringe extremum).
class DivergentUncertainty : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A closed-form approximation was evaluated outside its validity range.
class ApproximationInvalid : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

}  // namespace nvsensor
