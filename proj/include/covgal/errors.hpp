#pragma once

#include <stdexcept>
#include <string>

namespace covgal {

/// Coarse failure categories, mapped to CLI exit codes.
enum class ErrorKind {
  input = 1,        // malformed spec / schema violation
  weierstrass = 2,  // repeated roots on the domain
  numerical = 3,    // continuation / solve failure
  cap = 4,          // enumeration or bound cap exceeded
  not_found = 5,    // search exhausted without a hit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what),
        kind_(kind),
        name_(std::move(name)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

#define COVGAL_ERROR(Name, Kind)                              \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what)                    \
        : Error(ErrorKind::Kind, #Name, what) {}              \
  }

COVGAL_ERROR(InputError, input);

COVGAL_ERROR(OverlappingHoles, input);
COVGAL_ERROR(HoleOutsideOuter, input);
COVGAL_ERROR(BasepointInHole, input);
COVGAL_ERROR(SpiderBlocked, input);

COVGAL_ERROR(WeierstrassViolation, weierstrass);

COVGAL_ERROR(RootCollision, numerical);
COVGAL_ERROR(NoConvergence, numerical);
COVGAL_ERROR(StepUnderflow, numerical);
COVGAL_ERROR(AmbiguousMatch, numerical);
COVGAL_ERROR(DuplicateRoots, numerical);
COVGAL_ERROR(SingularSystem, numerical);
COVGAL_ERROR(ToleranceExceeded, numerical);
COVGAL_ERROR(InterpolationFailure, numerical);
COVGAL_ERROR(ResidualTooLarge, numerical);
COVGAL_ERROR(HomotopyLeavesB, numerical);
COVGAL_ERROR(GroupMismatch, numerical);

COVGAL_ERROR(OrderCapExceeded, cap);
COVGAL_ERROR(BoundExhausted, cap);
COVGAL_ERROR(NotASubgroup, input);

COVGAL_ERROR(SearchBudgetExhausted, not_found);

#undef COVGAL_ERROR

}  // namespace covgal
