#ifndef RSCOVER_ERROR_HPP
#define RSCOVER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rscover {

/// A precondition of a mathematical operation was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request was well formed but exceeds a configured work budget.
class RefusedError : public std::runtime_error {
 public:
  RefusedError(const std::string& what, double required_work)
      : std::runtime_error(what), required_work_(required_work) {}
  double required_work() const noexcept { return required_work_; }

 private:
  double required_work_;
};

/// A run configuration failed validation (unknown key, bad value, bad combo).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rscover

#endif  // RSCOVER_ERROR_HPP
