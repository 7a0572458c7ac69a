#pragma once

#include <stdexcept>
#include <string>

namespace galcensus {

// Every failure raised by the library derives from Error. The CLI maps the
// subclasses onto exit statuses (PreconditionError -> 2, CeilingExceeded -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CeilingExceeded : public Error {
 public:
  CeilingExceeded(const std::string& what, unsigned long long required)
      : Error(what), required_(required) {}
  unsigned long long required() const noexcept { return required_; }

 private:
  unsigned long long required_;
};

class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, double best_radius)
      : Error(what), best_radius_(best_radius) {}
  double best_radius() const noexcept { return best_radius_; }

 private:
  double best_radius_;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class UndefinedBound : public Error {
 public:
  using Error::Error;
};

}  // namespace galcensus
