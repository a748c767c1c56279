#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fermat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer than g independent motivic elements are available for (N, a, b).
class InsufficientElements : public Error {
 public:
  using Error::Error;
};

class DegenerateRegulator : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownConductor : public Error {
 public:
  using Error::Error;
};

class ContourTooClose : public Error {
 public:
  using Error::Error;
};

class CoefficientShortfall : public Error {
 public:
  CoefficientShortfall(const std::string& what, std::int64_t required)
      : Error(what), required_(required) {}
  std::int64_t required() const noexcept { return required_; }

 private:
  std::int64_t required_;
};

class EpsilonIndeterminate : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class LevelMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace fermat
