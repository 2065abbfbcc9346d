#pragma once

#include <stdexcept>
#include <string>

namespace asmdpp {

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct InexactDivision : std::runtime_error {
  InexactDivision() : std::runtime_error("inexact polynomial division") {}
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct PoleHit : std::runtime_error {
  explicit PoleHit(const std::string& what) : std::runtime_error(what) {}
};

struct NotExpandable : std::runtime_error {
  explicit NotExpandable(const std::string& what) : std::runtime_error(what) {}
};

struct GradingViolation : std::runtime_error {
  explicit GradingViolation(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateParameters : std::runtime_error {
  explicit DegenerateParameters(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct SizeTooSmall : std::runtime_error {
  explicit SizeTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidObject : std::runtime_error {
  explicit InvalidObject(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDivisionAt : std::runtime_error {
  int i, j, k;
  ZeroDivisionAt(int i_, int j_, int k_)
      : std::runtime_error("T-system division by zero at (" + std::to_string(i_) + "," +
                           std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

}  // namespace asmdpp
