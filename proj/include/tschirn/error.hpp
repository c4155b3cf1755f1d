#pragma once

#include <stdexcept>
#include <string>

namespace tschirn {

// Base of every error raised by the toolkit. Callers that only need to
// distinguish "bad input" from "failed check" catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class HomogeneityError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class LatticeMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedRank : public Error {
 public:
  using Error::Error;
};

class NonIntegral : public Error {
 public:
  using Error::Error;
};

class InconsistentData : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

class UndeclaredSymbol : public Error {
 public:
  using Error::Error;
};

}  // namespace tschirn
