#ifndef FROBNC_ERROR_HPP
#define FROBNC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frobnc {

enum class Err {
  NonPrimeCharacteristic,
  ReducibleModulus,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  NotASquareField,
  IncompatibleFields,
  SyntaxError,
  NotHomogeneous,
  UnknownVariable,
  CoefficientNotInField,
  IndexOutOfRange,
  LengthMismatch,
  DimensionMismatch,
  ZeroDivisor,
  DegreeOverflow,
  ZeroPolynomial,
  DegreeMismatch,
  NotHermitian,
  ZeroMatrix,
  NotASquare,
  NotSkew,
  Degenerate,
  OddSize,
  NotHermitianMatrix,
  WrongCharacteristic,
  OddN,
  BadG,
  NotABasis,
  BadDimension,
  VerificationFailure,
  EqualPoints,
  SingularPoint,
  PointNotOnHypersurface,
  UncertifiableCase,
  DegenerateMatrixConstruction,
  NotAPlaneCurve,
  LineContained,
  InvalidParameters,
  BudgetExceeded,
  BothZero,
  ZeroForm,
  UnknownSuite,
  CharacteristicTwo,
  IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace frobnc

#endif
