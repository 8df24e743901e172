#include "frobnc/error.hpp"

namespace frobnc {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::FieldTooLarge: return "FieldTooLarge";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::NotASquareField: return "NotASquareField";
    case Err::IncompatibleFields: return "IncompatibleFields";
    case Err::SyntaxError: return "SyntaxError";
    case Err::NotHomogeneous: return "NotHomogeneous";
    case Err::UnknownVariable: return "UnknownVariable";
    case Err::CoefficientNotInField: return "CoefficientNotInField";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::ZeroDivisor: return "ZeroDivisor";
    case Err::DegreeOverflow: return "DegreeOverflow";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::NotHermitian: return "NotHermitian";
    case Err::ZeroMatrix: return "ZeroMatrix";
    case Err::NotASquare: return "NotASquare";
    case Err::NotSkew: return "NotSkew";
    case Err::Degenerate: return "Degenerate";
    case Err::OddSize: return "OddSize";
    case Err::NotHermitianMatrix: return "NotHermitianMatrix";
    case Err::WrongCharacteristic: return "WrongCharacteristic";
    case Err::OddN: return "OddN";
    case Err::BadG: return "BadG";
    case Err::NotABasis: return "NotABasis";
    case Err::BadDimension: return "BadDimension";
    case Err::VerificationFailure: return "VerificationFailure";
    case Err::EqualPoints: return "EqualPoints";
    case Err::SingularPoint: return "SingularPoint";
    case Err::PointNotOnHypersurface: return "PointNotOnHypersurface";
    case Err::UncertifiableCase: return "UncertifiableCase";
    case Err::DegenerateMatrixConstruction: return "DegenerateMatrixConstruction";
    case Err::NotAPlaneCurve: return "NotAPlaneCurve";
    case Err::LineContained: return "LineContained";
    case Err::InvalidParameters: return "InvalidParameters";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::BothZero: return "BothZero";
    case Err::ZeroForm: return "ZeroForm";
    case Err::UnknownSuite: return "UnknownSuite";
    case Err::CharacteristicTwo: return "CharacteristicTwo";
    case Err::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace frobnc
