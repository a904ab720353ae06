#include "umbra/errors.hpp"

namespace umbra {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundName: return "UnboundName";
    case Errc::UnknownOperator: return "UnknownOperator";
    case Errc::MissingParam: return "MissingParam";
    case Errc::NonPolynomial: return "NonPolynomial";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionByHigherValuation: return "DivisionByHigherValuation";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::ConstantTermNotOne: return "ConstantTermNotOne";
    case Errc::NotReversible: return "NotReversible";
    case Errc::ZeroFactorIllegal: return "ZeroFactorIllegal";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InsufficientOrder: return "InsufficientOrder";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::FractionalPowerNeedsUnitConstant:
      return "FractionalPowerNeedsUnitConstant";
    case Errc::MixedFactorialSystems: return "MixedFactorialSystems";
    case Errc::NotDelta: return "NotDelta";
    case Errc::NotShiftInvariant: return "NotShiftInvariant";
    case Errc::NonClassicalFactorial: return "NonClassicalFactorial";
    case Errc::NotTriangular: return "NotTriangular";
    case Errc::LengthMismatch: return "LengthMismatch";
  }
  return "Error";
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::SyntaxError:
    case Errc::UnboundName:
    case Errc::UnknownOperator:
    case Errc::MissingParam:
    case Errc::NonPolynomial:
      return true;
    default:
      return false;
  }
}

}  // namespace umbra
