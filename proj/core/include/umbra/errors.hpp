#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umbra {

// Every failure mode the library can raise. The CLI maps input-side codes to
// exit code 2 and mathematical precondition violations to exit code 3.
enum class Errc {
  // input / parse
  SyntaxError,
  UnboundName,
  UnknownOperator,
  MissingParam,
  NonPolynomial,
  // mathematical preconditions
  DivisionByZero,
  DivisionByHigherValuation,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  NotReversible,
  ZeroFactorIllegal,
  OutOfRange,
  InsufficientOrder,
  NotInvertible,
  FractionalPowerNeedsUnitConstant,
  MixedFactorialSystems,
  NotDelta,
  NotShiftInvariant,
  NonClassicalFactorial,
  NotTriangular,
  LengthMismatch,
};

const char* errc_name(Errc code);

// True for codes that indicate bad input text or usage rather than a violated
// mathematical precondition.
bool is_input_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  Errc code() const { return code_; }
  // The message without the leading code name.
  const std::string& message() const { return message_; }

 private:
  Errc code_;
  std::string message_;
};

// Parse failure carrying the byte offset of the offending position. For
// end-of-input errors the offset equals the input length.
class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& message, std::size_t offset)
      : Error(code, message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace umbra
