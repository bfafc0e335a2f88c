#ifndef DVCURVE_ERRORS_HPP
#define DVCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dvcurve {

// Every recoverable failure in the library throws Error with one of these
// codes.  The CLI maps code classes to exit statuses (parse = 1,
// precondition = 2, precision = 3).
enum class ErrorCode {
  ParseError,
  FieldMismatch,
  RingMismatch,
  NotAUnit,
  NotASquareResidue,
  BadResidue,
  CharDividesN,
  CharTwo,
  NotDistinguished,
  PrecisionExhausted,
  NotInvertible,
  WindowTooSmall,
  NotSplitNode,
  ObstructionFails,
  Disconnected,
  EmptyInput,
  RankZero,
  UnknownBase,
  HypothesisViolated,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // Exit-status class used by the CLI: 2 for precondition failures,
  // 3 for precision exhaustion, 1 for parse problems.
  int exit_class() const {
    switch (code_) {
      case ErrorCode::ParseError:
        return 1;
      case ErrorCode::PrecisionExhausted:
      case ErrorCode::WindowTooSmall:
        return 3;
      default:
        return 2;
    }
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dvcurve

#endif
