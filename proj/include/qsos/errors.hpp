#ifndef QSOS_ERRORS_HPP
#define QSOS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsos {

enum class ErrorKind {
  Parse,
  DimensionMismatch,
  NotPsd,
  NonPositive,
  ZeroPolynomial,
  NotSquarefree,
  NotMonic,
  NotInvolution,
  HasFixedPoint,
  OrderExceeded,
  PrecisionExhausted,
  NotTotallyImaginary,
  Reducible,
  DegreeTooSmall,
  GaloisDataMissing,
  HeterogeneousDegrees,
  EmptyInput,
  NotQuadraticallyIndependent,
  NoSolution,
  SpansDiffer,
  EqualPoints,
  NotCayleyBacharach,
  DuplicatePoint,
  LinearlyDependent,
  NotASumOverU,
  MissingGramWitness,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class OrderExceeded : public Error {
 public:
  OrderExceeded(std::size_t partial, std::size_t bound)
      : Error(ErrorKind::OrderExceeded, "group order exceeds bound " + std::to_string(bound) +
                                            " (aborted after " + std::to_string(partial) +
                                            " elements)"),
        partial_(partial) {}
  std::size_t partial_count() const { return partial_; }

 private:
  std::size_t partial_;
};

}  // namespace qsos

#endif  // QSOS_ERRORS_HPP
