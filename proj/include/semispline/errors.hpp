#ifndef SEMISPLINE_ERRORS_HPP
#define SEMISPLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semispline {

// Domain errors carry a stable machine-readable kind; the CLI prints
// "error: <kind>: <message>" and exits 1. Parse/usage problems exit 2.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define SEMISPLINE_DEFINE_ERROR(Name, kind_string)                  \
  class Name : public Error {                                       \
  public:                                                           \
    explicit Name(const std::string& msg) : Error(kind_string, msg) {} \
  }

SEMISPLINE_DEFINE_ERROR(InvalidArgument, "invalid-argument");
SEMISPLINE_DEFINE_ERROR(TooFewKnots, "too-few-knots");
SEMISPLINE_DEFINE_ERROR(AllKnotsEqual, "all-knots-equal");
SEMISPLINE_DEFINE_ERROR(RepeatedKnots, "repeated-knots");
SEMISPLINE_DEFINE_ERROR(DegenerateRows, "degenerate-rows");
SEMISPLINE_DEFINE_ERROR(DependentRows, "dependent-rows");
SEMISPLINE_DEFINE_ERROR(NotUnimodular, "not-unimodular");
SEMISPLINE_DEFINE_ERROR(IntervalTooNarrow, "interval-too-narrow");
SEMISPLINE_DEFINE_ERROR(EmptyFactorizationSet, "empty-factorization-set");
SEMISPLINE_DEFINE_ERROR(CapacityExceeded, "capacity-exceeded");
SEMISPLINE_DEFINE_ERROR(ParseError, "parse-error");

#undef SEMISPLINE_DEFINE_ERROR

}  // namespace semispline

#endif
