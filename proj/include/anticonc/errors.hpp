#pragma once

#include <stdexcept>
#include <string>

namespace anticonc {

// Base class for all library errors. Subclasses exist so callers can
// discriminate failure modes without parsing messages.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double most_negative_pivot)
      : Error(what), most_negative_pivot(most_negative_pivot) {}
  double most_negative_pivot;
};

class RhoOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class KOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class QuantileDomainError : public Error {
 public:
  using Error::Error;
};

class ZeroVarianceCoordinateError : public Error {
 public:
  using Error::Error;
};

class BoxEmptyError : public Error {
 public:
  using Error::Error;
};

class CombinatorialBudgetError : public Error {
 public:
  using Error::Error;
};

class DegenerateSpecError : public Error {
 public:
  using Error::Error;
};

class PeakAtBoundaryError : public Error {
 public:
  using Error::Error;
};

class EmptyPositiveRegionError : public Error {
 public:
  using Error::Error;
};

class TooFewSamplesError : public Error {
 public:
  using Error::Error;
};

class UnsortedInputError : public Error {
 public:
  using Error::Error;
};

class NonpositiveSdError : public Error {
 public:
  using Error::Error;
};

class BadRhoError : public Error {
 public:
  using Error::Error;
};

class RhoCoverAtOneError : public Error {
 public:
  using Error::Error;
};

class SOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace anticonc
