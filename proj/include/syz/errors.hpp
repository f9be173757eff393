#pragma once

#include <stdexcept>
#include <string>

namespace syz {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monomials or families over different numbers of variables were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (non-primary family, n < 2, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No family with the requested parameters can exist (P^1 divisibility).
class NoFamilyExists : public Error {
 public:
  using Error::Error;
};

/// (N, d, n) lies outside every construction's range.
class RoutingError : public Error {
 public:
  using Error::Error;
};

/// A checker-validated search found nothing.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle was asked to enumerate too many subsets.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed family text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Internal bookkeeping broke an invariant it relies on.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace syz
