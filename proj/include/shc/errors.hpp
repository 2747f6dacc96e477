#pragma once

#include <stdexcept>
#include <string>

namespace shc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in incompatible structures (ring tag, rank, shape).
class StructureError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A bracket or square left the span of the given matrices.
class ClosureViolation : public Error {
 public:
  using Error::Error;
};

/// A conjugate did not lie in the odd span; the residual was nonzero.
class SpanViolation : public Error {
 public:
  using Error::Error;
};

/// A matrix failed the membership predicate of a group descriptor.
class MembershipViolation : public Error {
 public:
  using Error::Error;
};

/// The rewriting engine exceeded its pass bound. Always a bug.
class NonTermination : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace shc
