#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kss {

// Base class for every error thrown by the library.  All errors carry a
// human-readable message; some carry extra structured data.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- scalar / parsing --------------------------------------------------

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

// Two scalars with incompatible conductors were combined while strict
// conductor checking was enabled.
struct ConductorMismatch : Error {
  ConductorMismatch(unsigned lhs, unsigned rhs)
      : Error("conductor mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)),
        lhs_conductor(lhs),
        rhs_conductor(rhs) {}
  unsigned lhs_conductor;
  unsigned rhs_conductor;
};

// The requested value does not live in Q(zeta_N) for the session conductor N;
// `required` is the smallest conductor that would work.
struct ConductorTooSmall : Error {
  ConductorTooSmall(unsigned conductor, unsigned required_)
      : Error("conductor " + std::to_string(conductor) +
              " too small; need a multiple of " + std::to_string(required_)),
        conductor_given(conductor),
        required(required_) {}
  unsigned conductor_given;
  unsigned required;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// ---- semigroups --------------------------------------------------------

struct NotAssociative : Error {
  NotAssociative(std::size_t x_, std::size_t y_, std::size_t z_)
      : Error("multiplication table is not associative: witness (" +
              std::to_string(x_) + ", " + std::to_string(y_) + ", " +
              std::to_string(z_) + ")"),
        x(x_),
        y(y_),
        z(z_) {}
  std::size_t x, y, z;
};

struct NotAnInvolution : Error {
  explicit NotAnInvolution(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// ---- function space ----------------------------------------------------

// A sigma-parity requirement (chi o sigma = chi, A o sigma = -A,
// rho o sigma = -rho) failed.
struct ParityViolation : Error {
  explicit ParityViolation(const std::string& msg) : Error(msg) {}
};

// The values prescribed on the fringe block P do not transport correctly
// under multiplication by elements outside the null ideal.
struct RhoCompatibilityViolation : Error {
  explicit RhoCompatibilityViolation(const std::string& msg) : Error(msg) {}
};

// ---- solution families -------------------------------------------------

// A stated family constraint (a constant being nonzero, a value of chi at z0,
// ...) does not hold for the supplied ingredients.
struct ConstraintViolated : Error {
  explicit ConstraintViolated(const std::string& msg) : Error(msg) {}
};

// chi o sigma = chi was required but chi o sigma != chi, or vice versa.
struct WrongSigmaParity : Error {
  explicit WrongSigmaParity(const std::string& msg) : Error(msg) {}
};

// The requested family has no instances on the given context at all
// (as opposed to the supplied constants merely being unsuitable).
struct FamilyUnavailable : Error {
  explicit FamilyUnavailable(const std::string& msg) : Error(msg) {}
};

struct LambdaZero : Error {
  LambdaZero() : Error("lambda must be nonzero for the shifted equation") {}
};

// ---- verification / classification -------------------------------------

struct PreconditionNotMet : Error {
  explicit PreconditionNotMet(const std::string& msg) : Error(msg) {}
};

struct NotASolution : Error {
  explicit NotASolution(const std::string& msg) : Error(msg) {}
};

// The pair is a genuine solution but no exponential within the session
// conductor explains it; a larger conductor is needed.
struct UnclassifiableWithinConductor : Error {
  explicit UnclassifiableWithinConductor(const std::string& msg) : Error(msg) {}
};

// The classifier derived data that contradicts itself; this indicates a bug
// or a violated precondition and is never silently ignored.
struct InternalInconsistency : Error {
  explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

struct NoCatalogMatch : Error {
  explicit NoCatalogMatch(const std::string& msg) : Error(msg) {}
};

struct AmbiguousDecomposition : Error {
  explicit AmbiguousDecomposition(const std::string& msg) : Error(msg) {}
};

// ---- oracle ------------------------------------------------------------

struct BudgetExceeded : Error {
  BudgetExceeded(double estimated, double budget)
      : Error("search space of ~" + std::to_string(estimated) +
              " assignments exceeds budget " + std::to_string(budget)) {}
};

}  // namespace kss
