#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace actsep {

  using Index = std::size_t;

  // Base class for every error raised by the library. `category()` drives the
  // CLI exit-code mapping.
  class Error : public std::runtime_error {
   public:
    enum class Category { validation, search_cap, usage, internal };

    Error(Category cat, std::string const& msg)
        : std::runtime_error(msg), category_(cat) {}

    Category category() const noexcept {
      return category_;
    }

   private:
    Category category_;
  };

  class ValidationError : public Error {
   public:
    explicit ValidationError(std::string const& msg)
        : Error(Category::validation, msg) {}
  };

  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& msg, double estimate)
        : Error(Category::search_cap, msg), estimate_(estimate) {}
    double estimate() const noexcept {
      return estimate_;
    }

   private:
    double estimate_;
  };

  class InternalInvariantViolation : public Error {
   public:
    explicit InternalInvariantViolation(std::string const& msg)
        : Error(Category::internal, "internal invariant violated: " + msg) {}
  };

  // monoid-core ////////////////////////////////////////////////////////////

  class MalformedTable : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  class NotAssociative : public ValidationError {
   public:
    NotAssociative(Index i, Index j, Index k)
        : ValidationError("not associative at (" + std::to_string(i) + ", "
                          + std::to_string(j) + ", " + std::to_string(k) + ")"),
          triple{i, j, k} {}
    Index triple[3];
  };

  class BadIdentity : public ValidationError {
   public:
    explicit BadIdentity(Index i)
        : ValidationError("identity law fails at element " + std::to_string(i)),
          element(i) {}
    Index element;
  };

  class ClosureTooLarge : public CapExceeded {
   public:
    explicit ClosureTooLarge(std::size_t limit)
        : CapExceeded("transformation closure exceeds "
                          + std::to_string(limit) + " elements",
                      static_cast<double>(limit)),
          limit(limit) {}
    std::size_t limit;
  };

  class RightIdealEnumerationTooLarge : public CapExceeded {
   public:
    explicit RightIdealEnumerationTooLarge(std::size_t limit)
        : CapExceeded("more than " + std::to_string(limit) + " right ideals",
                      static_cast<double>(limit)) {}
  };

  class NotAGroup : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  class NotNormalSubgroup : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  class LinkNotHomomorphism : public ValidationError {
   public:
    LinkNotHomomorphism(Index alpha, Index beta)
        : ValidationError("link " + std::to_string(alpha) + " -> "
                          + std::to_string(beta) + " is not a homomorphism"),
          alpha(alpha),
          beta(beta) {}
    Index alpha, beta;
  };

  class LinkCoherenceViolation : public ValidationError {
   public:
    LinkCoherenceViolation(Index alpha, Index beta, Index gamma)
        : ValidationError("links " + std::to_string(alpha) + " >= "
                          + std::to_string(beta) + " >= "
                          + std::to_string(gamma) + " do not compose"),
          alpha(alpha),
          beta(beta),
          gamma(gamma) {}
    Index alpha, beta, gamma;
  };

  class NotAHomomorphism : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  // act-core ///////////////////////////////////////////////////////////////

  class IdentityLawViolation : public ValidationError {
   public:
    explicit IdentityLawViolation(Index a)
        : ValidationError("a*1 != a for a = " + std::to_string(a)),
          element(a) {}
    Index element;
  };

  class AssociativityViolation : public ValidationError {
   public:
    AssociativityViolation(Index a, Index m, Index n)
        : ValidationError("(a*m)*n != a*(mn) for a = " + std::to_string(a)
                          + ", m = " + std::to_string(m)
                          + ", n = " + std::to_string(n)),
          a(a),
          m(m),
          n(n) {}
    Index a, m, n;
  };

  class EmptyGeneratorSet : public ValidationError {
   public:
    EmptyGeneratorSet() : ValidationError("generator set is empty") {}
  };

  class NotASubact : public ValidationError {
   public:
    NotASubact(Index b, Index m)
        : ValidationError("not a subact: element " + std::to_string(b)
                          + " leaves the set under monoid element "
                          + std::to_string(m)),
          witness{b, m} {}
    std::pair<Index, Index> witness;
  };

  class MonoidMismatch : public ValidationError {
   public:
    MonoidMismatch() : ValidationError("acts are over different monoids") {}
  };

  class NotACongruence : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  class ComplementNotIdeal : public ValidationError {
   public:
    ComplementNotIdeal(Index x, Index y)
        : ValidationError("complement is not an ideal: product of "
                          + std::to_string(x) + " and " + std::to_string(y)
                          + " lands in the submonoid"),
          witness{x, y} {}
    std::pair<Index, Index> witness;
  };

  class NotARetraction : public ValidationError {
   public:
    NotARetraction(std::string const& why, Index witness)
        : ValidationError("not a retraction: " + why + " at "
                          + std::to_string(witness)),
          witness(witness) {}
    Index witness;
  };

  // congruence /////////////////////////////////////////////////////////////

  class NotCompatible : public NotACongruence {
   public:
    NotCompatible(Index a, Index b, Index m)
        : NotACongruence("partition not compatible: " + std::to_string(a)
                         + " ~ " + std::to_string(b) + " but images under "
                         + std::to_string(m) + " are separated"),
          a(a),
          b(b),
          m(m) {}
    Index a, b, m;
  };

  class ActMismatch : public ValidationError {
   public:
    ActMismatch() : ValidationError("congruences live on different acts") {}
  };

  class SearchSpaceTooLarge : public CapExceeded {
   public:
    explicit SearchSpaceTooLarge(double estimate)
        : CapExceeded("search space too large (estimate "
                          + std::to_string(estimate) + ")",
                      estimate) {}
  };

  // separability ///////////////////////////////////////////////////////////

  class NotAZero : public ValidationError {
   public:
    explicit NotAZero(Index z)
        : ValidationError("element " + std::to_string(z) + " is not a zero") {}
  };

  class NotClifford : public ValidationError {
   public:
    NotClifford() : ValidationError("monoid is not a Clifford monoid") {}
  };

  class RRelated : public ValidationError {
   public:
    RRelated(Index a, Index b)
        : ValidationError("elements " + std::to_string(a) + " and "
                          + std::to_string(b) + " are R-related") {}
  };

  class XMeetsBlock : public ValidationError {
   public:
    XMeetsBlock()
        : ValidationError("forbidden set meets the block of the element") {}
  };

  class NotNormalized : public ValidationError {
   public:
    NotNormalized() : ValidationError("sandwich matrix is not normalized") {}
  };

  class NotComparable : public ValidationError {
   public:
    NotComparable()
        : ValidationError("elements are not comparable in the act preorder") {}
  };

  class NotTwoSidedCongruence : public ValidationError {
   public:
    NotTwoSidedCongruence()
        : ValidationError("right congruence is not two-sided") {}
  };

  class PreconditionViolated : public ValidationError {
   public:
    using ValidationError::ValidationError;
  };

  // families / io //////////////////////////////////////////////////////////

  class UnknownFamily : public Error {
   public:
    explicit UnknownFamily(std::string const& name)
        : Error(Category::usage, "unknown family: " + name) {}
  };

  class ParamOutOfRange : public Error {
   public:
    explicit ParamOutOfRange(std::string const& msg)
        : Error(Category::usage, msg) {}
  };

  class ParseError : public ValidationError {
   public:
    ParseError(std::string const& what, std::size_t line)
        : ValidationError("parse error (line " + std::to_string(line)
                          + "): " + what),
          line(line) {}
    std::size_t line;
  };

}  // namespace actsep
