#pragma once

#include <stdexcept>
#include <string>

namespace erdos_straus {

/// Input outside an operation's mathematical domain (zero denominator,
/// wrong residue mod 4, composite where a prime is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is composite where the operation requires a prime.
class CompositeInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A caller broke an operation's precondition (e.g. classifying a triple
/// that does not decompose 4/p).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A verified decomposition violates p ∤ x or p | z.
class StructuralAnomalyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A prime outside the family's residue class was passed to a constructor.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A family construction hit a non-exact division or produced a triple
/// that fails verification. Every instance is a counterexample to the
/// family identity and must be reported.
class FamilyInapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact residue analysis refused because the lcm exceeds the configured bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Something that is arithmetically impossible happened.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No decomposition of 4/n exists for the queried prime. Never expected.
class CounterexampleAlert : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace erdos_straus
