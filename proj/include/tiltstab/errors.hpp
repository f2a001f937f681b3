#pragma once

#include <stdexcept>
#include <string>

namespace tiltstab {

// Input outside the mathematical domain of an operation (negative radicand,
// undefined beta-bar, empty locus requested as a value, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arithmetic between Q(sqrt d1) and Q(sqrt d2) with d1 != d2, both irrational.
class MixedRadicalError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A stated precondition of an operation does not hold (non-ample H,
// hypothesis of a vanishing lemma violated, wrong model kind, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The model does not carry the data needed to answer (Todd class on the
// Calabi-Yau model, nef cone outside the designated family, ...).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input (scalars, divisor expressions, JSON payloads).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tiltstab
