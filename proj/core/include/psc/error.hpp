#pragma once

#include <stdexcept>
#include <string>

namespace psc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in representation rings of different algebras.
struct SignatureMismatch : Error {
  using Error::Error;
};

// A weight multiplicity map that is not invariant under the Weyl group.
struct NonSymmetricCharacter : Error {
  using Error::Error;
};

// Numerators with different denominators (1-t)^n.
struct ArityMismatch : Error {
  using Error::Error;
};

// The weight bound was too small to certify a finite result.
struct NotCertified : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct UnknownPreset : Error {
  using Error::Error;
};

}  // namespace psc
