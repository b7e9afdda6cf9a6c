#ifndef HIGHERGPD_ERRORS_HPP
#define HIGHERGPD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hgpd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables that are not index-consistent (wrong lengths, out-of-range values).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A partial operation was queried outside its domain.
class UndefinedOperation : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its configured candidate budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Input file could not be parsed or has the wrong kind.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A requested level or degree lies outside the stored truncation.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A homology degree needs a boundary above the stored levels.
class DegreeOutOfRange : public TruncationError {
 public:
  using TruncationError::TruncationError;
};

/// A horn required to have a filler has none.
class HornUnfillable : public Error {
 public:
  using Error::Error;
};

/// The pairing needs the three-subspace decomposition of level 1.
class IdentificationUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace hgpd

#endif
