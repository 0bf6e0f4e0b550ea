#ifndef KNIT_ERRORS_HPP_
#define KNIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace knit {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed input: bad names, out-of-range indices, illegal degrees,
  //! violated construction invariants, parse and schema errors.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  //! Two objects that must live over the same basis (or group) do not.
  class BasisMismatch : public Error {
   public:
    using Error::Error;
  };

  //! An operation was called on data that fails its documented precondition.
  class PreconditionFailed : public Error {
   public:
    using Error::Error;
  };

  //! A configured size cap was exceeded.
  class LimitExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace knit

#endif  // KNIT_ERRORS_HPP_
