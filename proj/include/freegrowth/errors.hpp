// Exception types shared by every module.
//
// Mathematical misuse (bad arguments, violated preconditions) throws
// freegrowth::Error. Running out of a resource (word length that no longer
// fits the packed representation, a size guard on an oracle, a time budget)
// throws ResourceLimit, so callers can tell "the question is wrong" from
// "the question is too big". InternalError signals a broken invariant, i.e. a
// bug in this library.

#ifndef FREEGROWTH_ERRORS_HPP_
#define FREEGROWTH_ERRORS_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace freegrowth {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

  class BudgetExhausted : public ResourceLimit {
   public:
    BudgetExhausted() : ResourceLimit("time budget exhausted") {}
  };

  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace freegrowth

#endif  // FREEGROWTH_ERRORS_HPP_
