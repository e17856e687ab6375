#ifndef NFLAB_ERRORS_HPP
#define NFLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nflab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data (JSON documents, CLI arguments) failed validation.
struct InputError : Error {
  using Error::Error;
};

// A configured enumeration limit would be exceeded.
struct GuardExceeded : Error {
  using Error::Error;
};

// Exact big-integer power would exceed the bit guard; use the log form.
struct ExactOverflowGuard : Error {
  using Error::Error;
};

// An algorithm or measure broke its behavioral contract.
struct ContractViolation : Error {
  using Error::Error;
};

struct CalledOnClosedSet : Error {
  using Error::Error;
};

struct CalledOnCompliantDistribution : Error {
  using Error::Error;
};

struct EmptyClass : Error {
  using Error::Error;
};

struct NoWitness : Error {
  using Error::Error;
};

}  // namespace nflab

#endif
