#pragma once

#include <stdexcept>
#include <string>

namespace atomforce {

/// Failure categories surfaced by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
  domain,       // argument outside the mathematical domain of an operation
  pole,         // direct evaluation exactly on a resonance
  degenerate,   // Omega_1 ~ Omega_2 in a formula with 1/(Omega_1^2 - Omega_2^2)
  config,       // invalid or inconsistent configuration
  unsupported,  // valid input outside what an operation implements
  convergence,  // numerical procedure did not converge
  numerical,    // unstable intermediate (e.g. residue estimate)
  not_found,    // root/crossover search failed
  verification  // symbolic reproduction mismatch
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::config: return "config";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::not_found: return "not-found";
    case ErrorKind::verification: return "verification";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define ATOMFORCE_DEFINE_ERROR(Name, Kind)                          \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(Kind, what) {}   \
  };

ATOMFORCE_DEFINE_ERROR(DomainError, ErrorKind::domain)
ATOMFORCE_DEFINE_ERROR(PoleError, ErrorKind::pole)
ATOMFORCE_DEFINE_ERROR(DegeneracyError, ErrorKind::degenerate)
ATOMFORCE_DEFINE_ERROR(ConfigError, ErrorKind::config)
ATOMFORCE_DEFINE_ERROR(UnsupportedError, ErrorKind::unsupported)
ATOMFORCE_DEFINE_ERROR(ConvergenceError, ErrorKind::convergence)
ATOMFORCE_DEFINE_ERROR(NumericalError, ErrorKind::numerical)
ATOMFORCE_DEFINE_ERROR(NotFoundError, ErrorKind::not_found)
ATOMFORCE_DEFINE_ERROR(VerificationError, ErrorKind::verification)

#undef ATOMFORCE_DEFINE_ERROR

/// Rethrows the same category with `context` prepended to the message.
[[noreturn]] inline void rethrow_with_context(const Error& e, const std::string& context) {
  const std::string what = e.what();
  const std::string msg = what.starts_with(context + ":") ? what : context + ": " + what;
  switch (e.kind()) {
    case ErrorKind::domain: throw DomainError(msg);
    case ErrorKind::pole: throw PoleError(msg);
    case ErrorKind::degenerate: throw DegeneracyError(msg);
    case ErrorKind::config: throw ConfigError(msg);
    case ErrorKind::unsupported: throw UnsupportedError(msg);
    case ErrorKind::convergence: throw ConvergenceError(msg);
    case ErrorKind::numerical: throw NumericalError(msg);
    case ErrorKind::not_found: throw NotFoundError(msg);
    case ErrorKind::verification: throw VerificationError(msg);
  }
  throw Error(e.kind(), msg);
}

}  // namespace atomforce
