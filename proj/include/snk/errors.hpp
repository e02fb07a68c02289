#ifndef SNK_ERRORS_HPP
#define SNK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace snk {

// Malformed input: bad syntax, undeclared variable, inconsistent ring sizes.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// The S-pair budget was exhausted before a basis could be completed.
// Verdicts are never derived from partial bases.
struct BudgetExceeded : std::runtime_error {
  long pairs_processed;
  explicit BudgetExceeded(long pairs)
      : std::runtime_error("computation budget exceeded after " +
                           std::to_string(pairs) + " S-pairs"),
        pairs_processed(pairs) {}
};

struct NotFinite : std::runtime_error {
  explicit NotFinite(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotIntegral : std::runtime_error {
  explicit NotIntegral(const std::string& msg) : std::runtime_error(msg) {}
};

// A componentwise operation met a zero-divisor denominator on a reducible
// variety whose component decomposition was not supplied.
struct ReducibleAmbiguity : std::runtime_error {
  explicit ReducibleAmbiguity(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct NotInRadical : std::runtime_error {
  explicit NotInRadical(const std::string& msg) : std::runtime_error(msg) {}
};

// Radical membership holds but no explicit power within the search bound.
struct NotFoundWithinBound : std::runtime_error {
  explicit NotFoundWithinBound(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct NotRegulousOnAmbient : std::runtime_error {
  explicit NotRegulousOnAmbient(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct AlreadyInRing : std::runtime_error {
  explicit AlreadyInRing(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotRegulousError : std::runtime_error {
  explicit NotRegulousError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace snk

#endif
