#ifndef CATLAS_BASICS_HPP
#define CATLAS_BASICS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catlas {

enum class ErrorCode {
  MissingComposite,
  BrokenAssociativity,
  BrokenIdentity,
  DanglingReference,
  InvalidFunctor,
  ShapeMismatch,
  SpanNotInCategory,
  NotNormal,
  EnumerationFailed,
  WellDefinednessFailure,
  RelatorViolation,
  ResourceLimit,
  SyntaxError,
  UnresolvedReference,
  ValidationError,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception; `detail()` carries the structured witness
/// (offending triple, unresolved id, ...) as a plain string.
class CatError : public std::runtime_error {
 public:
  CatError(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Cooperative step budget for exhaustive searches. Operations tick it as
/// they enumerate candidates and bail out (Unknown / ResourceLimit) once it
/// runs dry. Counters are deterministic, so reports stay reproducible.
struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;

  explicit Budget(std::uint64_t limit_ = 50'000'000) : limit(limit_) {}

  bool tick(std::uint64_t n = 1) {
    used += n;
    return used <= limit;
  }
  bool exhausted() const { return used > limit; }
};

enum class Verdict { Holds, Fails, Unknown };

const char* verdict_name(Verdict v);

/// Outcome of a property decider. Fails always carries a witness;
/// Holds carries a certificate when the search produced one.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Unknown;
  std::string witness;      // counterexample description, set iff Fails
  std::string certificate;  // e.g. the terminal object id, set on Holds when available
  std::uint64_t steps_used = 0;

  bool holds() const { return verdict == Verdict::Holds; }

  static PropertyReport hold(std::string prop, std::string cert = "") {
    return {std::move(prop), Verdict::Holds, "", std::move(cert), 0};
  }
  static PropertyReport fail(std::string prop, std::string wit) {
    return {std::move(prop), Verdict::Fails, std::move(wit), "", 0};
  }
  static PropertyReport unknown(std::string prop, std::string why) {
    return {std::move(prop), Verdict::Unknown, "", std::move(why), 0};
  }
};

}  // namespace catlas

#endif  // CATLAS_BASICS_HPP
