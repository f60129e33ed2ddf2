#pragma once

#include <stdexcept>
#include <string>

namespace parade {

// Error codes shared by the library and the CLI exit-code mapping.
enum class Errc {
  DivisionByZero,
  MixedField,
  NoSolution,
  Underdetermined,
  InfiniteStabilizer,
  FieldEscape,
  UnknownElement,
  NotAWord,
  NotACongruence,
  CandidateMismatch,
  NotASubgroup,
  InvalidFactorSet,
  NotAMap,
  NotFriendly,
  InvalidAction,
  ActionDomainError,
  HypothesisViolation,
  PremiseViolation,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace parade
