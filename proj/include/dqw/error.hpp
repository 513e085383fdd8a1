#pragma once

#include <stdexcept>
#include <string>

namespace dqw {

enum class Errc {
  NonPositiveDimension,
  NonPositiveMass,
  NonPositivePotential,
  BarrierAboveConfinement,
  EnergyOutOfRange,
  PreconditionViolated,
  NotARoot,
  RegimeUnsupported,
  NoBoundStates,
  ParameterMismatch,
  GridTooCoarse,
  LevelNotFound,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace dqw
