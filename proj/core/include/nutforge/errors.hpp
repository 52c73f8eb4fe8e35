#pragma once

#include <stdexcept>
#include <string>

namespace nutforge {

enum class Errc {
  NotConnected,
  DegreeTooHigh,
  DegreeTooLow,
  OrderTooLarge,
  InvalidGraph,
  NoSuchEdge,
  NotABridge,
  NotAKernelVector,
  DimensionMismatch,
  StepSiteInvalid,
  ParseError,
  CountMismatch,
  OddV3,
  NotRealisable,
  NotPlanarRealisable,
  PreconditionUnmet,
  OrderBoundExceeded,
  NoSuchSeed,
  IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nutforge
