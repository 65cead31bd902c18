#pragma once

#include <stdexcept>
#include <string>

namespace coxrow {

enum class Errc {
  CycleDetected,
  DuplicateLabel,
  NonCoverEdge,
  NotAnAntichain,
  SizeLimitExceeded,
  NotDistributive,
  NonSquare,
  Singular,
  UnknownVertex,
  AlgebraMismatch,
  ZeroModule,
  ConventionMismatch,
  NotAuslanderRegular,
  NonSimpleTop,
  InvalidType,
  NonDynkin,
  NotBijective,
  CoxeterCrossCheckFailed,
  MalformedData,
  DimensionMismatch,
  ParseError,
  ConfigError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::NonCoverEdge: return "NonCoverEdge";
    case Errc::NotAnAntichain: return "NotAnAntichain";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::NonSquare: return "NonSquare";
    case Errc::Singular: return "Singular";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::ZeroModule: return "ZeroModule";
    case Errc::ConventionMismatch: return "ConventionMismatch";
    case Errc::NotAuslanderRegular: return "NotAuslanderRegular";
    case Errc::NonSimpleTop: return "NonSimpleTop";
    case Errc::InvalidType: return "InvalidType";
    case Errc::NonDynkin: return "NonDynkin";
    case Errc::NotBijective: return "NotBijective";
    case Errc::CoxeterCrossCheckFailed: return "CoxeterCrossCheckFailed";
    case Errc::MalformedData: return "MalformedData";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

// Internal consistency check; failures indicate an engine bug, not bad input.
inline void engine_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("engine invariant violated: ") + what);
}

}  // namespace coxrow
