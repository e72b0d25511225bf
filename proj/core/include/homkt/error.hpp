#pragma once

#include <stdexcept>
#include <string>

namespace homkt {

enum class ErrorKind {
  InvalidRank,
  NotARoot,
  NonPositiveScale,
  NotAlmostComplex,
  NotAntisymmetric,
  OddDimension,
  PairingIncomplete,
  InvalidColouring,
  NotRegular,
  DegenerateMetric,
  LevelCountMismatch,
  NotInvariant,
  RationalizationFailed,
  EmbeddingNotClosed,
  BadInput,
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NonPositiveScale: return "NonPositiveScale";
    case ErrorKind::NotAlmostComplex: return "NotAlmostComplex";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::PairingIncomplete: return "PairingIncomplete";
    case ErrorKind::InvalidColouring: return "InvalidColouring";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::LevelCountMismatch: return "LevelCountMismatch";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::RationalizationFailed: return "RationalizationFailed";
    case ErrorKind::EmbeddingNotClosed: return "EmbeddingNotClosed";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace homkt
