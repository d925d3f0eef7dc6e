#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace propeq {

enum class ErrorKind {
  CapExceeded,
  ForeignElement,
  InfiniteAmbient,
  NonIntegralSolve,
  NotASubgroup,
  MismatchedEndpoints,
  OutsideFamily,
  NonAbelianRep,
  NotRational,
  NotAComplex,
  EmptyTower,
  WindowMiss,
  WrongAmbient,
  ResolutionFailure,
  MissingWitness,
  InvalidArgument,
  MalformedDocument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::InfiniteAmbient: return "InfiniteAmbient";
    case ErrorKind::NonIntegralSolve: return "NonIntegralSolve";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::MismatchedEndpoints: return "MismatchedEndpoints";
    case ErrorKind::OutsideFamily: return "OutsideFamily";
    case ErrorKind::NonAbelianRep: return "NonAbelianRep";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::EmptyTower: return "EmptyTower";
    case ErrorKind::WindowMiss: return "WindowMiss";
    case ErrorKind::WrongAmbient: return "WrongAmbient";
    case ErrorKind::ResolutionFailure: return "ResolutionFailure";
    case ErrorKind::MissingWitness: return "MissingWitness";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

/// Every library failure is reported through this type; `kind()` names the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace propeq
