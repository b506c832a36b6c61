#pragma once

#include <stdexcept>
#include <string>

namespace lfmsemi {

// Failure modes surfaced by the numerical kernels and the map calculus.
enum class Errc {
  SingularMatrix,
  IllConditioned,
  ZeroEigenvalue,
  PoleAtPoint,
  BranchCut,
  DegenerateComposition,
  DegenerateAllFixed,
  NoConvergence,
  AmbiguousDenjoyWolff,
  Precondition,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::ZeroEigenvalue: return "ZeroEigenvalue";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::BranchCut: return "BranchCut";
    case Errc::DegenerateComposition: return "DegenerateComposition";
    case Errc::DegenerateAllFixed: return "DegenerateAllFixed";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::AmbiguousDenjoyWolff: return "AmbiguousDenjoyWolff";
    case Errc::Precondition: return "Precondition";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lfmsemi
