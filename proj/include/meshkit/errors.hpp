#pragma once

#include <stdexcept>
#include <string>

namespace meshkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MESHKIT_ERROR(Name)                       \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what)        \
        : Error(std::string(#Name ": ") + what) {} \
  }

MESHKIT_ERROR(InvalidInput);
MESHKIT_ERROR(NotWithLength);
MESHKIT_ERROR(LiftEscapesTruncation);
MESHKIT_ERROR(DegeneratePairing);
MESHKIT_ERROR(DimMismatch);
MESHKIT_ERROR(PathExplosion);
MESHKIT_ERROR(NotDynkin);
MESHKIT_ERROR(KnittingFailure);
MESHKIT_ERROR(NotIrreducible);
MESHKIT_ERROR(SeedNotStronglyIrreducible);
MESHKIT_ERROR(AssemblyFailure);
MESHKIT_ERROR(CoverMismatch);

#undef MESHKIT_ERROR

class UndecidableTruncation : public Error {
 public:
  UndecidableTruncation(const std::string& what, int required_radius)
      : Error("UndecidableTruncation: " + what), required_radius_(required_radius) {}
  int required_radius() const { return required_radius_; }

 private:
  int required_radius_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace meshkit
