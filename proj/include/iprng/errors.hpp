#pragma once

#include <stdexcept>

namespace iprng {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error {
  ZeroInverse() : Error("zero has no inverse") {}
};
struct NotASquare : Error {
  NotASquare() : Error("not a quadratic residue") {}
};
struct ZeroOrder : Error {
  ZeroOrder() : Error("zero has no multiplicative order") {}
};
struct RepeatedRoot : Error {
  RepeatedRoot() : Error("period undefined for a repeated root") {}
};
struct DegenerateRoots : Error {
  DegenerateRoots() : Error("root ratio undefined for a double root") {}
};
struct RootHit : Error {
  RootHit() : Error("x0 coincides with a root") {}
};
struct BadTarget : Error {
  BadTarget() : Error("no element of the requested order exists") {}
};
struct NotPrime : Error {
  NotPrime() : Error("modulus is not prime") {}
};
struct ModulusTooSmall : Error {
  ModulusTooSmall() : Error("modulus must be a prime greater than 3") {}
};
struct TooLarge : Error {
  TooLarge() : Error("exhaustive enumeration refused for N > 512 without override") {}
};
struct FamilyMismatch : Error {
  FamilyMismatch() : Error("tables describe different moduli or families") {}
};

}  // namespace iprng
