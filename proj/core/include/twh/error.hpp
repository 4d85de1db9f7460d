#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twh {

enum class ErrorKind {
  InvalidInput,
  InvalidDegree,
  NotTwistedSymmetric,
  CapExceeded,
  NoBranchPoints,
  OnWall,
  ChamberEmpty,
  NotInChamber,
  NonAdjacentChambers,
  DegreeBoundViolated,
  NonzeroQuotientGenus,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twh
