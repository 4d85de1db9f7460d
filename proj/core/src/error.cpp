#include "twh/error.hpp"

namespace twh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::InvalidDegree: return "invalid degree";
    case ErrorKind::NotTwistedSymmetric: return "not twisted-symmetric";
    case ErrorKind::CapExceeded: return "degree too large for exhaustive enumeration";
    case ErrorKind::NoBranchPoints: return "no branch points";
    case ErrorKind::OnWall: return "on wall";
    case ErrorKind::ChamberEmpty: return "chamber empty within bound";
    case ErrorKind::NotInChamber: return "point not in chamber";
    case ErrorKind::NonAdjacentChambers: return "chambers not adjacent";
    case ErrorKind::DegreeBoundViolated: return "degree bound violated";
    case ErrorKind::NonzeroQuotientGenus: return "quotient genus is not zero";
  }
  return "unknown error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace twh
