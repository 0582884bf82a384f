#include "sperf/error.hpp"

namespace sperf {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::BadEdge: return "BadEdge";
    case Errc::BadVertex: return "BadVertex";
    case Errc::MalformedRecord: return "MalformedRecord";
    case Errc::OrderTooLargeForEnumeration: return "OrderTooLargeForEnumeration";
    case Errc::OrderTooLargeForBasis: return "OrderTooLargeForBasis";
    case Errc::InvalidQuery: return "InvalidQuery";
    case Errc::NoSssInGraph: return "NoSssInGraph";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::BadParameter: return "BadParameter";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::SizeViolation: return "SizeViolation";
    case Errc::InvalidOccurrence: return "InvalidOccurrence";
    case Errc::OddSubdivisionCount: return "OddSubdivisionCount";
    case Errc::OddChordCount: return "OddChordCount";
    case Errc::ChainViolation: return "ChainViolation";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::StreamParseError: return "StreamParseError";
  }
  return "Unknown";
}

}  // namespace sperf
