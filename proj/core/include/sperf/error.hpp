#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sperf {

enum class Errc {
  OrderTooLarge,
  BadEdge,
  BadVertex,
  MalformedRecord,
  OrderTooLargeForEnumeration,
  OrderTooLargeForBasis,
  InvalidQuery,
  NoSssInGraph,
  UnknownFamily,
  BadParameter,
  ParityViolation,
  SizeViolation,
  InvalidOccurrence,
  OddSubdivisionCount,
  OddChordCount,
  ChainViolation,
  BudgetExceeded,
  StreamParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sperf
