/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmaforge {

enum class Errc {
  ZeroPolynomial,
  NotPrime,
  ZeroInput,
  ZeroArgument,
  UnsupportedRank,
  TooLarge,
  UnitPolynomial,
  ZeroResidue,
  FactorizationIncomplete,
  ExtensionRequired,
  NotACurve,
  ZeroSeries,
  InsufficientPrecision,
  NotIrreducible,
  WholeSphere,
  SyntaxError,
  FractionalExponent,
  UnknownVariable,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the report pipeline in particular) can turn it into a status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sigmaforge
