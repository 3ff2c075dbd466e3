/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/error.hpp"

namespace sigmaforge {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::UnsupportedRank: return "UnsupportedRank";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnitPolynomial: return "UnitPolynomial";
    case Errc::ZeroResidue: return "ZeroResidue";
    case Errc::FactorizationIncomplete: return "FactorizationIncomplete";
    case Errc::ExtensionRequired: return "ExtensionRequired";
    case Errc::NotACurve: return "NotACurve";
    case Errc::ZeroSeries: return "ZeroSeries";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::WholeSphere: return "WholeSphere";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::FractionalExponent: return "FractionalExponent";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sigmaforge
