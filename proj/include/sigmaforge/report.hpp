/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sigmaforge/laurent.hpp"
#include "sigmaforge/sigma.hpp"

namespace sigmaforge {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Conditional, Undetermined };

std::string_view check_status_name(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Undetermined;
  std::string evidence;
  Json data = Json::object();
};

enum class VerdictKind { NotSelfSimilar, NotApplicable, Conditional };

std::string_view verdict_kind_name(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::Conditional;
  /// Why the theorem does not apply, or which checks are missing.
  std::string reason;
};

/// The module A = Z[x_1^{+-1}, ..., x_s^{+-1}] / I with I = (f) or I = 0.
struct ReportInput {
  int rank = 2;
  std::optional<LaurentPolynomial> f;  // nullopt: the zero ideal
  std::vector<std::string> vars;

  static ReportInput polynomial(const LaurentPolynomial& f, std::vector<std::string> vars);
  static ReportInput zero_ideal(int rank, std::vector<std::string> vars);
  std::string text() const;
};

struct ReportOptions {
  /// nullopt: certify all primes when possible. A list restricts the
  /// mod-p check to those primes, which can at best give conditional.
  std::optional<std::vector<std::int64_t>> primes;
  bool rigidity = false;
  int rigidity_bound = 2;
};

struct HypothesisReport {
  ReportInput input;
  std::optional<SigmaReport> sigma;
  std::vector<Check> checks;
  Verdict verdict;

  /// Some check could not be decided within the configured limits.
  bool incomplete() const;
};

/// Runs, in order: torsion-free, irreducible, krull-dim-2,
/// mod-p-all-primes, condition-3, finitely-presented, no-great-circle and,
/// on request, homothety-rigidity. Library errors become check entries.
HypothesisReport run_report(const ReportInput& in, const ReportOptions& options = {});

Json direction_json(const Direction& d);
Json spherical_json(const SphericalSet& s);
Json sigma_json(const SigmaReport& r, const ReportInput& in);
Json report_json(const HypothesisReport& r);

std::string sigma_text(const SigmaReport& r, const ReportInput& in);
std::string report_text(const HypothesisReport& r);

}  // namespace sigmaforge
