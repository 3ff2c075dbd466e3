/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sigmaforge/error.hpp"
#include "sigmaforge/puiseux.hpp"
#include "sigmaforge/ring_checks.hpp"

namespace sigmaforge {

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Conditional:
      return "conditional";
    case CheckStatus::Undetermined:
      return "undetermined";
  }
  return "?";
}

std::string_view verdict_kind_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::NotSelfSimilar:
      return "NotSelfSimilar";
    case VerdictKind::NotApplicable:
      return "NotApplicable";
    case VerdictKind::Conditional:
      return "Conditional";
  }
  return "?";
}

ReportInput ReportInput::polynomial(const LaurentPolynomial& f, std::vector<std::string> vars) {
  return {f.rank(), f, std::move(vars)};
}

ReportInput ReportInput::zero_ideal(int rank, std::vector<std::string> vars) { return {rank, std::nullopt, std::move(vars)}; }

std::string ReportInput::text() const { return f ? f->to_string(vars) : "0"; }

bool HypothesisReport::incomplete() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Undetermined; });
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string directions_text(const std::vector<Direction>& ds) {
  std::vector<std::string> s;
  for (const auto& d : ds) s.push_back(to_string(d));
  return s.empty() ? "none" : join(s);
}

Json directions_json(const std::vector<Direction>& ds) {
  Json a = Json::array();
  for (const auto& d : ds) a.push_back(direction_json(d));
  return a;
}

Check undetermined(std::string name, const Error& e) {
  return {std::move(name), CheckStatus::Undetermined, e.what(), Json{{"error", std::string(errc_name(e.code()))}}};
}

Check torsion_check(const LaurentPolynomial& f) {
  const std::string name = "torsion-free";
  try {
    const auto r = torsionfree_check(f);
    Integer content = 0;
    for (const auto& [e, c] : f.terms()) content = gcd(content, c);
    Check c{name, r.torsion_free ? CheckStatus::Pass : CheckStatus::Fail, "content " + content.get_str(),
            Json{{"content", content.get_str()}}};
    if (r.warning) c.evidence += "; " + *r.warning;
    return c;
  } catch (const Error& e) {
    return {name, CheckStatus::Fail, e.what(), Json{{"error", std::string(errc_name(e.code()))}}};
  }
}

Check irreducible_check(const LaurentPolynomial& f, const std::vector<std::string>& vars) {
  const std::string name = "irreducible";
  const auto st = irreducibility_status(f);
  Check c{name, CheckStatus::Undetermined, "", Json{{"verdict", verdict_name(st.verdict)}, {"method", method_name(st.method)}}};
  switch (st.verdict) {
    case IrreducibilityVerdict::Irreducible:
      c.status = CheckStatus::Pass;
      c.evidence = "irreducible over Q (" + method_name(st.method) + ")";
      break;
    case IrreducibilityVerdict::Reducible: {
      c.status = CheckStatus::Fail;
      std::vector<std::string> ws;
      for (const auto& w : st.factors) ws.push_back("(" + w.to_string(vars) + ")");
      c.evidence = "factors " + join(ws, " * ");
      c.data["factors"] = Json::array();
      for (const auto& w : st.factors) c.data["factors"].push_back(w.to_string(vars));
      break;
    }
    case IrreducibilityVerdict::Unit:
      c.status = CheckStatus::Fail;
      c.evidence = "f is a unit, A = 0";
      break;
    case IrreducibilityVerdict::Zero:
      c.status = CheckStatus::Fail;
      c.evidence = "f = 0";
      break;
    case IrreducibilityVerdict::Undetermined:
      c.evidence = st.note.empty() ? "search limits exhausted" : st.note;
      break;
  }
  return c;
}

Check krull_check(const KrullVerdict& k) {
  Check c{"krull-dim-2", CheckStatus::Undetermined, k.justification, Json::object()};
  if (k.dim) {
    c.status = *k.dim == 2 ? CheckStatus::Pass : CheckStatus::Fail;
    c.data["dimension"] = *k.dim;
  }
  return c;
}

Check mod_p_check(const LaurentPolynomial& f, const ReportOptions& opt) {
  const std::string name = "mod-p-all-primes";
  try {
    std::vector<ModPDomainResult> results;
    bool certified = false;
    std::string justification;
    if (opt.primes) {
      for (auto p : *opt.primes) results.push_back(mod_p_domain_check(f, p));
      justification = "restricted to the requested primes";
    } else {
      const auto cert = all_primes_certificate(f);
      results = cert.results;
      certified = cert.status == CertificateStatus::Certified;
      justification = cert.justification;
    }
    Check c{name, certified ? CheckStatus::Pass : CheckStatus::Conditional, justification, Json::object()};
    c.data["certified"] = certified;
    c.data["primes"] = Json::array();
    std::vector<std::string> bad, open;
    for (const auto& r : results) {
      Json e{{"prime", r.prime}, {"infinite", r.infinite}};
      e["domain"] = r.domain ? Json(*r.domain) : Json(nullptr);
      c.data["primes"].push_back(e);
      if (r.domain == false || !r.infinite)
        bad.push_back(std::to_string(r.prime));
      else if (!r.domain)
        open.push_back(std::to_string(r.prime));
    }
    if (!bad.empty()) {
      c.status = CheckStatus::Fail;
      c.evidence = "A/pA is not an infinite domain for p = " + join(bad);
    } else if (!open.empty()) {
      c.status = CheckStatus::Undetermined;
      c.evidence = "undecided for p = " + join(open);
    }
    return c;
  } catch (const Error& e) {
    // p | content: A/pA contains the zero divisor image of the torsion
    if (e.code() == Errc::InvalidArgument || e.code() == Errc::ZeroResidue)
      return {name, CheckStatus::Fail, e.what(), Json{{"error", std::string(errc_name(e.code()))}}};
    return undetermined(name, e);
  }
}

Check condition3_check(const LaurentPolynomial& f) {
  const std::string name = "condition-3";
  try {
    const auto ds = algebraic_monomial_directions(f);
    Check c{name, ds.empty() ? CheckStatus::Pass : CheckStatus::Fail, "", Json{{"algebraic_directions", Json::array()}}};
    for (const auto& d : ds) c.data["algebraic_directions"].push_back(direction_json(d));
    c.evidence = ds.empty() ? "no monomial is algebraic over Q in A (two-dimensional Newton polytope)"
                            : "algebraic monomial direction " + directions_text(ds);
    return c;
  } catch (const Error& e) {
    return undetermined(name, e);
  }
}

Check two_tame_check(const SigmaReport& s) {
  Check c{"finitely-presented", s.two_tame ? CheckStatus::Pass : CheckStatus::Fail, "",
          Json{{"two_tame", s.two_tame}, {"antipodal", directions_json(s.antipodal)}}};
  if (s.two_tame) {
    c.evidence = "sigma complement holds no antipodal pair";
  } else if (s.sigma_complement.whole) {
    c.evidence = "sigma complement is the whole sphere";
  } else {
    std::vector<std::string> pairs;
    std::vector<Direction> seen;
    for (const auto& d : s.antipodal) {
      Direction m = d;
      for (auto& x : m) x = -x;
      if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
      seen.push_back(d);
      pairs.push_back("{" + to_string(d) + ", " + to_string(m) + "}");
    }
    c.evidence = "antipodal pair " + join(pairs);
  }
  return c;
}

Check great_circle_check(const SigmaReport& s) {
  Check c{"no-great-circle", s.great_circle ? CheckStatus::Fail : CheckStatus::Pass, "",
          Json{{"great_circle", s.great_circle}, {"spans", s.spans}}};
  c.evidence = s.great_circle ? "sigma complement contains a great circle" : "no great circle in the sigma complement";
  c.evidence += s.spans ? "; directions span R^2" : "; directions do not span R^2";
  return c;
}

Check rigidity_check(const LaurentPolynomial& f, int bound) {
  const std::string name = "homothety-rigidity";
  try {
    const auto scan = homothety_scan(f, bound);
    Check c{name, CheckStatus::Pass, "", Json{{"bound", bound}, {"accepted", scan.accepted}, {"undetermined", scan.undetermined}}};
    std::vector<std::string> off;
    for (const auto& t : scan.accepted)
      if (t[0] != t[1] || t[0] != t[2])
        off.push_back("(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    if (!off.empty()) {
      c.status = CheckStatus::Fail;
      c.evidence = "off-diagonal homotheties " + join(off);
    } else if (!scan.undetermined.empty()) {
      c.status = CheckStatus::Undetermined;
      c.evidence = std::to_string(scan.undetermined.size()) + " triples undecided";
    } else {
      c.evidence = "only the diagonal up to " + std::to_string(bound);
    }
    return c;
  } catch (const Error& e) {
    return undetermined(name, e);
  }
}

// the seven hypotheses, in order, with the reason reported when one fails
const std::vector<std::pair<std::string, std::string>>& hypotheses() {
  static const std::vector<std::pair<std::string, std::string>> h{
      {"torsion-free", "A has Z-torsion"},
      {"irreducible", "A is not a domain"},
      {"krull-dim-2", "Krull dimension is not 2"},
      {"mod-p-all-primes", "A/pA is not an infinite domain for some prime p"},
      {"condition-3", "a monomial is algebraic over Q in A"},
      {"finitely-presented", "not finitely presented"},
      {"no-great-circle", "sigma complement contains a great circle"},
  };
  return h;
}

Verdict assemble(const std::vector<Check>& checks) {
  std::vector<std::string> missing;
  for (const auto& [name, reason] : hypotheses()) {
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    if (it == checks.end() || it->status == CheckStatus::Conditional || it->status == CheckStatus::Undetermined) {
      missing.push_back(name);
    } else if (it->status == CheckStatus::Fail) {
      return {VerdictKind::NotApplicable, reason};
    }
  }
  if (!missing.empty()) return {VerdictKind::Conditional, "missing certificates: " + join(missing)};
  return {VerdictKind::NotSelfSimilar, "all hypotheses verified"};
}

}  // namespace

HypothesisReport run_report(const ReportInput& in, const ReportOptions& options) {
  HypothesisReport r;
  r.input = in;
  try {
    r.sigma = in.f ? sigma_complement(*in.f) : sigma_complement_zero_ideal(in.rank);
  } catch (const Error& e) {
    r.checks.push_back(undetermined("finitely-presented", e));
  }
  if (in.rank < 2) {
    if (r.sigma) r.checks.push_back(two_tame_check(*r.sigma));
    r.verdict = {VerdictKind::NotApplicable, "s >= 2"};
    return r;
  }

  if (!in.f) {
    r.checks.push_back({"torsion-free", CheckStatus::Pass, "the group ring is torsion-free", Json::object()});
    r.checks.push_back({"irreducible", CheckStatus::Pass, "zero ideal: the group ring is a domain", Json::object()});
    r.checks.push_back(krull_check(krull_dimension_zero_ideal(in.rank)));
    r.checks.push_back({"mod-p-all-primes", CheckStatus::Pass, "F_p of a free abelian group is a domain for every p",
                        Json{{"certified", true}}});
    r.checks.push_back({"condition-3", CheckStatus::Pass, "no monomial is algebraic over Q in the group ring",
                        Json{{"algebraic_directions", Json::array()}}});
  } else {
    const auto& f = *in.f;
    r.checks.push_back(torsion_check(f));
    r.checks.push_back(irreducible_check(f, in.vars));
    try {
      r.checks.push_back(krull_check(krull_dimension_verdict(f)));
    } catch (const Error& e) {
      if (e.code() == Errc::UnitPolynomial)
        r.checks.push_back({"krull-dim-2", CheckStatus::Fail, e.what(), Json::object()});
      else
        r.checks.push_back(undetermined("krull-dim-2", e));
    }
    r.checks.push_back(mod_p_check(f, options));
    r.checks.push_back(condition3_check(f));
  }
  if (r.sigma) {
    r.checks.push_back(two_tame_check(*r.sigma));
    r.checks.push_back(great_circle_check(*r.sigma));
  } else {
    r.checks.push_back({"no-great-circle", CheckStatus::Undetermined, "sigma complement unavailable", Json::object()});
  }
  if (options.rigidity && in.f) r.checks.push_back(rigidity_check(*in.f, options.rigidity_bound));
  r.verdict = assemble(r.checks);
  return r;
}

Json direction_json(const Direction& d) {
  Json a = Json::array();
  for (auto x : d) a.push_back(x);
  return a;
}

Json spherical_json(const SphericalSet& s) {
  Json arcs = Json::array();
  for (const auto& a : s.arcs) arcs.push_back(Json{{"start", direction_json(a.start)}, {"end", direction_json(a.end)}});
  return Json{{"points", directions_json(s.points)}, {"arcs", arcs}, {"whole_sphere", s.whole}};
}

Json sigma_json(const SigmaReport& r, const ReportInput& in) {
  Json j{{"input", in.text()}, {"vars", in.vars}};
  j["sigma_complement"] = spherical_json(r.sigma_complement);
  j["exceptional_primes"] = r.exceptional_primes;
  j["two_tame"] = r.two_tame;
  j["boundary"] = directions_json(r.boundary);
  j["great_circle"] = r.great_circle;
  j["spans"] = r.spans;
  j["warnings"] = r.warnings;
  return j;
}

Json report_json(const HypothesisReport& r) {
  Json j = r.sigma ? sigma_json(*r.sigma, r.input) : Json{{"input", r.input.text()}, {"vars", r.input.vars}};
  j["framing"] = "q_i acts on A by multiplication with x_i";
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        Json{{"name", c.name}, {"status", std::string(check_status_name(c.status))}, {"evidence", c.evidence}, {"data", c.data}});
  j["checks"] = checks;
  j["verdict"] = std::string(verdict_kind_name(r.verdict.kind));
  j["verdict_reason"] = r.verdict.reason;
  return j;
}

namespace {

std::string spherical_text(const SphericalSet& s) {
  if (s.whole) return "whole sphere";
  std::vector<std::string> arcs;
  for (const auto& a : s.arcs) arcs.push_back("[" + to_string(a.start) + " -> " + to_string(a.end) + "]");
  return "points " + directions_text(s.points) + "; arcs " + (arcs.empty() ? "none" : join(arcs));
}

void row(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(20) << (key + ":") << value << "\n";
}

void sigma_rows(std::ostringstream& os, const SigmaReport& r) {
  row(os, "sigma_complement", spherical_text(r.sigma_complement));
  std::vector<std::string> ps;
  for (auto p : r.exceptional_primes) ps.push_back(std::to_string(p));
  row(os, "exceptional_primes", ps.empty() ? "none" : join(ps));
  row(os, "two_tame", r.two_tame ? "true" : "false");
  row(os, "boundary", directions_text(r.boundary));
  row(os, "great_circle", r.great_circle ? "true" : "false");
  row(os, "spans", r.spans ? "true" : "false");
  for (const auto& w : r.warnings) row(os, "warning", w);
}

}  // namespace

std::string sigma_text(const SigmaReport& r, const ReportInput& in) {
  std::ostringstream os;
  row(os, "input", in.text());
  row(os, "vars", join(in.vars));
  sigma_rows(os, r);
  return os.str();
}

std::string report_text(const HypothesisReport& r) {
  std::ostringstream os;
  row(os, "input", r.input.text());
  row(os, "vars", join(r.input.vars));
  row(os, "framing", "q_i acts on A by multiplication with x_i");
  if (r.sigma) sigma_rows(os, *r.sigma);
  os << "checks:\n";
  for (const auto& c : r.checks)
    os << "  " << std::left << std::setw(20) << c.name << std::setw(14) << check_status_name(c.status) << c.evidence << "\n";
  row(os, "verdict", std::string(verdict_kind_name(r.verdict.kind)) + " (" + r.verdict.reason + ")");
  return os.str();
}

}  // namespace sigmaforge
