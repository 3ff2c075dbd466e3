/* SPDX-License-Identifier: Apache-2.0 */

// sigma-forge: command line front end. One subcommand per pipeline stage.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sigmaforge/error.hpp"
#include "sigmaforge/parse.hpp"
#include "sigmaforge/puiseux.hpp"
#include "sigmaforge/report.hpp"
#include "sigmaforge/ring_checks.hpp"
#include "sigmaforge/sigma.hpp"
#include "sigmaforge/tropical.hpp"

using namespace sigmaforge;

namespace {

constexpr int kUsage = 1;
constexpr int kIncomplete = 2;

struct Common {
  std::string poly;
  std::string ideal;
  std::string vars = "x,y";
  std::string format = "text";
};

void add_common(CLI::App* app, Common& c, bool allow_ideal) {
  app->add_option("poly", c.poly, "Laurent polynomial, e.g. \"y - x - 1\"");
  if (allow_ideal) app->add_option("--ideal", c.ideal, "use the zero ideal (spelled --ideal 0)");
  app->add_option("--vars", c.vars, "comma separated variable names")->capture_default_str();
  app->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

ReportInput read_input(const Common& c) {
  auto vars = split_variable_list(c.vars);
  if (!c.ideal.empty()) {
    if (c.ideal != "0") throw CLI::ValidationError("--ideal", "only the zero ideal is supported");
    if (!c.poly.empty()) throw CLI::ValidationError("poly", "give either a polynomial or --ideal 0");
    return ReportInput::zero_ideal(static_cast<int>(vars.size()), vars);
  }
  if (c.poly.empty()) throw CLI::ValidationError("poly", "a polynomial is required");
  return ReportInput::polynomial(parse_poly(c.poly, vars), vars);
}

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json complex_json(const TropicalComplex& c) {
  Json pieces = Json::array();
  for (const auto& p : c.pieces) {
    Json j{{"kind", piece_kind_name(p.kind)}, {"vertex", rational_strings(p.vertex)}};
    Json gens = Json::array();
    for (const auto& g : p.generators) gens.push_back(direction_json(g));
    j["generators"] = gens;
    if (p.kind == PieceKind::Segment) j["end"] = rational_strings(p.end);
    pieces.push_back(j);
  }
  return Json{{"valuation", c.valuation.to_string()}, {"pieces", pieces}, {"warnings", c.warnings}};
}

std::string complex_text(const TropicalComplex& c) {
  std::ostringstream os;
  os << "valuation: " << c.valuation.to_string() << "\n";
  for (const auto& p : c.pieces) os << "  " << to_string(p) << "\n";
  if (c.pieces.empty()) os << "  (empty)\n";
  for (const auto& w : c.warnings) os << "warning: " << w << "\n";
  return os.str();
}

FactorLimits limits_from_environment() {
  FactorLimits l;
  if (const char* s = std::getenv("SIGMA_FORGE_MAX_SUPPORT")) {
    try {
      l.max_support = std::stoul(s);
    } catch (const std::exception&) {
      throw CLI::ValidationError("SIGMA_FORGE_MAX_SUPPORT", "not a positive integer");
    }
  }
  return l;
}

Json branch_json(const PuiseuxBranch& b) {
  Json terms = Json::array();
  for (const auto& [k, c] : b.series.terms()) {
    Rational e(k, b.d);
    e.canonicalize();
    terms.push_back(Json{{"exponent", e.get_str()}, {"coefficient", c.to_string()}});
  }
  Json j{{"d", b.d}, {"conjugacy_size", b.conjugacy_size}, {"field", b.series.field()->to_string()}, {"terms", terms}};
  const auto prec = b.series.precision();
  j["precision"] = prec ? Json(prec->get_str()) : Json(nullptr);
  j["series"] = b.series.to_string("x");
  return j;
}

int run_tropical(const Common& c, const std::string& valuation) {
  const auto in = read_input(c);
  if (!in.f) throw CLI::ValidationError("--ideal", "tropical needs a polynomial");
  CoefficientValuation v;
  std::int64_t p = 0;
  if (valuation == "zero") {
    v = CoefficientValuation::zero();
  } else if (valuation.rfind("p=", 0) == 0) {
    try {
      p = std::stoll(valuation.substr(2));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--valuation", "expected p=<prime>");
    }
    v = CoefficientValuation::padic(p);
  } else {
    throw CLI::ValidationError("--valuation", "expected zero or p=<prime>");
  }
  const auto cx = corner_locus(*in.f, v);
  Json j = complex_json(cx);
  j["input"] = in.text();
  std::string extra;
  int code = 0;
  if (p != 0) {
    // the residue side of the prime: corner loci of the branches of f mod p
    Json branches = Json::array();
    try {
      for (const auto& b : residue_branches(*in.f, p, limits_from_environment())) {
        branches.push_back(complex_json(b));
        extra += "residue branch " + complex_text(b);
      }
      j["residue_branches"] = branches;
    } catch (const Error& e) {
      j["residue_branches"] = nullptr;
      j["residue_error"] = e.what();
      extra += std::string("residue branches: ") + e.what() + "\n";
      if (e.code() == Errc::FactorizationIncomplete) code = kIncomplete;
    }
  }
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << "input: " << in.text() << "\n" << complex_text(cx) << extra;
  return code;
}

int run_puiseux(const Common& c, int terms) {
  const auto in = read_input(c);
  if (!in.f) throw CLI::ValidationError("--ideal", "puiseux needs a polynomial");
  const auto bs = puiseux_expand(*in.f, terms);
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& b : bs) arr.push_back(branch_json(b));
    std::cout << Json{{"input", in.text()}, {"branches", arr}}.dump(2) << "\n";
  } else {
    std::cout << "input: " << in.text() << "\n";
    for (const auto& b : bs)
      std::cout << "  x = t^" << b.d << ", y = " << b.series.to_string("x") << "  [conjugates " << b.conjugacy_size
                << ", field " << b.series.field()->to_string() << "]\n";
  }
  return 0;
}

int run_rigidity(const Common& c, int bound) {
  const auto in = read_input(c);
  if (!in.f) throw CLI::ValidationError("--ideal", "rigidity needs a polynomial");
  const auto s = homothety_scan(*in.f, bound);
  if (c.format == "json") {
    std::cout << Json{{"input", in.text()}, {"bound", bound}, {"accepted", s.accepted}, {"undetermined", s.undetermined}}.dump(2)
              << "\n";
  } else {
    std::cout << "input: " << in.text() << "\naccepted (n, c1, c2):";
    for (const auto& t : s.accepted) std::cout << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
    std::cout << "\nundetermined:";
    for (const auto& t : s.undetermined) std::cout << " (" << t[0] << "," << t[1] << "," << t[2] << ")";
    std::cout << (s.undetermined.empty() ? " none\n" : "\n");
  }
  return s.undetermined.empty() ? 0 : kIncomplete;
}

std::optional<std::vector<std::int64_t>> parse_primes(const std::string& s) {
  if (s == "auto") return std::nullopt;
  std::vector<std::int64_t> out;
  for (const auto& part : split_variable_list(s)) {
    try {
      out.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--primes", "expected auto or a comma separated list of primes");
    }
  }
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ExtensionRequired:
    case Errc::InsufficientPrecision:
    case Errc::FactorizationIncomplete:
    case Errc::TooLarge:
      return kIncomplete;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bieri-Strebel sigma invariants of Z[x^+-1, y^+-1]/(f) by tropicalization"};
  app.require_subcommand(1);

  Common common;
  std::string valuation = "zero";
  int terms = 8, bound = 3, rigidity_bound = 2;
  bool rigidity = false;
  std::string primes = "auto";

  auto* sigma = app.add_subcommand("sigma", "sigma complement, 2-tameness and sphere diagnostics");
  add_common(sigma, common, true);
  auto* tropical = app.add_subcommand("tropical", "corner locus for one coefficient valuation");
  add_common(tropical, common, false);
  tropical->add_option("--valuation", valuation, "zero or p=<prime>")->capture_default_str();
  auto* puiseux = app.add_subcommand("puiseux", "Newton-Puiseux branches at x = 0");
  add_common(puiseux, common, false);
  puiseux->add_option("--terms", terms, "terms per branch")->check(CLI::PositiveNumber)->capture_default_str();
  auto* rig = app.add_subcommand("rigidity", "homothety triples (n, c1, c2) up to a bound");
  add_common(rig, common, false);
  rig->add_option("--bound", bound, "largest n, c1, c2")->check(CLI::Range(1, 4))->capture_default_str();
  auto* report = app.add_subcommand("report", "hypothesis report for the non-self-similarity theorem");
  add_common(report, common, true);
  report->add_flag("--rigidity", rigidity, "also scan homotheties");
  report->add_option("--rigidity-bound", rigidity_bound, "bound for --rigidity")->check(CLI::Range(1, 4))->capture_default_str();
  report->add_option("--primes", primes, "auto or a comma separated prime list")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*sigma) {
      const auto in = read_input(common);
      const auto r = in.f ? sigma_complement(*in.f) : sigma_complement_zero_ideal(in.rank);
      std::cout << (common.format == "json" ? sigma_json(r, in).dump(2) + "\n" : sigma_text(r, in));
      return 0;
    }
    if (*tropical) return run_tropical(common, valuation);
    if (*puiseux) return run_puiseux(common, terms);
    if (*rig) return run_rigidity(common, bound);
    if (*report) {
      const auto in = read_input(common);
      ReportOptions opt;
      opt.primes = parse_primes(primes);
      opt.rigidity = rigidity;
      opt.rigidity_bound = rigidity_bound;
      const auto r = run_report(in, opt);
      std::cout << (common.format == "json" ? report_json(r).dump(2) + "\n" : report_text(r));
      return r.incomplete() ? kIncomplete : 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kUsage;
}
