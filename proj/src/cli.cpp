#include "clifinv/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "clifinv/engine.hpp"
#include "clifinv/errors.hpp"
#include "clifinv/mvparse.hpp"
#include "clifinv/oracle.hpp"
#include "clifinv/random.hpp"
#include "clifinv/search.hpp"
#include "parallel.hpp"

namespace clifinv {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Signature parse_signature(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--sig expects p,q");
  try {
    std::size_t used = 0;
    const int p = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw UsageError("--sig expects p,q");
    const std::string rest = text.substr(comma + 1);
    const int q = std::stoi(rest, &used);
    if (used != rest.size()) throw UsageError("--sig expects p,q");
    return Signature(p, q);
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("bad --sig value: ") + e.what());
  }
}

// A multivector argument is either the plain notation (needs --sig) or the
// JSON document produced by --json.
Multivector read_multivector(const std::string& sig_text, const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    Multivector a = parse_multivector_json(text);
    if (!sig_text.empty() && !(parse_signature(sig_text) == a.signature())) {
      throw UsageError("--sig disagrees with the JSON signature");
    }
    return a;
  }
  if (sig_text.empty()) throw UsageError("--sig p,q is required for plain multivector input");
  return parse_multivector(parse_signature(sig_text), text);
}

json mv_json(const Multivector& a) { return json::parse(format_multivector(a, MvFormat::json)); }

struct Options {
  std::string sig;
  std::string formula;
  std::string mv;
  bool json = false;
  bool even = false;
  std::uint64_t seed = 1;
  int trials = 10;
  int dim = -1;
  int threads = 1;
  bool catalog = false;
  bool all = false;

  std::string mode = "rediscover";
  bool restricted = false;
  int screen = 8;
  int verify = 50;
  int max_steps = 2;
  int max_sets = 64;
  int set_size = 0;
  std::string format = "text";
};

int cmd_inverse(const Options& o, std::ostream& out) {
  const Multivector a = read_multivector(o.sig, o.mv);
  const InverseResult r = o.even ? even_inverse(a) : inverse(a, o.formula);
  if (const auto* bad = std::get_if<NonInvertible>(&r)) {
    if (o.json) {
      out << json{{"det", to_string(bad->det)}, {"formula", bad->formula_id}, {"invertible", false}}
                 .dump()
          << "\n";
    } else {
      out << "formula " << bad->formula_id << "\n"
          << "det " << to_string(bad->det) << "\n"
          << "not invertible\n";
    }
    return kExitNotInvertible;
  }
  const auto& inv = std::get<Inversion>(r);
  if (o.json) {
    json doc = mv_json(inv.inverse);
    doc["det"] = to_string(inv.det);
    doc["formula"] = inv.formula_id;
    out << doc.dump() << "\n";
  } else {
    out << "formula " << inv.formula_id << "\n"
        << "det " << to_string(inv.det) << "\n"
        << "adjugate " << format_multivector(inv.adjugate) << "\n"
        << "inverse " << format_multivector(inv.inverse) << "\n";
  }
  return kExitOk;
}

int cmd_det(const Options& o, std::ostream& out) {
  const Multivector a = read_multivector(o.sig, o.mv);
  const FormulaEntry& entry = resolve_formula(a.dim(), o.formula);
  const Rational d = det_norm(a, entry);
  if (o.json) {
    out << json{{"det", to_string(d)}, {"formula", entry.id}}.dump() << "\n";
  } else {
    out << to_string(d) << "\n";
  }
  return d == 0 ? kExitNotInvertible : kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Multivector a = read_multivector(o.sig, o.mv);
  const auto inv = oracle_inverse(a);
  if (!inv) {
    out << (o.json ? json{{"invertible", false}}.dump() : std::string("not invertible")) << "\n";
    return kExitNotInvertible;
  }
  if (o.json) {
    out << mv_json(*inv).dump() << "\n";
  } else {
    out << "inverse " << format_multivector(*inv) << "\n";
  }
  return kExitOk;
}

int cmd_formulas(const Options& o, std::ostream& out) {
  std::vector<int> dims;
  if (o.dim >= 0) {
    dims.push_back(o.dim);
  } else {
    for (int n = 0; n <= kMaxDimension; ++n) dims.push_back(n);
  }
  json list = json::array();
  for (int n : dims) {
    const std::string default_id = FormulaCatalog::builtin().default_for(n).id;
    for (const FormulaInfo& f : list_formulas(n)) {
      if (o.json) {
        list.push_back({{"id", f.id},
                        {"dim", n},
                        {"status", to_string(f.status)},
                        {"provenance", f.provenance},
                        {"default", f.id == default_id}});
      } else {
        out << f.id << "\t" << to_string(f.status) << "\t" << f.provenance
            << (f.id == default_id ? "\t(default)" : "") << "\n";
      }
    }
  }
  if (o.json) out << list.dump() << "\n";
  return kExitOk;
}

// Randomized cross-validation of the default formulas against the matrix
// oracle, plus (with --catalog) agreement of every verified formula.
int cmd_check(const Options& o, std::ostream& out) {
  if (o.trials < 1) throw UsageError("--trials must be positive");
  std::vector<Signature> sigs;
  for (int n = 0; n <= kMaxDimension; ++n) {
    if (o.dim >= 0 && n != o.dim) continue;
    for (const Signature& s : Signature::all_of_dimension(n)) sigs.push_back(s);
  }
  struct Trial {
    bool ok = true;
    std::string problem;
  };
  const std::size_t per_sig = static_cast<std::size_t>(o.trials);
  std::vector<Trial> trials(sigs.size() * per_sig);
  detail::run_indexed(trials.size(), o.threads, [&](std::size_t idx) {
    const Signature& sig = sigs[idx / per_sig];
    Trial& t = trials[idx];
    Rng rng(derive_seed(o.seed, idx));
    const Multivector a = random_multivector(sig, rng);
    const auto fail = [&](const std::string& why) {
      t.ok = false;
      t.problem = why;
    };
    const InverseResult r = inverse(a);
    const auto oracle = oracle_inverse(a);
    if (std::holds_alternative<Inversion>(r) != oracle.has_value()) {
      return fail("invertibility verdicts differ");
    }
    if (const auto* inv = std::get_if<Inversion>(&r)) {
      const Multivector one = Multivector::scalar(sig, 1);
      if (!(inv->inverse == *oracle)) return fail("formula and oracle inverses differ");
      if (!(gp(a, inv->inverse) == one) || !(gp(inv->inverse, a) == one)) {
        return fail("inverse is not two-sided");
      }
    }
    if (o.catalog) {
      const Rational d = det_norm(a);
      for (const FormulaEntry* e : FormulaCatalog::builtin().entries(sig.dim())) {
        if (e->status != FormulaStatus::verified) continue;
        if (det_norm(a, *e) != d) return fail("formula " + e->id + " disagrees with the default");
      }
    }
  });

  std::size_t failures = 0;
  for (std::size_t s = 0; s < sigs.size(); ++s) {
    std::size_t passed = 0;
    for (std::size_t t = 0; t < per_sig; ++t) {
      const Trial& trial = trials[s * per_sig + t];
      if (trial.ok) {
        ++passed;
      } else {
        out << sigs[s].to_string() << " trial " << t << ": " << trial.problem << "\n";
      }
    }
    failures += per_sig - passed;
    out << sigs[s].to_string() << " " << passed << "/" << per_sig << " ok\n";
  }
  const std::size_t total = trials.size();
  if (failures == 0) {
    out << "PASS " << total << "/" << total << " trials\n";
    return kExitOk;
  }
  out << "FAIL " << failures << " of " << total << " trials\n";
  return kExitCheckFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig config;
  config.seed = o.seed;
  config.screen_samples = o.screen;
  config.verify_samples = o.verify;
  config.max_steps = o.max_steps;
  config.max_sets_per_step = o.max_sets;
  config.set_size = o.set_size;
  config.threads = o.threads;
  if (config.screen_samples < 1 || config.verify_samples < 1) {
    throw UsageError("--screen and --verify must be positive");
  }

  SearchReport report;
  int n = o.dim;
  if (o.mode == "sweep") {
    Signature sig = o.sig.empty() ? Signature(std::max(n, 0), 0) : parse_signature(o.sig);
    n = sig.dim();
    if (o.restricted) {
      if (!(sig == Signature(6, 0))) throw UsageError("--restricted applies to --sig 6,0");
      report = single_product_sweep(sig, config, grade4_subalgebra());
    } else {
      report = single_product_sweep(sig, config);
    }
  } else if (o.mode == "rediscover") {
    if (n < 0) throw UsageError("rediscover needs --dim");
    report = rediscover(n, config);
  } else if (o.mode == "fit") {
    n = 6;
    report = fit_grade4_pairs(config);
  } else if (o.mode == "audit") {
    const FormulaEntry& e = FormulaCatalog::builtin().at(o.formula);
    n = e.dim;
    CandidatePattern p{e.id, e.provenance, e.det, {}};
    PatternVerdict v = audit_pattern(p, n, config);
    report.title = "audit " + e.id;
    (v.valid ? report.verified : report.rejected).push_back(std::move(v));
  } else {
    throw UsageError("unknown --mode '" + o.mode + "'");
  }
  if (o.format == "catalog") {
    out << report.to_catalog_lines(n);
  } else if (o.format == "text") {
    out << report.to_text();
  } else {
    throw UsageError("unknown --format '" + o.format + "'");
  }
  return kExitOk;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  std::ostringstream out;
  std::ostringstream err;
  Options o;

  CLI::App app{"Exact multivector inverses and determinant norms in Cl(p,q), p+q <= 6"};
  app.name("clifinv");
  app.require_subcommand(1);

  const auto add_mv_options = [&](CLI::App* sub) {
    sub->add_option("--sig", o.sig, "Signature as p,q");
    sub->add_option("multivector", o.mv, "Multivector, e.g. \"1+2 e1+3 e23\", or JSON")->required();
    sub->add_flag("--json", o.json, "JSON output");
  };

  CLI::App* inv = app.add_subcommand("inverse", "Inverse via a determinant-norm formula");
  add_mv_options(inv);
  inv->add_option("--formula", o.formula, "Catalog formula id");
  inv->add_flag("--even", o.even, "Use the even-subalgebra formula");

  CLI::App* det = app.add_subcommand("det", "Determinant norm");
  add_mv_options(det);
  det->add_option("--formula", o.formula, "Catalog formula id");

  CLI::App* orc = app.add_subcommand("oracle", "Inverse by exact linear solve of the left-regular matrix");
  add_mv_options(orc);

  CLI::App* fml = app.add_subcommand("formulas", "List catalog formulas");
  fml->add_option("--dim", o.dim, "Dimension p+q")->check(CLI::Range(0, kMaxDimension));
  fml->add_flag("--json", o.json, "JSON output");

  CLI::App* chk = app.add_subcommand("check", "Randomized cross-validation against the oracle");
  chk->add_option("--trials", o.trials, "Trials per signature");
  chk->add_option("--seed", o.seed, "Random seed");
  chk->add_option("--dim", o.dim, "Only this dimension")->check(CLI::Range(0, kMaxDimension));
  chk->add_option("--threads", o.threads, "Worker threads");
  chk->add_flag("--catalog", o.catalog, "Also compare every verified catalog formula");

  CLI::App* srch = app.add_subcommand("search", "Formula search");
  srch->add_option("--mode", o.mode, "sweep | rediscover | fit | audit");
  srch->add_option("--dim", o.dim, "Dimension p+q")->check(CLI::Range(0, kMaxDimension));
  srch->add_option("--sig", o.sig, "Signature for sweep, as p,q");
  srch->add_option("--formula", o.formula, "Formula id for audit");
  srch->add_flag("--restricted", o.restricted, "Sweep over span{1,e1256,e1346,e2345}");
  srch->add_option("--seed", o.seed, "Random seed");
  srch->add_option("--screen", o.screen, "Screening samples per signature");
  srch->add_option("--verify", o.verify, "Verification samples per signature");
  srch->add_option("--max-steps", o.max_steps, "Longest self-product chain");
  srch->add_option("--max-sets", o.max_sets, "Negation sets tried per step");
  srch->add_option("--set-size", o.set_size, "Only negation sets of this size (0: any)");
  srch->add_option("--threads", o.threads, "Worker threads");
  srch->add_option("--format", o.format, "text | catalog");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    if (inv->parsed()) {
      result.exit_code = cmd_inverse(o, out);
    } else if (det->parsed()) {
      result.exit_code = cmd_det(o, out);
    } else if (orc->parsed()) {
      result.exit_code = cmd_oracle(o, out);
    } else if (fml->parsed()) {
      result.exit_code = cmd_formulas(o, out);
    } else if (chk->parsed()) {
      result.exit_code = cmd_check(o, out);
    } else {
      result.exit_code = cmd_search(o, out);
    }
  } catch (const UnknownFormula& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kExitUnknownFormula;
  } catch (const CatalogDefect& e) {
    err << "catalog defect: " << e.what() << "\n";
    result.exit_code = kExitCatalogDefect;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    result.exit_code = kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kExitUsage;
  }
  result.out = out.str();
  result.err += err.str();
  return result;
}

}  // namespace clifinv
