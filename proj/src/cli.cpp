#include "sylow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "sylow/chains.hpp"
#include "sylow/errors.hpp"
#include "sylow/io.hpp"
#include "sylow/liealg.hpp"
#include "sylow/structure.hpp"
#include "sylow/verify.hpp"

namespace sylow {

namespace {

using Json = nlohmann::ordered_json;

/// Upper central series are recomputed directly only below this basis size.
constexpr std::size_t kDirectSeriesLimit = 400;
constexpr int kOeisLimit = 60;

struct RunConfig {
  int p = 0;
  int n = 0;
  std::string kind = "both";
  int steps = 0;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::string subgroup_path;
  std::string oeis_path;
  std::string element;
  bool exhaustive = false;
};

/// Reported as exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

PrimeParams params_of(const RunConfig& cfg) { return PrimeParams::make(cfg.p, cfg.n); }

std::string order_text(int p, std::size_t log_order) {
  try {
    return std::to_string(ipow(static_cast<std::uint64_t>(p), static_cast<int>(log_order)));
  } catch (const GuardError&) {
    return std::to_string(p) + "^" + std::to_string(log_order);
  }
}

Json basis_json(const MonomialSet& set, char symbol) {
  Json out = Json::array();
  for (const auto& m : set.elements()) out.push_back(to_string(set.params(), m, symbol));
  return out;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end())
    throw UsageError("--format " + cfg.format + " is not available for this command");
}

SaturatedSubgroup load_subgroup(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open subgroup file " + path);
  return read_subgroup(in);
}

// ---------------------------------------------------------------- series

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "csv"});
  const PrimeParams params = params_of(cfg);
  const auto c = static_cast<std::int64_t>(params.class_length());
  std::optional<std::vector<SaturatedSubgroup>> direct;
  if (params.basis_size() <= kDirectSeriesLimit) direct = upper_central_series_direct(params);

  bool all_match = true;
  Json rows = Json::array();
  std::ostringstream text, csv;
  text << "# series " << params.to_string() << " class=" << c << "\n";
  csv << "p,n,i,log_order,order,upper_index,direct\n";
  for (std::int64_t i = 1; i <= c + 1; ++i) {
    const SaturatedSubgroup g = lower_central_term(params, i);
    const std::int64_t z = c + 1 - i;
    std::string verdict = "not computed";
    if (direct) {
      const bool match = (*direct)[static_cast<std::size_t>(z)] == g;
      all_match = all_match && match;
      verdict = match ? "match" : "MISMATCH";
    }
    const std::string order = order_text(params.p, g.log_order());
    text << "gamma_" << i << "  order " << order << " = " << params.p << "^" << g.log_order()
         << "  = Z_" << z << " [direct: " << verdict << "]  " << to_string(g) << "\n";
    csv << params.p << ',' << params.n << ',' << i << ',' << g.log_order() << ',' << order << ','
        << z << ',' << verdict << "\n";
    Json row;
    row["i"] = i;
    row["log_order"] = g.log_order();
    row["order"] = order;
    row["basis"] = basis_json(g.basis(), 'D');
    row["upper_index"] = z;
    row["direct"] = verdict;
    rows.push_back(std::move(row));
  }
  if (cfg.format == "json") {
    Json j;
    j["p"] = params.p;
    j["n"] = params.n;
    j["class"] = c;
    j["rows"] = std::move(rows);
    j["coincide"] = direct ? Json(all_match) : Json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << (cfg.format == "csv" ? csv.str() : text.str());
  }
  return all_match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- closure

int cmd_closure(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const PrimeParams params = params_of(cfg);
  const WreathElement w = parse_element(cfg.element, params);
  if (w.is_identity()) throw UsageError("the identity has no normal closure of interest");
  const auto support = w.support();
  if (support.size() != 1) throw UsageError("closure expects a single-layer element f D<k>");
  const int k = support.front();
  const MonomialElement lt = leading_term(params, k, w.layer(k));
  const SaturatedSubgroup closure = normal_closure_poly(params, k, w.layer(k));
  const GammaBound bound = contains_gamma_bound(closure, k);

  if (cfg.format == "json") {
    Json j;
    j["p"] = params.p;
    j["n"] = params.n;
    j["element"] = to_string(w);
    j["leading_term"] = to_string(params, lt.mono);
    j["pdeg"] = pdeg(params, lt);
    j["basis"] = basis_json(closure.basis(), 'D');
    j["log_order"] = closure.log_order();
    j["gamma_index"] = bound.gamma_index;
    j["contains_gamma"] = bound.contains_gamma;
    j["log_index"] = bound.log_index;
    j["bound"] = bound.bound;
    j["within_bound"] = bound.within_bound;
    out << j.dump() << "\n";
  } else {
    out << "# closure " << params.to_string() << " of " << to_string(w) << "\n"
        << "leading term " << to_string(params, lt.mono) << ", pdeg " << pdeg(params, lt) << "\n"
        << "basis (" << closure.log_order() << " monomials, order "
        << order_text(params.p, closure.log_order()) << "): " << to_string(closure) << "\n"
        << "bound: contains gamma_" << bound.gamma_index << ": "
        << (bound.contains_gamma ? "yes" : "no") << "; log_" << params.p << " index "
        << bound.log_index << " <= " << bound.bound << ": "
        << (bound.within_bound ? "yes" : "no") << "\n";
  }
  return bound.within_bound ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- chain

void chain_text(const ChainReport& r, std::ostream& out) {
  out << "# " << to_string(r.kind) << " chain " << r.params.to_string() << " start basis "
      << r.start.size() << (r.stabilized ? ", stabilized" : ", stopped at step limit") << "\n"
      << "i  basis  logp_index  predicted  status\n";
  for (const auto& s : r.steps) {
    out << s.i << "  " << s.basis << "  " << s.logp_index << "  ";
    if (s.predicted)
      out << *s.predicted << "  " << (*s.predicted == s.logp_index ? "ok" : "MISMATCH");
    else
      out << "-  data";
    out << "\n";
  }
}

Json oeis_json(const std::vector<SequenceMatch>& matches) {
  Json j = Json::array();
  for (const auto& m : matches) {
    Json row;
    row["sequence"] = m.sequence;
    row["shift"] = m.shift;
    row["compared"] = m.compared;
    j.push_back(std::move(row));
  }
  return j;
}

int cmd_chain(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "csv"});
  const PrimeParams params = params_of(cfg);
  const int steps = cfg.steps > 0 ? cfg.steps : chain_guard(params);

  std::optional<SaturatedSubgroup> start;
  if (!cfg.subgroup_path.empty()) {
    start = load_subgroup(cfg.subgroup_path);
    if (!(start->params() == params))
      throw UsageError("subgroup file is for " + start->params().to_string() + ", not " +
                       params.to_string());
  }

  std::vector<ChainReport> reports;
  if (cfg.kind != "lie") reports.push_back(normalizer_chain(params, steps, start));
  if (cfg.kind != "group") {
    std::optional<HomogeneousSubring> lie_start;
    if (start) lie_start = subring_image(*start);
    reports.push_back(idealizer_chain(params, steps, lie_start));
  }
  bool ok = std::all_of(reports.begin(), reports.end(),
                        [](const ChainReport& r) { return r.predictions_hold(); });
  std::optional<CrossReport> cross;
  if (reports.size() == 2) {
    cross = cross_validate(reports[0], reports[1]);
    ok = ok && cross->ok;
  }

  std::optional<std::vector<SequenceMatch>> oeis;
  if (!cfg.oeis_path.empty()) {
    std::ifstream in(cfg.oeis_path);
    if (!in) throw UsageError("cannot open b-file " + cfg.oeis_path);
    const auto entries = read_bfile(in);
    std::int64_t top = 1;
    for (const auto& e : entries) top = std::max(top, e.index + 2);
    oeis = compare_bfile(entries, params.p, static_cast<int>(std::min<std::int64_t>(top, kOeisLimit)));
  }

  if (cfg.format == "json") {
    Json j;
    if (reports.size() == 1) {
      j = Json::parse(to_json(reports.front()));
    } else {
      j["p"] = params.p;
      j["n"] = params.n;
      j["normalizer"] = Json::parse(to_json(reports[0]));
      j["idealizer"] = Json::parse(to_json(reports[1]));
      Json c;
      c["ok"] = cross->ok;
      c["mismatches"] = cross->mismatches;
      j["cross_validation"] = std::move(c);
    }
    if (oeis) j["oeis"] = oeis_json(*oeis);
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    for (std::size_t r = 0; r < reports.size(); ++r) {
      std::string body = to_csv(reports[r]);
      if (r > 0) body.erase(0, body.find('\n') + 1);
      out << body;
    }
  } else {
    for (const auto& r : reports) chain_text(r, out);
    if (cross) {
      out << "cross-validation: " << (cross->ok ? "equal" : "MISMATCH") << "\n";
      for (const auto& m : cross->mismatches) out << "  " << m << "\n";
    }
    if (oeis) {
      if (oeis->empty()) out << "oeis: no alignment with t, t+1 or q\n";
      for (const auto& m : *oeis)
        out << "oeis: b-file matches " << m.sequence << " at index shift " << m.shift << " over "
            << m.compared << " terms\n";
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const PrimeParams params = params_of(cfg);
  VerifyOptions options;
  options.exhaustive = cfg.exhaustive;
  options.seed = cfg.seed;
  options.samples = cfg.samples;
  const VerifyReport report = run_verification(params, options);
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : report.checks) ++counts[static_cast<int>(c.status)];

  if (cfg.format == "json") {
    Json j;
    j["p"] = params.p;
    j["n"] = params.n;
    j["seed"] = cfg.seed;
    j["exhaustive"] = cfg.exhaustive;
    j["samples"] = cfg.samples;
    j["checks"] = Json::array();
    for (const auto& c : report.checks) {
      Json row;
      row["name"] = c.name;
      row["status"] = to_string(c.status);
      row["detail"] = c.detail;
      j["checks"].push_back(std::move(row));
    }
    j["passed"] = report.passed();
    out << j.dump() << "\n";
  } else {
    out << "# verify " << params.to_string() << " seed=" << cfg.seed
        << " exhaustive=" << (cfg.exhaustive ? "yes" : "no") << " samples=" << cfg.samples
        << "\n";
    for (const auto& c : report.checks)
      out << "[" << to_string(c.status) << "] " << c.name << ": " << c.detail << "\n";
    out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  }
  return report.passed() ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- perm

int cmd_perm(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const PrimeParams params = params_of(cfg);
  const PermutationImage image = to_permutation(parse_element(cfg.element, params));
  if (cfg.format == "json") {
    out << image.to_json() << "\n";
  } else {
    out << "# perm " << params.to_string() << " order " << image.order() << "\n";
    for (std::size_t x = 0; x < image.images.size(); ++x)
      out << (x ? " " : "") << image.images[x];
    out << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- subgroup

int cmd_subgroup(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (cfg.subgroup_path.empty()) throw UsageError("subgroup needs --subgroup <file>");
  const SaturatedSubgroup s = load_subgroup(cfg.subgroup_path);
  const PrimeParams& params = s.params();
  const bool closed = s.is_closed();
  const bool normal = closed && is_normal(s);
  const HomogeneousSubring image = subring_image(s);
  const SaturatedSubgroup norm = normalizer(s);

  if (cfg.format == "json") {
    Json j;
    j["p"] = params.p;
    j["n"] = params.n;
    j["basis"] = basis_json(s.basis(), 'D');
    j["log_order"] = s.log_order();
    j["subgroup"] = closed;
    j["normal"] = normal;
    j["normalizer"] = basis_json(norm.basis(), 'D');
    j["lie_image"] = basis_json(image.basis(), 'd');
    j["ideal"] = image.is_subring() && image.is_ideal();
    out << j.dump() << "\n";
  } else {
    out << "# subgroup " << params.to_string() << "\n"
        << "basis (" << s.log_order() << "): " << to_string(s) << "\n"
        << "subgroup: " << (closed ? "yes" : "no") << "\n"
        << "normal: " << (normal ? "yes" : "no") << "\n"
        << "normalizer (" << norm.log_order() << "): " << to_string(norm) << "\n"
        << "lie image: " << to_string(image) << "\n"
        << "ideal: " << (image.is_subring() && image.is_ideal() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations in the Sylow p-subgroup W_n of Sym(p^n) and its Lie algebra",
               "sylow"};
  app.require_subcommand(1, 1);

  auto params_opts = [&](CLI::App* sub, bool required) {
    auto* p = sub->add_option("--p", cfg.p, "odd prime");
    auto* n = sub->add_option("--n", cfg.n, "number of levels, n >= 1");
    if (required) {
      p->required();
      n->required();
    }
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* series = app.add_subcommand("series", "lower central series and its upper-series match");
  params_opts(series, true);
  format_opt(series);

  auto* closure = app.add_subcommand("closure", "normal closure of a single-layer element");
  params_opts(closure, true);
  format_opt(closure);
  closure->add_option("element", cfg.element, "element such as \"(x1x2)D3\"")->required();

  auto* chain = app.add_subcommand("chain", "normalizer and idealizer chains");
  params_opts(chain, true);
  format_opt(chain);
  chain->add_option("--kind", cfg.kind, "group, lie or both")
      ->check(CLI::IsMember({"group", "lie", "both"}));
  chain->add_option("--steps", cfg.steps, "number of chain terms to compute")
      ->check(CLI::PositiveNumber);
  chain->add_option("--subgroup", cfg.subgroup_path, "start the chain from this subgroup file");
  chain->add_option("--oeis", cfg.oeis_path, "b-file to compare against t and q");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  params_opts(verify, true);
  format_opt(verify);
  verify->add_option("--seed", cfg.seed, "seed for sampled checks");
  verify->add_option("--samples", cfg.samples, "sample count for sampled checks")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--exhaustive", cfg.exhaustive, "run every check over its full domain");

  auto* perm = app.add_subcommand("perm", "permutation of F_p^n induced by an element");
  params_opts(perm, true);
  format_opt(perm);
  perm->add_option("element", cfg.element, "element such as \"(x1)D2 * D1\"")->required();

  auto* subgroup = app.add_subcommand("subgroup", "inspect a saturated subgroup file");
  params_opts(subgroup, false);
  format_opt(subgroup);
  subgroup->add_option("--subgroup", cfg.subgroup_path, "subgroup file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "series") return cmd_series(cfg, out);
    if (name == "closure") return cmd_closure(cfg, out);
    if (name == "chain") return cmd_chain(cfg, out);
    if (name == "verify") return cmd_verify(cfg, out);
    if (name == "perm") return cmd_perm(cfg, out);
    return cmd_subgroup(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sylow
