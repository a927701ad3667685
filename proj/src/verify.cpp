#include "sylow/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sylow/chains.hpp"
#include "sylow/errors.hpp"
#include "sylow/liealg.hpp"
#include "sylow/structure.hpp"

namespace sylow {

namespace {

constexpr std::uint64_t kOraclePoints = 100'000;
constexpr std::size_t kExhaustivePairs = 20'000;
constexpr std::size_t kExhaustiveTriples = 250'000;
constexpr std::size_t kSubsetBasisLimit = 20;
constexpr std::size_t kKernelBasisLimit = 40;

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::pass, std::move(detail)};
}
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::fail, std::move(detail)};
}
CheckResult skip(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::skip, std::move(detail)};
}

std::size_t pick(std::mt19937_64& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

/// Calls fn on every ordered pair of 0..size-1, or on `samples` random
/// ones when the full set is too large. Stops at the first false. Returns
/// whether the run was exhaustive.
bool for_pairs(std::size_t size, bool exhaustive, std::size_t samples, std::mt19937_64& rng,
               const std::function<bool(std::size_t, std::size_t)>& fn) {
  if (exhaustive || size * size <= kExhaustivePairs) {
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        if (!fn(a, b)) return true;
    return true;
  }
  for (std::size_t s = 0; s < samples; ++s)
    if (!fn(pick(rng, size), pick(rng, size))) break;
  return false;
}

PermutationImage oracle_commutator(const PermutationImage& a, const PermutationImage& b) {
  return compose(compose(compose(a.inverse(), b.inverse()), a), b);
}

std::string scope(bool exhaustive, std::size_t count) {
  return (exhaustive ? "exhaustive over " : "sampled ") + std::to_string(count);
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::skip:
      return "SKIP";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

WreathElement random_element(const PrimeParams& params, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(0, params.p - 1);
  WreathElement w(params);
  for (int k = 1; k <= params.n; ++k) {
    std::vector<std::pair<MonomialKey, std::int64_t>> terms;
    for (std::uint64_t key = 0; key < params.layer_size(k); ++key)
      terms.emplace_back(static_cast<MonomialKey>(key), coeff(rng));
    w = w.with_layer(k, TruncPoly::from_terms(params.p, k - 1, terms));
  }
  return w;
}

CheckResult check_oracle_monomials(const PrimeParams& params, const VerifyOptions& options,
                                   std::mt19937_64& rng) {
  const std::string name = "oracle.monomial_pairs";
  if (params.pow(params.n) > kOraclePoints) return skip(name, "p^n above the oracle guard");
  const auto all = all_monomials(params);
  std::vector<WreathElement> elems;
  std::vector<PermutationImage> perms;
  for (const auto& m : all) {
    elems.push_back(WreathElement::monomial(params, m));
    perms.push_back(to_permutation(elems.back()));
  }
  std::string bad;
  std::size_t count = 0;
  const bool full = for_pairs(all.size(), options.exhaustive, options.samples, rng,
                              [&](std::size_t a, std::size_t b) {
    ++count;
    const auto& u = elems[a];
    const auto& v = elems[b];
    if (to_permutation(multiply(u, v)) != compose(perms[a], perms[b]))
      bad = "multiply " + to_string(u) + " , " + to_string(v);
    else if (to_permutation(commutator(u, v)) != oracle_commutator(perms[a], perms[b]))
      bad = "commutator [" + to_string(u) + ", " + to_string(v) + "]";
    return bad.empty();
  });
  if (!bad.empty()) return fail(name, "mismatch at " + bad);
  return pass(name, scope(full, count) + " pairs");
}

CheckResult check_oracle_random(const PrimeParams& params, const VerifyOptions& options,
                                std::mt19937_64& rng) {
  const std::string name = "oracle.random_elements";
  if (params.pow(params.n) > kOraclePoints) return skip(name, "p^n above the oracle guard");
  for (std::size_t s = 0; s < options.samples; ++s) {
    const WreathElement u = random_element(params, rng);
    const WreathElement v = random_element(params, rng);
    const PermutationImage pu = to_permutation(u);
    const PermutationImage pv = to_permutation(v);
    if (to_permutation(multiply(u, v)) != compose(pu, pv))
      return fail(name, "multiply mismatch at sample " + std::to_string(s));
    if (to_permutation(commutator(u, v)) != oracle_commutator(pu, pv))
      return fail(name, "commutator mismatch at sample " + std::to_string(s));
    if (!multiply(u, inverse(u)).is_identity() || to_permutation(inverse(u)) != pu.inverse())
      return fail(name, "inverse mismatch at sample " + std::to_string(s));
  }
  return pass(name, "sampled " + std::to_string(options.samples) + " pairs");
}

CheckResult check_taylor(const PrimeParams& params, const VerifyOptions& options,
                         std::mt19937_64& rng) {
  const std::string name = "taylor.shift";
  const int p = params.p;
  std::size_t count = 0;
  bool full = true;
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  for (int nvars = 1; nvars <= std::max(1, params.n - 1); ++nvars) {
    const std::uint64_t monomials = params.pow(nvars);
    for (int i = 1; i <= nvars; ++i) {
      // h ranges over the monomials in x_1..x_{i-1} times every nonzero
      // scalar, plus one random polynomial.
      std::vector<TruncPoly> hs;
      const std::uint64_t lower = params.pow(i - 1);
      for (std::uint64_t key = 0; key < lower; ++key)
        for (int c = 1; c < p; ++c)
          hs.push_back(TruncPoly::monomial(p, nvars, static_cast<MonomialKey>(key), c));
      std::vector<std::pair<MonomialKey, std::int64_t>> terms;
      for (std::uint64_t key = 0; key < lower; ++key)
        terms.emplace_back(static_cast<MonomialKey>(key), coeff(rng));
      hs.push_back(TruncPoly::from_terms(p, nvars, terms));

      const bool all_f = options.exhaustive || monomials * hs.size() <= kExhaustivePairs;
      full = full && all_f;
      const std::uint64_t rounds = all_f ? monomials : options.samples;
      for (std::uint64_t r = 0; r < rounds; ++r) {
        const auto key = static_cast<MonomialKey>(all_f ? r : pick(rng, monomials));
        const TruncPoly f = TruncPoly::monomial(p, nvars, key);
        for (const auto& h : hs) {
          ++count;
          if (shift(f, i, h) != shift_taylor(f, i, h))
            return fail(name, "f = " + to_string(f) + ", i = " + std::to_string(i) +
                                  ", h = " + to_string(h));
        }
      }
    }
  }
  return pass(name, scope(full, count) + " (monomial, variable, shift) cases");
}

CheckResult check_lie_axioms(const PrimeParams& params, const VerifyOptions& options,
                             std::mt19937_64& rng) {
  const std::string name = "lie.antisymmetry_jacobi";
  const auto all = all_monomials(params);
  std::vector<LieElement> basis;
  for (const auto& m : all) basis.push_back(LieElement::basis(params, m));
  const std::size_t d = basis.size();
  auto triple = [&](std::size_t a, std::size_t b, std::size_t c) -> std::string {
    const auto& x = basis[a];
    const auto& y = basis[b];
    const auto& z = basis[c];
    if (!add(bracket(x, y), bracket(y, x)).is_zero())
      return "antisymmetry fails at " + to_string(x) + ", " + to_string(y);
    const LieElement j =
        add(add(bracket(bracket(x, y), z), bracket(bracket(y, z), x)), bracket(bracket(z, x), y));
    if (!j.is_zero())
      return "Jacobi fails at " + to_string(x) + ", " + to_string(y) + ", " + to_string(z);
    return {};
  };
  const bool full = options.exhaustive || d * d * d <= kExhaustiveTriples;
  std::size_t count = 0;
  if (full) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c, ++count)
          if (auto e = triple(a, b, c); !e.empty()) return fail(name, e);
  } else {
    for (; count < options.samples; ++count)
      if (auto e = triple(pick(rng, d), pick(rng, d), pick(rng, d)); !e.empty())
        return fail(name, e);
  }
  return pass(name, scope(full, count) + " basis triples");
}

CheckResult check_group_series(const PrimeParams& params) {
  const std::string name = "series.upper_equals_lower";
  const auto series = upper_central_series_direct(params);
  const auto c = static_cast<std::int64_t>(params.class_length());
  if (static_cast<std::int64_t>(series.size()) != c + 1)
    return fail(name, "upper central series has length " + std::to_string(series.size() - 1) +
                          ", class is " + std::to_string(c));
  for (std::int64_t i = 0; i <= c; ++i) {
    const SaturatedSubgroup expected =
        i == 0 ? SaturatedSubgroup::trivial(params) : lower_central_term(params, c + 1 - i);
    if (!(series[static_cast<std::size_t>(i)] == expected))
      return fail(name, "Z_" + std::to_string(i) + " = " +
                            to_string(series[static_cast<std::size_t>(i)]) + " differs from gamma_" +
                            std::to_string(c + 1 - i));
    if (!(upper_central_term(params, i) == expected))
      return fail(name, "upper_central_term(" + std::to_string(i) + ") disagrees");
  }
  return pass(name, "Z_i = gamma_{" + std::to_string(c + 1) + "-i} for 0 <= i <= " +
                        std::to_string(c));
}

CheckResult check_lie_series(const PrimeParams& params) {
  const std::string name = "series.lie_powers_and_centers";
  const auto c = static_cast<std::int64_t>(params.class_length());
  const bool kernels = params.basis_size() <= kKernelBasisLimit;
  for (std::int64_t i = 1; i <= c + 1; ++i) {
    const HomogeneousSubring closed = lie_power(params, i);
    if (!(lie_power_by_brackets(params, i) == closed.span()))
      return fail(name, "L^" + std::to_string(i) + " from brackets differs from gamma image");
  }
  for (std::int64_t m = 0; m <= c; ++m) {
    const HomogeneousSubring xi = lie_center_term(params, m);
    const HomogeneousSubring power =
        m == 0 ? HomogeneousSubring::zero(params) : lie_power(params, c + 1 - m);
    if (!(xi == power))
      return fail(name, "xi_" + std::to_string(m) + " differs from L^" + std::to_string(c + 1 - m));
    if (kernels && !(lie_center_direct(params, m) == xi.span()))
      return fail(name, "Z_" + std::to_string(m) + "(L) differs from xi_" + std::to_string(m));
  }
  std::string detail = "L^i by brackets for 1 <= i <= " + std::to_string(c + 1) +
                       "; xi_m = L^{" + std::to_string(c + 1) + "-m}";
  detail += kernels ? "; Z_m(L) by kernels" : "; Z_m(L) by kernels skipped (basis too large)";
  return pass(name, detail);
}

namespace {

/// Smallest monomial set containing m and the monomials of [s, g] for
/// every member s and basis monomial g.
MonomialSet closure_by_commutators(const PrimeParams& params, const Monomial& m) {
  const auto all = all_monomials(params);
  MonomialSet set(params);
  set.insert(m);
  std::vector<Monomial> frontier{m};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& s : frontier) {
      const WreathElement se = WreathElement::monomial(params, s);
      for (const auto& g : all) {
        const WreathElement c = commutator(se, WreathElement::monomial(params, g));
        for (int k : c.support())
          for (const auto& t : c.layer(k).terms())
            if (set.insert({k, t.key})) next.push_back({k, t.key});
      }
    }
    frontier = std::move(next);
  }
  return set;
}

}  // namespace

CheckResult check_closures(const PrimeParams& params, const VerifyOptions& options,
                           std::mt19937_64& rng) {
  const std::string name = "closure.normal_and_bound";
  const auto all = all_monomials(params);
  const bool full = options.exhaustive || all.size() <= 200;
  std::vector<Monomial> gens = all;
  if (!full) {
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.resize(std::min(gens.size(), options.samples));
  }
  for (const auto& m : gens) {
    const SaturatedSubgroup closed = normal_closure_monomial(params, {m, 1});
    const std::string label = to_string(params, m);
    if (!(closed.basis() == closure_by_commutators(params, m)))
      return fail(name, "closure of " + label + " differs from commutator saturation");
    if (!closed.is_closed() || !is_normal(closed))
      return fail(name, "closure of " + label + " is not a normal subgroup");
    const GammaBound b = contains_gamma_bound(closed, m.layer);
    if (!b.within_bound)
      return fail(name, "closure of " + label + " misses gamma_" + std::to_string(b.gamma_index) +
                            " or exceeds the index bound");
  }
  return pass(name, scope(full, gens.size()) + " monomial generators");
}

CheckResult check_bijection(const PrimeParams& params) {
  const std::string name = "bijection.ideals_normal_subgroups";
  const auto all = all_monomials(params);
  if (all.size() > kSubsetBasisLimit) return skip(name, "too many basis subsets to enumerate");
  std::size_t ideals = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    MonomialSet set(params);
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1) set.insert(all[b]);
    const HomogeneousSubring h(set);
    const SaturatedSubgroup s(set);
    const bool ideal = h.is_subring() && h.is_ideal();
    const bool normal = s.is_closed() && is_normal(s);
    if (ideal != normal)
      return fail(name, to_string(set, 'D') + (ideal ? " is an ideal but not a normal subgroup"
                                                     : " is a normal subgroup but not an ideal"));
    if (!ideal) continue;
    ++ideals;
    if (!(epsilon(h) == s) || !(subring_image(epsilon(h)) == h) ||
        !(epsilon(subring_image(s)) == s))
      return fail(name, "phi and epsilon do not invert each other at " + to_string(h));
  }
  return pass(name, std::to_string(ideals) + " ideals matched among " +
                        std::to_string(std::uint64_t{1} << all.size()) + " basis subsets");
}

CheckResult check_chains(const PrimeParams& params) {
  const std::string name = "chain.normalizer_idealizer";
  const int steps = chain_guard(params);
  const ChainReport group = normalizer_chain(params, steps);
  const ChainReport lie = idealizer_chain(params, steps);
  const CrossReport cross = cross_validate(group, lie);
  if (!cross.ok) return fail(name, cross.mismatches.front());
  MonomialSet previous = group.start;
  for (const auto& s : group.steps) {
    if (!previous.is_subset_of(s.members))
      return fail(name, "chain not monotone at step " + std::to_string(s.i));
    if (!SaturatedSubgroup(s.members).is_closed())
      return fail(name, "N_" + std::to_string(s.i) + " is not a subgroup");
    if (s.predicted && *s.predicted != s.logp_index)
      return fail(name, "step " + std::to_string(s.i) + ": log_p index " +
                            std::to_string(s.logp_index) + ", predicted " +
                            std::to_string(*s.predicted));
    previous = s.members;
  }
  std::ostringstream os;
  os << group.steps.size() << " steps, increments";
  for (const auto& s : group.steps) os << ' ' << s.logp_index;
  os << (group.stabilized ? ", stabilized" : ", stopped at guard");
  return pass(name, os.str());
}

CheckResult check_intertwining(const PrimeParams& params, const VerifyOptions& options,
                               std::mt19937_64& rng) {
  const std::string name = "lie.intertwining";
  const auto all = all_monomials(params);
  std::size_t nonvanishing = 0, off_depth = 0;
  std::string bad;
  const bool full = for_pairs(all.size(), options.exhaustive, options.samples, rng,
                              [&](std::size_t a, std::size_t b) {
    const WreathElement x = WreathElement::monomial(params, all[a]);
    const WreathElement y = WreathElement::monomial(params, all[b]);
    const WreathElement c = commutator(x, y);
    if (c.is_identity()) return true;
    ++nonvanishing;
    const std::int64_t i = depth(params, all[a]);
    const std::int64_t j = depth(params, all[b]);
    const LieElement lhs = phi_at_depth(c, i + j);
    const LieElement rhs = bracket(phi(x), phi(y));
    if (lhs != rhs) {
      bad = "[" + to_string(x) + ", " + to_string(y) + "]";
      return false;
    }
    if (*element_depth(c) != i + j) ++off_depth;
    return true;
  });
  if (!bad.empty()) return fail(name, "phi_{i+j} mismatch at " + bad);
  return pass(name, scope(full, nonvanishing) + " nonvanishing commutators; " +
                        std::to_string(off_depth) + " land deeper than i+j");
}

CheckResult check_partitions(const PrimeParams& params) {
  const std::string name = "partitions.enumerator";
  const int up_to = std::max(params.n + 1, 12);
  for (int i = 1; i <= up_to; ++i)
    if (count_partitions(params.p, i) + 1 != count_bounded_partitions(params.p, i))
      return fail(name, "t_{" + std::to_string(params.p) + "," + std::to_string(i) +
                            "} disagrees with the generating function");
  return pass(name, "t_{p,i} + 1 = bounded partitions for 1 <= i <= " + std::to_string(up_to));
}

VerifyReport run_verification(const PrimeParams& params, const VerifyOptions& options) {
  VerifyReport report{params, options, {}};
  std::mt19937_64 rng(options.seed);
  auto run = [&](const std::function<CheckResult()>& check) {
    try {
      report.checks.push_back(check());
    } catch (const Error& e) {
      report.checks.push_back(fail("error", e.what()));
    }
  };
  run([&] { return check_partitions(params); });
  run([&] { return check_taylor(params, options, rng); });
  run([&] { return check_oracle_monomials(params, options, rng); });
  run([&] { return check_oracle_random(params, options, rng); });
  run([&] { return check_lie_axioms(params, options, rng); });
  run([&] { return check_group_series(params); });
  run([&] { return check_lie_series(params); });
  run([&] { return check_closures(params, options, rng); });
  run([&] { return check_bijection(params); });
  run([&] { return check_intertwining(params, options, rng); });
  run([&] { return check_chains(params); });
  return report;
}

}  // namespace sylow
