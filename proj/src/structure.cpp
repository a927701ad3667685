#include "sylow/structure.hpp"

#include <sstream>

#include "sylow/errors.hpp"

namespace sylow {

std::int64_t pdeg(const PrimeParams& params, const MonomialElement& m) {
  if (m.coeff % static_cast<Coeff>(params.p) == 0)
    throw DomainError("the identity has no p-degree");
  return pdeg(params, m.mono);
}

std::int64_t pdeg(const PrimeParams& params, int layer, const TruncPoly& f) {
  return pdeg(params, leading_term(params, layer, f));
}

MonomialElement leading_term(const PrimeParams& params, int layer, const TruncPoly& f) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no leading term");
  if (f.max_variable() > layer - 1)
    throw LayerError("layer " + std::to_string(layer) + " polynomial reads x" +
                     std::to_string(f.max_variable()));
  const Term& t = f.leading();
  MonomialElement m{{layer, t.key}, t.coeff};
  basis_index(params, m.mono);
  return m;
}

WreathElement to_element(const PrimeParams& params, const MonomialElement& m) {
  return WreathElement::monomial(params, m.mono, m.coeff);
}

// ---------------------------------------------------------------- SaturatedSubgroup

SaturatedSubgroup SaturatedSubgroup::trivial(const PrimeParams& params) {
  return SaturatedSubgroup(MonomialSet(params));
}

SaturatedSubgroup SaturatedSubgroup::whole(const PrimeParams& params) {
  return SaturatedSubgroup(MonomialSet::all(params));
}

SaturatedSubgroup SaturatedSubgroup::translations(const PrimeParams& params) {
  return SaturatedSubgroup(
      MonomialSet::where(params, [](const Monomial& m) { return m.key == 0; }));
}

bool SaturatedSubgroup::contains(const WreathElement& g) const {
  if (!(g.params() == params())) return false;
  for (int k : g.support())
    for (const auto& t : g.layer(k).terms())
      if (!basis_.contains({k, t.key})) return false;
  return true;
}

namespace {

/// Inserts every monomial of g into `set`; true if anything was new.
bool absorb(MonomialSet& set, const WreathElement& g) {
  bool grew = false;
  for (int k : g.support())
    for (const auto& t : g.layer(k).terms()) grew |= set.insert({k, t.key});
  return grew;
}

WreathElement monic(const PrimeParams& params, const Monomial& m) {
  return WreathElement::monomial(params, m);
}

}  // namespace

bool SaturatedSubgroup::is_closed() const {
  const auto elems = basis_.elements();
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (!contains(commutator(monic(params(), elems[a]), monic(params(), elems[b]))))
        return false;
  return true;
}

std::string to_string(const SaturatedSubgroup& s) { return to_string(s.basis(), 'D'); }

SaturatedSubgroup saturated_closure(MonomialSet basis) {
  const PrimeParams params = basis.params();
  bool grew = true;
  while (grew) {
    grew = false;
    const auto elems = basis.elements();
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = a + 1; b < elems.size(); ++b)
        grew |= absorb(basis, commutator(monic(params, elems[a]), monic(params, elems[b])));
  }
  return SaturatedSubgroup(std::move(basis));
}

// ---------------------------------------------------------------- series

SaturatedSubgroup lower_central_term(const PrimeParams& params, std::int64_t i) {
  if (i < 1) throw DomainError("lower central series starts at i = 1");
  const std::int64_t top = static_cast<std::int64_t>(params.class_length()) - i;
  return SaturatedSubgroup(
      MonomialSet::where(params, [&](const Monomial& m) { return pdeg(params, m) <= top; }));
}

SaturatedSubgroup upper_central_term(const PrimeParams& params, std::int64_t i) {
  if (i < 0) throw DomainError("upper central series starts at i = 0");
  const auto c = static_cast<std::int64_t>(params.class_length());
  if (i == 0) return SaturatedSubgroup::trivial(params);
  if (i >= c) return SaturatedSubgroup::whole(params);
  return lower_central_term(params, c + 1 - i);
}

std::vector<SaturatedSubgroup> upper_central_series_direct(const PrimeParams& params) {
  const auto all = all_monomials(params);
  std::vector<WreathElement> gens;
  for (const auto& m : all) gens.push_back(monic(params, m));

  std::vector<SaturatedSubgroup> series{SaturatedSubgroup::trivial(params)};
  while (series.back().log_order() < all.size()) {
    const SaturatedSubgroup& current = series.back();
    MonomialSet next = current.basis();
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (current.contains(all[b])) continue;
      bool central = true;
      for (std::size_t w = 0; w < all.size() && central; ++w)
        central = current.contains(commutator(gens[b], gens[w]));
      if (central) next.insert(all[b]);
    }
    if (next == current.basis())
      throw Error("upper central series stalled before reaching W_n");
    series.emplace_back(std::move(next));
  }
  return series;
}

// ---------------------------------------------------------------- normal closures

SaturatedSubgroup normal_closure_monomial(const PrimeParams& params, const MonomialElement& m) {
  const std::int64_t t = pdeg(params, m);
  const int k = m.mono.layer;
  const std::int64_t upper_top =
      static_cast<std::int64_t>(params.class_length()) - params.pow(k - 1) - 1;
  return SaturatedSubgroup(MonomialSet::where(params, [&](const Monomial& b) {
    if (b.layer == k) return pdeg(params, b) <= t;
    if (b.layer > k) return pdeg(params, b) <= upper_top;
    return false;
  }));
}

SaturatedSubgroup normal_closure_poly(const PrimeParams& params, int layer, const TruncPoly& f) {
  return normal_closure_monomial(params, leading_term(params, layer, f));
}

GammaBound contains_gamma_bound(const SaturatedSubgroup& normal_subgroup, int layer) {
  const PrimeParams& params = normal_subgroup.params();
  if (layer < 1 || layer > params.n) throw DomainError("layer out of range");
  if (normal_subgroup.basis().min_layer() != layer)
    throw DomainError("subgroup must lie in B_k...B_n but not in B_{k+1}...B_n for k = " +
                      std::to_string(layer));
  if (!is_normal(normal_subgroup)) throw DomainError("subgroup is not normal");

  GammaBound r;
  r.gamma_index = static_cast<std::int64_t>(params.pow(layer - 1)) + 1;
  const SaturatedSubgroup gamma = lower_central_term(params, r.gamma_index);
  r.contains_gamma = gamma.is_subgroup_of(normal_subgroup);
  r.log_index = static_cast<std::int64_t>(normal_subgroup.log_order()) -
                static_cast<std::int64_t>(gamma.log_order());
  r.bound = static_cast<std::int64_t>(params.n - layer + 1) * params.pow(layer - 1);
  r.within_bound = r.contains_gamma && r.log_index <= r.bound;
  return r;
}

bool is_normal(const SaturatedSubgroup& s) {
  const PrimeParams& params = s.params();
  const auto all = all_monomials(params);
  for (const auto& m : s.basis().elements()) {
    const WreathElement sm = monic(params, m);
    for (const auto& g : all)
      if (!s.contains(commutator(sm, monic(params, g)))) return false;
  }
  return true;
}

}  // namespace sylow
