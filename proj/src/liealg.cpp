#include "sylow/liealg.hpp"

#include <algorithm>
#include <sstream>

#include "poly_text.hpp"
#include "sylow/errors.hpp"

namespace sylow {

// ---------------------------------------------------------------- LieElement

LieElement LieElement::basis(const PrimeParams& params, const Monomial& m, std::int64_t c) {
  return from_terms(params, {{m, c}});
}

LieElement LieElement::from_terms(const PrimeParams& params,
                                  const std::vector<std::pair<Monomial, std::int64_t>> & terms) {
  FpVector v(params.basis_size(), 0);
  for (const auto& [m, c] : terms) {
    auto& slot = v[basis_index(params, m)];
    slot = (slot + mod_p(c, params.p)) % static_cast<Coeff>(params.p);
  }
  return from_vector(params, v);
}

LieElement LieElement::from_vector(const PrimeParams& params, const FpVector& v) {
  if (v.size() != params.basis_size()) throw DimensionError("vector of the wrong length");
  LieElement r(params);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (Coeff c = v[i] % static_cast<Coeff>(params.p); c != 0)
      r.terms_.emplace_back(basis_monomial(params, i), c);
  return r;
}

Coeff LieElement::coeff(const Monomial& m) const {
  for (const auto& [b, c] : terms_)
    if (b == m) return c;
  return 0;
}

FpVector LieElement::to_vector() const {
  FpVector v(params_.basis_size(), 0);
  for (const auto& [m, c] : terms_) v[basis_index(params_, m)] = c;
  return v;
}

LieElement add(const LieElement& a, const LieElement& b) {
  if (!(a.params() == b.params())) throw ParamError("Lie elements of different algebras");
  FpVector v = a.to_vector();
  for (const auto& [m, c] : b.terms()) {
    auto& slot = v[basis_index(a.params(), m)];
    slot = (slot + c) % static_cast<Coeff>(a.params().p);
  }
  return LieElement::from_vector(a.params(), v);
}

LieElement scale(const LieElement& a, std::int64_t c) {
  FpVector v = a.to_vector();
  const Coeff cc = mod_p(c, a.params().p);
  for (auto& x : v) x = static_cast<Coeff>(std::uint64_t{x} * cc % a.params().p);
  return LieElement::from_vector(a.params(), v);
}

// ---------------------------------------------------------------- bracket

namespace {

/// x^a * x^b in F_p[x]/(x_i^p); nothing when some exponent reaches p.
std::optional<MonomialKey> truncated_product(int p, MonomialKey a, MonomialKey b) {
  const auto P = static_cast<MonomialKey>(p);
  MonomialKey r = 0, place = 1;
  while (a != 0 || b != 0) {
    MonomialKey e = a % P + b % P;
    if (e >= P) return std::nullopt;
    r += e * place;
    a /= P;
    b /= P;
    place *= P;
  }
  return r;
}

/// d_j(x^key) x^other, or nothing.
std::optional<std::pair<MonomialKey, Coeff>> derive_times(const PrimeParams& params,
                                                          MonomialKey key, int j,
                                                          MonomialKey other) {
  const auto place = static_cast<MonomialKey>(params.pow(j - 1));
  const auto e = static_cast<Coeff>((key / place) % static_cast<MonomialKey>(params.p));
  if (e == 0) return std::nullopt;
  auto prod = truncated_product(params.p, key - place, other);
  if (!prod) return std::nullopt;
  return std::pair{*prod, e};
}

}  // namespace

std::optional<std::pair<Monomial, Coeff>> bracket_basis(const PrimeParams& params,
                                                        const Monomial& a, const Monomial& b) {
  basis_index(params, a);
  basis_index(params, b);
  if (a.layer == b.layer) return std::nullopt;
  if (b.layer < a.layer) {
    auto r = derive_times(params, a.key, b.layer, b.key);
    if (!r) return std::nullopt;
    return std::pair{Monomial{a.layer, r->first}, r->second};
  }
  auto r = derive_times(params, b.key, a.layer, a.key);
  if (!r) return std::nullopt;
  return std::pair{Monomial{b.layer, r->first}, mod_p(-static_cast<std::int64_t>(r->second), params.p)};
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (!(a.params() == b.params())) throw ParamError("Lie elements of different algebras");
  const PrimeParams& params = a.params();
  FpVector v(params.basis_size(), 0);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto r = bracket_basis(params, ma, mb)) {
        auto& slot = v[basis_index(params, r->first)];
        slot = static_cast<Coeff>((slot + std::uint64_t{ca} * cb % params.p * r->second) %
                                  params.p);
      }
  return LieElement::from_vector(params, v);
}

// ---------------------------------------------------------------- subrings

HomogeneousSubring HomogeneousSubring::zero(const PrimeParams& params) {
  return HomogeneousSubring(MonomialSet(params));
}

HomogeneousSubring HomogeneousSubring::whole(const PrimeParams& params) {
  return HomogeneousSubring(MonomialSet::all(params));
}

HomogeneousSubring HomogeneousSubring::translations(const PrimeParams& params) {
  return HomogeneousSubring(
      MonomialSet::where(params, [](const Monomial& m) { return m.key == 0; }));
}

bool HomogeneousSubring::contains(const LieElement& x) const {
  for (const auto& [m, c] : x.terms())
    if (!basis_.contains(m)) return false;
  return true;
}

namespace {

bool bracket_lands_in(const PrimeParams& params, const Monomial& a, const Monomial& b,
                      const MonomialSet& target) {
  auto r = bracket_basis(params, a, b);
  return !r || target.contains(r->first);
}

}  // namespace

bool HomogeneousSubring::is_subring() const {
  const auto elems = basis_.elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (!bracket_lands_in(params(), a, b, basis_)) return false;
  return true;
}

bool HomogeneousSubring::is_ideal() const {
  const auto all = all_monomials(params());
  for (const auto& a : basis_.elements())
    for (const auto& b : all)
      if (!bracket_lands_in(params(), a, b, basis_)) return false;
  return true;
}

FpSubspace HomogeneousSubring::span() const {
  FpSubspace s(params().p, params().basis_size());
  for (const auto& m : basis_.elements()) s.insert(LieElement::basis(params(), m).to_vector());
  return s;
}

std::string to_string(const HomogeneousSubring& h) { return to_string(h.basis(), 'd'); }

// ---------------------------------------------------------------- phi / epsilon

std::optional<std::int64_t> element_depth(const WreathElement& g) {
  if (g.is_identity()) return std::nullopt;
  std::int64_t top = -1;
  for (int k : g.support()) top = std::max(top, pdeg(g.params(), k, g.layer(k)));
  return static_cast<std::int64_t>(g.params().class_length()) - top;
}

LieElement phi(const WreathElement& g) {
  const PrimeParams& params = g.params();
  auto d = element_depth(g);
  if (!d) return LieElement(params);
  const std::int64_t top = static_cast<std::int64_t>(params.class_length()) - *d;
  std::vector<std::pair<Monomial, std::int64_t>> terms;
  for (int k : g.support()) {
    MonomialElement lt = leading_term(params, k, g.layer(k));
    if (pdeg(params, lt) == top) terms.emplace_back(lt.mono, lt.coeff);
  }
  return LieElement::from_terms(params, terms);
}

LieElement phi(const PrimeParams& params, const MonomialElement& m) {
  return LieElement::basis(params, m.mono, m.coeff);
}

LieElement phi_at_depth(const WreathElement& g, std::int64_t s) {
  auto d = element_depth(g);
  if (!d || *d != s) return LieElement(g.params());
  return phi(g);
}

HomogeneousSubring subring_image(const SaturatedSubgroup& s) {
  return HomogeneousSubring(s.basis());
}

SaturatedSubgroup epsilon(const HomogeneousSubring& h) { return saturated_closure(h.basis()); }

// ---------------------------------------------------------------- series

HomogeneousSubring lie_power(const PrimeParams& params, std::int64_t i) {
  return subring_image(lower_central_term(params, i));
}

FpSubspace lie_power_by_brackets(const PrimeParams& params, std::int64_t i) {
  if (i < 1) throw DomainError("Lie powers start at i = 1");
  const auto all = all_monomials(params);
  FpSubspace current = FpSubspace::whole(params.p, params.basis_size());
  for (std::int64_t j = 1; j < i && current.dim() > 0; ++j) {
    FpSubspace next(params.p, params.basis_size());
    for (const auto& row : current.rows()) {
      const LieElement x = LieElement::from_vector(params, row);
      for (const auto& b : all) next.insert(bracket(x, LieElement::basis(params, b)).to_vector());
    }
    current = std::move(next);
  }
  return current;
}

HomogeneousSubring lie_center_term(const PrimeParams& params, std::int64_t m) {
  if (m < 0) throw DomainError("center terms start at m = 0");
  return HomogeneousSubring(
      MonomialSet::where(params, [&](const Monomial& b) { return pdeg(params, b) < m; }));
}

FpSubspace lie_center_direct(const PrimeParams& params, std::int64_t m) {
  if (m < 0) throw DomainError("center terms start at m = 0");
  const auto all = all_monomials(params);
  const std::size_t d = all.size();
  FpSubspace current(params.p, d);
  for (std::int64_t j = 0; j < m && current.dim() < d; ++j) {
    // x -> ([x, b_1], ..., [x, b_d]) modulo the previous term.
    std::vector<FpVector> images;
    for (const auto& a : all) {
      FpVector image;
      image.reserve(d * d);
      for (const auto& b : all) {
        FpVector v(d, 0);
        if (auto r = bracket_basis(params, a, b)) v[basis_index(params, r->first)] = r->second;
        v = current.reduce(std::move(v));
        image.insert(image.end(), v.begin(), v.end());
      }
      images.push_back(std::move(image));
    }
    current = left_kernel(params.p, images);
  }
  return current;
}

HomogeneousSubring idealizer(const HomogeneousSubring& u) {
  const PrimeParams& params = u.params();
  const auto members = u.basis().elements();
  return HomogeneousSubring(MonomialSet::where(params, [&](const Monomial& b) {
    for (const auto& m : members)
      if (!bracket_lands_in(params, b, m, u.basis())) return false;
    return true;
  }));
}

// ---------------------------------------------------------------- text

LieElement parse_lie(std::string_view text, const PrimeParams& params) {
  detail::Cursor in(text);
  if (in.accept('0') && in.eof()) return LieElement(params);
  in = detail::Cursor(text);
  std::vector<std::pair<Monomial, std::int64_t>> terms;
  bool first = true;
  while (!in.eof() || first) {
    std::int64_t sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (!in.accept('+') && !first) {
      in.fail("expected '+' or '-'");
    }
    first = false;
    detail::RawTerm t = detail::scan_term(in);
    if (!in.accept('d')) in.fail("expected 'd<k>'");
    std::size_t layer_at = in.position();
    std::int64_t k = in.integer();
    if (k < 1 || k > params.n)
      throw ParseError("layer " + std::to_string(k) + " outside 1.." + std::to_string(params.n),
                       layer_at);
    const int layer = static_cast<int>(k);
    terms.emplace_back(Monomial{layer, detail::term_key(t, params.p, layer - 1)},
                       sign * (t.coeff % params.p));
  }
  return LieElement::from_terms(params, terms);
}

std::string to_string(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c);
    if (m.key != 0) out += monomial_text(x.params(), m);
    out += "d" + std::to_string(m.layer);
  }
  return out;
}

}  // namespace sylow
