#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sylow/basis.hpp"
#include "sylow/fp_linalg.hpp"
#include "sylow/structure.hpp"

namespace sylow {

/// F_p-combination of the basis vectors x^Lambda d_k of L_n, with no zero
/// coefficients, sorted by basis index.
class LieElement {
 public:
  using TermList = std::vector<std::pair<Monomial, Coeff>>;

  explicit LieElement(const PrimeParams& params) : params_(params) {}
  static LieElement basis(const PrimeParams& params, const Monomial& m, std::int64_t c = 1);
  static LieElement from_terms(const PrimeParams& params,
                               const std::vector<std::pair<Monomial, std::int64_t>>& terms);
  static LieElement from_vector(const PrimeParams& params, const FpVector& v);

  const PrimeParams& params() const { return params_; }
  const TermList& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(const Monomial& m) const;
  /// Dense coordinates over the basis, indexed by basis_index.
  FpVector to_vector() const;

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  PrimeParams params_;
  TermList terms_;
};

LieElement add(const LieElement& a, const LieElement& b);
LieElement scale(const LieElement& a, std::int64_t c);

/// Product of two basis vectors:
///   [x^L d_k, x^T d_j] = d_j(x^L) x^T d_k    (j < k)
///                      = -x^L d_k(x^T) d_j   (j > k)
///                      = 0                   (j = k).
/// Products of monomials live in F_p[x]/(x_i^p), so an exponent reaching p
/// kills the term. Returns the result monomial with its coefficient, or
/// nothing when the product is zero.
std::optional<std::pair<Monomial, Coeff>> bracket_basis(const PrimeParams& params,
                                                        const Monomial& a, const Monomial& b);

/// Bilinear extension of bracket_basis.
LieElement bracket(const LieElement& a, const LieElement& b);

/// F_p-span of a subset of the Lie basis.
class HomogeneousSubring {
 public:
  explicit HomogeneousSubring(MonomialSet basis) : basis_(std::move(basis)) {}

  static HomogeneousSubring zero(const PrimeParams& params);
  static HomogeneousSubring whole(const PrimeParams& params);
  /// span{d_1, ..., d_n}.
  static HomogeneousSubring translations(const PrimeParams& params);

  const PrimeParams& params() const { return basis_.params(); }
  const MonomialSet& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool contains(const Monomial& m) const { return basis_.contains(m); }
  bool contains(const LieElement& x) const;

  /// Brackets of basis vectors stay in the span.
  bool is_subring() const;
  /// Brackets with the whole algebra stay in the span.
  bool is_ideal() const;

  FpSubspace span() const;

  friend bool operator==(const HomogeneousSubring&, const HomogeneousSubring&) = default;

 private:
  MonomialSet basis_;
};

std::string to_string(const HomogeneousSubring& h);

/// The s with g in gamma_s \ gamma_{s+1}; nothing for the identity.
std::optional<std::int64_t> element_depth(const WreathElement& g);

/// phi(g): sum of the leading terms of the layers of maximal p-degree,
/// read as Lie basis vectors. phi(1) = 0.
LieElement phi(const WreathElement& g);
LieElement phi(const PrimeParams& params, const MonomialElement& m);
/// phi_s(g): phi(g) when g has depth s, zero otherwise.
LieElement phi_at_depth(const WreathElement& g, std::int64_t s);

/// S^phi: spanned by the images of the basis monomials of S.
HomogeneousSubring subring_image(const SaturatedSubgroup& s);

/// The saturated subgroup generated by x^Lambda d_k -> x^Lambda Delta_k.
SaturatedSubgroup epsilon(const HomogeneousSubring& h);

/// L_n^i as the image of gamma_i(W_n).
HomogeneousSubring lie_power(const PrimeParams& params, std::int64_t i);
/// L_n^i from L_n^1 = L_n and L_n^{j+1} = [L_n^j, L_n], by linear algebra.
FpSubspace lie_power_by_brackets(const PrimeParams& params, std::int64_t i);

/// xi_m: span of the basis vectors of p-degree < m.
HomogeneousSubring lie_center_term(const PrimeParams& params, std::int64_t m);
/// Z_m(L_n) from Z_0 = 0 and Z_{j+1} = {x : [x, L_n] in Z_j}, by linear algebra.
FpSubspace lie_center_direct(const PrimeParams& params, std::int64_t m);

/// Basis vectors b with [b, u] in F_p U for every u in the basis of U.
HomogeneousSubring idealizer(const HomogeneousSubring& u);

/// Grammar `2x1^2d3 + x1d2`; "0" for zero.
LieElement parse_lie(std::string_view text, const PrimeParams& params);
std::string to_string(const LieElement& x);

}  // namespace sylow
