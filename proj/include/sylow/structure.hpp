#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/basis.hpp"
#include "sylow/wreath.hpp"

namespace sylow {

/// c x^Lambda Delta_k. The identity when coeff == 0.
struct MonomialElement {
  Monomial mono;
  Coeff coeff = 1;

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
};

/// Throws DomainError for the identity, whose p-degree is undefined.
std::int64_t pdeg(const PrimeParams& params, const MonomialElement& m);
/// p-degree of f Delta_k, i.e. of its leading term.
std::int64_t pdeg(const PrimeParams& params, int layer, const TruncPoly& f);

/// Monomial of f with maximal p-degree, with its coefficient.
MonomialElement leading_term(const PrimeParams& params, int layer, const TruncPoly& f);

WreathElement to_element(const PrimeParams& params, const MonomialElement& m);

/// The subgroup of W_n spanned by a set of monic power monomials.
///
/// Elements are exactly the products whose layer polynomials only use
/// monomials of the basis, so |S| = p^{|basis|}. Whether that set is
/// actually closed under multiplication is reported by `is_closed`; every
/// subgroup produced by this library is.
class SaturatedSubgroup {
 public:
  explicit SaturatedSubgroup(MonomialSet basis) : basis_(std::move(basis)) {}

  static SaturatedSubgroup trivial(const PrimeParams& params);
  static SaturatedSubgroup whole(const PrimeParams& params);
  /// T = <Delta_1, ..., Delta_n>.
  static SaturatedSubgroup translations(const PrimeParams& params);

  const PrimeParams& params() const { return basis_.params(); }
  const MonomialSet& basis() const { return basis_; }
  /// log_p |S|.
  std::size_t log_order() const { return basis_.size(); }

  bool contains(const Monomial& m) const { return basis_.contains(m); }
  bool contains(const WreathElement& g) const;
  bool is_subgroup_of(const SaturatedSubgroup& other) const {
    return basis_.is_subset_of(other.basis_);
  }
  /// Every monomial of every [a, b], a and b in the basis, is in the basis.
  bool is_closed() const;

  friend bool operator==(const SaturatedSubgroup&, const SaturatedSubgroup&) = default;

 private:
  MonomialSet basis_;
};

std::string to_string(const SaturatedSubgroup& s);

/// Adds the monomials of [a, b] to `basis` until it is closed.
SaturatedSubgroup saturated_closure(MonomialSet basis);

/// gamma_i(W_n): every x^Lambda Delta_k with pdeg <= p^{n-1} - i.
/// Trivial for i > p^{n-1}; i < 1 is a DomainError.
SaturatedSubgroup lower_central_term(const PrimeParams& params, std::int64_t i);

/// Z_i(W_n) read off the lower central series: trivial for i = 0,
/// gamma_{p^{n-1}+1-i} for 1 <= i <= p^{n-1}, W_n beyond.
SaturatedSubgroup upper_central_term(const PrimeParams& params, std::int64_t i);

/// Z_0, Z_1, ... computed directly: Z_{j+1} collects the basis monomials b
/// with [b, w] in Z_j for every w in the basis. Stops at W_n.
std::vector<SaturatedSubgroup> upper_central_series_direct(const PrimeParams& params);

/// Normal closure of <x^Lambda Delta_k>: the monomial itself, every layer-k
/// monomial of smaller p-degree, and gamma_{p^{k-1}+1}(W_n) restricted to
/// layers above k.
SaturatedSubgroup normal_closure_monomial(const PrimeParams& params, const MonomialElement& m);

/// Normal closure of <f Delta_k>; the same set as for lt(f Delta_k).
SaturatedSubgroup normal_closure_poly(const PrimeParams& params, int layer, const TruncPoly& f);

struct GammaBound {
  std::int64_t gamma_index = 0;  // p^{k-1} + 1
  bool contains_gamma = false;
  std::int64_t log_index = 0;    // log_p |N : gamma|, when contained
  std::int64_t bound = 0;        // (n - k + 1) p^{k-1}
  bool within_bound = false;
};

/// For a normal N inside B_k...B_n but not inside B_{k+1}...B_n: whether it
/// contains gamma_{p^{k-1}+1}(W_n) and whether the index stays within
/// (n - k + 1) p^{k-1}. Violated preconditions are a DomainError.
GammaBound contains_gamma_bound(const SaturatedSubgroup& normal_subgroup, int layer);

/// [s, g] in S for every basis monomial s of S and g of W_n.
bool is_normal(const SaturatedSubgroup& s);

}  // namespace sylow
