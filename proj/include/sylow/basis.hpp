#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sylow/params.hpp"
#include "sylow/polyring.hpp"

namespace sylow {

/// A monic power monomial x^Lambda at layer k: the group element
/// x^Lambda Delta_k or the Lie basis vector x^Lambda d_k, depending on
/// context. Lambda uses only x_1..x_{k-1}; `key` is its base-p encoding.
struct Monomial {
  int layer = 1;
  MonomialKey key = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// mu_k = p^{n-1} - p^{k-1}.
std::int64_t layer_offset(const PrimeParams& params, int layer);

/// pdeg(x^Lambda Delta_k) = key + mu_k.
std::int64_t pdeg(const PrimeParams& params, const Monomial& m);

/// The i with m in gamma_i(W_n) \ gamma_{i+1}(W_n), i.e. p^{n-1} - pdeg(m).
std::int64_t depth(const PrimeParams& params, const Monomial& m);

/// Position of m in the canonical enumeration of the basis: layers
/// ascending, keys ascending within a layer.
std::size_t basis_index(const PrimeParams& params, const Monomial& m);
Monomial basis_monomial(const PrimeParams& params, std::size_t index);

/// Every x^Lambda Delta_k, 1 <= k <= n, in basis_index order.
std::vector<Monomial> all_monomials(const PrimeParams& params);

/// Monomial text without the layer symbol: `x1^2x2`, or "1".
std::string monomial_text(const PrimeParams& params, const Monomial& m);
/// `(x1^2)D2` in element grammar, `x1^2d2` in Lie grammar (layer_symbol 'd').
std::string to_string(const PrimeParams& params, const Monomial& m, char layer_symbol = 'D');

/// Subset of the monomial basis, stored as a membership mask.
class MonomialSet {
 public:
  explicit MonomialSet(const PrimeParams& params);

  static MonomialSet all(const PrimeParams& params);
  template <class Pred>
  static MonomialSet where(const PrimeParams& params, Pred pred) {
    MonomialSet s(params);
    for (const auto& m : all_monomials(params))
      if (pred(m)) s.insert(m);
    return s;
  }

  const PrimeParams& params() const { return params_; }
  bool contains(const Monomial& m) const;
  /// Returns true if m was not present.
  bool insert(const Monomial& m);
  void erase(const Monomial& m);
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::vector<Monomial> elements() const;

  bool is_subset_of(const MonomialSet& other) const;
  MonomialSet united(const MonomialSet& other) const;
  MonomialSet intersected(const MonomialSet& other) const;
  /// Members living in the given layer.
  MonomialSet restricted_to_layer(int layer) const;
  /// Smallest layer with a member, or 0 when empty.
  int min_layer() const;

  friend bool operator==(const MonomialSet& a, const MonomialSet& b) {
    return a.params_ == b.params_ && a.mask_ == b.mask_;
  }

 private:
  PrimeParams params_;
  std::vector<bool> mask_;
  std::size_t count_ = 0;
};

std::string to_string(const MonomialSet& set, char layer_symbol = 'D');

}  // namespace sylow
