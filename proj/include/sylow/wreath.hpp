#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/basis.hpp"
#include "sylow/params.hpp"
#include "sylow/polyring.hpp"

namespace sylow {

/// Element of W_n in layered normal form f_n Delta_n * ... * f_1 Delta_1,
/// where f_k is a function of x_1..x_{k-1}.
///
/// Elements act on F_p^n from the right, and f_k Delta_k sends x to
/// x - f_k(x_1..x_{k-1}) e_k. Applying the normal-form factors left to
/// right therefore reads every f_k at the original coordinates, so
/// `x * w` has coordinates x_k - f_k(x_1..x_{k-1}). `multiply(u, v)` is
/// "apply u, then v", and `commutator(a, b)` is a^-1 b^-1 a b. With these
/// conventions [f_k Delta_k, f_i Delta_i] = (f_k(x + f_i e_i) - f_k(x)) Delta_k
/// for i < k, which is exactly the Taylor-sum expression.
class WreathElement {
 public:
  /// The identity.
  explicit WreathElement(const PrimeParams& params);

  /// f Delta_k; f may be given with any nvars as long as it only reads
  /// x_1..x_{k-1}.
  static WreathElement single(const PrimeParams& params, int layer, const TruncPoly& f);
  static WreathElement monomial(const PrimeParams& params, const Monomial& m, std::int64_t c = 1);

  const PrimeParams& params() const { return params_; }
  /// f_k, a polynomial in k-1 variables.
  const TruncPoly& layer(int k) const;
  WreathElement with_layer(int k, const TruncPoly& f) const;

  bool is_identity() const;
  /// Layers with a nonzero polynomial, ascending.
  std::vector<int> support() const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  PrimeParams params_;
  std::vector<TruncPoly> layers_;
};

/// Lexicographic index of a point, x_1 most significant.
std::uint32_t encode_point(const PrimeParams& params, std::span<const int> point);
std::vector<int> decode_point(const PrimeParams& params, std::uint32_t index);

/// The permutation of F_p^n induced by an element, as an image table over
/// lexicographic point indices.
struct PermutationImage {
  int p = 3;
  int n = 1;
  std::vector<std::uint32_t> images;

  bool is_bijection() const;
  PermutationImage inverse() const;
  bool is_identity() const;
  /// Smallest k >= 1 with this^k = 1.
  std::uint64_t order() const;
  /// {"p":..,"n":..,"images":[..]}
  std::string to_json() const;

  friend bool operator==(const PermutationImage&, const PermutationImage&) = default;
};

/// first, then second: result[x] = second[first[x]].
PermutationImage compose(const PermutationImage& first, const PermutationImage& second);

inline constexpr std::uint64_t kPermutationGuard = 1'000'000;

std::vector<int> act(const WreathElement& w, std::span<const int> point);
/// Guarded by p^n <= kPermutationGuard.
PermutationImage to_permutation(const WreathElement& w);

WreathElement multiply(const WreathElement& u, const WreathElement& v);
WreathElement inverse(const WreathElement& w);
WreathElement commutator(const WreathElement& a, const WreathElement& b);
/// b^-1 a b.
WreathElement conjugate(const WreathElement& a, const WreathElement& b);

/// The general commutator a^-1 b^-1 a b computed from multiply/inverse,
/// without the single-layer Taylor shortcut that `commutator` takes.
WreathElement commutator_by_products(const WreathElement& a, const WreathElement& b);

/// g(x_1 - lower_1, x_2 - lower_2(x_1), ...): substitutes the translated
/// coordinates of the lower layers into g. lower[j-1] is a polynomial in
/// j-1 variables; only the first g.nvars() entries are used.
TruncPoly substitute_lower(const TruncPoly& g, std::span<const TruncPoly> lower);

/// Grammar: factors `(<poly>)D<k>`, `D<k>` or `1` joined by `*`; the
/// product is taken left to right. `1` alone is the identity.
WreathElement parse_element(std::string_view text, const PrimeParams& params);
/// Normal form, top layer first; "1" for the identity. Re-parses to an
/// equal element.
std::string to_string(const WreathElement& w);

}  // namespace sylow
