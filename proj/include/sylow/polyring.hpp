#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylow {

/// Element of F_p, always stored in 0..p-1.
using Coeff = std::uint32_t;

/// Base-p encoding lambda_1 + lambda_2 p + ... + lambda_m p^{m-1} of an
/// exponent vector. It doubles as the p-degree of the power monomial, so
/// sorting by key is sorting by p-degree.
using MonomialKey = std::uint32_t;

Coeff mod_p(std::int64_t value, int p);
Coeff inv_mod(Coeff a, int p);

/// Multiplicities (lambda_1, ..., lambda_m) of a power monomial x^Lambda,
/// each in 0..p-1.
class ExponentVector {
 public:
  ExponentVector(int p, std::vector<int> lambda);

  static ExponentVector from_key(int p, int nvars, MonomialKey key);

  int prime() const { return p_; }
  int nvars() const { return static_cast<int>(lambda_.size()); }
  /// Exponent of x_i, 1-based.
  int operator[](int i) const { return lambda_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& exponents() const { return lambda_; }

  MonomialKey key() const;
  /// wt(Lambda) = sum_i i * lambda_i.
  int weight() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  int p_;
  std::vector<int> lambda_;
};

struct Term {
  MonomialKey key;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of F_p[x_1..x_m]/(x_i^p - x_i), i.e. a function F_p^m -> F_p.
///
/// Terms are kept sorted by descending key with no zero coefficients, so
/// two polynomials are equal iff their term tables are, and the leading
/// term (maximal p-degree) is the first one. The zero polynomial has no
/// terms but still remembers `nvars`.
class TruncPoly {
 public:
  TruncPoly(int p, int nvars);

  static TruncPoly constant(int p, int nvars, std::int64_t c);
  static TruncPoly monomial(int p, int nvars, MonomialKey key, std::int64_t c = 1);
  static TruncPoly monomial(const ExponentVector& lambda, std::int64_t c = 1);
  /// x_i, 1-based.
  static TruncPoly variable(int p, int nvars, int i);
  /// Sums the given (key, coefficient) pairs; repeated keys accumulate.
  static TruncPoly from_terms(int p, int nvars,
                              std::span<const std::pair<MonomialKey, std::int64_t>> terms);

  int prime() const { return p_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Coeff coeff(MonomialKey key) const;
  /// Highest-key term. Throws DomainError on the zero polynomial.
  const Term& leading() const;
  /// Largest variable index that occurs, 0 for constants.
  int max_variable() const;

  /// Same function viewed with a different number of variables. Shrinking
  /// is allowed only when the dropped variables do not occur.
  TruncPoly with_nvars(int nvars) const;

  TruncPoly operator-() const;
  TruncPoly scaled(std::int64_t c) const;

  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

 private:
  friend class PolyBuilder;

  int p_;
  int nvars_;
  std::vector<Term> terms_;
};

TruncPoly add(const TruncPoly& a, const TruncPoly& b);
TruncPoly sub(const TruncPoly& a, const TruncPoly& b);
/// Product reduced by x_i^p = x_i.
TruncPoly mul(const TruncPoly& a, const TruncPoly& b);
TruncPoly power(const TruncPoly& a, int e);

inline TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) { return add(a, b); }
inline TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) { return sub(a, b); }
inline TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) { return mul(a, b); }

/// Formal order-th partial derivative with respect to x_i.
TruncPoly partial(const TruncPoly& a, int i, int order = 1);

/// f(x + h e_i) - f(x), by substituting x_i + h and expanding.
/// h may only read x_1..x_{i-1}; otherwise LayerError.
TruncPoly shift(const TruncPoly& f, int i, const TruncPoly& h);

/// The same difference through the Taylor sum
/// sum_{j=1}^{p-1} (1/j!) d^j f/dx_i^j h^j.
TruncPoly shift_taylor(const TruncPoly& f, int i, const TruncPoly& h);

Coeff evaluate(const TruncPoly& a, std::span<const int> point);

/// Monomial text such as `2x1^2x2 + x1 + 1`; "0" for zero.
std::string to_string(const TruncPoly& a);

/// Parses the monomial syntax. Exponents >= p are folded with x^p = x and
/// coefficients are taken mod p. A variable beyond `nvars` is a LayerError.
TruncPoly parse_poly(std::string_view text, int p, int nvars);

}  // namespace sylow
