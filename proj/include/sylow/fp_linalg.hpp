#pragma once

#include <cstddef>
#include <vector>

#include "sylow/polyring.hpp"

namespace sylow {

using FpVector = std::vector<Coeff>;

/// Subspace of F_p^d kept as a reduced row-echelon basis.
class FpSubspace {
 public:
  FpSubspace(int p, std::size_t ambient_dim) : p_(p), ambient_(ambient_dim) {}

  static FpSubspace whole(int p, std::size_t ambient_dim);

  int prime() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<FpVector>& rows() const { return rows_; }

  /// Returns true if v was outside the span.
  bool insert(FpVector v);
  bool contains(const FpVector& v) const;
  /// Canonical representative of v modulo the subspace.
  FpVector reduce(FpVector v) const;

  bool is_subspace_of(const FpSubspace& other) const;
  friend bool operator==(const FpSubspace& a, const FpSubspace& b) {
    return a.p_ == b.p_ && a.ambient_ == b.ambient_ && a.dim() == b.dim() &&
           a.is_subspace_of(b);
  }

 private:
  int p_;
  std::size_t ambient_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// All x with sum_a x[a] * images[a] = 0.
FpSubspace left_kernel(int p, const std::vector<FpVector>& images);

}  // namespace sylow
