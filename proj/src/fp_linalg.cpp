#include "sylow/fp_linalg.hpp"

#include "sylow/errors.hpp"

namespace sylow {

namespace {

void axpy(FpVector& y, Coeff a, const FpVector& x, int p) {
  const auto P = static_cast<std::uint64_t>(p);
  const std::uint64_t neg = (P - a % P) % P;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] = static_cast<Coeff>((y[i] + neg * x[i]) % P);
}

}  // namespace

FpSubspace FpSubspace::whole(int p, std::size_t ambient_dim) {
  FpSubspace s(p, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    FpVector e(ambient_dim, 0);
    e[i] = 1;
    s.insert(std::move(e));
  }
  return s;
}

FpVector FpSubspace::reduce(FpVector v) const {
  if (v.size() != ambient_) throw DimensionError("vector of the wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (Coeff c = v[pivots_[r]]; c != 0) axpy(v, c, rows_[r], p_);
  return v;
}

bool FpSubspace::insert(FpVector v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < ambient_ && v[pivot] == 0) ++pivot;
  if (pivot == ambient_) return false;
  const Coeff scale = inv_mod(v[pivot], p_);
  for (auto& c : v) c = static_cast<Coeff>(std::uint64_t{c} * scale % p_);
  for (auto& row : rows_)
    if (Coeff c = row[pivot]; c != 0) axpy(row, c, v, p_);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool FpSubspace::contains(const FpVector& v) const {
  for (Coeff c : reduce(v))
    if (c != 0) return false;
  return true;
}

bool FpSubspace::is_subspace_of(const FpSubspace& other) const {
  for (const auto& row : rows_)
    if (!other.contains(row)) return false;
  return true;
}

FpSubspace left_kernel(int p, const std::vector<FpVector>& images) {
  const std::size_t m = images.size();
  const std::size_t width = m == 0 ? 0 : images.front().size();
  // Augment each image with the unit vector recording its combination, then
  // eliminate on the image part; rows whose image vanishes span the kernel.
  std::vector<FpVector> rows;
  for (std::size_t a = 0; a < m; ++a) {
    FpVector row(width + m, 0);
    std::copy(images[a].begin(), images[a].end(), row.begin());
    row[width + a] = 1;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < m; ++col) {
    std::size_t r = rank;
    while (r < m && rows[r][col] == 0) ++r;
    if (r == m) continue;
    std::swap(rows[r], rows[rank]);
    const Coeff scale = inv_mod(rows[rank][col], p);
    for (auto& c : rows[rank]) c = static_cast<Coeff>(std::uint64_t{c} * scale % p);
    for (std::size_t o = 0; o < m; ++o)
      if (o != rank && rows[o][col] != 0) axpy(rows[o], rows[o][col], rows[rank], p);
    ++rank;
  }
  FpSubspace kernel(p, m);
  for (std::size_t r = rank; r < m; ++r)
    kernel.insert(FpVector(rows[r].begin() + static_cast<std::ptrdiff_t>(width), rows[r].end()));
  return kernel;
}

}  // namespace sylow
