#include "sylow/basis.hpp"

#include <sstream>

#include "sylow/errors.hpp"

namespace sylow {

namespace {

void check_monomial(const PrimeParams& params, const Monomial& m) {
  if (m.layer < 1 || m.layer > params.n)
    throw DimensionError("layer " + std::to_string(m.layer) + " outside 1.." +
                         std::to_string(params.n));
  if (m.key >= params.layer_size(m.layer))
    throw LayerError("monomial reads a variable not available in layer " +
                     std::to_string(m.layer));
}

std::size_t layer_start(const PrimeParams& params, int layer) {
  return (static_cast<std::size_t>(params.pow(layer - 1)) - 1) /
         static_cast<std::size_t>(params.p - 1);
}

}  // namespace

std::int64_t layer_offset(const PrimeParams& params, int layer) {
  return static_cast<std::int64_t>(params.class_length()) -
         static_cast<std::int64_t>(params.pow(layer - 1));
}

std::int64_t pdeg(const PrimeParams& params, const Monomial& m) {
  check_monomial(params, m);
  return static_cast<std::int64_t>(m.key) + layer_offset(params, m.layer);
}

std::int64_t depth(const PrimeParams& params, const Monomial& m) {
  return static_cast<std::int64_t>(params.class_length()) - pdeg(params, m);
}

std::size_t basis_index(const PrimeParams& params, const Monomial& m) {
  check_monomial(params, m);
  return layer_start(params, m.layer) + m.key;
}

Monomial basis_monomial(const PrimeParams& params, std::size_t index) {
  for (int k = params.n; k >= 1; --k) {
    std::size_t start = layer_start(params, k);
    if (index >= start) {
      if (index - start >= params.layer_size(k)) break;
      return Monomial{k, static_cast<MonomialKey>(index - start)};
    }
  }
  throw DimensionError("basis index out of range");
}

std::vector<Monomial> all_monomials(const PrimeParams& params) {
  std::vector<Monomial> out;
  out.reserve(params.basis_size());
  for (int k = 1; k <= params.n; ++k)
    for (MonomialKey key = 0; key < params.layer_size(k); ++key) out.push_back({k, key});
  return out;
}

std::string monomial_text(const PrimeParams& params, const Monomial& m) {
  return to_string(TruncPoly::monomial(params.p, m.layer - 1, m.key));
}

std::string to_string(const PrimeParams& params, const Monomial& m, char layer_symbol) {
  if (m.key == 0) return layer_symbol + std::to_string(m.layer);
  const std::string text = monomial_text(params, m);
  const std::string head = layer_symbol == 'D' ? "(" + text + ")" : text;
  return head + layer_symbol + std::to_string(m.layer);
}

// ---------------------------------------------------------------- MonomialSet

MonomialSet::MonomialSet(const PrimeParams& params)
    : params_(params), mask_(params.basis_size(), false) {}

MonomialSet MonomialSet::all(const PrimeParams& params) {
  return where(params, [](const Monomial&) { return true; });
}

bool MonomialSet::contains(const Monomial& m) const {
  return mask_[basis_index(params_, m)];
}

bool MonomialSet::insert(const Monomial& m) {
  auto ref = mask_[basis_index(params_, m)];
  if (ref) return false;
  ref = true;
  ++count_;
  return true;
}

void MonomialSet::erase(const Monomial& m) {
  auto ref = mask_[basis_index(params_, m)];
  if (!ref) return;
  ref = false;
  --count_;
}

std::vector<Monomial> MonomialSet::elements() const {
  std::vector<Monomial> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(basis_monomial(params_, i));
  return out;
}

bool MonomialSet::is_subset_of(const MonomialSet& other) const {
  if (!(params_ == other.params_)) return false;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

MonomialSet MonomialSet::united(const MonomialSet& other) const {
  MonomialSet r = *this;
  for (const auto& m : other.elements()) r.insert(m);
  return r;
}

MonomialSet MonomialSet::intersected(const MonomialSet& other) const {
  MonomialSet r(params_);
  for (const auto& m : elements())
    if (other.contains(m)) r.insert(m);
  return r;
}

MonomialSet MonomialSet::restricted_to_layer(int layer) const {
  MonomialSet r(params_);
  for (const auto& m : elements())
    if (m.layer == layer) r.insert(m);
  return r;
}

int MonomialSet::min_layer() const {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) return basis_monomial(params_, i).layer;
  return 0;
}

std::string to_string(const MonomialSet& set, char layer_symbol) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& m : set.elements()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(set.params(), m, layer_symbol);
  }
  os << '}';
  return os.str();
}

}  // namespace sylow
