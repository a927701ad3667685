#include "sylow/wreath.hpp"

#include <numeric>
#include <sstream>

#include "poly_text.hpp"
#include "sylow/errors.hpp"

namespace sylow {

WreathElement::WreathElement(const PrimeParams& params) : params_(params) {
  layers_.reserve(static_cast<std::size_t>(params.n));
  for (int k = 1; k <= params.n; ++k) layers_.emplace_back(params.p, k - 1);
}

WreathElement WreathElement::single(const PrimeParams& params, int layer, const TruncPoly& f) {
  return WreathElement(params).with_layer(layer, f);
}

WreathElement WreathElement::monomial(const PrimeParams& params, const Monomial& m,
                                      std::int64_t c) {
  basis_index(params, m);  // validates layer and key
  return single(params, m.layer, TruncPoly::monomial(params.p, m.layer - 1, m.key, c));
}

const TruncPoly& WreathElement::layer(int k) const {
  if (k < 1 || k > params_.n) throw LayerError("layer " + std::to_string(k) + " outside 1.." + std::to_string(params_.n));
  return layers_[static_cast<std::size_t>(k - 1)];
}

WreathElement WreathElement::with_layer(int k, const TruncPoly& f) const {
  if (k < 1 || k > params_.n) throw LayerError("layer " + std::to_string(k) + " outside 1.." + std::to_string(params_.n));
  if (f.prime() != params_.p) throw DimensionError("polynomial over a different prime");
  if (f.max_variable() > k - 1)
    throw LayerError("layer " + std::to_string(k) + " polynomial reads x" +
                     std::to_string(f.max_variable()));
  WreathElement r = *this;
  r.layers_[static_cast<std::size_t>(k - 1)] = f.with_nvars(k - 1);
  return r;
}

bool WreathElement::is_identity() const {
  for (const auto& f : layers_)
    if (!f.is_zero()) return false;
  return true;
}

std::vector<int> WreathElement::support() const {
  std::vector<int> out;
  for (int k = 1; k <= params_.n; ++k)
    if (!layer(k).is_zero()) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------- points

std::uint32_t encode_point(const PrimeParams& params, std::span<const int> point) {
  if (static_cast<int>(point.size()) != params.n)
    throw DimensionError("point has the wrong number of coordinates");
  std::uint32_t idx = 0;
  for (int x : point) {
    if (x < 0 || x >= params.p) throw DomainError("coordinate outside 0..p-1");
    idx = idx * static_cast<std::uint32_t>(params.p) + static_cast<std::uint32_t>(x);
  }
  return idx;
}

std::vector<int> decode_point(const PrimeParams& params, std::uint32_t index) {
  std::vector<int> point(static_cast<std::size_t>(params.n));
  for (std::size_t i = point.size(); i-- > 0;) {
    point[i] = static_cast<int>(index % static_cast<std::uint32_t>(params.p));
    index /= static_cast<std::uint32_t>(params.p);
  }
  return point;
}

std::vector<int> act(const WreathElement& w, std::span<const int> point) {
  const auto& params = w.params();
  if (static_cast<int>(point.size()) != params.n)
    throw DimensionError("point has the wrong number of coordinates");
  for (int x : point)
    if (x < 0 || x >= params.p) throw DomainError("point coordinate outside 0..p-1");
  std::vector<int> out(point.begin(), point.end());
  for (int k = 1; k <= params.n; ++k) {
    Coeff f = evaluate(w.layer(k), point.first(static_cast<std::size_t>(k - 1)));
    out[static_cast<std::size_t>(k - 1)] =
        static_cast<int>(mod_p(static_cast<std::int64_t>(point[static_cast<std::size_t>(k - 1)]) - f,
                               params.p));
  }
  return out;
}

// ---------------------------------------------------------------- permutations

bool PermutationImage::is_bijection() const {
  std::vector<bool> seen(images.size(), false);
  for (auto y : images) {
    if (y >= images.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

PermutationImage PermutationImage::inverse() const {
  PermutationImage r{p, n, std::vector<std::uint32_t>(images.size())};
  for (std::uint32_t x = 0; x < images.size(); ++x) r.images[images[x]] = x;
  return r;
}

bool PermutationImage::is_identity() const {
  for (std::uint32_t x = 0; x < images.size(); ++x)
    if (images[x] != x) return false;
  return true;
}

std::uint64_t PermutationImage::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t x = 0; x < images.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t y = x; !seen[y]; y = images[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string PermutationImage::to_json() const {
  std::ostringstream os;
  os << "{\"p\":" << p << ",\"n\":" << n << ",\"images\":[";
  for (std::size_t i = 0; i < images.size(); ++i) os << (i ? "," : "") << images[i];
  os << "]}";
  return os.str();
}

PermutationImage compose(const PermutationImage& first, const PermutationImage& second) {
  if (first.images.size() != second.images.size())
    throw DimensionError("composing permutations of different degrees");
  PermutationImage r{first.p, first.n, std::vector<std::uint32_t>(first.images.size())};
  for (std::size_t x = 0; x < first.images.size(); ++x) r.images[x] = second.images[first.images[x]];
  return r;
}

PermutationImage to_permutation(const WreathElement& w) {
  const auto& params = w.params();
  const std::uint64_t degree = ipow(params.p, params.n);
  if (degree > kPermutationGuard)
    throw GuardError("p^n = " + std::to_string(degree) + " exceeds the permutation guard");
  PermutationImage r{params.p, params.n, std::vector<std::uint32_t>(degree)};
  for (std::uint32_t x = 0; x < degree; ++x)
    r.images[x] = encode_point(params, act(w, decode_point(params, x)));
  return r;
}

// ---------------------------------------------------------------- group law

namespace {

void check_same_group(const WreathElement& a, const WreathElement& b) {
  if (!(a.params() == b.params()))
    throw ParamError("elements of different groups: " + a.params().to_string() + " vs " +
                     b.params().to_string());
}

}  // namespace

TruncPoly substitute_lower(const TruncPoly& g, std::span<const TruncPoly> lower) {
  TruncPoly result = g;
  for (int j = 1; j <= g.nvars(); ++j) {
    const TruncPoly& u = lower[static_cast<std::size_t>(j - 1)];
    if (u.is_zero() || result.is_zero()) continue;
    result = add(result, shift(result, j, -u));
  }
  return result;
}

WreathElement multiply(const WreathElement& u, const WreathElement& v) {
  check_same_group(u, v);
  const auto& params = u.params();
  std::vector<TruncPoly> u_layers;
  for (int k = 1; k <= params.n; ++k) u_layers.push_back(u.layer(k));
  WreathElement r(params);
  for (int k = 1; k <= params.n; ++k)
    r = r.with_layer(k, add(u.layer(k), substitute_lower(v.layer(k), u_layers)));
  return r;
}

WreathElement inverse(const WreathElement& w) {
  const auto& params = w.params();
  std::vector<TruncPoly> inv;
  for (int k = 1; k <= params.n; ++k) inv.push_back(-substitute_lower(w.layer(k), inv));
  WreathElement r(params);
  for (int k = 1; k <= params.n; ++k) r = r.with_layer(k, inv[static_cast<std::size_t>(k - 1)]);
  return r;
}

WreathElement commutator_by_products(const WreathElement& a, const WreathElement& b) {
  check_same_group(a, b);
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

WreathElement commutator(const WreathElement& a, const WreathElement& b) {
  check_same_group(a, b);
  auto sa = a.support(), sb = b.support();
  if (sa.empty() || sb.empty()) return WreathElement(a.params());
  if (sa.size() > 1 || sb.size() > 1) return commutator_by_products(a, b);
  const int ka = sa.front(), kb = sb.front();
  if (ka == kb) return WreathElement(a.params());
  if (ka > kb)
    return WreathElement::single(a.params(), ka, shift_taylor(a.layer(ka), kb, b.layer(kb)));
  // [a, b] = [b, a]^-1 and single-layer inverses are negatives.
  return WreathElement::single(a.params(), kb, -shift_taylor(b.layer(kb), ka, a.layer(ka)));
}

WreathElement conjugate(const WreathElement& a, const WreathElement& b) {
  return multiply(multiply(inverse(b), a), b);
}

// ---------------------------------------------------------------- text

WreathElement parse_element(std::string_view text, const PrimeParams& params) {
  detail::Cursor in(text);
  WreathElement result(params);
  do {
    if (in.accept('1')) {
      if (in.at_digit()) in.fail("unexpected digit");
      continue;
    }
    std::vector<detail::SignedTerm> terms;
    bool has_poly = false;
    if (in.accept('(')) {
      terms = detail::scan_sum(in);
      in.expect(')', "')'");
      has_poly = true;
    }
    if (!in.accept('D')) in.fail("expected 'D<k>'");
    std::size_t layer_at = in.position();
    std::int64_t k = in.integer();
    if (k < 1 || k > params.n)
      throw ParseError("layer " + std::to_string(k) + " outside 1.." + std::to_string(params.n),
                       layer_at);
    const int layer = static_cast<int>(k);
    TruncPoly f = has_poly ? detail::build_poly(terms, params.p, layer - 1)
                           : TruncPoly::constant(params.p, layer - 1, 1);
    result = multiply(result, WreathElement::single(params, layer, f));
  } while (in.accept('*'));
  if (!in.eof()) in.fail("unexpected character '" + std::string(1, in.peek()) + "'");
  return result;
}

std::string to_string(const WreathElement& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (int k = w.params().n; k >= 1; --k) {
    const TruncPoly& f = w.layer(k);
    if (f.is_zero()) continue;
    if (!out.empty()) out += " * ";
    if (!(f == TruncPoly::constant(f.prime(), f.nvars(), 1))) out += "(" + to_string(f) + ")";
    out += "D" + std::to_string(k);
  }
  return out;
}

}  // namespace sylow
