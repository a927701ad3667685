#include "sylow/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "poly_text.hpp"
#include "sylow/errors.hpp"
#include "sylow/params.hpp"

namespace sylow {

Coeff mod_p(std::int64_t value, int p) {
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

Coeff inv_mod(Coeff a, int p) {
  if (a % p == 0) throw DomainError("zero has no inverse mod p");
  std::uint64_t result = 1, base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<Coeff>(result);
}

// ---------------------------------------------------------------- ExponentVector

ExponentVector::ExponentVector(int p, std::vector<int> lambda)
    : p_(p), lambda_(std::move(lambda)) {
  for (int e : lambda_)
    if (e < 0 || e > p - 1)
      throw DomainError("exponent " + std::to_string(e) + " outside 0..p-1");
}

ExponentVector ExponentVector::from_key(int p, int nvars, MonomialKey key) {
  std::vector<int> lambda(static_cast<std::size_t>(nvars));
  for (auto& e : lambda) {
    e = static_cast<int>(key % static_cast<MonomialKey>(p));
    key /= static_cast<MonomialKey>(p);
  }
  if (key != 0) throw DimensionError("monomial key too large for nvars");
  return ExponentVector(p, std::move(lambda));
}

MonomialKey ExponentVector::key() const {
  MonomialKey k = 0;
  for (auto it = lambda_.rbegin(); it != lambda_.rend(); ++it)
    k = k * static_cast<MonomialKey>(p_) + static_cast<MonomialKey>(*it);
  return k;
}

int ExponentVector::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < lambda_.size(); ++i)
    w += static_cast<int>(i + 1) * lambda_[i];
  return w;
}

// ---------------------------------------------------------------- construction

class PolyBuilder {
 public:
  /// acc[key] holds an unreduced coefficient sum.
  static TruncPoly from_dense(int p, int nvars, const std::vector<std::uint64_t>& acc) {
    TruncPoly r(p, nvars);
    for (std::size_t k = acc.size(); k-- > 0;) {
      auto c = static_cast<Coeff>(acc[k] % static_cast<std::uint64_t>(p));
      if (c != 0) r.terms_.push_back({static_cast<MonomialKey>(k), c});
    }
    return r;
  }

  static TruncPoly from_sorted(int p, int nvars, std::vector<Term> terms) {
    TruncPoly r(p, nvars);
    r.terms_ = std::move(terms);
    return r;
  }

  static std::vector<std::uint64_t> scratch(int p, int nvars) {
    return std::vector<std::uint64_t>(static_cast<std::size_t>(ipow(p, nvars)), 0);
  }
};

namespace {

void check_same_ring(const TruncPoly& a, const TruncPoly& b) {
  if (a.prime() != b.prime())
    throw DimensionError("polynomials over different primes");
  if (a.nvars() != b.nvars())
    throw DimensionError("polynomials in " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
}

/// Key of x^a * x^b with each exponent folded by x^p = x.
MonomialKey product_key(int p, int nvars, MonomialKey a, MonomialKey b) {
  const auto P = static_cast<MonomialKey>(p);
  MonomialKey r = 0, place = 1;
  for (int i = 0; i < nvars; ++i) {
    MonomialKey e = a % P + b % P;
    a /= P;
    b /= P;
    if (e >= P) e -= P - 1;
    r += e * place;
    place *= P;
  }
  return r;
}

int digit(MonomialKey key, MonomialKey place, int p) {
  return static_cast<int>((key / place) % static_cast<MonomialKey>(p));
}

}  // namespace

TruncPoly::TruncPoly(int p, int nvars) : p_(p), nvars_(nvars) {
  if (nvars < 0) throw DimensionError("negative number of variables");
}

TruncPoly TruncPoly::constant(int p, int nvars, std::int64_t c) {
  return monomial(p, nvars, 0, c);
}

TruncPoly TruncPoly::monomial(int p, int nvars, MonomialKey key, std::int64_t c) {
  if (key >= ipow(p, nvars)) throw DimensionError("monomial key too large for nvars");
  TruncPoly r(p, nvars);
  if (Coeff cc = mod_p(c, p); cc != 0) r.terms_.push_back({key, cc});
  return r;
}

TruncPoly TruncPoly::monomial(const ExponentVector& lambda, std::int64_t c) {
  return monomial(lambda.prime(), lambda.nvars(), lambda.key(), c);
}

TruncPoly TruncPoly::variable(int p, int nvars, int i) {
  if (i < 1 || i > nvars) throw DimensionError("variable index out of range");
  return monomial(p, nvars, static_cast<MonomialKey>(ipow(p, i - 1)));
}

TruncPoly TruncPoly::from_terms(int p, int nvars,
                                std::span<const std::pair<MonomialKey, std::int64_t>> terms) {
  auto acc = PolyBuilder::scratch(p, nvars);
  for (auto [key, c] : terms) {
    if (key >= acc.size()) throw DimensionError("monomial key too large for nvars");
    acc[key] += mod_p(c, p);
  }
  return PolyBuilder::from_dense(p, nvars, acc);
}

Coeff TruncPoly::coeff(MonomialKey key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, MonomialKey k) { return t.key > k; });
  return (it != terms_.end() && it->key == key) ? it->coeff : 0;
}

const Term& TruncPoly::leading() const {
  if (terms_.empty()) throw DomainError("the zero polynomial has no leading term");
  return terms_.front();
}

int TruncPoly::max_variable() const {
  int best = 0;
  for (const auto& t : terms_) {
    int v = 0;
    for (MonomialKey k = t.key; k != 0; k /= static_cast<MonomialKey>(p_)) ++v;
    best = std::max(best, v);
  }
  return best;
}

TruncPoly TruncPoly::with_nvars(int nvars) const {
  if (nvars < max_variable())
    throw LayerError("polynomial reads x" + std::to_string(max_variable()) +
                     " which is not among x1..x" + std::to_string(nvars));
  return PolyBuilder::from_sorted(p_, nvars, terms_);
}

TruncPoly TruncPoly::operator-() const { return scaled(-1); }

TruncPoly TruncPoly::scaled(std::int64_t c) const {
  Coeff cc = mod_p(c, p_);
  if (cc == 0) return TruncPoly(p_, nvars_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = static_cast<Coeff>(std::uint64_t{t.coeff} * cc % p_);
  return PolyBuilder::from_sorted(p_, nvars_, std::move(out));
}

// ---------------------------------------------------------------- arithmetic

TruncPoly add(const TruncPoly& a, const TruncPoly& b) {
  check_same_ring(a, b);
  const int p = a.prime();
  std::vector<Term> out;
  out.reserve(a.term_count() + b.term_count());
  auto x = a.terms().begin(), xe = a.terms().end();
  auto y = b.terms().begin(), ye = b.terms().end();
  while (x != xe || y != ye) {
    if (y == ye || (x != xe && x->key > y->key)) {
      out.push_back(*x++);
    } else if (x == xe || y->key > x->key) {
      out.push_back(*y++);
    } else {
      Coeff c = (x->coeff + y->coeff) % static_cast<Coeff>(p);
      if (c != 0) out.push_back({x->key, c});
      ++x;
      ++y;
    }
  }
  return PolyBuilder::from_sorted(p, a.nvars(), std::move(out));
}

TruncPoly sub(const TruncPoly& a, const TruncPoly& b) { return add(a, -b); }

TruncPoly mul(const TruncPoly& a, const TruncPoly& b) {
  check_same_ring(a, b);
  const int p = a.prime(), m = a.nvars();
  if (a.is_zero() || b.is_zero()) return TruncPoly(p, m);
  auto acc = PolyBuilder::scratch(p, m);
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      acc[product_key(p, m, s.key, t.key)] += std::uint64_t{s.coeff} * t.coeff;
  return PolyBuilder::from_dense(p, m, acc);
}

TruncPoly power(const TruncPoly& a, int e) {
  if (e < 0) throw DomainError("negative power");
  TruncPoly r = TruncPoly::constant(a.prime(), a.nvars(), 1);
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

TruncPoly partial(const TruncPoly& a, int i, int order) {
  if (i < 1 || i > a.nvars())
    throw DimensionError("derivative variable x" + std::to_string(i) + " out of range");
  if (order < 1) throw DomainError("derivative order must be >= 1");
  const int p = a.prime();
  const auto place = static_cast<MonomialKey>(ipow(p, i - 1));
  auto acc = PolyBuilder::scratch(p, a.nvars());
  for (const auto& t : a.terms()) {
    int e = digit(t.key, place, p);
    if (e < order) continue;
    std::uint64_t falling = 1;
    for (int j = 0; j < order; ++j) falling = falling * static_cast<std::uint64_t>(e - j) % p;
    acc[t.key - static_cast<MonomialKey>(order) * place] += falling * t.coeff;
  }
  return PolyBuilder::from_dense(p, a.nvars(), acc);
}

namespace {

void check_shift_args(const TruncPoly& f, int i, const TruncPoly& h) {
  if (i < 1 || i > f.nvars())
    throw DimensionError("shift variable x" + std::to_string(i) + " out of range");
  if (h.prime() != f.prime()) throw DimensionError("shift over different primes");
  if (h.max_variable() >= i)
    throw LayerError("shift along x" + std::to_string(i) + " by a polynomial reading x" +
                     std::to_string(h.max_variable()));
}

}  // namespace

TruncPoly shift(const TruncPoly& f, int i, const TruncPoly& h) {
  check_shift_args(f, i, h);
  const int p = f.prime(), m = f.nvars();
  const TruncPoly hh = h.with_nvars(m);
  const auto place = static_cast<MonomialKey>(ipow(p, i - 1));

  // powers[e] = (x_i + h)^e
  std::vector<TruncPoly> powers{TruncPoly::constant(p, m, 1)};
  const TruncPoly moved = add(TruncPoly::variable(p, m, i), hh);
  for (int e = 1; e < p; ++e) powers.push_back(mul(powers.back(), moved));

  TruncPoly result(p, m);
  for (const auto& t : f.terms()) {
    int e = digit(t.key, place, p);
    TruncPoly rest = TruncPoly::monomial(p, m, t.key - static_cast<MonomialKey>(e) * place,
                                         t.coeff);
    result = add(result, mul(rest, powers[static_cast<std::size_t>(e)]));
  }
  return sub(result, f);
}

TruncPoly shift_taylor(const TruncPoly& f, int i, const TruncPoly& h) {
  check_shift_args(f, i, h);
  const int p = f.prime(), m = f.nvars();
  const TruncPoly hh = h.with_nvars(m);
  TruncPoly result(p, m);
  TruncPoly h_pow = TruncPoly::constant(p, m, 1);
  Coeff factorial = 1;
  for (int j = 1; j <= p - 1; ++j) {
    h_pow = mul(h_pow, hh);
    factorial = static_cast<Coeff>(std::uint64_t{factorial} * static_cast<Coeff>(j) % p);
    TruncPoly d = partial(f, i, j);
    if (d.is_zero()) break;
    result = add(result, mul(d, h_pow).scaled(inv_mod(factorial, p)));
  }
  return result;
}

Coeff evaluate(const TruncPoly& a, std::span<const int> point) {
  if (static_cast<int>(point.size()) != a.nvars())
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, expected " + std::to_string(a.nvars()));
  const int p = a.prime();
  std::uint64_t sum = 0;
  for (const auto& t : a.terms()) {
    std::uint64_t v = t.coeff;
    MonomialKey k = t.key;
    for (int x : point) {
      int e = static_cast<int>(k % static_cast<MonomialKey>(p));
      k /= static_cast<MonomialKey>(p);
      std::uint64_t xv = mod_p(x, p);
      for (int j = 0; j < e; ++j) v = v * xv % p;
    }
    sum += v;
  }
  return static_cast<Coeff>(sum % p);
}

// ---------------------------------------------------------------- text

std::string to_string(const TruncPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  const auto P = static_cast<MonomialKey>(a.prime());
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    if (t.coeff != 1 || t.key == 0) os << t.coeff;
    MonomialKey k = t.key;
    for (int i = 1; k != 0; ++i, k /= P) {
      auto e = k % P;
      if (e == 0) continue;
      os << 'x' << i;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace detail {

MonomialKey term_key(const RawTerm& t, int p, int nvars) {
  std::vector<int> lambda(static_cast<std::size_t>(nvars), 0);
  for (const auto& f : t.factors) {
    if (f.variable > nvars)
      throw LayerError("x" + std::to_string(f.variable) + " at position " +
                       std::to_string(f.offset) + " is outside x1..x" + std::to_string(nvars));
    auto& e = lambda[static_cast<std::size_t>(f.variable - 1)];
    e = fold_exponent(e + f.exponent, p);
  }
  return ExponentVector(p, std::move(lambda)).key();
}

TruncPoly build_poly(const std::vector<SignedTerm>& terms, int p, int nvars) {
  std::vector<std::pair<MonomialKey, std::int64_t>> keyed;
  keyed.reserve(terms.size());
  for (const auto& [sign, t] : terms)
    keyed.emplace_back(term_key(t, p, nvars), sign * (t.coeff % p));
  return TruncPoly::from_terms(p, nvars, keyed);
}

TruncPoly parse_poly_body(Cursor& in, int p, int nvars) {
  return build_poly(scan_sum(in), p, nvars);
}

}  // namespace detail

TruncPoly parse_poly(std::string_view text, int p, int nvars) {
  detail::Cursor in(text);
  TruncPoly r = detail::parse_poly_body(in, p, nvars);
  if (!in.eof()) in.fail("unexpected character '" + std::string(1, in.peek()) + "'");
  return r;
}

}  // namespace sylow
