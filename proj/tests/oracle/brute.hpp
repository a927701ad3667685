#pragma once

// Brute-force model of W_n used only by the tests. Elements are explicit
// permutations of F_p^n; nothing here touches the polynomial code.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr int kMaxPoints = 128;

struct Perm {
  std::array<std::uint8_t, kMaxPoints> img{};
  friend bool operator==(const Perm&, const Perm&) = default;
};

/// Exponents of x_1..x_{k-1} packed as sum lambda_i p^{i-1}.
struct Mono {
  int layer;
  std::uint32_t key;
};

class Group {
 public:
  Group(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  int points() const { return points_; }
  /// Number of value-table entries, (p^n - 1)/(p - 1).
  int table_size() const { return table_size_; }
  /// p^{table_size}: the order of W_n.
  std::uint64_t order() const { return order_; }

  std::vector<int> point(int index) const;
  int index(const std::vector<int>& x) const;

  Perm identity() const;
  /// x -> x - c * x^Lambda * e_k.
  Perm monomial(const Mono& m, int c = 1) const;
  /// Every basis monomial, layers ascending then keys ascending.
  std::vector<Mono> basis() const;
  /// x_1^{p-1} ... x_{k-1}^{p-1} Delta_k for k = 1..n.
  std::vector<Perm> top_generators() const;

  /// a first, then b.
  Perm compose(const Perm& a, const Perm& b) const;
  Perm inverse(const Perm& a) const;
  Perm commutator(const Perm& a, const Perm& b) const;
  Perm conjugate(const Perm& a, const Perm& b) const;
  std::vector<std::uint32_t> images(const Perm& a) const;

  /// Value table of the layer functions as a base-p integer.
  std::uint64_t encode(const Perm& a) const;
  /// encode(compose(a, b)) without forming the product.
  std::uint64_t encode_product(const Perm& a, const Perm& b) const;
  Perm decode(std::uint64_t code) const;
  bool in_group(const Perm& a) const;

 private:
  int p_, n_, points_, table_size_;
  std::uint64_t order_;
  std::vector<int> layer_start_;
  // Per (point, layer): the coordinate x_k and the value-table slot of
  // f_k(x_1..x_{k-1}), flattened as point * n + (k - 1).
  std::vector<int> coord_, slot_;
  // Per code digit, most significant first: the probe point and the
  // divisor that extracts the image coordinate.
  std::vector<int> probe_point_, probe_div_;
};

/// A subgroup as a membership bitset over codes.
struct Subgroup {
  std::vector<bool> member;
  std::uint64_t size = 0;

  bool contains(std::uint64_t code) const { return member[code]; }
  bool is_subset_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Grows a subgroup one generator at a time; every element is multiplied
/// by every generator exactly once.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Group& g);

  /// Returns false if `s` was already a member.
  bool add_generator(const Perm& s);
  const Subgroup& subgroup() const { return sub_; }
  const std::vector<Perm>& generators() const { return gens_; }

 private:
  void close(std::size_t from_element, std::size_t first_new_gen);

  const Group& g_;
  Subgroup sub_;
  std::vector<Perm> gens_;
  std::vector<std::uint64_t> elements_;
};

Subgroup generate(const Group& g, const std::vector<Perm>& gens);
std::vector<Perm> monomial_perms(const Group& g, const std::vector<Mono>& monos);

/// Normal closure of <s>: conjugates by `w_gens` (which must generate W_n)
/// are added until the subgroup is stable.
Subgroup normal_closure(const Group& g, const Perm& s, const std::vector<Perm>& w_gens);

bool is_normal(const Group& g, const std::vector<Perm>& sub_gens, const Subgroup& sub,
               const std::vector<Perm>& w_gens);

/// Z_0 = 1, Z_{i+1} = {x : [x, t] in Z_i for every t in w_gens}, until W_n.
std::vector<Subgroup> upper_central_series(const Group& g, const std::vector<Perm>& w_gens);

/// {x in W_n : x^-1 h x in H for every generator h of H}.
Subgroup normalizer(const Group& g, const std::vector<Perm>& sub_gens, const Subgroup& sub);

/// Independent model of the Lie bracket on basis vectors x^L d_k over
/// F_p[x]/(x_i^p): returns (layer, key, coeff) or coeff 0.
struct LieTerm {
  int layer;
  std::uint32_t key;
  int coeff;
};
LieTerm lie_bracket(int p, int n, const Mono& a, const Mono& b);

/// Value of x^Lambda at a point of F_p^m with 0^0 = 1.
int monomial_value(int p, std::uint32_t key, const std::vector<int>& x);

}  // namespace oracle
