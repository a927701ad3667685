#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracle/brute.hpp"
#include "sylow/errors.hpp"
#include "sylow/structure.hpp"
#include "sylow/verify.hpp"
#include "sylow/wreath.hpp"

using namespace sylow;

namespace {

WreathElement E(const char* text, const PrimeParams& params) { return parse_element(text, params); }

/// Oracle permutation of the normal form f_n D_n * ... * f_1 D_1, built from
/// one translation per term.
oracle::Perm oracle_perm(const oracle::Group& g, const WreathElement& w) {
  oracle::Perm r = g.identity();
  for (int k = w.params().n; k >= 1; --k)
    for (const auto& t : w.layer(k).terms())
      r = g.compose(r, g.monomial({k, t.key}, static_cast<int>(t.coeff)));
  return r;
}

std::vector<std::uint32_t> images(const PermutationImage& p) { return p.images; }

const PrimeParams P32 = PrimeParams::make(3, 2);
const PrimeParams P33 = PrimeParams::make(3, 3);

}  // namespace

TEST(Act, Examples) {
  const int origin[] = {0, 0};
  EXPECT_EQ(act(E("D1", P32), origin), (std::vector<int>{2, 0}));
  const int x[] = {1, 2};
  EXPECT_EQ(act(WreathElement(P32), x), (std::vector<int>{1, 2}));
  const int y[] = {1, 1};
  EXPECT_EQ(act(E("(x1)D2", P32), y), (std::vector<int>{1, 0}));
}

TEST(Act, RejectsMalformedPoints) {
  const int short_point[] = {0};
  EXPECT_THROW(act(E("D1", P32), short_point), DimensionError);
  const int bad[] = {0, 3};
  EXPECT_THROW(act(E("D1", P32), bad), DomainError);
}

TEST(Permutation, Examples) {
  const PrimeParams p31 = PrimeParams::make(3, 1);
  EXPECT_EQ(images(to_permutation(E("D1", p31))), (std::vector<std::uint32_t>{2, 0, 1}));
  EXPECT_TRUE(to_permutation(WreathElement(P33)).is_identity());
  for (int n = 1; n <= 3; ++n) {
    const PrimeParams params = PrimeParams::make(3, n);
    const auto top = WreathElement::monomial(params, {n, 0});
    EXPECT_EQ(to_permutation(top).order(), 3u);
  }
  EXPECT_EQ(to_permutation(E("D1", p31)).to_json(), R"({"p":3,"n":1,"images":[2,0,1]})");
}

TEST(Permutation, Guard) {
  const PrimeParams big = PrimeParams::make(3, 13);
  EXPECT_THROW(to_permutation(E("D1", big)), GuardError);
}

TEST(Permutation, PointEncoding) {
  const int x[] = {1, 2};
  EXPECT_EQ(encode_point(P32, x), 5u);
  EXPECT_EQ(decode_point(P32, 5), (std::vector<int>{1, 2}));
}

TEST(Multiply, Examples) {
  const WreathElement w = E("(2x1^2 + x1)D2 * D1", P32);
  EXPECT_EQ(multiply(w, WreathElement(P32)), w);
  EXPECT_EQ(multiply(WreathElement(P32), w), w);
  EXPECT_EQ(multiply(E("(x1)D2", P32), E("(x1^2 + 2)D2", P32)), E("(x1^2 + x1 + 2)D2", P32));
  // a b = b a [a, b] with [x1 D2, D1] = D2.
  const WreathElement a = E("(x1)D2", P32), b = E("D1", P32);
  EXPECT_NE(multiply(a, b), multiply(b, a));
  EXPECT_EQ(commutator(a, b), E("D2", P32));
  EXPECT_EQ(multiply(a, b), multiply(multiply(b, a), E("D2", P32)));
  EXPECT_THROW(multiply(a, WreathElement(P33)), ParamError);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(E("(x1^2 + 2x1)D2", P32)), E("(2x1^2 + x1)D2", P32));
  EXPECT_TRUE(inverse(WreathElement(P32)).is_identity());
  const WreathElement w = E("(x1^2 + x1)D2 * (2)D1", P32);
  EXPECT_TRUE(compose(to_permutation(w), to_permutation(inverse(w))).is_identity());
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator(E("(x1)D2", P32), E("D1", P32)), E("D2", P32));
  EXPECT_EQ(commutator(E("(x1^2)D2", P32), E("D1", P32)), E("(2x1 + 1)D2", P32));
  EXPECT_TRUE(commutator(E("(x1)D2", P32), E("(x1^2 + 1)D2", P32)).is_identity());
  EXPECT_EQ(commutator(E("D1", P32), E("(x1)D2", P32)), E("(2)D2", P32));
}

TEST(Commutator, MatchesTaylorSum) {
  for (const PrimeParams& params : {P32, P33, PrimeParams::make(5, 2), PrimeParams::make(3, 4)}) {
    for (const auto& a : all_monomials(params))
      for (const auto& b : all_monomials(params)) {
        if (b.layer >= a.layer) continue;
        const auto fa = WreathElement::monomial(params, a);
        const auto fb = WreathElement::monomial(params, b);
        const TruncPoly expect = shift_taylor(fa.layer(a.layer), b.layer,
                                              fb.layer(b.layer).with_nvars(a.layer - 1));
        EXPECT_EQ(commutator(fa, fb), WreathElement::single(params, a.layer, expect));
      }
  }
}

TEST(Commutator, FastPathAgreesWithProducts) {
  std::mt19937_64 rng(5);
  for (const PrimeParams& params : {P32, P33, PrimeParams::make(5, 2)}) {
    for (const auto& a : all_monomials(params))
      for (const auto& b : all_monomials(params)) {
        const auto x = WreathElement::monomial(params, a, 2);
        const auto y = WreathElement::monomial(params, b);
        ASSERT_EQ(commutator(x, y), commutator_by_products(x, y));
      }
    for (int s = 0; s < 200; ++s) {
      const auto x = random_element(params, rng), y = random_element(params, rng);
      ASSERT_EQ(commutator(x, y), commutator_by_products(x, y));
    }
  }
}

TEST(Parse, Examples) {
  EXPECT_EQ(E("D1", P32), WreathElement::monomial(P32, {1, 0}));
  const WreathElement two = E("(2x1^2)D2 * D1", P32);
  EXPECT_EQ(two.support(), (std::vector<int>{1, 2}));
  EXPECT_EQ(to_string(two), "(2x1^2)D2 * D1");
  EXPECT_THROW(E("(x2)D2", P32), LayerError);
  EXPECT_TRUE(E("1", P32).is_identity());
  EXPECT_TRUE(E("(0)D1", P32).is_identity());
  EXPECT_EQ(E("D1 * D1", P32), E("(2)D1", P32));
}

TEST(Parse, ProductOrder) {
  // Factors multiply left to right, so "D1 * (x1)D2" is not in normal form.
  const WreathElement w = E("D1 * (x1)D2", P32);
  EXPECT_EQ(w, multiply(E("D1", P32), E("(x1)D2", P32)));
  EXPECT_EQ(to_string(w), "(x1 + 2)D2 * D1");
}

TEST(Parse, Errors) {
  EXPECT_THROW(E("", P32), ParseError);
  EXPECT_THROW(E("D3", P32), ParseError);
  EXPECT_THROW(E("D0", P32), ParseError);
  EXPECT_THROW(E("(x1)D", P32), ParseError);
  EXPECT_THROW(E("(x1 D2", P32), ParseError);
  EXPECT_THROW(E("D1 D2", P32), ParseError);
  EXPECT_THROW(E("D1 *", P32), ParseError);
  try {
    E("D1 * D7", P32);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Parse, RoundTripRandom) {
  std::mt19937_64 rng(9);
  for (const PrimeParams& params : {P32, P33, PrimeParams::make(5, 2)})
    for (int s = 0; s < 100; ++s) {
      const WreathElement w = random_element(params, rng);
      ASSERT_EQ(E(to_string(w).c_str(), params), w) << to_string(w);
    }
}

TEST(WreathElement, LayerChecks) {
  EXPECT_THROW(WreathElement::single(P32, 3, TruncPoly::constant(3, 0, 1)), LayerError);
  EXPECT_THROW(WreathElement::single(P32, 1, parse_poly("x1", 3, 1)), LayerError);
  EXPECT_THROW(WreathElement(P32).layer(0), LayerError);
}

// The symbolic group law against oracle composition of explicit
// permutations.
TEST(Homomorphism, RandomPairs) {
  std::mt19937_64 rng(1);
  for (const PrimeParams& params : {P32, P33, PrimeParams::make(5, 2)}) {
    const oracle::Group g(params.p, params.n);
    for (int s = 0; s < 1000; ++s) {
      const WreathElement u = random_element(params, rng), v = random_element(params, rng);
      const oracle::Perm pu = oracle_perm(g, u), pv = oracle_perm(g, v);
      ASSERT_EQ(to_permutation(u).images, g.images(pu));
      ASSERT_EQ(to_permutation(multiply(u, v)).images, g.images(g.compose(pu, pv)));
      ASSERT_EQ(to_permutation(inverse(u)).images, g.images(g.inverse(pu)));
    }
  }
}

TEST(Homomorphism, AssociativityAndInverse) {
  std::mt19937_64 rng(2);
  for (const PrimeParams& params : {P32, P33, PrimeParams::make(5, 2)})
    for (int s = 0; s < 200; ++s) {
      const auto a = random_element(params, rng), b = random_element(params, rng),
                 c = random_element(params, rng);
      ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
      ASSERT_TRUE(multiply(a, inverse(a)).is_identity());
      ASSERT_TRUE(multiply(inverse(a), a).is_identity());
    }
}

TEST(Homomorphism, MonomialCommutatorsExhaustive) {
  for (const PrimeParams& params : {P32, P33}) {
    const oracle::Group g(params.p, params.n);
    for (const auto& a : all_monomials(params))
      for (const auto& b : all_monomials(params)) {
        const auto x = WreathElement::monomial(params, a), y = WreathElement::monomial(params, b);
        const auto px = g.monomial({a.layer, a.key}), py = g.monomial({b.layer, b.key});
        ASSERT_EQ(to_permutation(commutator(x, y)).images, g.images(g.commutator(px, py)));
      }
  }
}

TEST(Group, OrderOfW2ByClosure) {
  std::map<std::string, WreathElement> seen;
  std::vector<WreathElement> frontier{WreathElement(P32)};
  std::vector<WreathElement> gens;
  for (const auto& m : all_monomials(P32)) gens.push_back(WreathElement::monomial(P32, m));
  seen.emplace(to_string(frontier[0]), frontier[0]);
  while (!frontier.empty()) {
    std::vector<WreathElement> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        WreathElement x = multiply(w, g);
        if (seen.emplace(to_string(x), x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  EXPECT_EQ(seen.size(), 81u);
}

TEST(Group, TranslationsActRegularly) {
  for (const PrimeParams& params : {P32, P33}) {
    std::set<std::uint32_t> orbit;
    std::size_t stabilizer = 0, count = 0;
    // Elements of T: products c_n D_n ... c_1 D_1 with constants.
    std::vector<int> c(static_cast<std::size_t>(params.n), 0);
    for (std::uint32_t code = 0; code < params.pow(params.n); ++code) {
      WreathElement t(params);
      std::uint32_t rest = code;
      for (int k = 1; k <= params.n; ++k, rest /= 3)
        t = multiply(t, WreathElement::monomial(params, {k, 0}, rest % 3));
      const std::vector<int> origin(static_cast<std::size_t>(params.n), 0);
      const auto image = act(t, origin);
      orbit.insert(encode_point(params, image));
      if (encode_point(params, image) == 0) ++stabilizer;
      ++count;
    }
    EXPECT_EQ(orbit.size(), params.pow(params.n));
    EXPECT_EQ(stabilizer, 1u);
  }
}
