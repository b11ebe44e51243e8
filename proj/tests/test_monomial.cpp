#include "ipgap/errors.hpp"
#include "ipgap/monomial.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

using namespace ipgap;

namespace {

const std::vector<std::string> kCoinNames{"p", "n", "d", "q"};

MonomialIdeal coin_ideal() { return minimalize(4, {{0, 3, 0, 1}, {0, 6, 0, 0}, {0, 3, 4, 0}, {5, 0, 0, 3}}); }

std::vector<IrreducibleComponent> sorted(std::vector<IrreducibleComponent> cs) {
  std::sort(cs.begin(), cs.end());
  return cs;
}

// Every monomial with exponents up to `limit` in each variable.
void for_each_in_box(std::size_t n, Exponent limit, const std::function<void(const Monomial&)>& f) {
  std::vector<Exponent> e(n, 0);
  while (true) {
    f(Monomial(e));
    std::size_t k = 0;
    while (k < n && ++e[k] > limit) e[k++] = 0;
    if (k == n) return;
  }
}

// Membership in I agrees with membership in every component, on a box large
// enough to see every generator and one step past it.
void expect_decomposes(const MonomialIdeal& ideal, const std::vector<IrreducibleComponent>& comps) {
  Exponent limit = 0;
  for (Exponent e : ideal.exponent_bound()) limit = std::max(limit, e);
  for_each_in_box(ideal.nvars(), limit + 1, [&](const Monomial& m) {
    bool in_all = std::all_of(comps.begin(), comps.end(), [&](const auto& c) { return c.contains(m); });
    ASSERT_EQ(ideal.contains(m), in_all) << m;
  });
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (i != j) EXPECT_FALSE(comps[i].subset_of(comps[j])) << "redundant component " << i;
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 5), exp(0, 4);
  std::vector<Monomial> gens;
  for (int k = count(rng); k > 0; --k) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = exp(rng);
    gens.emplace_back(e);
  }
  return minimalize(n, gens);
}

}  // namespace

TEST(Monomial, Arithmetic) {
  Monomial a{2, 0, 1}, b{1, 3, 0};
  EXPECT_EQ(a.lcm(b), (Monomial{2, 3, 1}));
  EXPECT_EQ(a.gcd(b), (Monomial{1, 0, 0}));
  EXPECT_EQ(a * b, (Monomial{3, 3, 1}));
  EXPECT_EQ(a.saturating_sub(b), (Monomial{1, 0, 1}));
  EXPECT_TRUE((Monomial{1, 0, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.degree(), 3);
  EXPECT_THROW(Monomial({-1, 0}), BadParameter);
  EXPECT_THROW((Monomial{std::numeric_limits<Exponent>::max()} * Monomial{1}), BadParameter);
  EXPECT_EQ(format_monomial(Monomial{5, 0, 0, 3}, kCoinNames), "p^5*q^3");
  EXPECT_EQ(format_monomial(Monomial{0, 0, 0, 0}, kCoinNames), "1");
}

TEST(Minimalize, DropsMultiples) {
  MonomialIdeal i = minimalize(2, {{2, 0}, {3, 0}, {0, 1}});
  EXPECT_EQ(i.generators(), (std::vector<Monomial>{{0, 1}, {2, 0}}));
}

TEST(Minimalize, EmptyIsZeroIdeal) {
  MonomialIdeal i = minimalize(3, {});
  EXPECT_TRUE(i.is_zero());
  EXPECT_FALSE(i.contains(Monomial{0, 0, 0}));
}

TEST(Minimalize, CoinLeadingTermsAlreadyMinimal) {
  EXPECT_EQ(coin_ideal().size(), 4u);
}

TEST(Membership, Coin) {
  MonomialIdeal m = coin_ideal();
  EXPECT_TRUE(m.contains(Monomial{0, 3, 0, 2}));
  EXPECT_FALSE(m.contains(Monomial{4, 2, 3, 2}));
  EXPECT_FALSE(MonomialIdeal(4).contains(Monomial{1, 1, 1, 1}));
}

TEST(Equality, SetSemantics) {
  EXPECT_FALSE(ideal_equal(minimalize(1, {{1}}), minimalize(1, {{2}})));
  EXPECT_TRUE(ideal_equal(minimalize(2, {{1, 0}, {0, 2}}), minimalize(2, {{0, 2}, {1, 0}, {3, 3}})));
}

TEST(Decomposition, CoinIdeal) {
  auto comps = irreducible_decomposition(coin_ideal());
  auto expected = sorted({IrreducibleComponent::from_powers({5, 3, 0, 0}),
                          IrreducibleComponent::from_powers({0, 3, 0, 3}),
                          IrreducibleComponent::from_powers({0, 6, 4, 1})});
  EXPECT_EQ(comps, expected);
  EXPECT_TRUE(ideal_equal(intersect(4, comps), coin_ideal()));
  expect_decomposes(coin_ideal(), comps);
}

TEST(Decomposition, AlreadyIrreducible) {
  auto comps = irreducible_decomposition(minimalize(1, {{2}}));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0], IrreducibleComponent::from_powers({2}));
  EXPECT_EQ(format_component(comps[0], {"x"}), "<x^2>");
}

TEST(Decomposition, DegenerateIdeals) {
  EXPECT_THROW(irreducible_decomposition(MonomialIdeal(2)), ZeroIdeal);
  EXPECT_THROW(irreducible_decomposition(minimalize(2, {{0, 0}})), UnitIdeal);
}

TEST(Decomposition, ComponentsOfSWZShape) {
  // <x, y^8, z> ∩ <x^2, y^7, z> ∩ <x, y, z^2>
  auto expected = sorted({IrreducibleComponent::from_powers({1, 8, 1}), IrreducibleComponent::from_powers({2, 7, 1}),
                          IrreducibleComponent::from_powers({1, 1, 2})});
  MonomialIdeal i = intersect(3, expected);
  EXPECT_EQ(irreducible_decomposition(i), expected);
}

TEST(Decomposition, RandomAgreesWithIncrementalAndMembership) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 3;
    MonomialIdeal i = random_ideal(rng, n);
    if (i.is_unit()) continue;
    auto a = irreducible_decomposition(i);
    auto b = irreducible_decomposition_incremental(i);
    ASSERT_EQ(a, b) << "trial " << trial;
    expect_decomposes(i, a);
    EXPECT_TRUE(ideal_equal(intersect(n, a), i));
  }
}

TEST(Squarefree, Cases) {
  EXPECT_TRUE(is_squarefree_generated(minimalize(3, {{1, 1, 0}, {0, 1, 1}})));
  EXPECT_FALSE(is_squarefree_generated(coin_ideal()));
  EXPECT_TRUE(is_squarefree_generated(MonomialIdeal(3)));
}

TEST(StandardPairs, PurePower) {
  auto pairs = standard_pairs(minimalize(2, {{2, 0}}));
  std::vector<StandardPair> expected{{Monomial{0, 0}, {true, false}}, {Monomial{1, 0}, {true, false}}};
  EXPECT_EQ(pairs, expected);
}

TEST(StandardPairs, ZeroIdeal) {
  auto pairs = standard_pairs(MonomialIdeal(3));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].root, (Monomial{0, 0, 0}));
  EXPECT_EQ(pairs[0].free_set(), (std::vector<bool>{true, true, true}));
}

TEST(StandardPairs, CoverExactlyTheStandardMonomials) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal i = random_ideal(rng, 3);
    if (i.is_unit()) continue;
    auto pairs = standard_pairs(i);
    for_each_in_box(3, 5, [&](const Monomial& m) {
      bool covered = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) { return p.covers(m); });
      ASSERT_EQ(covered, !i.contains(m)) << "trial " << trial << " at " << m;
    });
  }
}
