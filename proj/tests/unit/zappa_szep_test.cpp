#include <gtest/gtest.h>

#include "garside/zappa_szep.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

using test::E;
using test::S;

class WreathZS : public ::testing::Test {
 protected:
  Germ k = wreath_germ();
  ZSStructure zs = ZSStructure::build(k, {S(k, "a"), S(k, "b")});
  SimpleId a = S(k, "a"), b = S(k, "b"), c = S(k, "c");
};

TEST_F(WreathZS, Deltas) {
  EXPECT_EQ(k.name(zs.delta_g()), "ab");
  EXPECT_EQ(k.name(zs.delta_h()), "c");
  EXPECT_EQ(k.product(zs.delta_g(), zs.delta_h()), k.delta());
  EXPECT_EQ(zs.g_simples().size(), 4u);
  EXPECT_EQ(zs.h_simples().size(), 2u);
}

TEST_F(WreathZS, Mirror) {
  ZSStructure m = ZSStructure::build(k, {c});
  EXPECT_EQ(k.name(m.delta_g()), "c");
  EXPECT_EQ(k.name(m.delta_h()), "ab");
  ZSStructure m2 = zs.mirror();
  EXPECT_EQ(m2.delta_g(), m.delta_g());
  // Actions swap roles: in the mirror, h |> g is the original g >> h.
  for (SimpleId g : zs.g_simples()) {
    for (SimpleId h : zs.h_simples()) {
      EXPECT_EQ(m.act_rr(g, h), zs.act_lr(g, h));
      EXPECT_EQ(m.act_rl(g, h), zs.act_ll(g, h));
    }
  }
}

TEST_F(WreathZS, Membership) {
  EXPECT_TRUE(zs.member_g(S(k, "ab")));
  EXPECT_FALSE(zs.member_g(S(k, "ac")));
  EXPECT_TRUE(zs.member_g(kUnit));
  EXPECT_TRUE(zs.member_h(kUnit));
  EXPECT_TRUE(zs.member_h(c));
  EXPECT_TRUE(zs.member_g(E(k, "a.a.b")));
  EXPECT_FALSE(zs.member_g(E(k, "a.c")));
}

TEST_F(WreathZS, Decompositions) {
  auto [g1, h1] = zs.gh_decompose(E(k, "c.a"));
  EXPECT_EQ(g1, E(k, "b"));
  EXPECT_EQ(h1, E(k, "c"));
  auto [g2, h2] = zs.gh_decompose(E(k, "a.a.c"));
  EXPECT_EQ(g2, E(k, "a.a"));
  EXPECT_EQ(h2, E(k, "c"));
  auto [g3, h3] = zs.gh_decompose(E(k, "a.b.a"));
  EXPECT_EQ(g3, E(k, "a.b.a"));
  EXPECT_TRUE(h3.is_identity());
  auto [h4, g4] = zs.hg_decompose(E(k, "b.c"));
  EXPECT_EQ(h4, E(k, "c"));
  EXPECT_EQ(g4, E(k, "a"));
  EXPECT_EQ(zs.gh(S(k, "bc")), std::make_pair(b, c));
  EXPECT_EQ(zs.hg(S(k, "bc")), std::make_pair(c, a));
}

TEST_F(WreathZS, SimpleActions) {
  EXPECT_EQ(zs.act_rr(c, a), b);
  EXPECT_EQ(zs.act_rl(c, a), c);
  EXPECT_EQ(zs.act_lr(a, c), c);
  EXPECT_EQ(zs.act_ll(a, c), b);
  EXPECT_EQ(zs.act_rr_inv(c, b), a);
  EXPECT_EQ(zs.act_rr_inv(c, kUnit), kUnit);
  EXPECT_EQ(zs.act_ll_inv(b, c), a);
  EXPECT_EQ(zs.act_ll(zs.act_ll_inv(a, c), c), a);
  for (SimpleId g : zs.g_simples()) {
    EXPECT_EQ(zs.act_rr(kUnit, g), g);
    EXPECT_EQ(zs.act_rl(c, kUnit), c);
  }
  EXPECT_THROW(zs.act_rr(a, a), DomainError);
  EXPECT_THROW(zs.act_lr(c, c), DomainError);
  EXPECT_THROW(zs.act_rr_inv(c, S(k, "ac")), DomainError);
}

TEST_F(WreathZS, WordActions) {
  EXPECT_EQ(zs.act_rr(Word{c}, Word{a, a}), (Word{b, b}));
  EXPECT_TRUE(zs.act_rr(Word{c}, Word{}).empty());
  EXPECT_EQ(zs.act_lr(Word{a, a}, Word{c}), (Word{c}));
  EXPECT_EQ(zs.act_ll(Word{a, a}, Word{c}), (Word{b, b}));
  EXPECT_EQ(zs.act_rr_inv(Word{c}, Word{b, b}), (Word{a, a}));
  EXPECT_THROW(zs.act_rr(Word{c}, Word{c}), DomainError);
}

TEST_F(WreathZS, FactorGerms) {
  const Germ& G = zs.factor_germ(Side::G);
  EXPECT_EQ(G.names(), (std::vector<std::string>{"1", "a", "b", "ab"}));
  EXPECT_EQ(G.name(G.delta()), "ab");
  const Germ& H = zs.factor_germ(Side::H);
  EXPECT_EQ(H.names(), (std::vector<std::string>{"1", "c"}));
  EXPECT_EQ(zs.from_factor(Side::G, zs.to_factor(Side::G, S(k, "ab"))), S(k, "ab"));
  EXPECT_THROW(zs.to_factor(Side::G, c), DomainError);
}

TEST(ZSBuild, Errors) {
  Germ b3 = braid_germ(3);
  EXPECT_THROW(ZSStructure::build(b3, {S(b3, "s1")}), NotAUnionOfClasses);
  Germ k = wreath_germ();
  EXPECT_THROW(ZSStructure::build(k, {S(k, "a")}), NotAUnionOfClasses);
  EXPECT_THROW(ZSStructure::build(k, {}), DomainError);
  EXPECT_THROW(ZSStructure::build(k, {S(k, "a"), S(k, "b"), S(k, "c")}), DomainError);
  EXPECT_THROW(ZSStructure::build(k, {S(k, "ab")}), DomainError);
  ZSStructure t = ZSStructure::build(k, {}, ZSOptions{true});
  EXPECT_EQ(t.delta_g(), kUnit);
  EXPECT_EQ(t.delta_h(), k.delta());
}

TEST(ZSBuild, AbelianAndProducts) {
  Germ a3 = free_abelian_germ(3);
  ZSStructure z = ZSStructure::build(a3, {S(a3, "e1")});
  EXPECT_EQ(a3.name(z.delta_g()), "e1");
  EXPECT_EQ(a3.name(z.delta_h()), "e2e3");

  // Direct products act trivially.
  Germ p = germ_from_spec("prod:braid:3,abelian:1");
  ZSStructure zp = ZSStructure::build(p, {S(p, "s1"), S(p, "s2")});
  for (SimpleId g : zp.g_simples()) {
    for (SimpleId h : zp.h_simples()) {
      EXPECT_EQ(zp.act_rr(h, g), g);
      EXPECT_EQ(zp.act_rl(h, g), h);
      EXPECT_EQ(zp.act_lr(g, h), h);
      EXPECT_EQ(zp.act_ll(g, h), g);
    }
  }
  Germ pp = germ_from_spec("prod:braid:3,braid:3");
  ZSStructure zpp = ZSStructure::build(pp, {S(pp, "s1"), S(pp, "s2")});
  EXPECT_EQ(zpp.g_simples().size(), 6u);
  // Multi-class sides are verified at build time.
  Germ a4 = free_abelian_germ(4);
  ZSStructure z4 = ZSStructure::build(a4, {S(a4, "e1"), S(a4, "e3")});
  EXPECT_EQ(a4.name(z4.delta_g()), "e1e3");
}

}  // namespace
}  // namespace garside
