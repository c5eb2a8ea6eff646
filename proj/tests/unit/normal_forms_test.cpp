#include <gtest/gtest.h>

#include <set>

#include "garside/normal_forms.hpp"
#include "garside/verify/enumerate.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

using test::S;

Word W(const Germ& g, std::string_view text) { return parse_word(g, text); }

class WreathNF : public ::testing::Test {
 protected:
  Germ k = wreath_germ();
  ZSStructure zs = ZSStructure::build(k, {S(k, "a"), S(k, "b")});
  SimpleId one = kUnit, a = S(k, "a"), b = S(k, "b"), c = S(k, "c"), ab = S(k, "ab");

  NormalWord nf(std::string_view w) { return normal_form(k, W(k, w)); }
};

TEST_F(WreathNF, SplitExamples) {
  EXPECT_EQ(split_nf(zs, nf("ac|b")), (NFPair{{a, a}, {c}}));
  EXPECT_EQ(split_nf(zs, nf("bc")), (NFPair{{b}, {c}}));
  EXPECT_EQ(split_nf(zs, nf("c.c")), (NFPair{{}, {c, c}}));
  EXPECT_EQ(split_nf(zs, NormalWord{}), (NFPair{}));
  EXPECT_EQ(split_nf(zs, nf("abc")), (NFPair{{ab}, {c}}));
}

TEST_F(WreathNF, MergeExamples) {
  EXPECT_EQ(format_normal(k, merge_nf(zs, {{a, a}, {c}})), "ac|b");
  EXPECT_EQ(format_normal(k, merge_nf(zs, {{a}, {c}})), "ac");
  EXPECT_EQ(format_normal(k, merge_nf(zs, {{}, {c, c}})), "c|c");
  EXPECT_EQ(format_normal(k, merge_nf(zs, {{ab}, {c}})), "D^1");
  EXPECT_TRUE(phi(zs, {}).is_identity());
}

TEST_F(WreathNF, MergeRejectsWrongFactor) {
  EXPECT_THROW(merge_nf(zs, {{c}, {}}), DomainError);
  EXPECT_THROW(merge_nf(zs, {{}, {a}}), DomainError);
  // b.a is not normal in G (ab is a common prefix).
  EXPECT_THROW(merge_nf(zs, {{b, a}, {}}), InvariantViolation);
}

TEST_F(WreathNF, Psi) {
  EXPECT_EQ(format_normal(k, psi(zs, {{a}, {c}})), "ac");
  EXPECT_EQ(psi(zs, {{}, {c, c}}), merge_nf(zs, {{}, {c, c}}));
  for (SimpleId g : zs.g_simples()) {
    for (SimpleId h : zs.h_simples()) {
      NFPair p{g == kUnit ? Word{} : Word{g}, h == kUnit ? Word{} : Word{h}};
      EXPECT_EQ(psi(zs, p), lcm(k, Element::from_simple(k, g), Element::from_simple(k, h)).nf());
    }
  }
}

TEST_F(WreathNF, PairCriteriaExample) {
  EXPECT_TRUE(is_normal_pair(zs, a, c, b, one));
  EXPECT_FALSE(is_normal_pair(zs, a, c, one, one));
  EXPECT_FALSE(is_normal_join_pair(zs, a, c, one, one));
  EXPECT_TRUE(factor_bar(zs, Side::G, b, b));
  EXPECT_FALSE(factor_bar(zs, Side::G, b, a));
}

// x|y in K straight from the definition: the normal form of x.y is x|y.
bool k_bar(const Germ& k, SimpleId x, SimpleId y) {
  if (x == kUnit || y == kUnit) return false;
  return normal_form(k, {x, y}).word(k) == Word{x, y};
}

void check_criteria(const ZSStructure& zs) {
  const Germ& k = zs.germ();
  auto mul = [&](SimpleId x, SimpleId y) { return *k.product(x, y); };
  const auto& G = zs.g_simples();
  const auto& H = zs.h_simples();
  for (SimpleId g1 : G)
    for (SimpleId h1 : H)
      for (SimpleId g2 : G)
        for (SimpleId h2 : H) {
          auto meet_form = [&](SimpleId x, SimpleId y) { return k.meet(k.complement(x), y) == kUnit; };
          ASSERT_EQ(meet_form(k.join(g1, h1), k.join(g2, h2)), join_criterion(zs, g1, h1, g2, h2));
          ASSERT_EQ(k_bar(k, k.join(g1, h1), k.join(g2, h2)), is_normal_join_pair(zs, g1, h1, g2, h2));
          const std::pair<PairShape, std::pair<SimpleId, SimpleId>> cases[] = {
              {PairShape::gh_gh, {mul(g1, h1), mul(g2, h2)}},
              {PairShape::gh_hg, {mul(g1, h1), mul(h2, g2)}},
              {PairShape::hg_gh, {mul(h1, g1), mul(g2, h2)}},
              {PairShape::hg_hg, {mul(h1, g1), mul(h2, g2)}},
          };
          for (const auto& [shape, xy] : cases) {
            ASSERT_EQ(meet_form(xy.first, xy.second), complement_criterion(zs, shape, g1, h1, g2, h2));
            ASSERT_EQ(k_bar(k, xy.first, xy.second), is_normal_pair(zs, g1, h1, g2, h2, shape))
                << k.name(g1) << "," << k.name(h1) << "," << k.name(g2) << "," << k.name(h2);
          }
        }
}

void check_algorithms(const ZSStructure& zs, std::uint64_t max_length) {
  const Germ& k = zs.germ();
  std::set<NFPair> images;
  std::size_t k_count = 0;
  for (const Word& w : verify::normal_words(k, max_length)) {
    NormalWord n = from_left_weighted(k, w);
    NFPair p = split_nf(zs, n);
    auto [g, h] = zs.gh_decompose(Element::from_normal(k, n));
    ASSERT_EQ(p.g, g.word(k));
    ASSERT_EQ(p.h, h.word(k));
    ASSERT_EQ(merge_nf(zs, p), n);
    images.insert(p);
    ++k_count;
  }
  EXPECT_EQ(images.size(), k_count);
  auto gw = verify::normal_words(zs, Side::G, max_length);
  auto hw = verify::normal_words(zs, Side::H, max_length);
  std::size_t pairs = 0;
  std::set<NormalWord> psi_images;
  for (const Word& g : gw) {
    for (const Word& h : hw) {
      if (verify::word_length(k, g) + verify::word_length(k, h) > max_length) continue;
      ++pairs;
      NFPair p{g, h};
      NormalWord m = merge_nf(zs, p);
      Word concat = g;
      concat.insert(concat.end(), h.begin(), h.end());
      ASSERT_EQ(m, normal_form(k, concat));
      ASSERT_EQ(split_nf(zs, m), p);
      NormalWord s = psi(zs, p);
      ASSERT_EQ(s, lcm(k, Element::from_word(k, g), Element::from_word(k, h)).nf());
      psi_images.insert(s);
    }
  }
  EXPECT_EQ(pairs, k_count);
  EXPECT_EQ(psi_images.size(), pairs);
}

TEST(NormalForms, CriteriaWreath) {
  Germ k = wreath_germ();
  ZSStructure zs = ZSStructure::build(k, {S(k, "a"), S(k, "b")});
  check_criteria(zs);
  check_criteria(zs.mirror());
}

TEST(NormalForms, CriteriaProducts) {
  for (const char* spec : {"abelian:3", "prod:braid:3,abelian:1", "prod:braid:3,braid:3"}) {
    Germ k = germ_from_spec(spec);
    std::vector<SimpleId> left{k.atoms()[0]};
    if (std::string(spec) != "abelian:3") left = {S(k, "s1"), S(k, "s2")};
    ZSStructure zs = ZSStructure::build(k, left);
    check_criteria(zs);
    check_criteria(zs.mirror());
  }
}

TEST(NormalForms, AlgorithmsWreath) {
  Germ k = wreath_germ();
  ZSStructure zs = ZSStructure::build(k, {S(k, "a"), S(k, "b")});
  check_algorithms(zs, 5);
  check_algorithms(zs.mirror(), 5);
}

TEST(NormalForms, AlgorithmsProducts) {
  Germ k = germ_from_spec("prod:braid:3,abelian:1");
  ZSStructure zs = ZSStructure::build(k, {S(k, "s1"), S(k, "s2")});
  check_algorithms(zs, 4);
  check_algorithms(zs.mirror(), 4);
  Germ k3 = free_abelian_germ(3);
  check_algorithms(ZSStructure::build(k3, {k3.atoms()[1]}), 4);
}

TEST(NormalForms, TrivialFactor) {
  Germ k = wreath_germ();
  ZSStructure zs = ZSStructure::build(k, {}, {.allow_trivial = true});
  NormalWord n = normal_form(k, W(k, "abc.a.c"));
  EXPECT_EQ(split_nf(zs, n), (NFPair{{}, n.word(k)}));
  EXPECT_EQ(merge_nf(zs, {{}, n.word(k)}), n);
}

}  // namespace
}  // namespace garside
