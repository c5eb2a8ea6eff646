#include <gtest/gtest.h>

#include "garside/quasicenter.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

using test::S;

std::vector<std::string> names_of(const Germ& g, const std::vector<SimpleId>& s) {
  std::vector<std::string> out;
  for (SimpleId x : s) out.push_back(g.name(x));
  return out;
}

TEST(Quasicenter, WreathDeltas) {
  Germ g = wreath_germ();
  EXPECT_EQ(delta_of_simple(g, S(g, "a")), S(g, "ab"));
  EXPECT_EQ(delta_of_simple(g, S(g, "b")), S(g, "ab"));
  EXPECT_EQ(delta_of_simple(g, S(g, "c")), S(g, "c"));
  EXPECT_EQ(delta_of_simple(g, kUnit), kUnit);
  AtomClassPartition p = atom_classes(g);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(names_of(g, p.classes[0]), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(g.name(p.class_delta[0]), "ab");
  EXPECT_EQ(names_of(g, p.classes[1]), (std::vector<std::string>{"c"}));
  EXPECT_EQ(g.name(p.class_delta[1]), "c");
  EXPECT_EQ(p.class_of(S(g, "b")), 0u);
  EXPECT_FALSE(is_delta_pure(g));
  EXPECT_EQ(names_of(g, quasi_center_basis(g)), (std::vector<std::string>{"c", "ab"}));
}

TEST(Quasicenter, Braids) {
  for (int n : {2, 3, 4, 5}) {
    Germ g = braid_germ(n);
    EXPECT_TRUE(is_delta_pure(g)) << n;
    EXPECT_EQ(atom_classes(g).size(), 1u);
    EXPECT_EQ(quasi_center_basis(g), std::vector<SimpleId>{g.delta()});
  }
  Germ b3 = braid_germ(3);
  EXPECT_EQ(delta_of_simple(b3, S(b3, "s1")), b3.delta());
}

TEST(Quasicenter, Abelian) {
  for (int k = 1; k <= 4; ++k) {
    Germ g = free_abelian_germ(k);
    AtomClassPartition p = atom_classes(g);
    EXPECT_EQ(p.size(), static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(p.classes[i], std::vector<SimpleId>{p.class_delta[i]});
    EXPECT_EQ(is_delta_pure(g), k == 1);
  }
}

TEST(Quasicenter, Products) {
  Germ g = germ_from_spec("prod:braid:3,braid:3");
  AtomClassPartition p = atom_classes(g);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(names_of(g, p.classes[0]), (std::vector<std::string>{"s1'", "s2'"}));
  EXPECT_EQ(names_of(g, p.classes[1]), (std::vector<std::string>{"s1", "s2"}));
}

TEST(Quasicenter, Trivial) {
  Germ g = parse_germ("germ v1\nsimples: 1\ndelta: 1\n");
  EXPECT_TRUE(quasi_center_basis(g).empty());
  EXPECT_TRUE(is_delta_pure(g));
}

class QuasicenterLaws : public ::testing::TestWithParam<const char*> {};

TEST_P(QuasicenterLaws, Exhaustive) {
  Germ g = germ_from_spec(GetParam());
  std::vector<SimpleId> d = delta_table(g);
  for (SimpleId a : g.atoms()) {
    EXPECT_TRUE(g.left_divides(a, d[index(a)]));
    EXPECT_TRUE(is_quasi_central(g, d[index(a)]));
  }
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    for (std::uint32_t y = 0; y < g.size(); ++y) {
      ASSERT_EQ(d[index(g.join(simple(x), simple(y)))], g.join(d[x], d[y]));
    }
  }
  for (SimpleId c : quasi_center_basis(g)) {
    for (std::uint32_t x = 0; x < g.size(); ++x) ASSERT_EQ(g.left_divides(simple(x), c), g.right_divides(simple(x), c));
  }
  // Closing under every simple instead of atoms gives the same value.
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    SimpleId join = simple(s);
    std::vector<bool> seen(g.size(), false);
    std::vector<SimpleId> stack{simple(s)};
    seen[s] = true;
    while (!stack.empty()) {
      SimpleId x = stack.back();
      stack.pop_back();
      for (std::uint32_t y = 0; y < g.size(); ++y) {
        SimpleId z = g.lcomp(simple(y), x);
        if (!seen[index(z)]) {
          seen[index(z)] = true;
          join = g.join(join, z);
          stack.push_back(z);
        }
      }
    }
    ASSERT_EQ(join, d[s]);
  }
}

INSTANTIATE_TEST_SUITE_P(Builtins, QuasicenterLaws,
                         ::testing::Values("braid:3", "braid:4", "abelian:3", "wreath", "prod:braid:3,abelian:1",
                                           "prod:wreath,braid:3"));

}  // namespace
}  // namespace garside
