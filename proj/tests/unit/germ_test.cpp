#include <gtest/gtest.h>

#include <set>

#include "garside/builtins.hpp"
#include "garside/germ.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

using test::read_data;
using test::S;

TEST(GermParse, WreathFile) {
  Germ g = parse_germ(read_data("wreath.germ"));
  EXPECT_EQ(g.size(), 8u);
  std::set<std::string> atoms;
  for (SimpleId a : g.atoms()) atoms.insert(g.name(a));
  EXPECT_EQ(atoms, (std::set<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.name(g.delta()), "abc");
}

TEST(GermParse, FileMatchesBuiltin) {
  Germ file = parse_germ(read_data("wreath.germ"));
  Germ builtin = wreath_germ();
  EXPECT_EQ(write_germ(file), write_germ(builtin));
}

TEST(GermParse, Trivial) {
  Germ g = parse_germ(read_data("trivial.germ"));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.delta(), kUnit);
  EXPECT_TRUE(g.atoms().empty());
  EXPECT_EQ(g.complement(kUnit), kUnit);
}

TEST(GermParse, MissingRightComplementNamesAxiom) {
  GermData d = parse_germ_data(read_data("missing_rcomplement.germ"));
  ValidationReport r = validate(d);
  ASSERT_FALSE(r.ok());
  const AxiomResult* rc = r.find(axiom::right_complement);
  ASSERT_NE(rc, nullptr);
  EXPECT_EQ(rc->status, AxiomStatus::failed);
  EXPECT_NE(rc->witness.find("a"), std::string::npos);
  try {
    parse_germ(read_data("missing_rcomplement.germ"));
    FAIL() << "expected GermValidationError";
  } catch (const GermValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("right-complement-bijection"), std::string::npos);
  }
}

TEST(GermParse, IdempotentFailsCancellativity) {
  ValidationReport r = validate(parse_germ_data(read_data("idempotent.germ")));
  ASSERT_NE(r.find(axiom::cancellativity), nullptr);
  EXPECT_EQ(r.find(axiom::cancellativity)->status, AxiomStatus::failed);
}

TEST(GermParse, SyntaxErrorsCarryPosition) {
  try {
    parse_germ_data("germ v1\nsimples: 1 a\ndelta: a\nprod a a  zz\n");
    FAIL();
  } catch (const GermParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 11u);
    EXPECT_NE(std::string(e.what()).find("unknown simple 'zz'"), std::string::npos);
  }
  EXPECT_THROW(parse_germ_data("germ v2\n"), GermParseError);
  EXPECT_THROW(parse_germ_data(""), GermParseError);
  EXPECT_THROW(parse_germ_data("germ v1\nsimples: a b\ndelta: a\n"), GermParseError);
  EXPECT_THROW(parse_germ_data("germ v1\nsimples: 1 a\n"), GermParseError);
  EXPECT_THROW(parse_germ_data("germ v1\nsimples: 1 a a\ndelta: a\n"), GermParseError);
  EXPECT_THROW(parse_germ_data("germ v1\nsimples: 1 a.b\ndelta: 1\n"), GermParseError);
  EXPECT_THROW(parse_germ_data("germ v1\nsimples: 1 a\ndelta: a\nfoo\n"), GermParseError);
  EXPECT_THROW(parse_germ_data("germ v1\nsimples: 1 a\ndelta: a\nprod 1 a 1\n"), GermParseError);
}

TEST(GermParse, DuplicateProduct) {
  try {
    parse_germ_data("germ v1\nsimples: 1 a b ab\ndelta: ab\nprod a b ab\nprod a b ab\n");
    FAIL();
  } catch (const GermParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find("duplicate product"), std::string::npos);
  }
}

TEST(GermParse, CommentsAndUnitProducts) {
  Germ g = parse_germ("# leading comment\ngerm v1  # header\nsimples: 1 a   # names\ndelta: a\nprod 1 a a\n");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.atoms().size(), 1u);
}

TEST(GermParse, WriteRoundTrip) {
  for (const char* spec : {"wreath", "braid:3", "braid:4", "abelian:3", "prod:braid:3,abelian:1"}) {
    Germ g = germ_from_spec(spec);
    Germ h = parse_germ(write_germ(g));
    EXPECT_EQ(write_germ(h), write_germ(g)) << spec;
    EXPECT_EQ(h.delta(), g.delta()) << spec;
  }
}

TEST(GermValidate, BuiltinsPassEveryAxiom) {
  for (const char* spec : {"braid:2", "braid:3", "braid:4", "abelian:1", "abelian:2", "abelian:3", "wreath",
                           "prod:braid:3,abelian:1", "prod:braid:3,braid:3"}) {
    Germ g = germ_from_spec(spec);
    ValidationReport r = validate(g);
    EXPECT_TRUE(r.ok()) << spec << "\n" << r.to_string();
    for (const auto& a : r.results) EXPECT_EQ(a.status, AxiomStatus::passed) << spec << " " << a.axiom;
  }
}

TEST(GermValidate, NonAssociativeTable) {
  // a*b = x, x*a = D and b*a = D, but a*D is undefined.
  GermData d = GermData::with_names({"1", "a", "b", "x", "D"}, simple(4));
  d.set(simple(1), simple(2), simple(3));
  d.set(simple(3), simple(1), simple(4));
  d.set(simple(2), simple(1), simple(4));
  ValidationReport r = validate(d);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.find(axiom::associativity)->status, AxiomStatus::failed);
}

TEST(GermValidate, NonLatticeIsReported) {
  // Two atoms a, b each with two different upper covers x, y: a*p = x,
  // a*q = y, b*r = x, b*s = y.  Common multiples of a and b have no least one.
  GermData d = GermData::with_names({"1", "a", "b", "x", "y", "D"}, simple(5));
  auto set = [&](int s, int t, int u) { d.set(simple(s), simple(t), simple(u)); };
  set(1, 2, 3);  // a b = x
  set(2, 1, 4);  // b a = y
  set(1, 1, 4);  // a a = y
  set(2, 2, 3);  // b b = x
  set(3, 3, 5);
  set(4, 4, 5);
  EXPECT_FALSE(validate(d).ok());
}

class WreathGerm : public ::testing::Test {
 protected:
  Germ g = wreath_germ();
  SimpleId one = kUnit, a = S(g, "a"), b = S(g, "b"), c = S(g, "c"), ab = S(g, "ab"), ac = S(g, "ac"),
           bc = S(g, "bc"), abc = S(g, "abc");
};

TEST_F(WreathGerm, Divisibility) {
  EXPECT_TRUE(g.left_divides(a, ab));
  EXPECT_FALSE(g.left_divides(b, ac));
  std::set<std::string> divs;
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    if (g.left_divides(simple(s), ac)) divs.insert(g.name(simple(s)));
  }
  EXPECT_EQ(divs, (std::set<std::string>{"1", "a", "c", "ac"}));
  for (std::uint32_t s = 0; s < g.size(); ++s) EXPECT_TRUE(g.left_divides(one, simple(s)));
}

TEST_F(WreathGerm, MeetJoinComplement) {
  EXPECT_EQ(g.meet(ab, ac), a);
  EXPECT_EQ(g.join(a, c), ac);
  EXPECT_EQ(g.lcomp(c, a), b);
  EXPECT_EQ(g.lcomp(a, c), c);
  EXPECT_EQ(g.complement(a), bc);
  EXPECT_EQ(g.complement(c), ab);
  EXPECT_EQ(g.complement(abc), one);
  EXPECT_EQ(g.complement(one), abc);
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    SimpleId s = simple(i);
    EXPECT_EQ(g.join(s, one), s);
    EXPECT_EQ(g.lcomp(one, s), s);
  }
}

TEST_F(WreathGerm, Opposite) {
  Germ op = g.opposite();
  std::set<std::string> divs;
  for (std::uint32_t s = 0; s < op.size(); ++s) {
    if (op.left_divides(simple(s), ac)) divs.insert(op.name(simple(s)));
  }
  EXPECT_EQ(divs, (std::set<std::string>{"1", "c", "b", "ac"}));
  EXPECT_FALSE(g.is_opposite());
  EXPECT_TRUE(op.is_opposite());
  EXPECT_FALSE(op.opposite().is_opposite());
  EXPECT_EQ(write_germ(op.opposite()), write_germ(g));
  EXPECT_TRUE(validate(op).ok());
}

TEST(GermOpposite, AbelianIsSelfOpposite) {
  Germ g = free_abelian_germ(3);
  EXPECT_EQ(write_germ(g.opposite()), write_germ(g));
}

// Exhaustive identities on every small built-in.
class GermLaws : public ::testing::TestWithParam<const char*> {};

TEST_P(GermLaws, Exhaustive) {
  Germ g = germ_from_spec(GetParam());
  Germ op = g.opposite();
  const std::uint32_t n = static_cast<std::uint32_t>(g.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    SimpleId s = simple(i);
    ASSERT_EQ(g.product(s, g.complement(s)), g.delta());
    ASSERT_EQ(g.product(g.rcomplement(s), s), g.delta());
    ASSERT_EQ(g.rcomplement(g.complement(s)), s);
    ASSERT_EQ(g.complement(g.rcomplement(s)), s);
    // s Delta = Delta tau(s): s complement(s) = Delta = complement(s) tau(s)
    ASSERT_EQ(g.product(g.complement(s), g.tau(s)), g.delta());
    for (std::uint32_t j = 0; j < n; ++j) {
      SimpleId t = simple(j);
      // duality with the opposite germ
      ASSERT_EQ(g.right_divides(s, t), op.left_divides(s, t));
      ASSERT_EQ(g.rmeet(s, t), op.meet(s, t));
      ASSERT_EQ(g.rjoin(s, t), op.join(s, t));
      ASSERT_EQ(g.rcomp(s, t), op.lcomp(s, t));
      ASSERT_EQ(g.rcomplement(s), op.complement(s));
      // lattice laws
      ASSERT_EQ(g.meet(s, t), g.meet(t, s));
      ASSERT_EQ(g.join(s, t), g.join(t, s));
      ASSERT_EQ(g.meet(s, g.join(s, t)), s);
      ASSERT_EQ(g.join(s, g.meet(s, t)), s);
      ASSERT_EQ(g.rmeet(s, g.rjoin(s, t)), s);
      ASSERT_TRUE(g.left_divides(g.meet(s, t), s));
      ASSERT_TRUE(g.left_divides(t, g.join(s, t)));
      ASSERT_EQ(g.product(s, g.lcomp(s, t)), g.join(s, t));
      ASSERT_EQ(g.product(g.rcomp(s, t), s), g.rjoin(s, t));
      ASSERT_EQ(g.left_divides(s, t), g.product(s, g.lcomp(s, t)) == t);
      for (std::uint32_t k = 0; k < n; ++k) {
        SimpleId u = simple(k);
        ASSERT_EQ(g.meet(g.meet(s, t), u), g.meet(s, g.meet(t, u)));
        ASSERT_EQ(g.join(g.join(s, t), u), g.join(s, g.join(t, u)));
      }
    }
  }
  // Atoms are exactly the simples of atom length one.
  for (std::uint32_t i = 1; i < n; ++i) EXPECT_EQ(g.is_atom(simple(i)), g.atom_length(simple(i)) == 1);
}

INSTANTIATE_TEST_SUITE_P(Builtins, GermLaws,
                         ::testing::Values("braid:2", "braid:3", "braid:4", "abelian:1", "abelian:2", "abelian:3",
                                           "wreath", "prod:braid:3,abelian:1"));

TEST(Builtins, Sizes) {
  EXPECT_EQ(braid_germ(2).size(), 2u);
  EXPECT_EQ(braid_germ(3).size(), 6u);
  EXPECT_EQ(braid_germ(3).atoms().size(), 2u);
  EXPECT_EQ(braid_germ(4).size(), 24u);
  EXPECT_EQ(braid_germ(5).size(), 120u);
  EXPECT_EQ(free_abelian_germ(1).size(), 2u);
  EXPECT_EQ(free_abelian_germ(2).size(), 4u);
  EXPECT_EQ(direct_product_germ(braid_germ(3), braid_germ(3)).size(), 36u);
  EXPECT_THROW(braid_germ(1), DomainError);
  EXPECT_THROW(braid_germ(8), DomainError);
  EXPECT_THROW(free_abelian_germ(0), DomainError);
  EXPECT_THROW(free_abelian_germ(11), DomainError);
}

TEST(Builtins, BraidNames) {
  Germ g = braid_germ(3);
  std::vector<std::string> names = g.names();
  EXPECT_EQ(names, (std::vector<std::string>{"1", "s1", "s2", "s1s2", "s2s1", "s1s2s1"}));
  EXPECT_EQ(g.name(g.delta()), "s1s2s1");
  EXPECT_EQ(g.product(S(g, "s1"), S(g, "s2")), S(g, "s1s2"));
  EXPECT_EQ(g.product(S(g, "s1s2"), S(g, "s1")), g.delta());
  EXPECT_EQ(g.product(S(g, "s2s1"), S(g, "s2")), g.delta());
  EXPECT_FALSE(g.product(S(g, "s1"), S(g, "s1")));
}

TEST(Builtins, AbelianNames) {
  Germ g = free_abelian_germ(3);
  EXPECT_EQ(g.names(), (std::vector<std::string>{"1", "e1", "e2", "e3", "e1e2", "e1e3", "e2e3", "e1e2e3"}));
  EXPECT_EQ(free_abelian_germ(10).name(simple(10)), "e10");
}

TEST(Builtins, WreathRelations) {
  Germ g = wreath_germ();
  EXPECT_EQ(g.product(S(g, "a"), S(g, "b")), S(g, "ab"));
  EXPECT_EQ(g.product(S(g, "b"), S(g, "a")), S(g, "ab"));
  EXPECT_EQ(g.product(S(g, "c"), S(g, "a")), S(g, "bc"));
  EXPECT_EQ(g.product(S(g, "b"), S(g, "c")), S(g, "bc"));
  EXPECT_EQ(g.product(S(g, "a"), S(g, "c")), S(g, "ac"));
  EXPECT_EQ(g.product(S(g, "c"), S(g, "b")), S(g, "ac"));
}

TEST(Builtins, ProductNamesAndIsomorphism) {
  Germ p = germ_from_spec("prod:abelian:1,abelian:1");
  EXPECT_EQ(p.names(), (std::vector<std::string>{"1", "e1'", "e1", "e1*e1'"}));
  // Same table as abelian:2 under e1 -> e1, e1' -> e2.
  Germ a = free_abelian_germ(2);
  const std::vector<std::uint32_t> map{0, 2, 1, 3};
  for (std::uint32_t s = 0; s < 4; ++s) {
    for (std::uint32_t t = 0; t < 4; ++t) {
      auto x = p.product(simple(s), simple(t));
      auto y = a.product(simple(map[s]), simple(map[t]));
      ASSERT_EQ(x.has_value(), y.has_value());
      if (x) EXPECT_EQ(map[index(*x)], index(*y));
    }
  }
}

TEST(Builtins, SpecErrors) {
  EXPECT_THROW(germ_from_spec("nope"), DomainError);
  EXPECT_THROW(germ_from_spec("braid:x"), DomainError);
  EXPECT_THROW(germ_from_spec("prod:wreath"), DomainError);
  EXPECT_THROW(germ_from_spec("wreath,wreath"), DomainError);
  EXPECT_THROW(germ_from_spec("file:/nonexistent.germ"), DomainError);
  Germ nested = germ_from_spec("prod:prod:abelian:1,abelian:1,abelian:1");
  EXPECT_EQ(nested.size(), 8u);
  EXPECT_TRUE(nested.find("e1''"));
  EXPECT_EQ(germ_from_spec(std::string("file:") + GARSIDE_TEST_DATA + "/wreath.germ").size(), 8u);
}

TEST(Builtins, LargerBraids) {
  Germ g5 = braid_germ(5);
  EXPECT_EQ(g5.atom_length(g5.delta()), 10u);
  Germ g6 = braid_germ(6);
  EXPECT_EQ(g6.size(), 720u);
  EXPECT_EQ(g6.name(g6.delta()), "s1s2s1s3s2s1s4s3s2s1s5s4s3s2s1");
}

}  // namespace
}  // namespace garside
