#include <map>
#include <set>

#include "garside/normal_forms.hpp"
#include "garside/verify/enumerate.hpp"
#include "garside/verify/suites.hpp"
#include "garside/word_io.hpp"

namespace garside::verify {

namespace {

class Ctx {
 public:
  Ctx(const ZSStructure& zs, Checker& c) : zs(zs), k(zs.germ()), c(c) {}

  const ZSStructure& zs;
  const Germ& k;
  Checker& c;

  std::string n(SimpleId s) const { return k.name(s); }
  std::string n(const Word& w) const { return format_word(k, w, "."); }
  template <class... T>
  std::string args(const char* law, T... xs) const {
    std::string s = std::string(law) + " at (";
    bool first = true;
    ((s += (first ? "" : ", ") + n(xs), first = false), ...);
    return s + ")";
  }
  // x * y must be simple and equal to z.
  bool prod_is(SimpleId x, SimpleId y, SimpleId z) const { return k.product(x, y) == z; }
  Element el(const Word& w) const { return Element::from_word(k, w); }
  Word cat(Word a, const Word& b) const {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  bool same(const Word& a, const Word& b) const { return el(a) == el(b); }
};

void simple_identities(Ctx& x) {
  const ZSStructure& zs = x.zs;
  const Germ& k = x.k;
  Checker& c = x.c;
  const auto& G = zs.g_simples();
  const auto& H = zs.h_simples();
  const SimpleId dg = zs.delta_g(), dh = zs.delta_h();
  auto cg = [&](SimpleId s) { return zs.complement(Side::G, s); };
  auto ch = [&](SimpleId s) { return zs.complement(Side::H, s); };

  std::set<SimpleId> joins, rjoins;
  for (SimpleId h : H) {
    for (SimpleId g : G) {
      const SimpleId rr = zs.act_rr(h, g), rl = zs.act_rl(h, g), lr = zs.act_lr(g, h), ll = zs.act_ll(g, h);
      const SimpleId rri = zs.act_rr_inv(h, g), rli = zs.act_rl_inv(h, g), lri = zs.act_lr_inv(g, h),
                     lli = zs.act_ll_inv(g, h);
      auto at = [&](const char* law) { return x.args(law, h, g); };
      c.expect(x.el({h, g}) == x.el({rr, rl}), [&] { return at("h g = (h|>g)(h<|g)"); });
      c.expect(x.el({g, h}) == x.el({lr, ll}), [&] { return at("g h = (g>>h)(g<<h)"); });
      c.expect(zs.member_g(rr) && zs.member_h(rl) && zs.member_h(lr) && zs.member_g(ll) && zs.member_g(rri) &&
                   zs.member_h(rli) && zs.member_h(lri) && zs.member_g(lli),
               [&] { return at("simples map to simples"); });
      // Identity detection.
      c.expect((g == kUnit) == (rr == kUnit), [&] { return at("g=1 <=> h|>g=1"); });
      c.expect((h == kUnit) == (rl == kUnit), [&] { return at("h=1 <=> h<|g=1"); });
      c.expect((h == kUnit) == (lr == kUnit), [&] { return at("h=1 <=> g>>h=1"); });
      c.expect((g == kUnit) == (ll == kUnit), [&] { return at("g=1 <=> g<<h=1"); });
      // Round trips.
      c.expect(zs.act_rr(lr, ll) == g, [&] { return at("(g>>h)|>(g<<h) = g"); });
      c.expect(zs.act_rl(lr, ll) == h, [&] { return at("(g>>h)<|(g<<h) = h"); });
      c.expect(zs.act_lr(rr, rl) == h, [&] { return at("(h|>g)>>(h<|g) = h"); });
      c.expect(zs.act_ll(rr, rl) == g, [&] { return at("(h|>g)<<(h<|g) = g"); });
      // Inverses.
      c.expect(zs.act_rr(h, rri) == g && zs.act_rr_inv(h, rr) == g, [&] { return at("h|>(h^-1|>g) = g"); });
      c.expect(zs.act_rl(rli, g) == h && zs.act_rl_inv(rl, g) == h, [&] { return at("(h<|g^-1)<|g = h"); });
      c.expect(zs.act_lr(g, lri) == h && zs.act_lr_inv(g, lr) == h, [&] { return at("g>>(g^-1>>h) = h"); });
      c.expect(zs.act_ll(lli, h) == g && zs.act_ll_inv(ll, h) == g, [&] { return at("(g<<h^-1)<<h = g"); });
      // Inverse interplay.
      c.expect(zs.act_rl(h, rri) == lri, [&] { return at("h<|(h^-1|>g) = g^-1>>h"); });
      c.expect(zs.act_rr(rli, g) == lli, [&] { return at("(h<|g^-1)|>g = g<<h^-1"); });
      c.expect(zs.act_ll(g, lri) == rri, [&] { return at("g<<(g^-1>>h) = h^-1|>g"); });
      c.expect(zs.act_lr(lli, h) == rli, [&] { return at("(g<<h^-1)>>h = h<|g^-1"); });
      // Units act trivially; Delta is fixed.
      c.expect(zs.act_rr(kUnit, g) == g && zs.act_ll(g, kUnit) == g, [&] { return at("unit acts trivially on g"); });
      c.expect(zs.act_rl(h, kUnit) == h && zs.act_lr(kUnit, h) == h, [&] { return at("unit acts trivially on h"); });
      c.expect(zs.act_rr(h, dg) == dg, [&] { return at("h|>Delta_G = Delta_G"); });
      c.expect(zs.act_rl(dh, g) == dh, [&] { return at("Delta_H<|g = Delta_H"); });
      c.expect(zs.act_lr(g, dh) == dh, [&] { return at("g>>Delta_H = Delta_H"); });
      c.expect(zs.act_ll(dg, h) == dg, [&] { return at("Delta_G<<h = Delta_G"); });
      // Complement action.
      c.expect(cg(rr) == zs.act_rr(rl, cg(g)), [&] { return at("C_G(h|>g) = (h<|g)|>C_G g"); });
      c.expect(cg(ll) == zs.act_rr_inv(h, cg(g)), [&] { return at("C_G(g<<h) = h^-1|>C_G g"); });
      c.expect(ch(lr) == zs.act_lr(ll, ch(h)), [&] { return at("C_H(g>>h) = (g<<h)>>C_H h"); });
      c.expect(ch(rl) == zs.act_lr_inv(g, ch(h)), [&] { return at("C_H(h<|g) = g^-1>>C_H h"); });
      // Joins.
      const SimpleId j = k.join(g, h);
      c.expect(x.prod_is(g, lri, j) && x.prod_is(h, rri, j), [&] { return at("g v h = g(g^-1>>h) = h(h^-1|>g)"); });
      c.expect(k.rjoin(rri, lri) == j, [&] { return at("g v h = g' v~ h'"); });
      c.expect(lcm(k, x.el({g}), x.el({h})) == x.el({j}), [&] { return at("element lcm of g and h"); });
      c.expect(k.complement(j) == k.join(cg(rri), ch(lri)), [&] { return at("C_K(g v h)"); });
      joins.insert(j);
      rjoins.insert(k.rjoin(g, h));
      // Atoms map to atoms.
      if (k.is_atom(g)) {
        c.expect(k.is_atom(rr) && k.is_atom(ll), [&] { return at("actions on an atom of G"); });
      }
      if (k.is_atom(h)) {
        c.expect(k.is_atom(lr) && k.is_atom(rl), [&] { return at("actions on an atom of H"); });
      }
    }
  }
  c.expect(joins.size() == G.size() * H.size(), "(g, h) -> g v h is injective");
  c.expect(rjoins.size() == G.size() * H.size(), "(g, h) -> g v~ h is injective");

  // Laws with a composite argument that stays simple.
  auto prod_eq = [&](SimpleId lhs, SimpleId a, SimpleId b) { return k.product(a, b) == lhs; };
  for (SimpleId h1 : H) {
    for (SimpleId h2 : H) {
      auto h12 = k.product(h1, h2);
      if (!h12) continue;
      for (SimpleId g : G) {
        auto at = [&](const char* law) { return x.args(law, h1, h2, g); };
        c.expect(zs.act_rr(*h12, g) == zs.act_rr(h1, zs.act_rr(h2, g)), [&] { return at("(h1h2)|>g"); });
        c.expect(prod_eq(zs.act_rl(*h12, g), zs.act_rl(h1, zs.act_rr(h2, g)), zs.act_rl(h2, g)),
                 [&] { return at("(h1h2)<|g"); });
        c.expect(zs.act_rr_inv(*h12, g) == zs.act_rr_inv(h2, zs.act_rr_inv(h1, g)), [&] { return at("(h1h2)^-1|>g"); });
        c.expect(prod_eq(zs.act_rl_inv(*h12, g), zs.act_rl_inv(h1, zs.act_ll_inv(g, h2)), zs.act_rl_inv(h2, g)),
                 [&] { return at("(h1h2)<|g^-1"); });
        c.expect(zs.act_ll(g, *h12) == zs.act_ll(zs.act_ll(g, h1), h2), [&] { return at("g<<(h1h2)"); });
        c.expect(prod_eq(zs.act_lr(g, *h12), zs.act_lr(g, h1), zs.act_lr(zs.act_ll(g, h1), h2)),
                 [&] { return at("g>>(h1h2)"); });
        c.expect(zs.act_ll_inv(g, *h12) == zs.act_ll_inv(zs.act_ll_inv(g, h2), h1), [&] { return at("g<<(h1h2)^-1"); });
        c.expect(prod_eq(zs.act_lr_inv(g, *h12), zs.act_lr_inv(g, h1), zs.act_lr_inv(zs.act_rr_inv(h1, g), h2)),
                 [&] { return at("g^-1>>(h1h2)"); });
      }
    }
  }
  for (SimpleId g1 : G) {
    for (SimpleId g2 : G) {
      auto g12 = k.product(g1, g2);
      if (!g12) continue;
      for (SimpleId h : H) {
        auto at = [&](const char* law) { return x.args(law, g1, g2, h); };
        c.expect(zs.act_lr(*g12, h) == zs.act_lr(g1, zs.act_lr(g2, h)), [&] { return at("(g1g2)>>h"); });
        c.expect(prod_eq(zs.act_ll(*g12, h), zs.act_ll(g1, zs.act_lr(g2, h)), zs.act_ll(g2, h)),
                 [&] { return at("(g1g2)<<h"); });
        c.expect(zs.act_lr_inv(*g12, h) == zs.act_lr_inv(g2, zs.act_lr_inv(g1, h)), [&] { return at("(g1g2)^-1>>h"); });
        c.expect(prod_eq(zs.act_ll_inv(*g12, h), zs.act_ll_inv(g1, zs.act_rl_inv(h, g2)), zs.act_ll_inv(g2, h)),
                 [&] { return at("(g1g2)<<h^-1"); });
        c.expect(zs.act_rl(h, *g12) == zs.act_rl(zs.act_rl(h, g1), g2), [&] { return at("h<|(g1g2)"); });
        c.expect(prod_eq(zs.act_rr(h, *g12), zs.act_rr(h, g1), zs.act_rr(zs.act_rl(h, g1), g2)),
                 [&] { return at("h|>(g1g2)"); });
        c.expect(zs.act_rl_inv(h, *g12) == zs.act_rl_inv(zs.act_rl_inv(h, g2), g1), [&] { return at("h<|(g1g2)^-1"); });
        c.expect(prod_eq(zs.act_rr_inv(h, *g12), zs.act_rr_inv(h, g1), zs.act_rr_inv(zs.act_lr_inv(g1, h), g2)),
                 [&] { return at("h^-1|>(g1g2)"); });
      }
    }
  }

  // Order isomorphisms and complement transport.
  for (SimpleId h : H) {
    for (SimpleId g1 : G) {
      for (SimpleId g2 : G) {
        auto at = [&](const char* law) { return x.args(law, h, g1, g2); };
        bool pre = k.left_divides(g1, g2), suf = k.right_divides(g1, g2);
        c.expect(pre == k.left_divides(zs.act_rr(h, g1), zs.act_rr(h, g2)) &&
                     pre == k.left_divides(zs.act_rr_inv(h, g1), zs.act_rr_inv(h, g2)),
                 [&] { return at("h|> preserves the prefix order"); });
        c.expect(suf == k.right_divides(zs.act_ll(g1, h), zs.act_ll(g2, h)) &&
                     suf == k.right_divides(zs.act_ll_inv(g1, h), zs.act_ll_inv(g2, h)),
                 [&] { return at("<<h preserves the suffix order"); });
        c.expect(zs.act_rr(h, k.lcomp(g1, g2)) == k.lcomp(zs.act_ll_inv(g1, h), zs.act_rr(zs.act_rl_inv(h, g1), g2)),
                 [&] { return at("h|>(g1\\g2)"); });
        c.expect(zs.act_rr_inv(h, k.lcomp(g1, g2)) ==
                     k.lcomp(zs.act_ll(g1, h), zs.act_rr_inv(zs.act_lr(g1, h), g2)),
                 [&] { return at("h^-1|>(g1\\g2)"); });
      }
    }
  }
  for (SimpleId g : G) {
    for (SimpleId h1 : H) {
      for (SimpleId h2 : H) {
        auto at = [&](const char* law) { return x.args(law, g, h1, h2); };
        bool pre = k.left_divides(h1, h2), suf = k.right_divides(h1, h2);
        c.expect(pre == k.left_divides(zs.act_lr(g, h1), zs.act_lr(g, h2)) &&
                     pre == k.left_divides(zs.act_lr_inv(g, h1), zs.act_lr_inv(g, h2)),
                 [&] { return at("g>> preserves the prefix order"); });
        c.expect(suf == k.right_divides(zs.act_rl(h1, g), zs.act_rl(h2, g)) &&
                     suf == k.right_divides(zs.act_rl_inv(h1, g), zs.act_rl_inv(h2, g)),
                 [&] { return at("<|g preserves the suffix order"); });
      }
    }
  }

  // Poset product isomorphism and the complement of a join.
  for (SimpleId g1 : G)
    for (SimpleId h1 : H)
      for (SimpleId g2 : G)
        for (SimpleId h2 : H) {
          auto at = [&](const char* law) { return x.args(law, g1, h1, g2, h2); };
          c.expect((k.left_divides(g1, g2) && k.left_divides(h1, h2)) ==
                       k.left_divides(k.join(g1, h1), k.join(g2, h2)),
                   [&] { return at("(g,h) -> g v h is a prefix-order isomorphism"); });
          c.expect((k.right_divides(g1, g2) && k.right_divides(h1, h2)) ==
                       k.right_divides(k.rjoin(g1, h1), k.rjoin(g2, h2)),
                   [&] { return at("(g,h) -> g v~ h is a suffix-order isomorphism"); });
          SimpleId lhs = k.lcomp(k.join(g1, h1), k.join(g2, h2));
          SimpleId rhs = k.join(zs.act_rr_inv(zs.act_lr_inv(g1, h1), k.lcomp(g1, g2)),
                                zs.act_lr_inv(zs.act_rr_inv(h1, g1), k.lcomp(h1, h2)));
          c.expect(lhs == rhs, [&] { return at("(g1 v h1)\\(g2 v h2)"); });
        }
}

void word_identities(Ctx& x, const SuiteOptions& opt) {
  const ZSStructure& zs = x.zs;
  Checker& c = x.c;
  std::mt19937_64 rng(opt.seed);
  const auto& G = zs.g_simples();
  const auto& H = zs.h_simples();
  auto gw = [&] { return random_word(rng, G, opt.max_letters); };
  auto hw = [&] { return random_word(rng, H, opt.max_letters); };
  using Check = std::function<bool(const Word&, const Word&, const Word&, const Word&)>;
  // Each law gets (g1, g2, h1, h2); "g" and "h" below are g1 and h1.
  const std::pair<const char*, Check> laws[] = {
      {"word h g = (h|>g)(h<|g)",
       [&](auto& g, auto&, auto& h, auto&) { return x.el(x.cat(h, g)) == x.el(x.cat(zs.act_rr(h, g), zs.act_rl(h, g))); }},
      {"word g h = (g>>h)(g<<h)",
       [&](auto& g, auto&, auto& h, auto&) { return x.el(x.cat(g, h)) == x.el(x.cat(zs.act_lr(g, h), zs.act_ll(g, h))); }},
      {"word (h1h2)|>g", [&](auto& g, auto&, auto& h1, auto& h2) {
         return x.same(zs.act_rr(x.cat(h1, h2), g), zs.act_rr(h1, zs.act_rr(h2, g)));
       }},
      {"word h|>(g1g2)", [&](auto& g1, auto& g2, auto& h, auto&) {
         return x.same(zs.act_rr(h, x.cat(g1, g2)), x.cat(zs.act_rr(h, g1), zs.act_rr(zs.act_rl(h, g1), g2)));
       }},
      {"word h<|(g1g2)", [&](auto& g1, auto& g2, auto& h, auto&) {
         return x.same(zs.act_rl(h, x.cat(g1, g2)), zs.act_rl(zs.act_rl(h, g1), g2));
       }},
      {"word (h1h2)<|g", [&](auto& g, auto&, auto& h1, auto& h2) {
         return x.same(zs.act_rl(x.cat(h1, h2), g), x.cat(zs.act_rl(h1, zs.act_rr(h2, g)), zs.act_rl(h2, g)));
       }},
      {"word (g1g2)>>h", [&](auto& g1, auto& g2, auto& h, auto&) {
         return x.same(zs.act_lr(x.cat(g1, g2), h), zs.act_lr(g1, zs.act_lr(g2, h)));
       }},
      {"word g>>(h1h2)", [&](auto& g, auto&, auto& h1, auto& h2) {
         return x.same(zs.act_lr(g, x.cat(h1, h2)), x.cat(zs.act_lr(g, h1), zs.act_lr(zs.act_ll(g, h1), h2)));
       }},
      {"word g<<(h1h2)", [&](auto& g, auto&, auto& h1, auto& h2) {
         return x.same(zs.act_ll(g, x.cat(h1, h2)), zs.act_ll(zs.act_ll(g, h1), h2));
       }},
      {"word (g1g2)<<h", [&](auto& g1, auto& g2, auto& h, auto&) {
         return x.same(zs.act_ll(x.cat(g1, g2), h), x.cat(zs.act_ll(g1, zs.act_lr(g2, h)), zs.act_ll(g2, h)));
       }},
      {"word inverses", [&](auto& g, auto&, auto& h, auto&) {
         return x.same(zs.act_rr(h, zs.act_rr_inv(h, g)), g) && x.same(zs.act_rl(zs.act_rl_inv(h, g), g), h) &&
                x.same(zs.act_lr(g, zs.act_lr_inv(g, h)), h) && x.same(zs.act_ll(zs.act_ll_inv(g, h), h), g) &&
                x.same(zs.act_rr_inv(h, zs.act_rr(h, g)), g) && x.same(zs.act_lr_inv(g, zs.act_lr(g, h)), h);
       }},
      {"word inverse interplay", [&](auto& g, auto&, auto& h, auto&) {
         return x.same(zs.act_rl(h, zs.act_rr_inv(h, g)), zs.act_lr_inv(g, h)) &&
                x.same(zs.act_rr(zs.act_rl_inv(h, g), g), zs.act_ll_inv(g, h)) &&
                x.same(zs.act_ll(g, zs.act_lr_inv(g, h)), zs.act_rr_inv(h, g)) &&
                x.same(zs.act_lr(zs.act_ll_inv(g, h), h), zs.act_rl_inv(h, g));
       }},
      {"word (h1h2)^-1|>g", [&](auto& g, auto&, auto& h1, auto& h2) {
         return x.same(zs.act_rr_inv(x.cat(h1, h2), g), zs.act_rr_inv(h2, zs.act_rr_inv(h1, g)));
       }},
      {"word (g1g2)^-1>>h", [&](auto& g1, auto& g2, auto& h, auto&) {
         return x.same(zs.act_lr_inv(x.cat(g1, g2), h), zs.act_lr_inv(g2, zs.act_lr_inv(g1, h)));
       }},
      {"word h<|(g1g2)^-1", [&](auto& g1, auto& g2, auto& h, auto&) {
         return x.same(zs.act_rl_inv(h, x.cat(g1, g2)), zs.act_rl_inv(zs.act_rl_inv(h, g2), g1));
       }},
      {"word g<<(h1h2)^-1", [&](auto& g, auto&, auto& h1, auto& h2) {
         return x.same(zs.act_ll_inv(g, x.cat(h1, h2)), zs.act_ll_inv(zs.act_ll_inv(g, h2), h1));
       }},
      {"word h^-1|>(g1g2)", [&](auto& g1, auto& g2, auto& h, auto&) {
         return x.same(zs.act_rr_inv(h, x.cat(g1, g2)),
                       x.cat(zs.act_rr_inv(h, g1), zs.act_rr_inv(zs.act_lr_inv(g1, h), g2)));
       }},
      {"word g^-1>>(h1h2)", [&](auto& g, auto&, auto& h1, auto& h2) {
         return x.same(zs.act_lr_inv(g, x.cat(h1, h2)),
                       x.cat(zs.act_lr_inv(g, h1), zs.act_lr_inv(zs.act_rr_inv(h1, g), h2)));
       }},
      {"word (h1h2)<|g^-1", [&](auto& g, auto&, auto& h1, auto& h2) {
         return x.same(zs.act_rl_inv(x.cat(h1, h2), g),
                       x.cat(zs.act_rl_inv(h1, zs.act_ll_inv(g, h2)), zs.act_rl_inv(h2, g)));
       }},
      {"word (g1g2)<<h^-1", [&](auto& g1, auto& g2, auto& h, auto&) {
         return x.same(zs.act_ll_inv(x.cat(g1, g2), h),
                       x.cat(zs.act_ll_inv(g1, zs.act_rl_inv(h, g2)), zs.act_ll_inv(g2, h)));
       }},
  };
  for (const auto& [name, law] : laws) {
    for (std::size_t i = 0; i < opt.samples; ++i) {
      Word g1 = gw(), g2 = gw(), h1 = hw(), h2 = hw();
      c.expect(law(g1, g2, h1, h2), [&] { return x.args(name, g1, g2, h1, h2); });
    }
  }
}

void element_identities(Ctx& x, const SuiteOptions& opt) {
  const ZSStructure& zs = x.zs;
  const Germ& k = x.k;
  Checker& c = x.c;
  const std::uint64_t len = std::min<std::uint64_t>(opt.max_length, 4);
  std::vector<Element> ek = elements(k, len);
  std::vector<Element> eg, eh;
  for (const Word& w : normal_words(zs, Side::G, len)) eg.push_back(x.el(w));
  for (const Word& w : normal_words(zs, Side::H, len)) eh.push_back(x.el(w));
  std::map<Element, int> gh, hg;
  for (const Element& g : eg) {
    for (const Element& h : eh) {
      if (atom_length(k, g) + atom_length(k, h) > len) continue;
      ++gh[multiply(k, g, h)];
      ++hg[multiply(k, h, g)];
    }
  }
  for (const Element& e : ek) {
    auto at = [&](const char* law) { return std::string(law) + " at " + format_element(k, e); };
    c.expect(gh[e] == 1, [&] { return at("unique GH-decomposition"); });
    c.expect(hg[e] == 1, [&] { return at("unique HG-decomposition"); });
    auto [g, h] = zs.gh_decompose(e);
    c.expect(multiply(k, g, h) == e && zs.member_g(g) && zs.member_h(h), [&] { return at("gh_decompose"); });
    auto [h2, g2] = zs.hg_decompose(e);
    c.expect(multiply(k, h2, g2) == e && zs.member_g(g2) && zs.member_h(h2), [&] { return at("hg_decompose"); });
  }
  c.expect(gh.size() == ek.size() && hg.size() == ek.size(), "decompositions cover exactly the short elements");

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, ek.size() - 1);
  const bool all = ek.size() * ek.size() <= 250000;
  const std::size_t rounds = all ? ek.size() * ek.size() : 250000;
  for (std::size_t r = 0; r < rounds; ++r) {
    const Element& a = all ? ek[r / ek.size()] : ek[pick(rng)];
    const Element& b = all ? ek[r % ek.size()] : ek[pick(rng)];
    if (atom_length(k, a) + atom_length(k, b) > len) continue;
    Element ab = multiply(k, a, b);
    for (Side s : {Side::G, Side::H}) {
      if (!zs.member(s, ab)) continue;
      c.expect(zs.member(s, a) && zs.member(s, b), [&] {
        return "factor closure at " + format_element(k, a) + ", " + format_element(k, b);
      });
    }
  }
}

}  // namespace

CheckReport check_action_identities(const ZSStructure& zs, const SuiteOptions& opt) {
  Checker c("action-identities");
  Ctx x(zs, c);
  simple_identities(x);
  word_identities(x, opt);
  element_identities(x, opt);
  return c.report();
}

CheckReport check_nf_criteria(const ZSStructure& zs) {
  Checker c("nf-criteria");
  Ctx x(zs, c);
  const Germ& k = zs.germ();
  auto coprime = [&](SimpleId a, SimpleId b) { return k.meet(k.complement(a), b) == kUnit; };
  // a|b by definition: the normal form of a.b is a|b.
  auto bar = [&](SimpleId a, SimpleId b) {
    if (a == kUnit || b == kUnit) return false;
    return normal_form(k, {a, b}).word(k) == Word{a, b};
  };
  auto mul = [&](SimpleId a, SimpleId b) { return *k.product(a, b); };
  for (SimpleId g1 : zs.g_simples())
    for (SimpleId h1 : zs.h_simples())
      for (SimpleId g2 : zs.g_simples())
        for (SimpleId h2 : zs.h_simples()) {
          auto at = [&](const char* law) { return x.args(law, g1, h1, g2, h2); };
          SimpleId j1 = k.join(g1, h1), j2 = k.join(g2, h2);
          c.expect(coprime(j1, j2) == join_criterion(zs, g1, h1, g2, h2), [&] { return at("C_K(g1 v h1) ^ (g2 v h2)"); });
          c.expect(bar(j1, j2) == is_normal_join_pair(zs, g1, h1, g2, h2), [&] { return at("(g1 v h1) | (g2 v h2)"); });
          const std::tuple<PairShape, SimpleId, SimpleId, const char*> shapes[] = {
              {PairShape::gh_gh, mul(g1, h1), mul(g2, h2), "g1h1 | g2h2"},
              {PairShape::gh_hg, mul(g1, h1), mul(h2, g2), "g1h1 | h2g2"},
              {PairShape::hg_gh, mul(h1, g1), mul(g2, h2), "h1g1 | g2h2"},
              {PairShape::hg_hg, mul(h1, g1), mul(h2, g2), "h1g1 | h2g2"},
          };
          for (const auto& [shape, a, b, law] : shapes) {
            c.expect(coprime(a, b) == complement_criterion(zs, shape, g1, h1, g2, h2),
                     [&] { return at(law) + " (complement form)"; });
            c.expect(bar(a, b) == is_normal_pair(zs, g1, h1, g2, h2, shape), [&] { return at(law); });
          }
        }
  return c.report();
}

CheckReport check_algorithms(const ZSStructure& zs, const SuiteOptions& opt) {
  Checker c("algorithms");
  Ctx x(zs, c);
  const Germ& k = zs.germ();
  auto guarded = [&](auto&& f, auto&& what) {
    try {
      return f();
    } catch (const InvariantViolation& e) {
      c.fail(what() + ": " + e.what());
      return decltype(f())();
    }
  };

  for (const Word& w : normal_words(k, opt.max_length)) {
    NormalWord n = from_left_weighted(k, w);
    auto at = [&](const char* what) { return std::string(what) + " at " + format_normal(k, n); };
    NFPair p = guarded([&] { return split_nf(zs, n, true); }, [&] { return at("split_nf"); });
    auto [g, h] = zs.gh_decompose(Element::from_normal(k, n));
    c.expect(p.g == g.word(k) && p.h == h.word(k), [&] { return at("split_nf vs gh_decompose"); });
    NormalWord back = guarded([&] { return merge_nf(zs, p, true); }, [&] { return at("merge_nf"); });
    c.expect(back == n, [&] { return at("merge_nf(split_nf(w)) = w"); });
  }
  auto gws = normal_words(zs, Side::G, opt.max_length);
  auto hws = normal_words(zs, Side::H, opt.max_length);
  for (const Word& g : gws) {
    for (const Word& h : hws) {
      if (word_length(k, g) + word_length(k, h) > opt.max_length) continue;
      NFPair p{g, h};
      auto at = [&](const char* what) { return x.args(what, g, h); };
      NormalWord m = guarded([&] { return merge_nf(zs, p, true); }, [&] { return at("merge_nf"); });
      c.expect(m == normal_form(k, x.cat(g, h)), [&] { return at("merge_nf vs normal_form"); });
      NFPair q = guarded([&] { return split_nf(zs, m, true); }, [&] { return at("split_nf"); });
      c.expect(q == p, [&] { return at("split_nf(merge_nf(p)) = p"); });
    }
  }

  // Actions preserve normality of factor words (all words of up to 3 letters,
  // 4 when that stays small).
  for (Side side : {Side::G, Side::H}) {
    const auto& own = zs.simples(side);
    const auto& other = zs.simples(side == Side::G ? Side::H : Side::G);
    std::size_t letters = own.size() * own.size() * own.size() * own.size() * other.size() <= 2'000'000 ? 4 : 3;
    for (std::size_t len = 1; len <= letters; ++len) {
      for (const Word& w : all_words(own, len)) {
        bool normal = is_normal_word(zs, side, w);
        for (SimpleId a : other) {
          Word act = side == Side::G ? zs.act_rr(Word{a}, w) : zs.act_lr(Word{a}, w);
          Word inv = side == Side::G ? zs.act_rr_inv(Word{a}, w) : zs.act_lr_inv(Word{a}, w);
          c.expect(is_normal_word(zs, side, act) == normal && is_normal_word(zs, side, inv) == normal,
                   [&] { return x.args("actions preserve normality", Word{a}, w); });
        }
      }
    }
  }

  // Pushing an H letter through two factors: from C_H h ^ (g1>>h1) = 1 and
  // g1h1 | g2h2 follows h g1 | h1 g2, and h1 g2 | h2 when h2 != 1.
  auto bar = [&](SimpleId a, SimpleId b) { return b != kUnit && left_weighted(k, a, b); };
  auto mul = [&](SimpleId a, SimpleId b) { return *k.product(a, b); };
  for (SimpleId h : zs.h_simples())
    for (SimpleId g1 : zs.g_simples())
      for (SimpleId h1 : zs.h_simples()) {
        if (!factor_coprime(zs, Side::H, h, zs.act_lr(g1, h1))) continue;
        if (h1 != kUnit) {
          c.expect(bar(mul(h, g1), h1), [&] { return x.args("push, one factor", h, g1, h1); });
        }
        for (SimpleId g2 : zs.g_simples())
          for (SimpleId h2 : zs.h_simples()) {
            if (!bar(mul(g1, h1), mul(g2, h2))) continue;
            c.expect(bar(mul(h, g1), mul(h1, g2)) && (h2 == kUnit || bar(mul(h1, g2), h2)),
                     [&] { return x.args("push", h, g1, h1, g2, h2); });
          }
      }
  return c.report();
}

CheckReport check_bijections(const ZSStructure& zs, const SuiteOptions& opt) {
  Checker c("bijections");
  Ctx x(zs, c);
  const Germ& k = zs.germ();
  std::map<std::uint64_t, std::set<NormalWord>> k_side;
  for (const Word& w : normal_words(k, opt.max_length)) k_side[word_length(k, w)].insert(from_left_weighted(k, w));
  std::map<std::uint64_t, std::uint64_t> pairs;
  std::map<std::uint64_t, std::set<NormalWord>> phi_img, psi_img;
  for (const Word& g : normal_words(zs, Side::G, opt.max_length)) {
    for (const Word& h : normal_words(zs, Side::H, opt.max_length)) {
      std::uint64_t n = word_length(k, g) + word_length(k, h);
      if (n > opt.max_length) continue;
      ++pairs[n];
      NormalWord a = phi(zs, {g, h}, false);
      NormalWord b = psi(zs, {g, h}, false);
      c.expect(atom_length(k, Element::from_normal(k, b)) == n, [&] { return x.args("length of psi", g, h); });
      phi_img[n].insert(a);
      psi_img[n].insert(b);
      c.expect(phi_inv(zs, a, false) == NFPair{g, h}, [&] { return x.args("phi_inv(phi(p)) = p", g, h); });
    }
  }
  for (std::uint64_t n = 0; n <= opt.max_length; ++n) {
    auto at = [&](const char* what) { return std::string(what) + " at atom length " + std::to_string(n); };
    c.expect(pairs[n] == k_side[n].size(), [&] {
      return at("cardinality") + ": " + std::to_string(pairs[n]) + " pairs, " + std::to_string(k_side[n].size()) +
             " normal forms";
    });
    c.expect(phi_img[n].size() == pairs[n], [&] { return at("phi injective"); });
    c.expect(psi_img[n].size() == pairs[n], [&] { return at("psi injective"); });
    c.expect(phi_img[n] == k_side[n], [&] { return at("phi onto"); });
    c.expect(psi_img[n] == k_side[n], [&] { return at("psi onto"); });
  }
  return c.report();
}

}  // namespace garside::verify
