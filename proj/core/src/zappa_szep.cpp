#include "garside/zappa_szep.hpp"

#include <algorithm>

#include "garside/quasicenter.hpp"
#include "garside/word_io.hpp"

namespace garside {

namespace {

// The simple an element equals, if it is one.
std::optional<SimpleId> as_simple(const Germ& k, const Element& x) {
  const NormalWord& w = x.nf();
  if (w.is_identity()) return kUnit;
  if (w.deltas == 1 && w.factors.empty()) return k.delta();
  if (w.deltas == 0 && w.factors.size() == 1) return w.factors[0];
  return std::nullopt;
}

std::string names(const Germ& k, const std::vector<SimpleId>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + k.name(s[i]);
  return out + "}";
}

}  // namespace

ZSStructure ZSStructure::build(const Germ& k, std::vector<SimpleId> left, ZSOptions options) {
  ZSStructure z(k);
  std::sort(left.begin(), left.end());
  if (std::adjacent_find(left.begin(), left.end()) != left.end()) throw DomainError("repeated left atom");
  for (SimpleId a : left) {
    if (!k.contains(a) || !k.is_atom(a)) throw DomainError("'" + (k.contains(a) ? k.name(a) : "?") + "' is not an atom");
  }
  std::vector<SimpleId> right;
  for (SimpleId a : k.atoms()) {
    if (!std::binary_search(left.begin(), left.end(), a)) right.push_back(a);
  }
  if (!options.allow_trivial && (left.empty() || right.empty())) {
    throw DomainError("left atoms must be a non-empty proper subset of the atoms");
  }
  AtomClassPartition classes = atom_classes(k);
  for (const auto& cls : classes.classes) {
    std::size_t in = 0;
    for (SimpleId a : cls) in += std::binary_search(left.begin(), left.end(), a);
    if (in != 0 && in != cls.size()) {
      throw NotAUnionOfClasses("atom class " + names(k, cls) + " is split by the left atoms " + names(k, left));
    }
  }
  z.atoms_[0] = left;
  z.atoms_[1] = right;

  for (std::size_t side = 0; side < 2; ++side) {
    // Simples reachable from 1 by right multiplication with the side's atoms.
    std::vector<bool> in(k.size(), false);
    std::vector<SimpleId> stack{kUnit};
    in[0] = true;
    while (!stack.empty()) {
      SimpleId x = stack.back();
      stack.pop_back();
      for (SimpleId a : z.atoms_[side]) {
        if (auto y = k.product(x, a); y && !in[index(*y)]) {
          in[index(*y)] = true;
          stack.push_back(*y);
        }
      }
    }
    auto& simples = z.simples_[side];
    z.pos_[side].assign(k.size(), -1);
    SimpleId join = kUnit;
    for (std::uint32_t s = 0; s < k.size(); ++s) {
      if (!in[s]) continue;
      z.pos_[side][s] = static_cast<std::int32_t>(simples.size());
      simples.push_back(simple(s));
      join = k.join(join, simple(s));
    }
    z.delta_[side] = join;
    const char* label = side == 0 ? "G" : "H";
    SimpleId from_classes = kUnit;
    for (SimpleId a : z.atoms_[side]) from_classes = k.join(from_classes, delta_of_simple(k, a));
    if (from_classes != join) {
      throw DecompositionError(std::string("Delta_") + label + " = " + k.name(join) +
                               " differs from the join of the atom Deltas " + k.name(from_classes));
    }
    for (std::uint32_t s = 0; s < k.size(); ++s) {
      if (k.left_divides(simple(s), join) != in[s] || k.right_divides(simple(s), join) != in[s]) {
        throw DecompositionError(std::string("not parabolic: ") + k.name(simple(s)) + (in[s] ? " is" : " is not") +
                                 " a simple of " + label + " but divisibility by Delta_" + label + " disagrees");
      }
    }
  }
  if (k.product(z.delta_[0], z.delta_[1]) != k.delta() || k.product(z.delta_[1], z.delta_[0]) != k.delta()) {
    throw DecompositionError("Delta_G Delta_H = Delta_H Delta_G = Delta fails for Delta_G = " + k.name(z.delta_[0]) +
                             ", Delta_H = " + k.name(z.delta_[1]));
  }

  // Unique GH and HG decompositions of every simple.
  const std::pair<SimpleId, SimpleId> none{simple(kMaxSimples), simple(kMaxSimples)};
  z.gh_.assign(k.size(), none);
  z.hg_.assign(k.size(), none);
  for (SimpleId g : z.simples_[0]) {
    for (SimpleId h : z.simples_[1]) {
      if (auto x = k.product(g, h)) {
        if (z.gh_[index(*x)] != none) {
          throw DecompositionError("two GH-decompositions of " + k.name(*x) + ": " + k.name(z.gh_[index(*x)].first) +
                                   "*" + k.name(z.gh_[index(*x)].second) + " and " + k.name(g) + "*" + k.name(h));
        }
        z.gh_[index(*x)] = {g, h};
      }
      if (auto x = k.product(h, g)) {
        if (z.hg_[index(*x)] != none) {
          throw DecompositionError("two HG-decompositions of " + k.name(*x) + ": " + k.name(z.hg_[index(*x)].first) +
                                   "*" + k.name(z.hg_[index(*x)].second) + " and " + k.name(h) + "*" + k.name(g));
        }
        z.hg_[index(*x)] = {h, g};
      }
    }
  }
  for (std::uint32_t x = 0; x < k.size(); ++x) {
    if (z.gh_[x] == none) throw DecompositionError("no GH-decomposition of " + k.name(simple(x)));
    if (z.hg_[x] == none) throw DecompositionError("no HG-decomposition of " + k.name(simple(x)));
  }

  z.build_tables();
  return z;
}

void ZSStructure::build_tables() {
  const auto& G = simples_[0];
  const auto& H = simples_[1];
  const std::size_t ng = G.size(), nh = H.size();
  rr_.assign(nh * ng, kUnit);
  rl_.assign(nh * ng, kUnit);
  lr_.assign(ng * nh, kUnit);
  ll_.assign(ng * nh, kUnit);
  auto simple_part = [&](const Element& x, Side s, const std::string& what) {
    auto v = as_simple(k_, x);
    if (!v || !member(s, *v)) {
      throw DecompositionError(what + " is " + format_element(k_, x) + ", not a simple of " +
                               (s == Side::G ? "G" : "H"));
    }
    return *v;
  };
  for (std::size_t hi = 0; hi < nh; ++hi) {
    for (std::size_t gi = 0; gi < ng; ++gi) {
      SimpleId h = H[hi], g = G[gi];
      auto [g2, h2] = gh_decompose(Element::from_word(k_, {h, g}));
      std::string at = k_.name(h) + "*" + k_.name(g);
      rr_[hi * ng + gi] = simple_part(g2, Side::G, "G-part of " + at);
      rl_[hi * ng + gi] = simple_part(h2, Side::H, "H-part of " + at);
    }
  }
  for (std::size_t gi = 0; gi < ng; ++gi) {
    for (std::size_t hi = 0; hi < nh; ++hi) {
      SimpleId h = H[hi], g = G[gi];
      auto [h2, g2] = hg_decompose(Element::from_word(k_, {g, h}));
      std::string at = k_.name(g) + "*" + k_.name(h);
      lr_[gi * nh + hi] = simple_part(h2, Side::H, "H-part of " + at);
      ll_[gi * nh + hi] = simple_part(g2, Side::G, "G-part of " + at);
    }
  }

  // Each action is a bijection in its acted-on argument; store inverses.
  rr_inv_.assign(nh * ng, kUnit);
  rl_inv_.assign(nh * ng, kUnit);
  lr_inv_.assign(ng * nh, kUnit);
  ll_inv_.assign(ng * nh, kUnit);
  auto fail = [&](const std::string& what, SimpleId fixed, SimpleId y) {
    throw DecompositionError(what + " is not a bijection: for " + k_.name(fixed) + " the value " + k_.name(y) +
                             " is hit twice");
  };
  for (std::size_t hi = 0; hi < nh; ++hi) {
    std::vector<bool> hit(ng, false);
    for (std::size_t gi = 0; gi < ng; ++gi) {
      SimpleId y = rr_[hi * ng + gi];
      std::size_t p = pos(Side::G, y);
      if (hit[p]) fail("h |> .", H[hi], y);
      hit[p] = true;
      rr_inv_[hi * ng + p] = G[gi];
    }
  }
  for (std::size_t gi = 0; gi < ng; ++gi) {
    std::vector<bool> hit(nh, false);
    for (std::size_t hi = 0; hi < nh; ++hi) {
      SimpleId y = rl_[hi * ng + gi];
      std::size_t p = pos(Side::H, y);
      if (hit[p]) fail(". <| g", G[gi], y);
      hit[p] = true;
      rl_inv_[p * ng + gi] = H[hi];
    }
  }
  for (std::size_t gi = 0; gi < ng; ++gi) {
    std::vector<bool> hit(nh, false);
    for (std::size_t hi = 0; hi < nh; ++hi) {
      SimpleId y = lr_[gi * nh + hi];
      std::size_t p = pos(Side::H, y);
      if (hit[p]) fail("g >> .", G[gi], y);
      hit[p] = true;
      lr_inv_[gi * nh + p] = H[hi];
    }
  }
  for (std::size_t hi = 0; hi < nh; ++hi) {
    std::vector<bool> hit(ng, false);
    for (std::size_t gi = 0; gi < ng; ++gi) {
      SimpleId y = ll_[gi * nh + hi];
      std::size_t p = pos(Side::G, y);
      if (hit[p]) fail(". << h", H[hi], y);
      hit[p] = true;
      ll_inv_[p * nh + hi] = G[gi];
    }
  }

  for (std::size_t side = 0; side < 2; ++side) {
    const auto& S = simples_[side];
    std::vector<std::string> nm;
    for (SimpleId s : S) nm.push_back(k_.name(s));
    GermData d = GermData::with_names(nm, simple(static_cast<std::uint32_t>(pos_[side][index(delta_[side])])));
    for (std::size_t a = 0; a < S.size(); ++a) {
      for (std::size_t b = 0; b < S.size(); ++b) {
        if (auto x = k_.product(S[a], S[b])) {
          d.set(simple(static_cast<std::uint32_t>(a)), simple(static_cast<std::uint32_t>(b)),
                simple(static_cast<std::uint32_t>(pos_[side][index(*x)])));
        }
      }
    }
    try {
      factor_[side] = std::make_shared<const Germ>(std::move(d), Verify::full);
    } catch (const GermValidationError& e) {
      throw DecompositionError(std::string("factor ") + (side == 0 ? "G" : "H") + " is not a Garside germ: " + e.what());
    }
  }
}

ZSStructure ZSStructure::mirror() const { return build(k_, atoms_[1], ZSOptions{true}); }

bool ZSStructure::member(Side s, const Element& x) const {
  for (SimpleId y : x.word(k_)) {
    if (!member(s, y)) return false;
  }
  return true;
}

std::pair<Element, Element> ZSStructure::gh_decompose(const Element& x) const {
  const std::uint64_t n = atom_length(k_, x);
  Element dg = Element::from_word(k_, Word(n, delta_[0]));
  Element g = gcd(k_, x, dg);
  Element h = left_quotient(k_, g, x);
  if (!member(Side::H, h) || !member(Side::G, g)) {
    throw DecompositionError("GH-decomposition of " + format_element(k_, x) + " failed");
  }
  return {g, h};
}

std::pair<Element, Element> ZSStructure::hg_decompose(const Element& x) const {
  const std::uint64_t n = atom_length(k_, x);
  Element dg = Element::from_word(k_, Word(n, delta_[0]));
  Element g = rgcd(k_, x, dg);
  Element h = right_quotient(k_, g, x);
  if (!member(Side::H, h) || !member(Side::G, g)) {
    throw DecompositionError("HG-decomposition of " + format_element(k_, x) + " failed");
  }
  return {h, g};
}

SimpleId ZSStructure::complement(Side s, SimpleId x) const {
  require(s, x);
  return k_.lcomp(x, delta_[i(s)]);
}

void ZSStructure::require(Side s, SimpleId x) const {
  if (!k_.contains(x) || pos_[i(s)][index(x)] < 0) {
    throw DomainError("'" + (k_.contains(x) ? k_.name(x) : std::string("?")) + "' is not a simple of " +
                      (s == Side::G ? "G" : "H"));
  }
}

void ZSStructure::require(Side s, const Word& w) const {
  for (SimpleId x : w) require(s, x);
}

SimpleId ZSStructure::act_rr(SimpleId h, SimpleId g) const {
  require(Side::H, h), require(Side::G, g);
  return rr_[pos(Side::H, h) * simples_[0].size() + pos(Side::G, g)];
}
SimpleId ZSStructure::act_rl(SimpleId h, SimpleId g) const {
  require(Side::H, h), require(Side::G, g);
  return rl_[pos(Side::H, h) * simples_[0].size() + pos(Side::G, g)];
}
SimpleId ZSStructure::act_lr(SimpleId g, SimpleId h) const {
  require(Side::G, g), require(Side::H, h);
  return lr_[pos(Side::G, g) * simples_[1].size() + pos(Side::H, h)];
}
SimpleId ZSStructure::act_ll(SimpleId g, SimpleId h) const {
  require(Side::G, g), require(Side::H, h);
  return ll_[pos(Side::G, g) * simples_[1].size() + pos(Side::H, h)];
}
SimpleId ZSStructure::act_rr_inv(SimpleId h, SimpleId g) const {
  require(Side::H, h), require(Side::G, g);
  return rr_inv_[pos(Side::H, h) * simples_[0].size() + pos(Side::G, g)];
}
SimpleId ZSStructure::act_rl_inv(SimpleId h, SimpleId g) const {
  require(Side::H, h), require(Side::G, g);
  return rl_inv_[pos(Side::H, h) * simples_[0].size() + pos(Side::G, g)];
}
SimpleId ZSStructure::act_lr_inv(SimpleId g, SimpleId h) const {
  require(Side::G, g), require(Side::H, h);
  return lr_inv_[pos(Side::G, g) * simples_[1].size() + pos(Side::H, h)];
}
SimpleId ZSStructure::act_ll_inv(SimpleId g, SimpleId h) const {
  require(Side::G, g), require(Side::H, h);
  return ll_inv_[pos(Side::G, g) * simples_[1].size() + pos(Side::H, h)];
}

// h |> (g1.g2...) = (h |> g1).((h <| g1) |> (g2...)), and so on for the
// other seven; an acting word is folded one letter at a time.

Word ZSStructure::act_rr(const Word& hw, const Word& gw) const {
  require(Side::H, hw), require(Side::G, gw);
  Word g = gw;
  for (auto it = hw.rbegin(); it != hw.rend(); ++it) {
    SimpleId h = *it;
    for (auto& x : g) {
      SimpleId next = act_rl(h, x);
      x = act_rr(h, x);
      h = next;
    }
  }
  return g;
}

Word ZSStructure::act_rl(const Word& hw, const Word& gw) const {
  require(Side::H, hw), require(Side::G, gw);
  Word h = hw;
  for (SimpleId g0 : gw) {
    SimpleId g = g0;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
      SimpleId next = act_rr(*it, g);
      *it = act_rl(*it, g);
      g = next;
    }
  }
  return h;
}

Word ZSStructure::act_lr(const Word& gw, const Word& hw) const {
  require(Side::G, gw), require(Side::H, hw);
  Word h = hw;
  for (auto it = gw.rbegin(); it != gw.rend(); ++it) {
    SimpleId g = *it;
    for (auto& x : h) {
      SimpleId next = act_ll(g, x);
      x = act_lr(g, x);
      g = next;
    }
  }
  return h;
}

Word ZSStructure::act_ll(const Word& gw, const Word& hw) const {
  require(Side::G, gw), require(Side::H, hw);
  Word g = gw;
  for (SimpleId h0 : hw) {
    SimpleId h = h0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      SimpleId next = act_lr(*it, h);
      *it = act_ll(*it, h);
      h = next;
    }
  }
  return g;
}

Word ZSStructure::act_rr_inv(const Word& hw, const Word& gw) const {
  require(Side::H, hw), require(Side::G, gw);
  Word g = gw;
  for (SimpleId h0 : hw) {
    SimpleId h = h0;
    for (auto& x : g) {
      SimpleId next = act_lr_inv(x, h);
      x = act_rr_inv(h, x);
      h = next;
    }
  }
  return g;
}

Word ZSStructure::act_rl_inv(const Word& hw, const Word& gw) const {
  require(Side::H, hw), require(Side::G, gw);
  Word h = hw;
  for (auto git = gw.rbegin(); git != gw.rend(); ++git) {
    SimpleId g = *git;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
      SimpleId next = act_ll_inv(g, *it);
      *it = act_rl_inv(*it, g);
      g = next;
    }
  }
  return h;
}

Word ZSStructure::act_lr_inv(const Word& gw, const Word& hw) const {
  require(Side::G, gw), require(Side::H, hw);
  Word h = hw;
  for (SimpleId g0 : gw) {
    SimpleId g = g0;
    for (auto& x : h) {
      SimpleId next = act_rr_inv(x, g);
      x = act_lr_inv(g, x);
      g = next;
    }
  }
  return h;
}

Word ZSStructure::act_ll_inv(const Word& gw, const Word& hw) const {
  require(Side::G, gw), require(Side::H, hw);
  Word g = gw;
  for (auto hit = hw.rbegin(); hit != hw.rend(); ++hit) {
    SimpleId h = *hit;
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      SimpleId next = act_rl_inv(h, *it);
      *it = act_ll_inv(*it, h);
      h = next;
    }
  }
  return g;
}

SimpleId ZSStructure::to_factor(Side s, SimpleId x) const {
  require(s, x);
  return simple(static_cast<std::uint32_t>(pos(s, x)));
}

Word ZSStructure::to_factor(Side s, const Word& w) const {
  Word out;
  for (SimpleId x : w) out.push_back(to_factor(s, x));
  return out;
}

Word ZSStructure::from_factor(Side s, const Word& w) const {
  Word out;
  for (SimpleId x : w) {
    if (index(x) >= simples_[i(s)].size()) throw DomainError("factor simple out of range");
    out.push_back(from_factor(s, x));
  }
  return out;
}

}  // namespace garside
