#include "garside/normal_forms.hpp"

#include "garside/word_io.hpp"

namespace garside {

namespace {

void ensure(bool ok, const ZSStructure& zs, const char* where, const Word& w) {
  if (!ok) {
    throw InvariantViolation(std::string(where) + " produced a word that is not in normal form: " +
                             format_word(zs.germ(), w));
  }
}

}  // namespace

bool factor_coprime(const ZSStructure& zs, Side side, SimpleId x, SimpleId y) {
  const Germ& f = zs.factor_germ(side);
  SimpleId fx = zs.to_factor(side, x), fy = zs.to_factor(side, y);
  return f.meet(f.complement(fx), fy) == kUnit;
}

bool factor_bar(const ZSStructure& zs, Side side, SimpleId x, SimpleId y) {
  return y != kUnit && factor_coprime(zs, side, x, y);
}

bool is_normal_word(const Germ& k, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == kUnit) return false;
    if (i > 0 && !left_weighted(k, w[i - 1], w[i])) return false;
  }
  return true;
}

bool is_normal_word(const ZSStructure& zs, Side side, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!zs.member(side, w[i]) || w[i] == kUnit) return false;
    if (i > 0 && !factor_bar(zs, side, w[i - 1], w[i])) return false;
  }
  return true;
}

bool complement_criterion(const ZSStructure& zs, PairShape shape, SimpleId g1, SimpleId h1, SimpleId g2,
                          SimpleId h2) {
  switch (shape) {
    case PairShape::gh_gh:
      return factor_coprime(zs, Side::G, zs.act_ll(g1, h1), g2) && factor_coprime(zs, Side::H, h1, zs.act_lr(g2, h2));
    case PairShape::gh_hg:
      return factor_coprime(zs, Side::G, zs.act_ll(g1, h1), zs.act_rr(h2, g2)) &&
             factor_coprime(zs, Side::H, h1, h2);
    case PairShape::hg_gh:
      return factor_coprime(zs, Side::G, g1, g2) && factor_coprime(zs, Side::H, zs.act_rl(h1, g1), zs.act_lr(g2, h2));
    case PairShape::hg_hg:
      return factor_coprime(zs, Side::G, g1, zs.act_rr(h2, g2)) && factor_coprime(zs, Side::H, zs.act_rl(h1, g1), h2);
  }
  return false;
}

bool is_normal_pair(const ZSStructure& zs, SimpleId g1, SimpleId h1, SimpleId g2, SimpleId h2, PairShape shape) {
  if (g2 == kUnit || h2 == kUnit) {
    return !(g2 == kUnit && h2 == kUnit) && complement_criterion(zs, shape, g1, h1, g2, h2);
  }
  switch (shape) {
    case PairShape::gh_gh:
      return factor_bar(zs, Side::G, zs.act_ll(g1, h1), g2) && factor_bar(zs, Side::H, h1, zs.act_lr(g2, h2));
    case PairShape::gh_hg:
      return factor_bar(zs, Side::G, zs.act_ll(g1, h1), zs.act_rr(h2, g2)) && factor_bar(zs, Side::H, h1, h2);
    case PairShape::hg_gh:
      return factor_bar(zs, Side::G, g1, g2) && factor_bar(zs, Side::H, zs.act_rl(h1, g1), zs.act_lr(g2, h2));
    case PairShape::hg_hg:
      return factor_bar(zs, Side::G, g1, zs.act_rr(h2, g2)) && factor_bar(zs, Side::H, zs.act_rl(h1, g1), h2);
  }
  return false;
}

bool join_criterion(const ZSStructure& zs, SimpleId g1, SimpleId h1, SimpleId g2, SimpleId h2) {
  return factor_coprime(zs, Side::G, zs.act_rr_inv(h1, g1), g2) &&
         factor_coprime(zs, Side::H, zs.act_lr_inv(g1, h1), h2);
}

bool is_normal_join_pair(const ZSStructure& zs, SimpleId g1, SimpleId h1, SimpleId g2, SimpleId h2) {
  if (g2 == kUnit || h2 == kUnit) return !(g2 == kUnit && h2 == kUnit) && join_criterion(zs, g1, h1, g2, h2);
  return factor_bar(zs, Side::G, zs.act_rr_inv(h1, g1), g2) && factor_bar(zs, Side::H, zs.act_lr_inv(g1, h1), h2);
}

NFPair split_nf(const ZSStructure& zs, const NormalWord& w, bool check) {
  const Germ& k = zs.germ();
  Word word_h = w.word(k);
  Word word_g;
  while (!word_h.empty()) {
    const std::size_t l = word_h.size();
    Word g(l), h(l);
    for (std::size_t i = 0; i < l; ++i) std::tie(g[i], h[i]) = zs.gh(word_h[i]);
    if (g[0] == kUnit) break;
    word_g.push_back(g[0]);
    Word next;
    for (std::size_t i = 0; i + 1 < l; ++i) next.push_back(*k.product(h[i], g[i + 1]));
    if (h[l - 1] != kUnit) next.push_back(h[l - 1]);
    word_h = std::move(next);
    if (check) ensure(is_normal_word(k, word_h), zs, "split_nf", word_h);
  }
  if (check) {
    ensure(is_normal_word(zs, Side::G, word_g), zs, "split_nf", word_g);
    ensure(is_normal_word(zs, Side::H, word_h), zs, "split_nf", word_h);
  }
  return {std::move(word_g), std::move(word_h)};
}

NormalWord merge_nf(const ZSStructure& zs, const NFPair& p, bool check) {
  const Germ& k = zs.germ();
  for (SimpleId g : p.g) {
    if (!zs.member_g(g)) throw DomainError("'" + k.name(g) + "' is not a simple of G");
  }
  for (SimpleId h : p.h) {
    if (!zs.member_h(h)) throw DomainError("'" + k.name(h) + "' is not a simple of H");
  }
  if (check) {
    ensure(is_normal_word(zs, Side::G, p.g), zs, "merge_nf input", p.g);
    ensure(is_normal_word(zs, Side::H, p.h), zs, "merge_nf input", p.h);
  }
  Word word_g = p.g;
  Word word_k = p.h;
  while (!word_g.empty()) {
    SimpleId g = word_g.back();
    word_g.pop_back();
    const std::size_t l = word_k.size();
    if (l == 0) {
      word_k = {g};
      continue;
    }
    Word h(l), gg(l);
    for (std::size_t i = 0; i < l; ++i) std::tie(h[i], gg[i]) = zs.hg(word_k[i]);
    Word next{*k.product(g, h[0])};
    for (std::size_t i = 1; i < l; ++i) next.push_back(*k.product(gg[i - 1], h[i]));
    if (gg[l - 1] != kUnit) next.push_back(gg[l - 1]);
    word_k = std::move(next);
    if (check) ensure(is_normal_word(k, word_k), zs, "merge_nf", word_k);
  }
  return from_left_weighted(k, word_k);
}

NormalWord phi(const ZSStructure& zs, const NFPair& p, bool check) { return merge_nf(zs, p, check); }

NFPair phi_inv(const ZSStructure& zs, const NormalWord& w, bool check) { return split_nf(zs, w, check); }

NormalWord psi(const ZSStructure& zs, const NFPair& p, bool check) {
  return merge_nf(zs, NFPair{p.g, zs.act_lr_inv(p.g, p.h)}, check);
}

}  // namespace garside
