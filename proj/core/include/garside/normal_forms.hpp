#pragma once

// Translation between normal forms in K = G x H and pairs of normal forms
// in the factors.  Words here are over the K ids of the simples; a Delta
// power is spelled out as repeated Delta letters, so every word is in the
// barred language (letters are any non-unit simples).

#include <compare>

#include "garside/zappa_szep.hpp"

namespace garside {

struct NFPair {
  Word g;  ///< normal word over the simples of G
  Word h;  ///< normal word over the simples of H

  friend bool operator==(const NFPair&, const NFPair&) = default;
  friend auto operator<=>(const NFPair&, const NFPair&) = default;
};

/// x|y in the given factor: meet(complement_factor(x), y) = 1 and y != 1.
bool factor_bar(const ZSStructure& zs, Side side, SimpleId x, SimpleId y);
/// complement_factor(x) ^ y = 1 in the given factor.
bool factor_coprime(const ZSStructure& zs, Side side, SimpleId x, SimpleId y);

/// The word is in the barred normal-form language of the factor (K when
/// side is empty): no unit letters and every adjacent pair left-weighted.
bool is_normal_word(const ZSStructure& zs, Side side, const Word& w);
bool is_normal_word(const Germ& k, const Word& w);

/// Which products the two letters are: gh_gh means (g1 h1, g2 h2), and so on.
enum class PairShape { gh_gh, gh_hg, hg_gh, hg_hg };

/// Right-hand side of the complement form of the normal-form criteria,
/// e.g. for gh_gh: complement_G(g1 << h1) ^ g2 = 1 and complement_H(h1) ^ (g2 >> h2) = 1.
bool complement_criterion(const ZSStructure& zs, PairShape shape, SimpleId g1, SimpleId h1, SimpleId g2, SimpleId h2);

/// Right-hand side of the bar form, e.g. for gh_gh: (g1 << h1) | g2 and
/// h1 | (g2 >> h2).  That form needs g2 != 1 and h2 != 1; otherwise the
/// complement form is used together with "second letter is not 1".
bool is_normal_pair(const ZSStructure& zs, SimpleId g1, SimpleId h1, SimpleId g2, SimpleId h2,
                    PairShape shape = PairShape::gh_gh);

/// Factor-level test for (g1 v h1) followed by (g2 v h2):
/// complement_G(h1^-1 |> g1) ^ g2 = 1 and complement_H(g1^-1 >> h1) ^ h2 = 1.
bool join_criterion(const ZSStructure& zs, SimpleId g1, SimpleId h1, SimpleId g2, SimpleId h2);
/// Bar form of join_criterion (same fallback rule as is_normal_pair).
bool is_normal_join_pair(const ZSStructure& zs, SimpleId g1, SimpleId h1, SimpleId g2, SimpleId h2);

/// Normal forms of the GH-decomposition of the element w.  With `check`,
/// every intermediate word is tested for normality and InvariantViolation is
/// thrown if one is not.
NFPair split_nf(const ZSStructure& zs, const NormalWord& w, bool check = true);
/// Normal form of g1...gm h1...hn.  Delta_G and Delta_H letters may lead
/// their words; the K-level Delta power is read off at the end.
NormalWord merge_nf(const ZSStructure& zs, const NFPair& p, bool check = true);

/// phi = merge_nf, phi_inv = split_nf.
NormalWord phi(const ZSStructure& zs, const NFPair& p, bool check = true);
NFPair phi_inv(const ZSStructure& zs, const NormalWord& w, bool check = true);

/// Normal form of (g1...gm) v (h1...hn), computed as
/// phi(g, (g1...gm)^-1 >> h).
NormalWord psi(const ZSStructure& zs, const NFPair& p, bool check = true);

}  // namespace garside
