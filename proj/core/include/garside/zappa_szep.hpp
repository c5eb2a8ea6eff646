#pragma once

// Internal Zappa-Szep decompositions K = G x H of a Garside monoid, given by
// a bipartition of its atoms into unions of Delta-classes.  G is generated
// by the left atoms, H by the others.  Every k in K factors uniquely as
// k = g h = h' g', and the four actions are read off
//   h g = (h |> g)(h <| g),   g h = (g >> h)(g << h)
// written act_rr, act_rl, act_lr, act_ll below.

#include <optional>
#include <utility>
#include <vector>

#include "garside/element.hpp"
#include "garside/germ.hpp"

namespace garside {

enum class Side { G, H };

struct ZSOptions {
  /// Accept an empty or full set of left atoms (one factor trivial).
  bool allow_trivial = false;
};

class ZSStructure {
 public:
  /// Throws NotAUnionOfClasses, or DecompositionError when an invariant
  /// fails (the witness is in the message).
  static ZSStructure build(const Germ& k, std::vector<SimpleId> left_atoms, ZSOptions options = {});

  /// The same decomposition read as K = H x G.
  ZSStructure mirror() const;

  const Germ& germ() const noexcept { return k_; }
  const std::vector<SimpleId>& left_atoms() const noexcept { return atoms_[0]; }
  const std::vector<SimpleId>& right_atoms() const noexcept { return atoms_[1]; }
  const std::vector<SimpleId>& simples(Side s) const noexcept { return simples_[i(s)]; }
  const std::vector<SimpleId>& g_simples() const noexcept { return simples_[0]; }
  const std::vector<SimpleId>& h_simples() const noexcept { return simples_[1]; }
  SimpleId delta(Side s) const noexcept { return delta_[i(s)]; }
  SimpleId delta_g() const noexcept { return delta_[0]; }
  SimpleId delta_h() const noexcept { return delta_[1]; }

  bool member(Side s, SimpleId x) const noexcept { return k_.left_divides(x, delta_[i(s)]); }
  bool member_g(SimpleId x) const noexcept { return member(Side::G, x); }
  bool member_h(SimpleId x) const noexcept { return member(Side::H, x); }
  /// Every letter of the normal form lies in the factor.
  bool member(Side s, const Element& x) const;
  bool member_g(const Element& x) const { return member(Side::G, x); }
  bool member_h(const Element& x) const { return member(Side::H, x); }

  /// x = g h with g in G, h in H, for a simple x.
  std::pair<SimpleId, SimpleId> gh(SimpleId x) const { return gh_[index(x)]; }
  /// x = h g with h in H, g in G, for a simple x.
  std::pair<SimpleId, SimpleId> hg(SimpleId x) const { return hg_[index(x)]; }

  /// Element-level decompositions.  g = gcd(x, Delta_G^N) with N the atom
  /// length of x; the result is checked (DecompositionError on failure).
  std::pair<Element, Element> gh_decompose(const Element& x) const;
  std::pair<Element, Element> hg_decompose(const Element& x) const;

  /// Complement inside a factor: the simple c with x c = Delta_G (resp. H).
  SimpleId complement(Side s, SimpleId x) const;

  // Actions on simples.  DomainError for arguments outside the factor.
  SimpleId act_rr(SimpleId h, SimpleId g) const;      // h |> g
  SimpleId act_rl(SimpleId h, SimpleId g) const;      // h <| g
  SimpleId act_lr(SimpleId g, SimpleId h) const;      // g >> h
  SimpleId act_ll(SimpleId g, SimpleId h) const;      // g << h
  SimpleId act_rr_inv(SimpleId h, SimpleId g) const;  // h^-1 |> g
  SimpleId act_rl_inv(SimpleId h, SimpleId g) const;  // h <| g^-1
  SimpleId act_lr_inv(SimpleId g, SimpleId h) const;  // g^-1 >> h
  SimpleId act_ll_inv(SimpleId g, SimpleId h) const;  // g << h^-1

  // Actions on words of factor simples, extended letter by letter.  The
  // first argument is the acting word.
  Word act_rr(const Word& h, const Word& g) const;
  Word act_rl(const Word& h, const Word& g) const;
  Word act_lr(const Word& g, const Word& h) const;
  Word act_ll(const Word& g, const Word& h) const;
  Word act_rr_inv(const Word& h, const Word& g) const;
  Word act_rl_inv(const Word& h, const Word& g) const;
  Word act_lr_inv(const Word& g, const Word& h) const;
  Word act_ll_inv(const Word& g, const Word& h) const;

  /// The parabolic factor as a germ of its own.  Its simples are the factor
  /// simples in increasing K-id order with the same names.
  const Germ& factor_germ(Side s) const { return *factor_[i(s)]; }
  /// Factor-germ id of a K simple in the factor (DomainError otherwise).
  SimpleId to_factor(Side s, SimpleId x) const;
  SimpleId from_factor(Side s, SimpleId x) const { return simples_[i(s)][index(x)]; }
  Word to_factor(Side s, const Word& w) const;
  Word from_factor(Side s, const Word& w) const;

 private:
  ZSStructure(const Germ& k) : k_(k) {}
  static constexpr std::size_t i(Side s) noexcept { return s == Side::G ? 0 : 1; }
  void require(Side s, SimpleId x) const;
  void require(Side s, const Word& w) const;
  std::size_t pos(Side s, SimpleId x) const { return static_cast<std::size_t>(pos_[i(s)][index(x)]); }
  void build_tables();

  Germ k_;
  std::vector<SimpleId> atoms_[2];
  std::vector<SimpleId> simples_[2];
  SimpleId delta_[2] = {kUnit, kUnit};
  // pos_[side][k id] = position in simples_[side], or -1.
  std::vector<std::int32_t> pos_[2];
  std::vector<std::pair<SimpleId, SimpleId>> gh_, hg_;
  // Tables indexed [pos(h) * |G| + pos(g)] resp. [pos(g) * |H| + pos(h)].
  std::vector<SimpleId> rr_, rl_, lr_, ll_, rr_inv_, rl_inv_, lr_inv_, ll_inv_;
  std::shared_ptr<const Germ> factor_[2];
};

}  // namespace garside
