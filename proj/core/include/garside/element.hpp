#pragma once

// Elements of the Garside monoid presented by a germ, stored as left normal
// forms Delta^k x1|x2|...|xl.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "garside/germ.hpp"

namespace garside {

/// A word over simples; no normality assumed.
using Word = std::vector<SimpleId>;

/// Delta^deltas * x1 * ... * xl with every xi proper (neither 1 nor Delta)
/// and each adjacent pair left-weighted.
struct NormalWord {
  std::uint64_t deltas = 0;
  Word factors;

  std::uint64_t inf() const noexcept { return deltas; }
  std::uint64_t sup() const noexcept { return deltas + factors.size(); }
  std::uint64_t cl() const noexcept { return factors.size(); }
  bool is_identity() const noexcept { return deltas == 0 && factors.empty(); }
  /// Deltas expanded into letters, followed by the factors.
  Word word(const Germ& g) const;

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  friend auto operator<=>(const NormalWord& a, const NormalWord& b) {
    if (auto c = a.deltas <=> b.deltas; c != 0) return c;
    return a.factors <=> b.factors;
  }
};

/// x|y: the pair (x, y) is left-weighted, meet(complement(x), y) = 1.
bool left_weighted(const Germ& g, SimpleId x, SimpleId y);

/// One local rewriting step (s, t) -> (s u, u\t) with u = meet(complement(s), t).
/// Returns false when the pair was already left-weighted.
bool left_weight(const Germ& g, SimpleId& s, SimpleId& t);

/// Whether the word satisfies every NormalWord invariant.
bool is_normal(const Germ& g, const NormalWord& w);

/// Left normal form of the product of the letters.
NormalWord normal_form(const Germ& g, const Word& w);

/// Reads off the normal form of a word in which every adjacent pair is
/// left-weighted (the fixed points of left_weight): leading Deltas become
/// the prefix and trailing units are dropped.  Throws DomainError if the
/// word is not such a fixed point.
NormalWord from_left_weighted(const Germ& g, const Word& w);

class Element {
 public:
  /// The identity.
  Element() = default;

  static Element from_word(const Germ& g, const Word& w) { return Element(normal_form(g, w)); }
  /// Throws DomainError unless w is normal.
  static Element from_normal(const Germ& g, NormalWord w);
  static Element from_simple(const Germ& g, SimpleId s) { return from_word(g, {s}); }
  static Element delta_power(std::uint64_t k) {
    Element e;
    e.nf_.deltas = k;
    return e;
  }

  const NormalWord& nf() const noexcept { return nf_; }
  std::uint64_t inf() const noexcept { return nf_.inf(); }
  std::uint64_t sup() const noexcept { return nf_.sup(); }
  std::uint64_t cl() const noexcept { return nf_.cl(); }
  bool is_identity() const noexcept { return nf_.is_identity(); }
  /// Delta ^ first factor: Delta if inf > 0, else x1 (or 1).
  SimpleId first(const Germ& g) const;
  Word word(const Germ& g) const { return nf_.word(g); }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) { return a.nf_ <=> b.nf_; }

 private:
  explicit Element(NormalWord w) : nf_(std::move(w)) {}
  NormalWord nf_;
};

Element multiply(const Germ& g, const Element& x, const Element& y);
/// x * s for a simple s.
Element multiply(const Germ& g, const Element& x, SimpleId s);

/// Prefix-order gcd and lcm.
Element gcd(const Germ& g, const Element& x, const Element& y);
Element lcm(const Germ& g, const Element& x, const Element& y);
/// x\y, the element with x (x\y) = lcm(x, y).
Element left_complement(const Germ& g, const Element& x, const Element& y);
/// x is a prefix of y.
bool divides(const Germ& g, const Element& x, const Element& y);
/// The z with x z = y; throws DomainError unless x divides y.
Element left_quotient(const Germ& g, const Element& x, const Element& y);

/// Suffix-order counterparts, computed in the opposite germ.
Element rgcd(const Germ& g, const Element& x, const Element& y);
Element rlcm(const Germ& g, const Element& x, const Element& y);
/// y/x, the element with (y/x) x = rlcm(x, y).
Element right_complement(const Germ& g, const Element& x, const Element& y);
/// x is a suffix of y.
bool right_divides(const Germ& g, const Element& x, const Element& y);
/// The z with z x = y; throws DomainError unless x is a suffix of y.
Element right_quotient(const Germ& g, const Element& x, const Element& y);

/// The same element seen in the opposite germ (letters reversed).
Element to_opposite(const Germ& g, const Element& x);

/// Sum of the atom lengths of the normal-form letters.  Equal to the longest
/// atom factorisation when the germ is homogeneous.
std::uint64_t atom_length(const Germ& g, const Element& x);

/// Word-level complement a\(y1...ym) for a simple a, letter by letter.
Word complement_word(const Germ& g, SimpleId a, const Word& y);

struct BalanceCheck {
  bool balanced = true;
  /// An element dividing x on one side only.
  std::optional<Element> witness;
  bool witness_is_prefix = false;
  std::size_t prefixes = 0;
  std::size_t suffixes = 0;
};

/// Compares the sets of prefixes and suffixes of x, both enumerated in full.
BalanceCheck check_balanced(const Germ& g, const Element& x);

/// All prefixes of x, sorted.
std::vector<Element> prefixes(const Germ& g, const Element& x);
/// All suffixes of x, sorted.
std::vector<Element> suffixes(const Germ& g, const Element& x);

}  // namespace garside
