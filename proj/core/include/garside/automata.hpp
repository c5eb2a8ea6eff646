#pragma once

// Deterministic acceptors of the languages of normal-form words, and the
// translation between the automaton of K and the pair of factor automata.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garside/germ.hpp"
#include "garside/zappa_szep.hpp"

namespace garside {

enum class AutomatonVariant {
  proper,  ///< letters are the simples other than 1 and Delta
  full,    ///< letters are the simples other than 1; Delta is an ordinary letter
};

/// States: 0 is the start state, 1..m stand for "the last letter read was
/// alphabet[i-1]", m+1 is the dead state.  Every state but the dead one is
/// accepting.  Transitions are complete.
class NFAutomaton {
 public:
  NFAutomaton() = default;
  NFAutomaton(AutomatonVariant variant, std::vector<SimpleId> alphabet, std::vector<std::string> names);

  AutomatonVariant variant() const noexcept { return variant_; }
  const std::vector<SimpleId>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& letter_names() const noexcept { return names_; }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  std::size_t num_states() const noexcept { return alphabet_.size() + 2; }
  std::uint32_t start() const noexcept { return 0; }
  std::uint32_t dead() const noexcept { return static_cast<std::uint32_t>(alphabet_.size() + 1); }
  std::uint32_t state_of_letter(std::size_t letter) const noexcept { return static_cast<std::uint32_t>(letter + 1); }
  std::string state_name(std::uint32_t state) const;

  std::optional<std::size_t> letter_index(SimpleId s) const;
  std::uint32_t next(std::uint32_t state, std::size_t letter) const noexcept { return delta_[state * num_letters() + letter]; }
  /// Whether the transition "last letter x, then y" stays alive.
  bool live(SimpleId x, SimpleId y) const;
  /// Letters outside the alphabet are rejected.
  bool accepts(const Word& w) const;

  /// Marks (state, letter) as leading back to the state of that letter
  /// (live) or to the dead state.
  void set_live(std::uint32_t state, std::size_t letter, bool live);

  friend bool operator==(const NFAutomaton&, const NFAutomaton&) = default;

 private:
  AutomatonVariant variant_ = AutomatonVariant::proper;
  std::vector<SimpleId> alphabet_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> delta_;
};

NFAutomaton build_nf_automaton(const Germ& g, AutomatonVariant variant);

/// Automaton of K over the letters g v h, built only from the two factor
/// automata and the action tables.  Both automata must be full-variant
/// automata of zs.factor_germ(G) and zs.factor_germ(H) (DomainError
/// otherwise): liveness needs the factor complement of every simple,
/// including Delta_G and Delta_H.
NFAutomaton translate_pair_to_product(const ZSStructure& zs, const NFAutomaton& a_g, const NFAutomaton& a_h);

/// Restricts an automaton of K (either variant) to the letters of each
/// factor.  The results are over the factor germs' ids, of the same variant.
std::pair<NFAutomaton, NFAutomaton> project_product_to_pair(const ZSStructure& zs, const NFAutomaton& a_k);

/// Number of accepted words with exactly n letters.  DomainError on overflow.
std::uint64_t count_accepted(const NFAutomaton& a, std::size_t n);

inline constexpr std::size_t kEnumerateGuard = 1'000'000;
/// Accepted words with exactly n letters, in lexicographic alphabet order.
/// DomainError if there would be more than `guard` of them.
std::vector<Word> enumerate_accepted(const NFAutomaton& a, std::size_t n, std::size_t guard = kEnumerateGuard);

enum class ExportFormat { dot, tsv };
/// Deterministic text export.  DOT output omits edges into the dead state.
std::string export_automaton(const NFAutomaton& a, ExportFormat format);

}  // namespace garside
