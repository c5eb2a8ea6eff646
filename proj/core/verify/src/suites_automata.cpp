#include "garside/automata.hpp"
#include "garside/verify/enumerate.hpp"
#include "garside/verify/suites.hpp"
#include "garside/word_io.hpp"

namespace garside::verify {

namespace {

// Words of n letters whose adjacent pairs satisfy the pairwise definition.
std::uint64_t count_by_definition(const Germ& g, const std::vector<SimpleId>& letters, std::size_t n,
                                  std::vector<Word>* out, std::size_t cap) {
  std::uint64_t count = 0;
  Word cur;
  auto rec = [&](auto& self) -> void {
    if (cur.size() == n) {
      ++count;
      if (out && out->size() < cap) out->push_back(cur);
      return;
    }
    for (SimpleId s : letters) {
      if (!cur.empty() && g.meet(g.complement(cur.back()), s) != kUnit) continue;
      cur.push_back(s);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return count;
}

}  // namespace

CheckReport check_automata(const Germ& g, const ZSStructure* zs, const SuiteOptions& opt) {
  Checker c("automata");
  const std::size_t max_n = static_cast<std::size_t>(std::min<std::uint64_t>(opt.max_length, 6));
  constexpr std::size_t cap = 200000;
  for (auto variant : {AutomatonVariant::proper, AutomatonVariant::full}) {
    const char* vname = variant == AutomatonVariant::proper ? "proper" : "full";
    NFAutomaton a = build_nf_automaton(g, variant);
    for (std::size_t n = 0; n <= max_n; ++n) {
      auto at = [&](const char* what) { return std::string(what) + " (" + vname + ", n=" + std::to_string(n) + ")"; };
      std::vector<Word> words;
      std::uint64_t expected = count_by_definition(g, a.alphabet(), n, &words, cap);
      c.expect(count_accepted(a, n) == expected, [&] { return at("count_accepted"); });
      if (expected <= cap) c.expect(enumerate_accepted(a, n) == words, [&] { return at("enumerate_accepted"); });
    }
  }
  if (!zs) return c.report();

  const NFAutomaton a_g = build_nf_automaton(zs->factor_germ(Side::G), AutomatonVariant::full);
  const NFAutomaton a_h = build_nf_automaton(zs->factor_germ(Side::H), AutomatonVariant::full);
  const NFAutomaton direct = build_nf_automaton(g, AutomatonVariant::full);
  const NFAutomaton translated = translate_pair_to_product(*zs, a_g, a_h);
  c.expect(translated.alphabet() == direct.alphabet(), "translated alphabet");
  c.expect(translated == direct, "translated transitions equal the direct automaton");
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::uint64_t expected = count_accepted(direct, n);
    c.expect(count_accepted(translated, n) == expected, [&] { return "translated count at n=" + std::to_string(n); });
    if (expected > cap) continue;
    for (const Word& w : enumerate_accepted(direct, n)) {
      c.expect(translated.accepts(w), [&] { return "translated automaton rejects " + format_word(g, w, "."); });
    }
  }
  auto [p_g, p_h] = project_product_to_pair(*zs, translated);
  c.expect(p_g == a_g && p_h == a_h, "projection of the translated automaton");
  for (auto variant : {AutomatonVariant::proper, AutomatonVariant::full}) {
    auto [q_g, q_h] = project_product_to_pair(*zs, build_nf_automaton(g, variant));
    c.expect(q_g == build_nf_automaton(zs->factor_germ(Side::G), variant) &&
                 q_h == build_nf_automaton(zs->factor_germ(Side::H), variant),
             "projection equals the factor automata");
  }
  return c.report();
}

}  // namespace garside::verify
