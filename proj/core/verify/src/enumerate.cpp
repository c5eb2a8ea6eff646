#include "garside/verify/enumerate.hpp"

#include <functional>

namespace garside::verify {

std::vector<Word> normal_words(const Germ& g, const std::vector<SimpleId>& letters, std::uint64_t max_length) {
  std::vector<Word> out;
  Word cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t budget) {
    if (out.size() >= kEnumerationGuard) throw DomainError("enumeration guard exceeded");
    out.push_back(cur);
    for (SimpleId s : letters) {
      std::uint64_t len = g.atom_length(s);
      if (len > budget) continue;
      if (!cur.empty() && !left_weighted(g, cur.back(), s)) continue;
      cur.push_back(s);
      rec(budget - len);
      cur.pop_back();
    }
  };
  rec(max_length);
  return out;
}

std::vector<Word> normal_words(const Germ& g, std::uint64_t max_length) {
  return normal_words(g, proper_letters(g), max_length);
}

std::vector<Word> normal_words(const ZSStructure& zs, Side side, std::uint64_t max_length) {
  return normal_words(zs.germ(), proper_letters(zs, side), max_length);
}

std::vector<Element> elements(const Germ& g, std::uint64_t max_length) {
  std::vector<Element> out;
  for (const Word& w : normal_words(g, max_length)) out.push_back(Element::from_normal(g, from_left_weighted(g, w)));
  return out;
}

std::uint64_t word_length(const Germ& g, const Word& w) {
  std::uint64_t n = 0;
  for (SimpleId s : w) n += g.atom_length(s);
  return n;
}

std::vector<Word> all_words(const std::vector<SimpleId>& letters, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    if (out.size() * letters.size() > kEnumerationGuard) throw DomainError("enumeration guard exceeded");
    for (const Word& w : out) {
      for (SimpleId s : letters) {
        next.push_back(w);
        next.back().push_back(s);
      }
    }
    out = std::move(next);
  }
  return out;
}

Word random_word(std::mt19937_64& rng, const std::vector<SimpleId>& letters, std::size_t max_letters) {
  Word w;
  if (letters.empty()) return w;
  std::uniform_int_distribution<std::size_t> len(0, max_letters), pick(0, letters.size() - 1);
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

std::vector<SimpleId> proper_letters(const Germ& g) {
  std::vector<SimpleId> out;
  for (std::uint32_t s = 1; s < g.size(); ++s) out.push_back(simple(s));
  return out;
}

std::vector<SimpleId> proper_letters(const ZSStructure& zs, Side side) {
  std::vector<SimpleId> out;
  for (SimpleId s : zs.simples(side)) {
    if (s != kUnit) out.push_back(s);
  }
  return out;
}

}  // namespace garside::verify
