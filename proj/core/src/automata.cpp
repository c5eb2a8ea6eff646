#include "garside/automata.hpp"

#include <algorithm>
#include <sstream>

namespace garside {

NFAutomaton::NFAutomaton(AutomatonVariant variant, std::vector<SimpleId> alphabet, std::vector<std::string> names)
    : variant_(variant), alphabet_(std::move(alphabet)), names_(std::move(names)) {
  delta_.assign(num_states() * num_letters(), dead());
}

std::string NFAutomaton::state_name(std::uint32_t state) const {
  if (state == start()) return "start";
  if (state == dead()) return "dead";
  return names_[state - 1];
}

std::optional<std::size_t> NFAutomaton::letter_index(SimpleId s) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), s);
  if (it == alphabet_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

bool NFAutomaton::live(SimpleId x, SimpleId y) const {
  auto i = letter_index(x), j = letter_index(y);
  if (!i || !j) return false;
  return next(state_of_letter(*i), *j) != dead();
}

bool NFAutomaton::accepts(const Word& w) const {
  std::uint32_t q = start();
  for (SimpleId s : w) {
    auto i = letter_index(s);
    if (!i) return false;
    q = next(q, *i);
    if (q == dead()) return false;
  }
  return true;
}

void NFAutomaton::set_live(std::uint32_t state, std::size_t letter, bool live) {
  delta_[state * num_letters() + letter] = live ? state_of_letter(letter) : dead();
}

namespace {

bool in_variant(AutomatonVariant v, SimpleId s, SimpleId delta) {
  return s != kUnit && (v == AutomatonVariant::full || s != delta);
}

}  // namespace

NFAutomaton build_nf_automaton(const Germ& g, AutomatonVariant variant) {
  std::vector<SimpleId> letters;
  std::vector<std::string> names;
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    if (!in_variant(variant, simple(s), g.delta())) continue;
    letters.push_back(simple(s));
    names.push_back(g.name(simple(s)));
  }
  NFAutomaton a(variant, letters, names);
  for (std::size_t j = 0; j < letters.size(); ++j) a.set_live(a.start(), j, true);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = 0; j < letters.size(); ++j) {
      a.set_live(a.state_of_letter(i), j, g.meet(g.complement(letters[i]), letters[j]) == kUnit);
    }
  }
  return a;
}

NFAutomaton translate_pair_to_product(const ZSStructure& zs, const NFAutomaton& a_g, const NFAutomaton& a_h) {
  for (Side side : {Side::G, Side::H}) {
    const NFAutomaton& a = side == Side::G ? a_g : a_h;
    const Germ& f = zs.factor_germ(side);
    if (a.variant() != AutomatonVariant::full || a.num_letters() + 1 != f.size()) {
      throw DomainError(std::string("the ") + (side == Side::G ? "G" : "H") +
                        " automaton is not the full automaton of the factor");
    }
  }
  const Germ& k = zs.germ();
  struct Letter {
    SimpleId k, g, h;  // g, h in K ids
  };
  std::vector<Letter> letters;
  for (SimpleId g : zs.g_simples()) {
    for (SimpleId h : zs.h_simples()) {
      SimpleId gh = *k.product(g, zs.act_lr_inv(g, h));
      if (gh != kUnit) letters.push_back({gh, g, h});
    }
  }
  std::sort(letters.begin(), letters.end(), [](const Letter& x, const Letter& y) { return x.k < y.k; });
  std::vector<SimpleId> alphabet;
  std::vector<std::string> names;
  for (const Letter& l : letters) {
    alphabet.push_back(l.k);
    names.push_back(k.name(l.k));
  }
  NFAutomaton out(AutomatonVariant::full, alphabet, names);
  // complement_F(x) ^ y = 1 read off the factor automaton; for x = 1 the
  // complement is Delta_F and the meet is y itself.
  auto coprime = [&](Side side, const NFAutomaton& a, SimpleId x, SimpleId y) {
    if (y == kUnit) return true;
    if (x == kUnit) return false;
    return a.live(zs.to_factor(side, x), zs.to_factor(side, y));
  };
  for (std::size_t j = 0; j < letters.size(); ++j) out.set_live(out.start(), j, true);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    SimpleId g1 = zs.act_rr_inv(letters[i].h, letters[i].g);
    SimpleId h1 = zs.act_lr_inv(letters[i].g, letters[i].h);
    for (std::size_t j = 0; j < letters.size(); ++j) {
      bool live = coprime(Side::G, a_g, g1, letters[j].g) && coprime(Side::H, a_h, h1, letters[j].h);
      out.set_live(out.state_of_letter(i), j, live);
    }
  }
  return out;
}

std::pair<NFAutomaton, NFAutomaton> project_product_to_pair(const ZSStructure& zs, const NFAutomaton& a_k) {
  auto restrict = [&](Side side) {
    const Germ& f = zs.factor_germ(side);
    std::vector<SimpleId> letters;
    std::vector<std::size_t> from;
    std::vector<std::string> names;
    for (std::uint32_t s = 0; s < f.size(); ++s) {
      if (!in_variant(a_k.variant(), simple(s), f.delta())) continue;
      auto i = a_k.letter_index(zs.from_factor(side, simple(s)));
      if (!i) throw DomainError("automaton lacks the factor letter '" + f.name(simple(s)) + "'");
      letters.push_back(simple(s));
      from.push_back(*i);
      names.push_back(f.name(simple(s)));
    }
    NFAutomaton a(a_k.variant(), letters, names);
    for (std::size_t j = 0; j < letters.size(); ++j) a.set_live(a.start(), j, a_k.next(a_k.start(), from[j]) != a_k.dead());
    for (std::size_t i = 0; i < letters.size(); ++i) {
      for (std::size_t j = 0; j < letters.size(); ++j) {
        a.set_live(a.state_of_letter(i), j, a_k.next(a_k.state_of_letter(from[i]), from[j]) != a_k.dead());
      }
    }
    return a;
  };
  return {restrict(Side::G), restrict(Side::H)};
}

std::uint64_t count_accepted(const NFAutomaton& a, std::size_t n) {
  std::vector<std::uint64_t> cur(a.num_states(), 0), next(a.num_states());
  cur[a.start()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t q = 0; q < a.num_states(); ++q) {
      if (cur[q] == 0 || q == a.dead()) continue;
      for (std::size_t l = 0; l < a.num_letters(); ++l) {
        std::uint32_t r = a.next(q, l);
        if (r == a.dead()) continue;
        if (__builtin_add_overflow(next[r], cur[q], &next[r])) throw DomainError("count overflows 64 bits");
      }
    }
    std::swap(cur, next);
  }
  std::uint64_t total = 0;
  for (std::uint32_t q = 0; q < a.num_states(); ++q) {
    if (q == a.dead()) continue;
    if (__builtin_add_overflow(total, cur[q], &total)) throw DomainError("count overflows 64 bits");
  }
  return total;
}

std::vector<Word> enumerate_accepted(const NFAutomaton& a, std::size_t n, std::size_t guard) {
  std::uint64_t count = 0;
  try {
    count = count_accepted(a, n);
  } catch (const DomainError&) {
    count = UINT64_MAX;
  }
  if (count > guard) {
    throw DomainError("enumeration of length " + std::to_string(n) + " exceeds the guard of " + std::to_string(guard));
  }
  std::vector<Word> out;
  out.reserve(count);
  Word cur;
  auto rec = [&](auto& self, std::uint32_t q) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t l = 0; l < a.num_letters(); ++l) {
      std::uint32_t r = a.next(q, l);
      if (r == a.dead()) continue;
      cur.push_back(a.alphabet()[l]);
      self(self, r);
      cur.pop_back();
    }
  };
  rec(rec, a.start());
  return out;
}

std::string export_automaton(const NFAutomaton& a, ExportFormat format) {
  std::ostringstream os;
  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  if (format == ExportFormat::dot) {
    os << "digraph nf {\n  rankdir=LR;\n  node [shape=doublecircle];\n";
    for (std::uint32_t q = 0; q < a.num_states(); ++q) {
      if (q == a.dead()) {
        os << "  " << quoted("dead") << " [shape=circle];\n";
      } else {
        os << "  " << quoted(a.state_name(q)) << ";\n";
      }
    }
    for (std::uint32_t q = 0; q < a.num_states(); ++q) {
      if (q == a.dead()) continue;
      for (std::size_t l = 0; l < a.num_letters(); ++l) {
        std::uint32_t r = a.next(q, l);
        if (r == a.dead()) continue;
        os << "  " << quoted(a.state_name(q)) << " -> " << quoted(a.state_name(r)) << " [label="
           << quoted(a.letter_names()[l]) << "];\n";
      }
    }
    os << "}\n";
  } else {
    os << "state";
    for (const auto& n : a.letter_names()) os << '\t' << n;
    os << '\n';
    for (std::uint32_t q = 0; q < a.num_states(); ++q) {
      os << a.state_name(q);
      for (std::size_t l = 0; l < a.num_letters(); ++l) os << '\t' << a.state_name(a.next(q, l));
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace garside
