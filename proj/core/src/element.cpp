#include "garside/element.hpp"

#include <algorithm>
#include <set>

namespace garside {

namespace {

SimpleId tau_pow(const Germ& g, SimpleId s, std::uint64_t k) {
  if (k == 0) return s;
  // tau permutes the simples; walk the orbit once to reduce k.
  std::uint64_t period = 1;
  for (SimpleId t = g.tau(s); t != s; t = g.tau(t)) ++period;
  k %= period;
  for (; k > 0; --k) s = g.tau(s);
  return s;
}

// Right multiplication of a normal form by simples, one at a time.
class Builder {
 public:
  explicit Builder(const Germ& g) : g_(g) {}
  Builder(const Germ& g, NormalWord start) : g_(g), w_(std::move(start)) {}

  void push(SimpleId t) {
    if (t == kUnit) return;
    auto& f = w_.factors;
    if (t == g_.delta()) {
      ++w_.deltas;
      for (auto& x : f) x = g_.tau(x);
      return;
    }
    f.push_back(t);
    for (std::size_t j = f.size() - 1; j > 0; --j) {
      if (!left_weight(g_, f[j - 1], f[j])) break;
    }
    if (f.back() == kUnit) f.pop_back();
    std::size_t lead = 0;
    while (lead < f.size() && f[lead] == g_.delta()) ++lead;
    if (lead > 0) {
      w_.deltas += lead;
      f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
    }
  }
  void push(const Word& w) {
    for (SimpleId s : w) push(s);
  }
  NormalWord take() { return std::move(w_); }

 private:
  const Germ& g_;
  NormalWord w_;
};

// x with the simple a removed from the front; a must be a prefix of first(x).
NormalWord cancel_front(const Germ& g, const NormalWord& x, SimpleId a) {
  if (x.deltas > 0) {
    // x = a (complement a) Delta^(k-1) X = a Delta^(k-1) tau^(k-1)(complement a) X
    NormalWord start;
    start.deltas = x.deltas - 1;
    Builder b(g, start);
    b.push(tau_pow(g, g.complement(a), x.deltas - 1));
    b.push(x.factors);
    return b.take();
  }
  Builder b(g);
  b.push(g.lcomp(a, x.factors.front()));
  for (std::size_t i = 1; i < x.factors.size(); ++i) b.push(x.factors[i]);
  return b.take();
}

SimpleId first_of(const Germ& g, const NormalWord& x) {
  if (x.deltas > 0) return g.delta();
  return x.factors.empty() ? kUnit : x.factors.front();
}

std::vector<Element> prefix_set(const Germ& g, const Element& x) {
  std::set<Element> seen{Element()};
  std::vector<Element> frontier{Element()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& y : frontier) {
      for (SimpleId a : g.atoms()) {
        Element z = multiply(g, y, a);
        if (!seen.count(z) && divides(g, z, x)) {
          seen.insert(z);
          next.push_back(z);
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Word NormalWord::word(const Germ& g) const {
  Word w(deltas, g.delta());
  w.insert(w.end(), factors.begin(), factors.end());
  return w;
}

bool left_weighted(const Germ& g, SimpleId x, SimpleId y) { return g.meet(g.complement(x), y) == kUnit; }

bool left_weight(const Germ& g, SimpleId& s, SimpleId& t) {
  SimpleId u = g.meet(g.complement(s), t);
  if (u == kUnit) return false;
  s = *g.product(s, u);
  t = g.lcomp(u, t);
  return true;
}

bool is_normal(const Germ& g, const NormalWord& w) {
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    SimpleId x = w.factors[i];
    if (!g.contains(x) || x == kUnit || x == g.delta()) return false;
    if (i > 0 && !left_weighted(g, w.factors[i - 1], x)) return false;
  }
  return true;
}

NormalWord normal_form(const Germ& g, const Word& w) {
  Builder b(g);
  for (SimpleId s : w) {
    if (!g.contains(s)) throw DomainError("simple id out of range");
    b.push(s);
  }
  return b.take();
}

NormalWord from_left_weighted(const Germ& g, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!left_weighted(g, w[i], w[i + 1])) throw DomainError("word is not left-weighted at position " + std::to_string(i));
  }
  NormalWord nw;
  std::size_t i = 0;
  while (i < w.size() && w[i] == g.delta() && w[i] != kUnit) {
    ++nw.deltas;
    ++i;
  }
  std::size_t end = w.size();
  while (end > i && w[end - 1] == kUnit) --end;
  nw.factors.assign(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(end));
  return nw;
}

Element Element::from_normal(const Germ& g, NormalWord w) {
  if (!is_normal(g, w)) throw DomainError("word is not in left normal form");
  return Element(std::move(w));
}

SimpleId Element::first(const Germ& g) const { return first_of(g, nf_); }

Element multiply(const Germ& g, const Element& x, const Element& y) {
  NormalWord start = x.nf();
  start.deltas += y.nf().deltas;
  for (auto& s : start.factors) s = tau_pow(g, s, y.nf().deltas);
  Builder b(g, std::move(start));
  b.push(y.nf().factors);
  return Element::from_normal(g, b.take());
}

Element multiply(const Germ& g, const Element& x, SimpleId s) {
  Builder b(g, x.nf());
  b.push(s);
  return Element::from_normal(g, b.take());
}

Element gcd(const Germ& g, const Element& x0, const Element& y0) {
  NormalWord x = x0.nf(), y = y0.nf();
  Builder acc(g);
  for (;;) {
    SimpleId a = g.meet(first_of(g, x), first_of(g, y));
    if (a == kUnit) break;
    acc.push(a);
    x = cancel_front(g, x, a);
    y = cancel_front(g, y, a);
  }
  return Element::from_normal(g, acc.take());
}

Word complement_word(const Germ& g, SimpleId a, const Word& y) {
  Word out;
  out.reserve(y.size());
  SimpleId cur = a;
  for (SimpleId c : y) {
    out.push_back(g.lcomp(cur, c));
    cur = g.lcomp(c, cur);
  }
  return out;
}

Element left_complement(const Germ& g, const Element& x, const Element& y) {
  Word rest = y.word(g);
  for (SimpleId a : x.word(g)) rest = complement_word(g, a, rest);
  return Element::from_word(g, rest);
}

Element lcm(const Germ& g, const Element& x, const Element& y) { return multiply(g, x, left_complement(g, x, y)); }

bool divides(const Germ& g, const Element& x, const Element& y) {
  return multiply(g, x, left_complement(g, x, y)) == y;
}

Element left_quotient(const Germ& g, const Element& x, const Element& y) {
  Element q = left_complement(g, x, y);
  if (multiply(g, x, q) != y) throw DomainError("left quotient: not a prefix");
  return q;
}

Element to_opposite(const Germ& g, const Element& x) {
  Word w = x.word(g);
  std::reverse(w.begin(), w.end());
  return Element::from_word(g.opposite(), w);
}

Element rgcd(const Germ& g, const Element& x, const Element& y) {
  Germ op = g.opposite();
  return to_opposite(op, gcd(op, to_opposite(g, x), to_opposite(g, y)));
}

Element rlcm(const Germ& g, const Element& x, const Element& y) {
  Germ op = g.opposite();
  return to_opposite(op, lcm(op, to_opposite(g, x), to_opposite(g, y)));
}

Element right_complement(const Germ& g, const Element& x, const Element& y) {
  Germ op = g.opposite();
  return to_opposite(op, left_complement(op, to_opposite(g, x), to_opposite(g, y)));
}

bool right_divides(const Germ& g, const Element& x, const Element& y) {
  Germ op = g.opposite();
  return divides(op, to_opposite(g, x), to_opposite(g, y));
}

Element right_quotient(const Germ& g, const Element& x, const Element& y) {
  Germ op = g.opposite();
  return to_opposite(op, left_quotient(op, to_opposite(g, x), to_opposite(g, y)));
}

std::uint64_t atom_length(const Germ& g, const Element& x) {
  std::uint64_t n = x.nf().deltas * g.atom_length(g.delta());
  for (SimpleId s : x.nf().factors) n += g.atom_length(s);
  return n;
}

std::vector<Element> prefixes(const Germ& g, const Element& x) { return prefix_set(g, x); }

std::vector<Element> suffixes(const Germ& g, const Element& x) {
  Germ op = g.opposite();
  std::vector<Element> out;
  for (const Element& y : prefix_set(op, to_opposite(g, x))) out.push_back(to_opposite(op, y));
  std::sort(out.begin(), out.end());
  return out;
}

BalanceCheck check_balanced(const Germ& g, const Element& x) {
  std::vector<Element> pre = prefixes(g, x), suf = suffixes(g, x);
  BalanceCheck r;
  r.prefixes = pre.size();
  r.suffixes = suf.size();
  std::vector<Element> only;
  std::set_difference(pre.begin(), pre.end(), suf.begin(), suf.end(), std::back_inserter(only));
  if (!only.empty()) {
    r.balanced = false;
    r.witness = only.front();
    r.witness_is_prefix = true;
    return r;
  }
  std::set_difference(suf.begin(), suf.end(), pre.begin(), pre.end(), std::back_inserter(only));
  if (!only.empty()) {
    r.balanced = false;
    r.witness = only.front();
  }
  return r;
}

}  // namespace garside
