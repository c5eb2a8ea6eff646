#include "garside/quasicenter.hpp"

#include <algorithm>

#include "garside/element.hpp"

namespace garside {

SimpleId delta_of_simple(const Germ& g, SimpleId s) {
  std::vector<bool> seen(g.size(), false);
  std::vector<SimpleId> stack{s};
  seen[index(s)] = true;
  SimpleId join = s;
  while (!stack.empty()) {
    SimpleId x = stack.back();
    stack.pop_back();
    for (SimpleId b : g.atoms()) {
      SimpleId y = g.lcomp(b, x);
      if (seen[index(y)]) continue;
      seen[index(y)] = true;
      join = g.join(join, y);
      stack.push_back(y);
    }
  }
  return join;
}

std::vector<SimpleId> delta_table(const Germ& g) {
  std::vector<SimpleId> out(g.size());
  for (std::uint32_t s = 0; s < g.size(); ++s) out[s] = delta_of_simple(g, simple(s));
  return out;
}

std::size_t AtomClassPartition::class_of(SimpleId a) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::find(classes[i].begin(), classes[i].end(), a) != classes[i].end()) return i;
  }
  throw DomainError("not an atom");
}

AtomClassPartition atom_classes(const Germ& g) {
  AtomClassPartition p;
  for (SimpleId a : g.atoms()) {
    SimpleId d = delta_of_simple(g, a);
    auto it = std::find(p.class_delta.begin(), p.class_delta.end(), d);
    if (it == p.class_delta.end()) {
      p.class_delta.push_back(d);
      p.classes.push_back({a});
    } else {
      p.classes[static_cast<std::size_t>(it - p.class_delta.begin())].push_back(a);
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (g.meet(p.class_delta[i], p.class_delta[j]) != kUnit) {
        throw InvariantViolation("Delta values " + g.name(p.class_delta[i]) + " and " + g.name(p.class_delta[j]) +
                                 " of different atom classes have a common prefix");
      }
    }
  }
  return p;
}

bool is_delta_pure(const Germ& g) { return atom_classes(g).size() <= 1; }

bool is_quasi_central(const Germ& g, SimpleId s) {
  Element x = Element::from_simple(g, s);
  for (SimpleId a : g.atoms()) {
    Element as = multiply(g, Element::from_simple(g, a), x);
    bool found = false;
    for (SimpleId b : g.atoms()) {
      if (multiply(g, x, Element::from_simple(g, b)) == as) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<SimpleId> quasi_center_basis(const Germ& g) {
  std::vector<SimpleId> basis = atom_classes(g).class_delta;
  std::sort(basis.begin(), basis.end());
  for (SimpleId d : basis) {
    if (!is_quasi_central(g, d)) throw InvariantViolation(g.name(d) + " is not quasi-central");
    for (SimpleId e : basis) {
      Element de = multiply(g, Element::from_simple(g, d), Element::from_simple(g, e));
      Element ed = multiply(g, Element::from_simple(g, e), Element::from_simple(g, d));
      if (de != ed) throw InvariantViolation(g.name(d) + " and " + g.name(e) + " do not commute");
    }
  }
  return basis;
}

}  // namespace garside
