#include <algorithm>
#include <map>
#include <sstream>

#include "garside/verify/enumerate.hpp"
#include "garside/verify/suites.hpp"
#include "garside/word_io.hpp"

namespace garside::verify {

void CheckReport::merge(const CheckReport& other) {
  cases += other.cases;
  failures += other.failures;
  for (const auto& c : other.counterexamples) {
    if (counterexamples.size() < 10) counterexamples.push_back(c);
  }
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << name << ": " << cases << " cases, " << failures << " failures";
  for (const auto& c : counterexamples) os << "\n  counterexample: " << c;
  return os.str();
}

void Checker::fail(std::string what) {
  ++report_.failures;
  if (report_.counterexamples.size() < keep_) report_.counterexamples.push_back(std::move(what));
}

namespace {

bool homogeneous(const Germ& g) {
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    for (std::uint32_t t = 0; t < g.size(); ++t) {
      auto st = g.product(simple(s), simple(t));
      if (st && g.atom_length(*st) != g.atom_length(simple(s)) + g.atom_length(simple(t))) return false;
    }
  }
  return true;
}

}  // namespace

CheckReport check_germ_axioms(const Germ& g) {
  Checker c("germ-axioms");
  const std::uint32_t n = static_cast<std::uint32_t>(g.size());
  auto nm = [&](std::uint32_t s) { return g.name(simple(s)); };
  c.expect(validate(g).ok(), [&] { return validate(g).to_string(); });

  // Divisibility straight from the product table.
  std::vector<std::vector<bool>> ldiv(n, std::vector<bool>(n)), rdiv(n, std::vector<bool>(n));
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = 0; t < n; ++t) {
      if (auto u = g.product(simple(s), simple(t))) {
        ldiv[s][index(*u)] = true;
        rdiv[t][index(*u)] = true;
      }
    }
  }
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = 0; t < n; ++t) {
      c.expect(g.left_divides(simple(s), simple(t)) == ldiv[s][t], [&] { return "prefix order at " + nm(s) + "," + nm(t); });
      c.expect(g.right_divides(simple(s), simple(t)) == rdiv[s][t], [&] { return "suffix order at " + nm(s) + "," + nm(t); });
    }
  }

  // Meets and joins: bounds plus extremality, cubic, so sampled for big germs.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (n <= 150) {
    for (std::uint32_t s = 0; s < n; ++s)
      for (std::uint32_t t = 0; t < n; ++t) pairs.emplace_back(s, t);
  } else {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    for (int i = 0; i < 400; ++i) pairs.emplace_back(pick(rng), pick(rng));
  }
  for (bool right : {false, true}) {
    const auto& div = right ? rdiv : ldiv;
    for (auto [s, t] : pairs) {
      std::uint32_t m = index(right ? g.rmeet(simple(s), simple(t)) : g.meet(simple(s), simple(t)));
      std::uint32_t j = index(right ? g.rjoin(simple(s), simple(t)) : g.join(simple(s), simple(t)));
      bool ok = div[m][s] && div[m][t] && div[s][j] && div[t][j];
      for (std::uint32_t u = 0; u < n && ok; ++u) {
        if (div[u][s] && div[u][t] && !div[u][m]) ok = false;
        if (div[s][u] && div[t][u] && !div[j][u]) ok = false;
      }
      c.expect(ok, [&] { return std::string(right ? "suffix" : "prefix") + " meet/join of " + nm(s) + "," + nm(t); });
      SimpleId q = right ? g.rcomp(simple(s), simple(t)) : g.lcomp(simple(s), simple(t));
      auto back = right ? g.product(q, simple(s)) : g.product(simple(s), q);
      c.expect(back && index(*back) == j, [&] { return "complement of " + nm(s) + " in " + nm(t); });
    }
  }

  const SimpleId delta = g.delta();
  for (std::uint32_t s = 0; s < n; ++s) {
    SimpleId x = simple(s);
    c.expect(g.product(x, g.complement(x)) == delta, [&] { return "right complement of " + nm(s); });
    c.expect(g.product(g.rcomplement(x), x) == delta, [&] { return "left complement of " + nm(s); });
    bool atom = s != 0;
    for (std::uint32_t t = 1; t < n && atom; ++t) {
      for (std::uint32_t u = 1; u < n && atom; ++u) {
        if (g.product(simple(t), simple(u)) == x) atom = false;
      }
    }
    c.expect(g.is_atom(x) == atom, [&] { return "atom status of " + nm(s); });
    std::uint32_t longest = 0;
    for (SimpleId a : g.atoms()) {
      for (std::uint32_t t = 0; t < n; ++t) {
        if (g.product(a, simple(t)) == x) longest = std::max(longest, g.atom_length(simple(t)) + 1);
      }
    }
    c.expect(g.atom_length(x) == longest, [&] { return "atom length of " + nm(s); });
    for (std::uint32_t t = 0; t < n; ++t) {
      auto st = g.product(x, simple(t));
      if (!st) continue;
      c.expect(g.product(g.tau(x), g.tau(simple(t))) == g.tau(*st), [&] { return "tau on " + nm(s) + "*" + nm(t); });
    }
  }
  return c.report();
}

CheckReport check_element_lattice(const Germ& g, const SuiteOptions& opt) {
  Checker c("element-lattice");
  if (!homogeneous(g)) throw DomainError("element-lattice needs a germ whose atom length is additive");
  const std::vector<Element> e = elements(g, opt.max_length);
  const std::size_t n = e.size();
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(e[i], i);
  auto fmt = [&](const Element& x) { return format_element(g, x); };

  // Divisibility among short elements, from products only.
  std::vector<std::vector<bool>> ldiv(n, std::vector<bool>(n)), rdiv(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t li = atom_length(g, e[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (li + atom_length(g, e[j]) > opt.max_length) continue;
      Element p = multiply(g, e[i], e[j]);
      auto it = pos.find(p);
      if (!c.expect(it != pos.end(), [&] { return "product " + fmt(e[i]) + "*" + fmt(e[j]) + " has wrong length"; }))
        continue;
      ldiv[i][it->second] = true;
      rdiv[j][it->second] = true;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n * n <= 250000) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 250000; ++k) pairs.emplace_back(pick(rng), pick(rng));
  }

  for (bool right : {false, true}) {
    const auto& div = right ? rdiv : ldiv;
    const char* side = right ? "suffix " : "";
    for (auto [i, j] : pairs) {
      const Element &x = e[i], &y = e[j];
      auto what = [&](const char* op) { return std::string(side) + op + "(" + fmt(x) + ", " + fmt(y) + ")"; };
      Element d = right ? rgcd(g, x, y) : gcd(g, x, y);
      auto di = pos.find(d);
      bool ok = di != pos.end() && div[di->second][i] && div[di->second][j];
      for (std::size_t k = 0; k < n && ok; ++k) {
        if (div[k][i] && div[k][j] && !div[k][di->second]) ok = false;
      }
      c.expect(ok, [&] { return what("gcd"); });

      Element m = right ? rlcm(g, x, y) : lcm(g, x, y);
      Element xc = right ? right_complement(g, x, y) : left_complement(g, x, y);
      Element yc = right ? right_complement(g, y, x) : left_complement(g, y, x);
      c.expect(m == (right ? multiply(g, xc, x) : multiply(g, x, xc)) &&
                   m == (right ? multiply(g, yc, y) : multiply(g, y, yc)),
               [&] { return what("lcm"); });
      c.expect((right ? gcd(g, xc, yc) : rgcd(g, xc, yc)).is_identity(), [&] { return what("lcm minimality"); });
      auto mi = pos.find(m);
      bool has_common = false;
      ok = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (!div[i][k] || !div[j][k]) continue;
        has_common = true;
        if (mi == pos.end() || !div[mi->second][k]) ok = false;
      }
      c.expect(ok && has_common == (mi != pos.end()), [&] { return what("lcm vs common multiples"); });

      bool dv = right ? right_divides(g, x, y) : divides(g, x, y);
      c.expect(dv == div[i][j], [&] { return what("divides"); });
      if (div[i][j]) {
        Element q = right ? right_quotient(g, x, y) : left_quotient(g, x, y);
        c.expect((right ? multiply(g, q, x) : multiply(g, x, q)) == y, [&] { return what("quotient"); });
      }
    }
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < opt.samples && n > 0; ++k) {
    const Element &x = e[pick(rng)], &y = e[pick(rng)], &z = e[pick(rng)];
    c.expect(multiply(g, multiply(g, x, y), z) == multiply(g, x, multiply(g, y, z)),
             [&] { return "associativity at " + fmt(x) + "," + fmt(y) + "," + fmt(z); });
    Word w = x.word(g);
    Word wy = y.word(g);
    w.insert(w.end(), wy.begin(), wy.end());
    c.expect(Element::from_word(g, w) == multiply(g, x, y), [&] { return "normal form of " + fmt(x) + "." + fmt(y); });
  }
  for (const Element& x : e) {
    c.expect(is_normal(g, x.nf()), [&] { return "normality of " + fmt(x); });
    c.expect(to_opposite(g.opposite(), to_opposite(g, x)) == x, [&] { return "opposite round trip of " + fmt(x); });
  }
  return c.report();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"germ-axioms", "element-lattice", "action-identities", "nf-criteria",
                                              "algorithms",  "bijections",      "automata",          "oracle"};
  return names;
}

bool suite_needs_structure(const std::string& name) {
  return name == "action-identities" || name == "nf-criteria" || name == "algorithms" || name == "bijections";
}

CheckReport run_suite(const std::string& name, const std::string& spec, const Germ& g, const ZSStructure* zs,
                      const SuiteOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw DomainError("unknown suite '" + name + "'");
  }
  if (suite_needs_structure(name) && !zs) throw DomainError("suite '" + name + "' needs --left");
  if (name == "germ-axioms") return check_germ_axioms(g);
  if (name == "element-lattice") return check_element_lattice(g, opt);
  if (name == "oracle") return check_oracle(spec, opt);
  if (name == "automata") {
    CheckReport r = check_automata(g, zs, opt);
    if (zs) {
      ZSStructure m = zs->mirror();
      r.merge(check_automata(g, &m, opt));
    }
    return r;
  }
  std::function<CheckReport(const ZSStructure&)> run;
  if (name == "action-identities") run = [&](const ZSStructure& s) { return check_action_identities(s, opt); };
  if (name == "nf-criteria") run = [&](const ZSStructure& s) { return check_nf_criteria(s); };
  if (name == "algorithms") run = [&](const ZSStructure& s) { return check_algorithms(s, opt); };
  if (name == "bijections") run = [&](const ZSStructure& s) { return check_bijections(s, opt); };
  CheckReport r = run(*zs);
  r.merge(run(zs->mirror()));
  return r;
}

}  // namespace garside::verify
