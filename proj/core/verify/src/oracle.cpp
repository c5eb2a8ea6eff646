#include <map>

#include "garside/builtins.hpp"
#include "garside/verify/models.hpp"
#include "garside/verify/suites.hpp"
#include "garside/word_io.hpp"

namespace garside::verify {

CheckReport check_oracle(const std::string& spec, const SuiteOptions& opt) {
  Checker c("oracle");
  const auto model = make_model(spec);
  const Germ g = germ_from_spec(spec);
  const Model& m = *model;

  std::vector<SimpleId> atoms;
  for (int i = 0; i < m.num_atoms(); ++i) atoms.push_back(g.require(m.atom_name(i)));
  auto to_word = [&](const std::vector<int>& a) {
    Word w;
    for (int i : a) w.push_back(atoms[i]);
    return w;
  };
  auto letters = [&](const Element& x) {
    std::vector<std::vector<int>> out;
    for (SimpleId s : x.word(g)) out.push_back(m.parse_simple(g.name(s)));
    return out;
  };
  auto code = [&](const Element& x) {
    std::vector<int> all;
    for (const auto& l : letters(x)) all.insert(all.end(), l.begin(), l.end());
    return m.eval(all);
  };

  // Every element of atom length <= L, with one spelling each.
  struct Item {
    Code code;
    Element el;
  };
  std::vector<Item> items;
  std::map<Code, std::size_t> seen;
  std::vector<std::vector<int>> layer{{}};
  for (std::uint64_t len = 0; len <= opt.max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      Code x = m.eval(w);
      if (seen.emplace(x, items.size()).second) items.push_back({x, Element::from_word(g, to_word(w))});
      for (int a = 0; a < m.num_atoms(); ++a) {
        next.push_back(w);
        next.back().push_back(a);
      }
    }
    layer = std::move(next);
  }

  for (const Item& it : items) {
    c.expect(m.is_normal_form_of(it.code, letters(it.el)), [&] {
      return "normal form of " + m.show(it.code) + ": got " + format_element(g, it.el);
    });
  }
  // Prefix and suffix sets within the enumerated ball contain every divisor.
  const std::size_t n = items.size();
  std::vector<std::vector<bool>> pre(n, std::vector<bool>(n)), suf(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pre[i][j] = m.divides(items[i].code, items[j].code);
      suf[i][j] = m.rdivides(items[i].code, items[j].code);
    }
  }
  auto model_gcd = [&](const auto& div, std::size_t i, std::size_t j) {
    std::size_t best = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (div[k][i] && div[k][j] && m.length(items[k].code) > m.length(items[best].code)) best = k;
    }
    return items[best].code;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Item &x = items[i], &y = items[j];
      auto at = [&](const char* op, const Element& got, const Code& want) {
        return std::string(op) + "(" + m.show(x.code) + ", " + m.show(y.code) + "): got " + format_element(g, got) +
               " = " + m.show(code(got)) + ", expected " + m.show(want);
      };
      auto same = [&](const char* op, const Element& got, const Code& want) {
        c.expect(code(got) == want, [&] { return at(op, got, want); });
      };
      same("multiply", multiply(g, x.el, y.el), m.mul(x.code, y.code));
      same("gcd", gcd(g, x.el, y.el), model_gcd(pre, i, j));
      same("lcm", lcm(g, x.el, y.el), m.lcm(x.code, y.code));
      same("left_complement", left_complement(g, x.el, y.el), m.complement(x.code, y.code));
      same("rgcd", rgcd(g, x.el, y.el), model_gcd(suf, i, j));
      same("rlcm", rlcm(g, x.el, y.el), m.rlcm(x.code, y.code));
      same("right_complement", right_complement(g, x.el, y.el), m.rcomplement(x.code, y.code));
      c.expect(divides(g, x.el, y.el) == pre[i][j], [&] { return "divides(" + m.show(x.code) + ", " + m.show(y.code) + ")"; });
      c.expect(right_divides(g, x.el, y.el) == suf[i][j],
               [&] { return "right_divides(" + m.show(x.code) + ", " + m.show(y.code) + ")"; });
      if (pre[i][j]) {
        Element q = left_quotient(g, x.el, y.el);
        c.expect(m.mul(x.code, code(q)) == y.code, [&] { return at("left_quotient", q, y.code); });
      }
    }
  }
  return c.report();
}

}  // namespace garside::verify
