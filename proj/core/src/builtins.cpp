#include "garside/builtins.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace garside {

namespace {

Verify trusted_level(std::size_t n) { return n <= 1024 ? Verify::quadratic : Verify::minimal; }

using Perm = std::vector<int>;

int inversions(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  }
  return c;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[q[k]];
  return r;
}

Perm transposition(int n, int i) {
  Perm s(n);
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[i], s[i + 1]);
  return s;
}

int parse_int(std::string_view text, std::string_view spec) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("bad number in germ spec '" + std::string(spec) + "'");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open germ file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Consumes one spec from the front of `rest`.
Germ parse_spec(std::string_view& rest, std::string_view whole) {
  auto take_token = [&]() {
    std::size_t end = rest.find(',');
    std::string_view tok = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
    return tok;
  };
  if (rest.starts_with("prod:")) {
    rest.remove_prefix(5);
    Germ left = parse_spec(rest, whole);
    if (!rest.starts_with(",")) throw DomainError("prod spec needs two factors: '" + std::string(whole) + "'");
    rest.remove_prefix(1);
    Germ right = parse_spec(rest, whole);
    return direct_product_germ(left, right);
  }
  if (rest.starts_with("file:")) {
    rest.remove_prefix(5);
    std::string path(take_token());
    return parse_germ(read_file(path));
  }
  std::string_view tok = take_token();
  if (tok == "wreath") return wreath_germ();
  if (tok.starts_with("braid:")) return braid_germ(parse_int(tok.substr(6), whole));
  if (tok.starts_with("abelian:")) return free_abelian_germ(parse_int(tok.substr(8), whole));
  throw DomainError("unknown germ spec '" + std::string(whole) + "'");
}

}  // namespace

Germ braid_germ(int n) {
  if (n < 2 || n > 7) throw DomainError("braid germ needs 2 <= n <= 7, got " + std::to_string(n));
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i));

  // Enumerate permutations rank by rank; the name of p is the least reduced
  // word, found by stripping the smallest left descent.
  std::map<Perm, std::string> name_of;
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  name_of[id] = "";
  std::vector<Perm> layer{id};
  std::vector<std::pair<Perm, std::string>> all{{id, "1"}};
  while (!layer.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : layer) {
      for (const Perm& s : gens) {
        Perm q = compose(s, p);
        if (inversions(q) == inversions(p) + 1 && !name_of.count(q)) {
          name_of[q] = "";
          next.push_back(q);
        }
      }
    }
    for (const Perm& q : next) {
      for (int i = 0; i + 1 < n; ++i) {
        Perm rest = compose(gens[i], q);
        if (inversions(rest) + 1 == inversions(q)) {
          name_of[q] = "s" + std::to_string(i + 1) + name_of[rest];
          break;
        }
      }
      all.emplace_back(q, name_of[q]);
    }
    layer = std::move(next);
  }
  std::stable_sort(all.begin() + 1, all.end(), [](const auto& x, const auto& y) {
    int lx = inversions(x.first), ly = inversions(y.first);
    return lx != ly ? lx < ly : x.second < y.second;
  });

  std::map<Perm, std::uint32_t> id_of;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < all.size(); ++i) {
    id_of[all[i].first] = static_cast<std::uint32_t>(i);
    names.push_back(all[i].second);
  }
  GermData d = GermData::with_names(names, simple(static_cast<std::uint32_t>(all.size() - 1)));
  for (const auto& [p, pi] : id_of) {
    for (const auto& [q, qi] : id_of) {
      Perm r = compose(p, q);
      if (inversions(r) == inversions(p) + inversions(q)) d.set(simple(pi), simple(qi), simple(id_of[r]));
    }
  }
  return Germ(std::move(d), trusted_level(all.size()));
}

Germ free_abelian_germ(int k) {
  if (k < 1 || k > 10) throw DomainError("abelian germ needs 1 <= k <= 10, got " + std::to_string(k));
  std::vector<std::uint32_t> masks(std::size_t{1} << k);
  std::iota(masks.begin(), masks.end(), 0U);
  auto indices = [k](std::uint32_t m) {
    std::vector<int> v;
    for (int i = 0; i < k; ++i) {
      if (m >> i & 1U) v.push_back(i);
    }
    return v;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint32_t x, std::uint32_t y) {
    int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : indices(x) < indices(y);
  });
  std::vector<std::uint32_t> id_of(masks.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    id_of[masks[i]] = static_cast<std::uint32_t>(i);
    std::string name;
    for (int j : indices(masks[i])) name += "e" + std::to_string(j + 1);
    names.push_back(name.empty() ? "1" : name);
  }
  GermData d = GermData::with_names(names, simple(static_cast<std::uint32_t>(masks.size() - 1)));
  for (std::uint32_t x : masks) {
    for (std::uint32_t y : masks) {
      if ((x & y) == 0) d.set(simple(id_of[x]), simple(id_of[y]), simple(id_of[x | y]));
    }
  }
  return Germ(std::move(d), trusted_level(masks.size()));
}

Germ wreath_germ() {
  // ((x, y), e) packed as x | y << 1 | e << 2.
  struct Triple {
    int x, y, e;
  };
  const std::array<std::pair<const char*, Triple>, 8> simples{{
      {"1", {0, 0, 0}},
      {"a", {1, 0, 0}},
      {"b", {0, 1, 0}},
      {"c", {0, 0, 1}},
      {"ab", {1, 1, 0}},
      {"ac", {1, 0, 1}},
      {"bc", {0, 1, 1}},
      {"abc", {1, 1, 1}},
  }};
  std::vector<std::string> names;
  for (const auto& s : simples) names.emplace_back(s.first);
  GermData d = GermData::with_names(names, simple(7));
  auto find = [&](Triple t) -> std::optional<std::uint32_t> {
    for (std::uint32_t i = 0; i < simples.size(); ++i) {
      const Triple& u = simples[i].second;
      if (u.x == t.x && u.y == t.y && u.e == t.e) return i;
    }
    return std::nullopt;
  };
  for (std::uint32_t i = 0; i < simples.size(); ++i) {
    for (std::uint32_t j = 0; j < simples.size(); ++j) {
      const Triple& s = simples[i].second;
      Triple t = simples[j].second;
      if (s.e == 1) std::swap(t.x, t.y);
      if (auto r = find({s.x + t.x, s.y + t.y, s.e + t.e})) d.set(simple(i), simple(j), simple(*r));
    }
  }
  return Germ(std::move(d), Verify::full);
}

Germ direct_product_germ(const Germ& left, const Germ& right) {
  const std::uint32_t n1 = static_cast<std::uint32_t>(left.size());
  const std::uint32_t n2 = static_cast<std::uint32_t>(right.size());
  if (std::size_t{n1} * n2 >= kMaxSimples) throw DomainError("direct product has too many simples");
  // Enough primes that right names never collide with nested left names.
  std::size_t primes = 1;
  for (const auto& name : left.names()) {
    std::size_t k = name.size() - name.find_last_not_of('\'') - 1;
    primes = std::max(primes, k + 1);
  }
  const std::string mark(primes, '\'');
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n1; ++i) {
    for (std::uint32_t j = 0; j < n2; ++j) {
      std::string l = left.name(simple(i)), r = right.name(simple(j)) + mark;
      if (i == 0 && j == 0) names.push_back("1");
      else if (j == 0) names.push_back(l);
      else if (i == 0) names.push_back(r);
      else names.push_back(l + "*" + r);
    }
  }
  auto pair_id = [n2](std::uint32_t i, std::uint32_t j) { return simple(i * n2 + j); };
  GermData d = GermData::with_names(names, pair_id(index(left.delta()), index(right.delta())));
  for (std::uint32_t i = 0; i < n1; ++i) {
    for (std::uint32_t k = 0; k < n1; ++k) {
      auto ik = left.product(simple(i), simple(k));
      if (!ik) continue;
      for (std::uint32_t j = 0; j < n2; ++j) {
        for (std::uint32_t l = 0; l < n2; ++l) {
          auto jl = right.product(simple(j), simple(l));
          if (jl) d.set(pair_id(i, j), pair_id(k, l), pair_id(index(*ik), index(*jl)));
        }
      }
    }
  }
  return Germ(std::move(d), trusted_level(names.size()));
}

Germ germ_from_spec(std::string_view spec) {
  std::string_view rest = spec;
  Germ g = parse_spec(rest, spec);
  if (!rest.empty()) throw DomainError("trailing text in germ spec '" + std::string(spec) + "'");
  return g;
}

}  // namespace garside
