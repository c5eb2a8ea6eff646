#include <set>
#include <sstream>

#include "garside/germ.hpp"

namespace garside {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

GermData parse_germ_data(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> by_name;
  std::optional<SimpleId> delta;
  bool header = false;
  GermData d;
  std::set<std::pair<std::uint32_t, std::uint32_t>> given;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& what, const Token& t) -> GermParseError {
      return GermParseError(what, line_no, t.column);
    };
    auto lookup = [&](const Token& t) {
      auto it = by_name.find(std::string(t.text));
      if (it == by_name.end()) throw fail("unknown simple '" + std::string(t.text) + "'", t);
      return it->second;
    };

    if (!header) {
      if (tok.size() != 2 || tok[0].text != "germ" || tok[1].text != "v1") throw fail("expected 'germ v1'", tok[0]);
      header = true;
      continue;
    }
    std::string_view key = tok[0].text;
    if (key == "simples:") {
      if (!names.empty()) throw fail("duplicate 'simples:' line", tok[0]);
      if (tok.size() < 2) throw fail("'simples:' needs at least the unit", tok[0]);
      // The unit always gets index 0; others keep file order.
      names.push_back("1");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        std::string name(tok[i].text);
        if (name.find_first_of(".|") != std::string::npos) throw fail("'.' and '|' are not allowed in names", tok[i]);
        if (name == "1") continue;
        if (by_name.count(name)) throw fail("duplicate simple '" + name + "'", tok[i]);
        by_name[name] = 0;
        names.push_back(name);
      }
      if (names.size() - 1 != tok.size() - 2) throw fail("'simples:' must list the unit '1' exactly once", tok[0]);
      for (std::uint32_t i = 0; i < names.size(); ++i) by_name[names[i]] = i;
      d = GermData::with_names(names, kUnit);
    } else if (key == "delta:") {
      if (names.empty()) throw fail("'delta:' before 'simples:'", tok[0]);
      if (delta) throw fail("duplicate 'delta:' line", tok[0]);
      if (tok.size() != 2) throw fail("'delta:' takes one name", tok[0]);
      delta = simple(lookup(tok[1]));
      d.delta = *delta;
    } else if (key == "prod") {
      if (names.empty()) throw fail("'prod' before 'simples:'", tok[0]);
      if (tok.size() != 4) throw fail("'prod' takes three names", tok[0]);
      std::uint32_t s = lookup(tok[1]), t = lookup(tok[2]), u = lookup(tok[3]);
      if (!given.emplace(s, t).second) throw fail("duplicate product entry for " + names[s] + "*" + names[t], tok[0]);
      if (s == 0 || t == 0) {
        if (u != (s == 0 ? t : s)) throw fail("product with the unit contradicts the unit law", tok[0]);
        continue;
      }
      d.set(simple(s), simple(t), simple(u));
    } else {
      throw fail("unknown directive '" + std::string(key) + "'", tok[0]);
    }
  }
  if (!header) throw GermParseError("empty germ file", line_no == 0 ? 1 : line_no, 1);
  if (names.empty()) throw GermParseError("missing 'simples:' line", line_no, 1);
  if (!delta) throw GermParseError("missing 'delta:' line", line_no, 1);
  return d;
}

Germ parse_germ(std::string_view text) { return Germ(parse_germ_data(text), Verify::full); }

std::string write_germ(const Germ& g) {
  std::ostringstream os;
  os << "germ v1\nsimples:";
  for (const auto& n : g.names()) os << ' ' << n;
  os << "\ndelta: " << g.name(g.delta()) << '\n';
  for (std::uint32_t s = 1; s < g.size(); ++s) {
    for (std::uint32_t t = 1; t < g.size(); ++t) {
      if (auto u = g.product(simple(s), simple(t))) {
        os << "prod " << g.name(simple(s)) << ' ' << g.name(simple(t)) << ' ' << g.name(*u) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace garside
