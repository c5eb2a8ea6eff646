#include "garside/word_io.hpp"

#include <charconv>

namespace garside {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> delta_power(std::string_view tok) {
  if (!tok.starts_with("D^")) return std::nullopt;
  std::uint64_t k = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), k);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.size() == 2) return std::nullopt;
  return k;
}

}  // namespace

Word parse_word(const Germ& g, std::string_view text, std::optional<SimpleId> delta) {
  Word w;
  text = trim(text);
  if (text.empty()) return w;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(".|", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (tok.empty()) throw DomainError("empty letter in word '" + std::string(text) + "'");
    if (auto s = g.find(tok)) {
      w.push_back(*s);
    } else if (auto k = delta_power(tok); k && first) {
      if (*k > 1'000'000) throw DomainError("Delta power too large");
      w.insert(w.end(), *k, delta.value_or(g.delta()));
    } else {
      throw DomainError("unknown simple '" + std::string(tok) + "'");
    }
    first = false;
  }
  return w;
}

std::string format_word(const Germ& g, const Word& w, std::string_view sep) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += sep;
    out += g.name(w[i]);
  }
  return out;
}

std::string format_normal(const Germ& g, const NormalWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  if (w.deltas > 0) out = "D^" + std::to_string(w.deltas);
  for (SimpleId s : w.factors) {
    if (!out.empty()) out += '|';
    out += g.name(s);
  }
  return out;
}

std::string format_element(const Germ& g, const Element& x) { return format_normal(g, x.nf()); }

std::string format_set(const Germ& g, const std::vector<SimpleId>& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += g.name(s[i]);
  }
  return out;
}

}  // namespace garside
