#pragma once

// Text syntax for words: letters separated by '.' or '|', an optional
// leading D^k for a power of Delta, and "1" (or nothing) for the identity.
// Normal forms print as D^k|x1|x2 with no spaces.

#include <optional>
#include <string>
#include <string_view>

#include "garside/element.hpp"

namespace garside {

/// Parses a word.  D^k expands to k copies of `delta` (the germ's Delta
/// unless given).  Throws DomainError on unknown names.
Word parse_word(const Germ& g, std::string_view text, std::optional<SimpleId> delta = std::nullopt);

std::string format_normal(const Germ& g, const NormalWord& w);
std::string format_element(const Germ& g, const Element& x);
/// Letters joined by `sep`; the empty word prints as "1".
std::string format_word(const Germ& g, const Word& w, std::string_view sep = "|");
/// Comma-separated list of simple names, or "{}" when empty.
std::string format_set(const Germ& g, const std::vector<SimpleId>& s);

}  // namespace garside
