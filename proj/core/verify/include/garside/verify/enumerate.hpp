#pragma once

// Brute-force enumerations used by the property suites and the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "garside/element.hpp"
#include "garside/zappa_szep.hpp"

namespace garside::verify {

/// Throws DomainError once an enumeration exceeds this many results.
inline constexpr std::size_t kEnumerationGuard = 5'000'000;

/// All words over the given letters (units excluded by the caller) whose
/// adjacent pairs are left-weighted in g and whose total atom length is at
/// most max_length.  Includes the empty word.  These are the normal words of
/// the barred language; each element appears exactly once.
std::vector<Word> normal_words(const Germ& g, const std::vector<SimpleId>& letters, std::uint64_t max_length);
/// normal_words over every non-unit simple.
std::vector<Word> normal_words(const Germ& g, std::uint64_t max_length);
/// normal_words over the non-unit simples of one factor.
std::vector<Word> normal_words(const ZSStructure& zs, Side side, std::uint64_t max_length);

/// Elements of atom length at most max_length.
std::vector<Element> elements(const Germ& g, std::uint64_t max_length);

/// Total atom length of a word.
std::uint64_t word_length(const Germ& g, const Word& w);

/// Every word of exactly n letters drawn from `letters`.
std::vector<Word> all_words(const std::vector<SimpleId>& letters, std::size_t n);

/// A random word of 0..max_letters letters drawn from `letters`.
Word random_word(std::mt19937_64& rng, const std::vector<SimpleId>& letters, std::size_t max_letters);

/// Non-unit simples of a germ, resp. of one factor.
std::vector<SimpleId> proper_letters(const Germ& g);
std::vector<SimpleId> proper_letters(const ZSStructure& zs, Side side);

}  // namespace garside::verify
