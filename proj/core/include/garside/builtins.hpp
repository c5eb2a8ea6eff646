#pragma once

#include <string_view>

#include "garside/germ.hpp"

namespace garside {

/// Positive braid monoid on n strands (2 <= n <= 7).  Simples are the
/// permutation braids, named by their lexicographically least reduced word
/// in the generators s1, ..., s{n-1}.
Germ braid_germ(int n);

/// Free abelian monoid of rank k (1 <= k <= 10).  Simples are the subsets of
/// {e1, ..., ek}; Delta is their product.
Germ free_abelian_germ(int k);

/// The monoid <a, b, c | ab = ba, ac = cb, bc = ca>, a semidirect product of
/// N^2 by N where the generator c swaps the two coordinates.  Eight simples.
Germ wreath_germ();

/// Componentwise product.  Simples of the second factor get a trailing
/// prime in their names (more than one if the first factor already uses
/// primes); mixed simples are written "x*y'".
Germ direct_product_germ(const Germ& left, const Germ& right);

/// Builds a germ from a spec string: braid:N, abelian:K, wreath, file:PATH,
/// prod:SPEC,SPEC.  Throws DomainError on malformed specs.
Germ germ_from_spec(std::string_view spec);

}  // namespace garside
