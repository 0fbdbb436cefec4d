#pragma once

#include "hilbkit/hilbert.hpp"
#include "hilbkit/ideal.hpp"

#include <random>
#include <string>
#include <vector>

namespace hilbkit {

/// Monomial ideal closed under the moves m -> m*x_i/x_j (x_i > x_j).
/// Throws InvalidInput on a non-monomial ideal.
bool is_strongly_stable(const Ideal& monomial_ideal);

/// Smallest strongly stable ideal containing the monomials.
Ideal borel_closure(const std::vector<Monomial>& ms);

/// Every saturated strongly stable ideal of k[x,y,z,t] whose quotient has
/// Hilbert polynomial p, minimal generators sorted degrevlex-descending,
/// the list ordered by regularity and then by generators.
/// `shuffle`, when given, randomizes the order in which candidate monomials
/// are tried; the returned list does not depend on it.
std::vector<Ideal> enumerate_borel_ideals(const HilbertPolynomial& p, std::mt19937_64* shuffle = nullptr);

/// The saturated lexicographic ideal with quotient Hilbert polynomial p.
Ideal lex_ideal(const HilbertPolynomial& p);

struct BorelCatalogEntry {
    std::string name;
    Ideal ideal;
    std::vector<long> phi;  // dim I_n, n = 0..7
    int regularity = 0;
};

/// The four Borel ideals with Hilbert polynomial 4n, named B3..B6 by
/// regularity; phi and regularity are computed, not stored.
std::vector<BorelCatalogEntry> borel_catalog();

/// Monomial ideal of k[x,y,z,t] from exponent vectors.
Ideal monomial_ideal(const std::vector<std::vector<int>>& exponents);

}  // namespace hilbkit
