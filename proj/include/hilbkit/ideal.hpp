#pragma once

#include "hilbkit/groebner.hpp"
#include "hilbkit/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hilbkit {

/// Homogeneous ideal given by generators, with a per-order cache of reduced
/// Gröbner bases. Copies share the cache; every cached value is a function
/// of the generators alone.
class Ideal {
public:
    /// The zero ideal of a ring with `nvars` variables.
    explicit Ideal(std::size_t nvars = 4);
    /// Zero generators are dropped. Throws InvalidInput on an inhomogeneous
    /// generator or mixed variable counts.
    Ideal(std::size_t nvars, std::vector<Polynomial> generators);
    explicit Ideal(std::vector<Polynomial> generators);
    static Ideal from_monomials(const std::vector<Monomial>& monomials);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_monomial() const;
    /// True when the ideal is the whole ring.
    bool is_unit() const;

    /// Reduced Gröbner basis, computed once per order.
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;
    /// Minimal generators of the initial ideal, descending under `ord`.
    std::vector<Monomial> leading_monomials(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;

    /// Maximal degree of a generator (-1 for the zero ideal).
    int max_generator_degree() const;

    /// Shared slot for the generic initial ideal (filled by gin-tools).
    std::shared_ptr<const Ideal> cached_gin() const;
    void store_gin(std::shared_ptr<const Ideal> gin) const;

    std::string to_string(const std::vector<std::string>& names = default_var_names()) const;

private:
    struct Cache;
    std::size_t nvars_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Minimal monomial generators of the ideal generated by `ms`, sorted
/// degrevlex-descending.
std::vector<Monomial> minimalize(std::vector<Monomial> ms);

// ---- groebner-engine operations -------------------------------------------

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::degrevlex());
const std::vector<Polynomial>& groebner_basis(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::degrevlex());
Ideal initial_ideal(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::degrevlex());

/// I : f. Throws InvalidInput for f = 0.
Ideal quotient(const Ideal& ideal, const Polynomial& f);
/// I : f^∞. Variables and products of variables use the revlex-division
/// route; every other f uses iterated quotients until they stabilize.
Ideal saturate(const Ideal& ideal, const Polynomial& f);
/// I : f^∞ computed only through iterated quotients (independent route).
Ideal saturate_by_quotients(const Ideal& ideal, const Polynomial& f);
/// I : (x_0, ..., x_{n-1})^∞.
Ideal saturate_irrelevant(const Ideal& ideal);
/// I ∩ J through elimination of an auxiliary tag variable.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);
/// Equality of ideals by comparison of reduced degrevlex bases.
bool equal(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);

/// Basis of the degree-n piece: {m - NF(m) : m a degree-n monomial of in(I)}.
std::vector<Polynomial> degree_piece(const Ideal& ideal, int n);
/// Minimal homogeneous generators extracted from the reduced degrevlex basis
/// (basis elements in the ideal of the previously kept ones are dropped).
std::vector<Polynomial> minimal_generators(const Ideal& ideal);
/// The ideal after a linear change of coordinates.
class LinearChange;
Ideal transform(const Ideal& ideal, const LinearChange& g);

}  // namespace hilbkit
