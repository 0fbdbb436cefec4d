#pragma once

#include "hilbkit/order.hpp"
#include "hilbkit/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hilbkit {

struct GbOptions {
    /// Grading used for pair selection; empty means the standard grading.
    /// The input must be homogeneous for it when max_degree is set.
    std::vector<int> grading;
    /// Only S-pairs of degree <= max_degree are processed; the result is then
    /// a Gröbner basis of the ideal truncated to those degrees.
    std::optional<int> max_degree;
};

/// Reduced Gröbner basis: monic, self-reduced, sorted by leading monomial
/// (descending under `ord`). Buchberger's algorithm with the Gebauer–Möller
/// criteria and the normal selection strategy.
std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                               const GbOptions& opts = {});

/// Full reduction of f by `basis`. When `basis` is a Gröbner basis the result
/// is the unique normal form.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& ord);

struct Division {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division with quotients: f = sum q_i d_i + r, no term of r
/// divisible by any leading monomial. Divisors are tried in list order.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord);

/// Exact quotient f / g; throws CheckFailure when g does not divide f.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);

/// S-polynomial of two polynomials under `ord`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// True when every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& ord);

}  // namespace hilbkit
