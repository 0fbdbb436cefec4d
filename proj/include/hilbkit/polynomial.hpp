#pragma once

#include "hilbkit/monomial.hpp"
#include "hilbkit/order.hpp"
#include "hilbkit/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hilbkit {

struct Term {
    Monomial mono;
    Scalar coef;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// degrevlex-descending with no zero coefficients, so two polynomials are
/// equal iff their term vectors are equal.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 4)
        : nvars_(nvars)
    {
    }
    /// Combines like terms and drops zeros.
    Polynomial(std::size_t nvars, std::vector<Term> terms);

    static Polynomial constant(std::size_t nvars, const Scalar& c);
    static Polynomial variable(std::size_t i, std::size_t nvars = 4);
    static Polynomial monomial(const Monomial& m, const Scalar& c = 1);
    /// Linear form sum c_i x_i.
    static Polynomial linear_form(std::span<const Scalar> coeffs);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Maximal total degree; -1 for the zero polynomial.
    int degree() const;
    /// Common degree of all terms; nullopt when not homogeneous or zero.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;
    bool is_homogeneous(std::span<const int> grading) const;
    bool is_monomial() const { return terms_.size() == 1; }

    Scalar coefficient(const Monomial& m) const;
    const Term& leading_term(const MonomialOrder& ord) const;
    /// Scaled so that the leading coefficient under `ord` is 1.
    Polynomial monic(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial mul_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const;

    /// Substitutes the scalar `value` for variable i (variable count unchanged).
    Polynomial substitute(std::size_t i, const Scalar& value) const;
    /// Re-embeds into a ring with `nvars` variables. Shrinking requires the
    /// dropped variables to be absent.
    Polynomial resized(std::size_t nvars) const;
    /// Reorders variables: variable i becomes variable perm[i].
    Polynomial permuted(std::span<const std::size_t> perm) const;
    /// Largest power of variable i dividing every term.
    int variable_valuation(std::size_t i) const;
    int degree_in(std::size_t i) const;
    /// Divides by x_i^e; precondition e <= variable_valuation(i).
    Polynomial divide_by_variable(std::size_t i, int e) const;

    /// Coefficients as a dense vector on the given monomial basis; throws
    /// CheckFailure when a term is outside the basis.
    std::vector<Scalar> coordinates(const std::vector<Monomial>& basis) const;

    std::string to_string(const std::vector<std::string>& names = default_var_names()) const;

private:
    std::size_t nvars_;
    std::vector<Term> terms_;
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

}  // namespace hilbkit
