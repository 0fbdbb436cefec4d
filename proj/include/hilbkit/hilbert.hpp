#pragma once

#include "hilbkit/ideal.hpp"
#include "hilbkit/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hilbkit {

/// Polynomial in one variable n with rational coefficients (power basis).
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    explicit HilbertPolynomial(std::vector<Scalar> coeffs);
    static HilbertPolynomial constant(const Scalar& c);
    /// C(n + shift, k) as a polynomial in n.
    static HilbertPolynomial binomial(long shift, int k);
    /// Lagrange interpolation through (xs[i], ys[i]).
    static HilbertPolynomial interpolate(const std::vector<long>& xs, const std::vector<Scalar>& ys);

    const std::vector<Scalar>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Scalar& leading_coefficient() const { return c_.back(); }

    Scalar operator()(long n) const;
    HilbertPolynomial operator+(const HilbertPolynomial& o) const;
    HilbertPolynomial operator-(const HilbertPolynomial& o) const;
    bool operator==(const HilbertPolynomial& o) const { return c_ == o.c_; }

    /// The exponents a_1 >= ... >= a_r >= 0 of the Gotzmann representation
    /// p(n) = sum_i C(n + a_i - i + 1, a_i). Throws InvalidInput when none exists.
    std::vector<int> gotzmann_decomposition() const;

    /// Human form such as "4*n" or "1/6*n^3 + n^2 + 11/6*n + 1".
    std::string to_string() const;

private:
    void trim();
    std::vector<Scalar> c_;  // c_[k] is the coefficient of n^k
};

/// Ideal-side Hilbert function values with the ring variable count.
struct HilbertFunction {
    std::size_t nvars = 4;
    std::vector<long> values;  // values[n] = dim I_n
};

/// dim of the degree-n piece of the polynomial ring.
long ring_dimension(std::size_t nvars, int n);

/// dim_k I_n, counted on the standard monomials of the degrevlex initial ideal.
long hilbert_function(const Ideal& ideal, int n);
HilbertFunction hilbert_function_table(const Ideal& ideal, int upto);

/// Numerator N(T) of the quotient Hilbert series N(T)/(1-T)^nvars of a
/// monomial ideal (coefficient k = coefficient of T^k).
std::vector<std::int64_t> hilbert_series_numerator(const std::vector<Monomial>& gens, std::size_t nvars);

/// Quotient Hilbert polynomial read off the Hilbert series numerator.
HilbertPolynomial quotient_hilbert_polynomial_from_series(const Ideal& ideal);

/// Ideal-side Hilbert polynomial by interpolation at nvars consecutive degrees
/// past every known bound, guarded by nvars further evaluations and by the
/// series computation. Throws CheckFailure when the guards disagree.
HilbertPolynomial hilbert_polynomial(const Ideal& ideal);
/// C(n + nvars - 1, nvars - 1) - hilbert_polynomial(I).
HilbertPolynomial quotient_hilbert_polynomial(const Ideal& ideal);

/// Castelnuovo–Mumford regularity: max generator degree of the degrevlex
/// generic initial ideal (directly when the ideal is strongly stable).
int regularity(const Ideal& ideal);

/// Minimal dim(P_1 W) over a-dimensional spaces W of degree-d forms in r
/// variables, realized by the lex segment.
long macaulay_min_growth(long a, int d, std::size_t r);
/// Macaulay's upper bound h^<d> for the growth of a quotient Hilbert function.
long macaulay_upper_bound(long h, int d);

int gotzmann_number(const HilbertPolynomial& p);

}  // namespace hilbkit
