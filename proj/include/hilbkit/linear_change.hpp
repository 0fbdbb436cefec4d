#pragma once

#include "hilbkit/linalg.hpp"
#include "hilbkit/polynomial.hpp"

#include <random>

namespace hilbkit {

/// Invertible linear substitution of the first n variables: variable j is
/// replaced by sum_i M(i, j) x_i. Remaining variables are left untouched.
class LinearChange {
public:
    /// Throws InvalidInput when the matrix is singular or not square.
    explicit LinearChange(Matrix m);
    static LinearChange identity(std::size_t n);
    /// Variable i is replaced by scale[i] * x_i.
    static LinearChange diagonal(const std::vector<Scalar>& scale);
    /// Coordinates where the given independent linear forms become
    /// x_0, x_1, ...: applying the change maps forms[k] to the k-th variable.
    static LinearChange sending_forms_to_variables(const std::vector<Polynomial>& forms);
    /// Integer entries uniform in [-bound, bound], redrawn until invertible.
    static LinearChange random(std::size_t n, int bound, std::mt19937_64& rng);

    const Matrix& matrix() const { return m_; }
    std::size_t size() const { return m_.rows(); }
    LinearChange inverse() const;
    /// The change g∘h: apply h first, then g.
    LinearChange compose(const LinearChange& first) const;

    Polynomial apply(const Polynomial& p) const;
    std::vector<Polynomial> apply(const std::vector<Polynomial>& ps) const;

private:
    Matrix m_;
};

inline Polynomial apply_change(const Polynomial& p, const LinearChange& g) { return g.apply(p); }

/// Coefficient vector (length nvars) of a linear form.
Vector linear_coefficients(const Polynomial& form);

}  // namespace hilbkit
