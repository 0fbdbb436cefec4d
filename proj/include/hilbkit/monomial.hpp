#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hilbkit {

inline constexpr std::size_t kMaxVars = 8;

/// Default variable names. The first four are the coordinates of P^3,
/// ordered x > y > z > t; `a` is the family parameter and `h`, `u` are
/// auxiliary variables used internally (homogenization, elimination tag).
const std::vector<std::string>& default_var_names();

/// Dense exponent vector over at most kMaxVars variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars);
    Monomial(std::initializer_list<int> exps);
    static Monomial from_exponents(std::span<const int> exps);
    static Monomial variable(std::size_t i, std::size_t nvars, int power = 1);

    std::size_t nvars() const { return n_; }
    int degree() const { return deg_; }
    int operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, int e);

    /// Sum of exponents weighted by `w` (w.size() == nvars()).
    long weighted_degree(std::span<const int> w) const;

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; precondition other.divides(*this).
    Monomial operator/(const Monomial& other) const;

    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;

    /// Drops or appends variables (appended variables get exponent 0).
    Monomial resized(std::size_t nvars) const;

    bool operator==(const Monomial& other) const
    {
        return n_ == other.n_ && e_ == other.e_;
    }

    std::size_t hash() const;
    std::string to_string(const std::vector<std::string>& names = default_var_names()) const;

private:
    std::array<std::int16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
    std::int16_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of the given degree in `nvars` variables, lex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace hilbkit
