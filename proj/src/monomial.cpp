#include "hilbkit/monomial.hpp"

#include "hilbkit/error.hpp"

#include <algorithm>

namespace hilbkit {

const std::vector<std::string>& default_var_names()
{
    static const std::vector<std::string> names{"x", "y", "z", "t", "a", "h", "u", "v"};
    return names;
}

Monomial::Monomial(std::size_t nvars)
    : n_(static_cast<std::uint8_t>(nvars))
{
    if (nvars > kMaxVars)
        throw InvalidInput("too many variables");
}

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(exps.size())
{
    std::size_t i = 0;
    for (int e : exps)
        set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const int> exps)
{
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        m.set(i, exps[i]);
    return m;
}

Monomial Monomial::variable(std::size_t i, std::size_t nvars, int power)
{
    Monomial m(nvars);
    m.set(i, power);
    return m;
}

void Monomial::set(std::size_t i, int e)
{
    if (e < 0)
        throw InvalidInput("negative exponent");
    deg_ = static_cast<std::int16_t>(deg_ - e_[i] + e);
    e_[i] = static_cast<std::int16_t>(e);
}

long Monomial::weighted_degree(std::span<const int> w) const
{
    long d = 0;
    for (std::size_t i = 0; i < n_; ++i)
        d += static_cast<long>(w[i]) * e_[i];
    return d;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != 0 && other.e_[i] != 0)
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r = *this;
    for (std::size_t i = 0; i < n_; ++i)
        r.e_[i] = static_cast<std::int16_t>(e_[i] + other.e_[i]);
    r.deg_ = static_cast<std::int16_t>(deg_ + other.deg_);
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    Monomial r = *this;
    for (std::size_t i = 0; i < n_; ++i)
        r.e_[i] = static_cast<std::int16_t>(e_[i] - other.e_[i]);
    r.deg_ = static_cast<std::int16_t>(deg_ - other.deg_);
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        r.set(i, std::max(e_[i], other.e_[i]));
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const
{
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        r.set(i, std::min(e_[i], other.e_[i]));
    return r;
}

Monomial Monomial::resized(std::size_t nvars) const
{
    Monomial r(nvars);
    for (std::size_t i = 0; i < std::min<std::size_t>(nvars, n_); ++i)
        r.set(i, e_[i]);
    return r;
}

std::size_t Monomial::hash() const
{
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i)
        h = h * 131 + static_cast<std::size_t>(e_[i]);
    return h;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const
{
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
        if (e_[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += names[i];
        if (e_[i] > 1)
            s += '^' + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

namespace {

void fill_monomials(std::size_t nvars, std::size_t var, int remaining,
                    std::vector<int>& exps, std::vector<Monomial>& out)
{
    if (var + 1 == nvars) {
        exps[var] = remaining;
        out.push_back(Monomial::from_exponents(exps));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[var] = e;
        fill_monomials(nvars, var + 1, remaining - e, exps, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree)
{
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    if (nvars == 0) {
        if (degree == 0)
            out.emplace_back(0);
        return out;
    }
    std::vector<int> exps(nvars, 0);
    fill_monomials(nvars, 0, degree, exps, out);
    return out;
}

}  // namespace hilbkit
