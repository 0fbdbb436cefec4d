#include "hilbkit/polynomial.hpp"

#include "hilbkit/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace hilbkit {

namespace {

const MonomialOrder& canonical_order()
{
    static const MonomialOrder ord = MonomialOrder::degrevlex();
    return ord;
}

bool term_greater(const Term& a, const Term& b)
{
    return canonical_order().compare(a.mono, b.mono) > 0;
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms)
    : nvars_(nvars)
{
    std::unordered_map<Monomial, Scalar, MonomialHash> acc;
    for (auto& t : terms) {
        if (t.mono.nvars() != nvars)
            throw InvalidInput("term has the wrong variable count");
        acc[t.mono] += t.coef;
    }
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            terms_.push_back({m, c});
    std::sort(terms_.begin(), terms_.end(), term_greater);
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c)
{
    Polynomial p(nvars);
    if (c != 0)
        p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Polynomial Polynomial::variable(std::size_t i, std::size_t nvars)
{
    return monomial(Monomial::variable(i, nvars));
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c)
{
    Polynomial p(m.nvars());
    if (c != 0)
        p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::linear_form(std::span<const Scalar> coeffs)
{
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        terms.push_back({Monomial::variable(i, coeffs.size()), coeffs[i]});
    return Polynomial(coeffs.size(), std::move(terms));
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

std::optional<int> Polynomial::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d)
            return std::nullopt;
    return d;
}

bool Polynomial::is_homogeneous() const
{
    return terms_.empty() || homogeneous_degree().has_value();
}

bool Polynomial::is_homogeneous(std::span<const int> grading) const
{
    if (terms_.empty())
        return true;
    long d = terms_.front().mono.weighted_degree(grading);
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(grading) != d)
            return false;
    return true;
}

Scalar Polynomial::coefficient(const Monomial& m) const
{
    for (const auto& t : terms_)
        if (t.mono == m)
            return t.coef;
    return 0;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const
{
    if (terms_.empty())
        throw InvalidInput("zero polynomial has no leading term");
    if (ord.kind() == MonomialOrder::Kind::DegRevLex)
        return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (ord.compare(t.mono, best->mono) > 0)
            best = &t;
    return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const
{
    if (terms_.empty())
        return *this;
    Scalar inv = 1 / leading_term(ord).coef;
    return *this * inv;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    if (o.nvars_ != nvars_)
        throw InvalidInput("adding polynomials from different rings");
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        auto c = canonical_order().compare(a->mono, b->mono);
        if (c > 0)
            r.terms_.push_back(*a++);
        else if (c < 0)
            r.terms_.push_back(*b++);
        else {
            Scalar s = a->coef + b->coef;
            if (s != 0)
                r.terms_.push_back({a->mono, s});
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Scalar& c) const
{
    if (c == 0)
        return Polynomial(nvars_);
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coef *= c;
    return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p)
{
    return p * c;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const
{
    if (c == 0)
        return Polynomial(nvars_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coef *= c;
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (o.nvars_ != nvars_)
        throw InvalidInput("multiplying polynomials from different rings");
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prod.push_back({a.mono * b.mono, a.coef * b.coef});
    return Polynomial(nvars_, std::move(prod));
}

Polynomial Polynomial::pow(int e) const
{
    Polynomial r = constant(nvars_, 1);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

Polynomial Polynomial::substitute(std::size_t i, const Scalar& value) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar c = t.coef;
        for (int k = 0; k < t.mono[i]; ++k)
            c *= value;
        Monomial m = t.mono;
        m.set(i, 0);
        out.push_back({m, c});
    }
    return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::resized(std::size_t nvars) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        for (std::size_t i = nvars; i < nvars_; ++i)
            if (t.mono[i] != 0)
                throw InvalidInput("cannot drop a variable that occurs in the polynomial");
        out.push_back({t.mono.resized(nvars), t.coef});
    }
    return Polynomial(nvars, std::move(out));
}

Polynomial Polynomial::permuted(std::span<const std::size_t> perm) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i)
            m.set(perm[i], t.mono[i]);
        out.push_back({m, t.coef});
    }
    return Polynomial(nvars_, std::move(out));
}

int Polynomial::variable_valuation(std::size_t i) const
{
    if (terms_.empty())
        return 0;
    int v = terms_.front().mono[i];
    for (const auto& t : terms_)
        v = std::min(v, t.mono[i]);
    return v;
}

int Polynomial::degree_in(std::size_t i) const
{
    int d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono[i]);
    return d;
}

Polynomial Polynomial::divide_by_variable(std::size_t i, int e) const
{
    Monomial m = Monomial::variable(i, nvars_, e);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back({t.mono / m, t.coef});
    return Polynomial(nvars_, std::move(out));
}

std::vector<Scalar> Polynomial::coordinates(const std::vector<Monomial>& basis) const
{
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], i);
    std::vector<Scalar> v(basis.size());
    for (const auto& t : terms_) {
        auto it = index.find(t.mono);
        if (it == index.end())
            throw CheckFailure("term outside the coordinate basis: " + t.mono.to_string());
        v[it->second] = t.coef;
    }
    return v;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coef;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        bool unit_mono = t.mono.degree() == 0;
        if (c != 1 || unit_mono) {
            s += c.get_str();
            if (!unit_mono)
                s += '*';
        }
        if (!unit_mono)
            s += t.mono.to_string(names);
    }
    return s;
}

}  // namespace hilbkit
