#include "hilbkit/ideal.hpp"

#include "hilbkit/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hilbkit {

struct Ideal::Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
    std::shared_ptr<const Ideal> gin;
};

Ideal::Ideal(std::size_t nvars)
    : nvars_(nvars), cache_(std::make_shared<Cache>())
{
}

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators)
    : nvars_(nvars), cache_(std::make_shared<Cache>())
{
    for (auto& g : generators) {
        if (g.nvars() != nvars)
            throw InvalidInput("generator lives in a ring with " + std::to_string(g.nvars()) + " variables, expected " +
                               std::to_string(nvars));
        if (g.is_zero())
            continue;
        if (!g.is_homogeneous())
            throw InvalidInput("inhomogeneous generator: " + g.to_string());
        gens_.push_back(std::move(g));
    }
}

Ideal::Ideal(std::vector<Polynomial> generators)
    : Ideal(generators.empty() ? 4 : generators.front().nvars(), std::move(generators))
{
}

Ideal Ideal::from_monomials(const std::vector<Monomial>& monomials)
{
    if (monomials.empty())
        return Ideal(4);
    std::vector<Polynomial> gens;
    for (const auto& m : monomials)
        gens.push_back(Polynomial::monomial(m));
    return Ideal(monomials.front().nvars(), std::move(gens));
}

bool Ideal::is_monomial() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::is_unit() const
{
    for (const auto& g : groebner_basis())
        if (g.degree() == 0)
            return true;
    return false;
}

std::vector<Monomial> minimalize(std::vector<Monomial> ms)
{
    const MonomialOrder ord = MonomialOrder::degrevlex();
    std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return ord.compare(a, b) > 0;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Monomial> out;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& k : out)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    return out;
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const
{
    const std::string key = ord.key();
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end())
            return *it->second;
    }
    std::vector<Polynomial> basis;
    if (is_monomial()) {
        std::vector<Monomial> ms;
        for (const auto& g : gens_)
            ms.push_back(g.terms().front().mono);
        ms = minimalize(std::move(ms));
        std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
        for (const auto& m : ms)
            basis.push_back(Polynomial::monomial(m));
    } else {
        basis = reduced_groebner_basis(gens_, ord);
    }
    auto shared = std::make_shared<const std::vector<Polynomial>>(std::move(basis));
    std::lock_guard lock(cache_->mutex);
    auto [it, inserted] = cache_->bases.emplace(key, shared);
    return *it->second;
}

std::vector<Monomial> Ideal::leading_monomials(const MonomialOrder& ord) const
{
    std::vector<Monomial> out;
    for (const auto& g : groebner_basis(ord))
        out.push_back(g.leading_term(ord).mono);
    return out;
}

bool Ideal::contains(const Polynomial& f) const
{
    return normal_form(f, *this).is_zero();
}

bool Ideal::contains(const Ideal& other) const
{
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

int Ideal::max_generator_degree() const
{
    int d = -1;
    for (const auto& g : gens_)
        d = std::max(d, g.degree());
    return d;
}

std::shared_ptr<const Ideal> Ideal::cached_gin() const
{
    std::lock_guard lock(cache_->mutex);
    return cache_->gin;
}

void Ideal::store_gin(std::shared_ptr<const Ideal> gin) const
{
    std::lock_guard lock(cache_->mutex);
    if (!cache_->gin)
        cache_->gin = std::move(gin);
}

std::string Ideal::to_string(const std::vector<std::string>& names) const
{
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            s += ", ";
        s += gens_[i].to_string(names);
    }
    return s + ")";
}

}  // namespace hilbkit
