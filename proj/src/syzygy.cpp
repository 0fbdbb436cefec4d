#include "hilbkit/syzygy.hpp"

#include "hilbkit/error.hpp"

#include <algorithm>

namespace hilbkit {

namespace {

using Rep = std::vector<Polynomial>;

Rep zero_rep(std::size_t r, std::size_t nvars)
{
    return Rep(r, Polynomial(nvars));
}

void axpy(Rep& acc, const Polynomial& factor, const Rep& v)
{
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!v[i].is_zero())
            acc[i] += factor * v[i];
}

bool is_zero_rep(const Rep& v)
{
    return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

struct Element {
    Polynomial poly;  // monic under ord
    Rep rep;          // poly = sum rep_i * input_i
};

}  // namespace

SyzygyGenerators taylor_syzygies(const std::vector<Polynomial>& gens)
{
    SyzygyGenerators out;
    const std::size_t r = gens.size();
    const std::size_t nvars = gens.empty() ? 4 : gens.front().nvars();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const Term& a = gens[i].terms().front();
            const Term& b = gens[j].terms().front();
            Monomial l = a.mono.lcm(b.mono);
            Rep s = zero_rep(r, nvars);
            s[i] = Polynomial::monomial(l / a.mono, 1 / a.coef);
            s[j] = Polynomial::monomial(l / b.mono, -1 / b.coef);
            out.vectors.push_back(std::move(s));
        }
    return out;
}

SyzygyGenerators syzygy_generators(const std::vector<Polynomial>& gens, const MonomialOrder& ord)
{
    const std::size_t r = gens.size();
    if (r == 0)
        return {};
    const std::size_t nvars = gens.front().nvars();
    bool monomial = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); });
    SyzygyGenerators out;
    // A zero generator contributes the unit vector.
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < r; ++i) {
        if (gens[i].is_zero()) {
            Rep s = zero_rep(r, nvars);
            s[i] = Polynomial::constant(nvars, 1);
            out.vectors.push_back(std::move(s));
        } else {
            live.push_back(i);
        }
    }
    if (monomial) {
        std::vector<Polynomial> sub;
        for (auto i : live)
            sub.push_back(gens[i]);
        for (auto& v : taylor_syzygies(sub).vectors) {
            Rep s = zero_rep(r, nvars);
            for (std::size_t k = 0; k < live.size(); ++k)
                s[live[k]] = std::move(v[k]);
            out.vectors.push_back(std::move(s));
        }
        return out;
    }

    // Buchberger over all pairs, recording each reduction as a relation among
    // the basis elements; Schreyer's theorem makes these a generating set.
    std::vector<Element> basis;
    for (auto i : live) {
        Scalar inv = 1 / gens[i].leading_term(ord).coef;
        Rep rep = zero_rep(r, nvars);
        rep[i] = Polynomial::constant(nvars, inv);
        basis.push_back({gens[i] * inv, std::move(rep)});
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            pairs.emplace_back(i, j);

    // relations in basis coordinates, each a sparse list (index, coefficient)
    std::vector<std::vector<std::pair<std::size_t, Polynomial>>> relations;
    std::size_t head = 0;
    while (head < pairs.size()) {
        auto [i, j] = pairs[head++];
        const Monomial li = basis[i].poly.leading_term(ord).mono;
        const Monomial lj = basis[j].poly.leading_term(ord).mono;
        const Monomial l = li.lcm(lj);
        Polynomial mi = Polynomial::monomial(l / li);
        Polynomial mj = Polynomial::monomial(l / lj);
        Polynomial s = mi * basis[i].poly - mj * basis[j].poly;
        std::vector<std::pair<std::size_t, Polynomial>> rel{{i, mi}, {j, -mj}};
        std::vector<Polynomial> divisors;
        for (const auto& e : basis)
            divisors.push_back(e.poly);
        Division div = divide(s, divisors, ord);
        for (std::size_t k = 0; k < div.quotients.size(); ++k)
            if (!div.quotients[k].is_zero())
                rel.emplace_back(k, -div.quotients[k]);
        if (!div.remainder.is_zero()) {
            // s - sum q_k b_k = rem, so rem becomes a new element and the
            // relation gains -1 * e_new after normalizing.
            const Scalar lc = div.remainder.leading_term(ord).coef;
            Rep rep = zero_rep(r, nvars);
            for (const auto& [k, c] : rel)
                axpy(rep, c, basis[k].rep);
            for (auto& p : rep)
                p = p * (1 / lc);
            const std::size_t idx = basis.size();
            basis.push_back({div.remainder * (1 / lc), std::move(rep)});
            rel.emplace_back(idx, Polynomial::constant(nvars, -lc));
            for (std::size_t k = 0; k < idx; ++k)
                pairs.emplace_back(k, idx);
        }
        relations.push_back(std::move(rel));
    }
    for (const auto& rel : relations) {
        Rep s = zero_rep(r, nvars);
        for (const auto& [k, c] : rel)
            axpy(s, c, basis[k].rep);
        if (!is_zero_rep(s))
            out.vectors.push_back(std::move(s));
    }
    return out;
}

SyzygyGenerators syzygy_generators(const Ideal& ideal, const MonomialOrder& ord)
{
    return syzygy_generators(ideal.generators(), ord);
}

bool is_syzygy(const std::vector<Polynomial>& s, const std::vector<Polynomial>& gens)
{
    if (s.size() != gens.size())
        return false;
    if (gens.empty())
        return true;
    Polynomial acc(gens.front().nvars());
    for (std::size_t i = 0; i < gens.size(); ++i)
        acc += s[i] * gens[i];
    return acc.is_zero();
}

}  // namespace hilbkit
