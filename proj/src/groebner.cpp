#include "hilbkit/groebner.hpp"

#include "hilbkit/error.hpp"

#include <algorithm>

namespace hilbkit {

namespace {

using Terms = std::vector<Term>;

struct Sorter {
    const MonomialOrder& ord;
    bool operator()(const Term& a, const Term& b) const { return ord.compare(a.mono, b.mono) > 0; }
};

Terms sorted_terms(const Polynomial& p, const MonomialOrder& ord)
{
    Terms t = p.terms();
    if (ord.kind() != MonomialOrder::Kind::DegRevLex)
        std::sort(t.begin(), t.end(), Sorter{ord});
    return t;
}

Polynomial to_polynomial(std::size_t nvars, Terms t)
{
    return Polynomial(nvars, std::move(t));
}

void make_monic(Terms& t)
{
    if (t.empty() || t.front().coef == 1)
        return;
    Scalar inv = 1 / t.front().coef;
    for (auto& term : t)
        term.coef *= inv;
}

// h[from..] - c * q * g[1..], merged in order.
Terms subtract_multiple(const Terms& h, std::size_t from, const Scalar& c, const Monomial& q, const Terms& g,
                        const MonomialOrder& ord)
{
    Terms out;
    out.reserve(h.size() - from + g.size());
    std::size_t a = from, b = 1;
    while (a < h.size() && b < g.size()) {
        Monomial gm = g[b].mono * q;
        auto cmp = ord.compare(h[a].mono, gm);
        if (cmp > 0) {
            out.push_back(h[a++]);
        } else if (cmp < 0) {
            out.push_back({gm, -c * g[b].coef});
            ++b;
        } else {
            Scalar s = h[a].coef - c * g[b].coef;
            if (s != 0)
                out.push_back({h[a].mono, std::move(s)});
            ++a;
            ++b;
        }
    }
    for (; a < h.size(); ++a)
        out.push_back(h[a]);
    for (; b < g.size(); ++b)
        out.push_back({g[b].mono * q, -c * g[b].coef});
    return out;
}

struct Reducer {
    const Terms* poly;  // monic
};

// Full reduction of h by the reducers (each monic, sorted under ord).
Terms reduce_terms(Terms h, const std::vector<const Terms*>& reducers, const MonomialOrder& ord, bool tail = true)
{
    Terms rem;
    std::size_t start = 0;
    while (start < h.size()) {
        const Term& lead = h[start];
        const Terms* div = nullptr;
        for (const Terms* g : reducers)
            if (g->front().mono.divides(lead.mono)) {
                div = g;
                break;
            }
        if (div == nullptr) {
            if (!tail) {
                rem.insert(rem.end(), h.begin() + static_cast<long>(start), h.end());
                return rem;
            }
            rem.push_back(lead);
            ++start;
            continue;
        }
        Monomial q = lead.mono / div->front().mono;
        Scalar c = lead.coef;
        h = subtract_multiple(h, start + 1, c, q, *div, ord);
        start = 0;
    }
    return rem;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    long degree;
};

class Buchberger {
public:
    Buchberger(std::size_t nvars, const MonomialOrder& ord, const GbOptions& opts)
        : nvars_(nvars), ord_(ord), opts_(opts)
    {
        if (opts_.grading.empty())
            opts_.grading.assign(nvars, 1);
    }

    std::vector<Polynomial> run(const std::vector<Polynomial>& gens)
    {
        std::vector<Terms> input;
        for (const auto& g : gens)
            if (!g.is_zero())
                input.push_back(sorted_terms(g, ord_));
        // Insert generators in increasing degree so that low degrees reduce
        // the higher ones first.
        std::sort(input.begin(), input.end(), [&](const Terms& a, const Terms& b) {
            long da = a.front().mono.weighted_degree(opts_.grading);
            long db = b.front().mono.weighted_degree(opts_.grading);
            if (da != db)
                return da < db;
            return ord_.compare(a.front().mono, b.front().mono) < 0;
        });
        std::vector<Terms> queue = std::move(input);
        std::size_t next_input = 0;

        for (;;) {
            long pair_deg = pairs_.empty() ? -1 : min_pair_degree();
            long input_deg = next_input < queue.size() ? degree_of(queue[next_input]) : -1;
            long deg;
            if (pair_deg < 0 && input_deg < 0)
                break;
            if (pair_deg < 0)
                deg = input_deg;
            else if (input_deg < 0)
                deg = pair_deg;
            else
                deg = std::min(pair_deg, input_deg);
            if (opts_.max_degree && deg > *opts_.max_degree)
                break;

            std::vector<Terms> todo;
            while (next_input < queue.size() && degree_of(queue[next_input]) == deg)
                todo.push_back(std::move(queue[next_input++]));
            std::vector<Pair> batch;
            for (auto it = pairs_.begin(); it != pairs_.end();) {
                if (it->degree == deg) {
                    batch.push_back(*it);
                    it = pairs_.erase(it);
                } else {
                    ++it;
                }
            }
            std::sort(batch.begin(), batch.end(),
                      [&](const Pair& a, const Pair& b) { return ord_.compare(a.lcm, b.lcm) < 0; });
            for (const Pair& p : batch)
                todo.push_back(spoly(p));
            for (auto& h : todo) {
                Terms r = reduce_terms(std::move(h), active_reducers(), ord_);
                if (r.empty())
                    continue;
                make_monic(r);
                add(std::move(r));
            }
        }
        return finish();
    }

private:
    long degree_of(const Terms& t) const { return t.front().mono.weighted_degree(opts_.grading); }

    long min_pair_degree() const
    {
        long d = pairs_.front().degree;
        for (const auto& p : pairs_)
            d = std::min(d, p.degree);
        return d;
    }

    std::vector<const Terms*> active_reducers() const
    {
        std::vector<const Terms*> r;
        r.reserve(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (active_[i])
                r.push_back(&basis_[i]);
        return r;
    }

    Terms spoly(const Pair& p) const
    {
        const Terms& f = basis_[p.i];
        const Terms& g = basis_[p.j];
        Monomial qf = p.lcm / f.front().mono;
        Monomial qg = p.lcm / g.front().mono;
        Terms a;
        a.reserve(f.size());
        for (std::size_t k = 1; k < f.size(); ++k)
            a.push_back({f[k].mono * qf, f[k].coef});
        return subtract_multiple_from_zero(a, qg, g);
    }

    // a - qg * g[1..]
    Terms subtract_multiple_from_zero(const Terms& a, const Monomial& qg, const Terms& g) const
    {
        Terms padded;
        padded.reserve(a.size() + 1);
        padded.push_back({Monomial(nvars_), 0});
        padded.insert(padded.end(), a.begin(), a.end());
        return subtract_multiple(padded, 1, Scalar(1), qg, g, ord_);
    }

    // Gebauer–Möller installation of a new basis element.
    void add(Terms h)
    {
        const std::size_t k = basis_.size();
        const Monomial hm = h.front().mono;
        basis_.push_back(std::move(h));
        active_.push_back(true);

        std::vector<Pair> candidates;
        for (std::size_t i = 0; i < k; ++i)
            if (active_[i]) {
                Monomial l = basis_[i].front().mono.lcm(hm);
                candidates.push_back({i, k, l, l.weighted_degree(opts_.grading)});
            }
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Pair& p = candidates[a];
            bool coprime = basis_[p.i].front().mono.coprime(hm);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
                    dominated = candidates[b].lcm.divides(p.lcm);
                for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
                    dominated = kept[b].lcm.divides(p.lcm);
            }
            if (coprime || !dominated)
                kept.push_back(p);
        }
        // Drop the old pairs made redundant by the new leading monomial.
        std::vector<Pair> old;
        for (const Pair& p : pairs_) {
            bool redundant = hm.divides(p.lcm) && !(basis_[p.i].front().mono.lcm(hm) == p.lcm) &&
                             !(basis_[p.j].front().mono.lcm(hm) == p.lcm);
            if (!redundant)
                old.push_back(p);
        }
        pairs_ = std::move(old);
        for (const Pair& p : kept)
            if (!basis_[p.i].front().mono.coprime(hm))
                pairs_.push_back(p);
        for (std::size_t i = 0; i < k; ++i)
            if (active_[i] && hm.divides(basis_[i].front().mono))
                active_[i] = false;
    }

    std::vector<Polynomial> finish()
    {
        std::vector<Terms> minimal;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (!active_[i])
                continue;
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j)
                if (j != i && active_[j] && basis_[j].front().mono.divides(basis_[i].front().mono))
                    redundant = true;
            if (!redundant)
                minimal.push_back(basis_[i]);
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&](const Terms& a, const Terms& b) { return ord_.compare(a.front().mono, b.front().mono) > 0; });
        std::vector<Polynomial> out;
        out.reserve(minimal.size());
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<const Terms*> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(&minimal[j]);
            Terms tail(minimal[i].begin() + 1, minimal[i].end());
            Terms reduced = reduce_terms(std::move(tail), others, ord_);
            Terms full;
            full.reserve(reduced.size() + 1);
            full.push_back(minimal[i].front());
            full.insert(full.end(), reduced.begin(), reduced.end());
            out.push_back(to_polynomial(nvars_, std::move(full)));
        }
        return out;
    }

    std::size_t nvars_;
    const MonomialOrder& ord_;
    GbOptions opts_;
    std::vector<Terms> basis_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                               const GbOptions& opts)
{
    if (gens.empty())
        return {};
    const std::size_t nvars = gens.front().nvars();
    for (const auto& g : gens)
        if (g.nvars() != nvars)
            throw InvalidInput("generators from different rings");
    if (opts.max_degree) {
        std::vector<int> grading = opts.grading.empty() ? std::vector<int>(nvars, 1) : opts.grading;
        for (const auto& g : gens)
            if (!g.is_homogeneous(grading))
                throw InvalidInput("degree truncation needs homogeneous generators");
    }
    Buchberger engine(nvars, ord, opts);
    return engine.run(gens);
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& ord)
{
    std::vector<Terms> sorted;
    sorted.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.is_zero())
            continue;
        Terms t = sorted_terms(b, ord);
        make_monic(t);
        sorted.push_back(std::move(t));
    }
    std::vector<const Terms*> ptrs;
    for (const auto& t : sorted)
        ptrs.push_back(&t);
    return to_polynomial(f.nvars(), reduce_terms(sorted_terms(f, ord), ptrs, ord));
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& ord)
{
    Division out;
    out.quotients.assign(divisors.size(), Polynomial(f.nvars()));
    std::vector<Terms> sorted;
    for (const auto& d : divisors) {
        if (d.is_zero())
            throw InvalidInput("division by zero polynomial");
        sorted.push_back(sorted_terms(d, ord));
    }
    std::vector<std::vector<Term>> qterms(divisors.size());
    Terms h = sorted_terms(f, ord);
    Terms rem;
    std::size_t start = 0;
    while (start < h.size()) {
        const Term& lead = h[start];
        std::size_t k = 0;
        while (k < sorted.size() && !sorted[k].front().mono.divides(lead.mono))
            ++k;
        if (k == sorted.size()) {
            rem.push_back(lead);
            ++start;
            continue;
        }
        Monomial q = lead.mono / sorted[k].front().mono;
        Scalar c = lead.coef / sorted[k].front().coef;
        qterms[k].push_back({q, c});
        h = subtract_multiple(h, start + 1, c, q, sorted[k], ord);
        start = 0;
    }
    for (std::size_t k = 0; k < divisors.size(); ++k)
        out.quotients[k] = Polynomial(f.nvars(), std::move(qterms[k]));
    out.remainder = Polynomial(f.nvars(), std::move(rem));
    return out;
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g)
{
    std::vector<Polynomial> d{g};
    Division div = divide(f, d, MonomialOrder::degrevlex());
    if (!div.remainder.is_zero())
        throw CheckFailure("exact division failed: " + g.to_string() + " does not divide " + f.to_string());
    return div.quotients.front();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord)
{
    const Term& lf = f.leading_term(ord);
    const Term& lg = g.leading_term(ord);
    Monomial l = lf.mono.lcm(lg.mono);
    return f.mul_term(l / lf.mono, 1 / lf.coef) - g.mul_term(l / lg.mono, 1 / lg.coef);
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& ord)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!reduce(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero())
                return false;
    return true;
}

}  // namespace hilbkit
