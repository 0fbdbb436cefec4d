#include "hilbkit/borel.hpp"

#include "hilbkit/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

namespace hilbkit {

namespace {

using MonoSet = std::unordered_set<Monomial, MonomialHash>;

std::vector<Monomial> generator_monomials(const Ideal& ideal)
{
    std::vector<Monomial> out;
    for (const auto& g : ideal.generators()) {
        if (!g.is_monomial())
            throw InvalidInput("not a monomial ideal: " + ideal.to_string());
        out.push_back(g.terms().front().mono);
    }
    return minimalize(std::move(out));
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens)
{
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

// One-step moves m*x_i/x_j with i < j (towards larger variables).
std::vector<Monomial> up_moves(const Monomial& m)
{
    std::vector<Monomial> out;
    const std::size_t n = m.nvars();
    for (std::size_t j = 1; j < n; ++j) {
        if (m[j] == 0)
            continue;
        for (std::size_t i = 0; i < j; ++i) {
            Monomial k = m;
            k.set(j, m[j] - 1);
            k.set(i, m[i] + 1);
            out.push_back(k);
        }
    }
    return out;
}

std::vector<Monomial> down_moves(const Monomial& m)
{
    std::vector<Monomial> out;
    const std::size_t n = m.nvars();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (m[i] == 0)
            continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            Monomial k = m;
            k.set(i, m[i] - 1);
            k.set(j, m[j] + 1);
            out.push_back(k);
        }
    }
    return out;
}

long as_long(const Scalar& s)
{
    if (s.get_den() != 1)
        throw InvalidInput("Hilbert polynomial is not integer valued");
    return s.get_num().get_si();
}

// Search over the standard sets N_d of a strongly stable ideal J of
// k[x,y,z]; the saturated Borel ideal is J*k[x,y,z,t].
class BorelSearch {
public:
    BorelSearch(const HilbertPolynomial& p, std::mt19937_64* shuffle)
        : p_(p), shuffle_(shuffle)
    {
        G_ = gotzmann_number(p);
        target_ = as_long(p(G_ - 1));
    }

    std::vector<Ideal> run()
    {
        N_.assign(1, {Monomial(3)});
        h_.assign(1, 1);
        if (G_ == 1 && target_ != 1)
            return {};
        descend(1, 1);
        return std::move(found_);
    }

private:
    long delta(int d) const { return as_long(p_(d) - p_(d - 1)); }

    // Largest total sum h(from) + ... + h(G-1) reachable after h(from-1)=h.
    long best_remaining(long h, int from) const
    {
        long sum = 0;
        for (int k = from; k <= G_ - 1; ++k) {
            h = std::min(macaulay_upper_bound(h, k - 1), ring_dimension(3, k));
            sum += h;
        }
        return sum;
    }

    void descend(int d, long partial)
    {
        if (d > G_) {
            finish();
            return;
        }
        std::vector<Monomial> cand;
        MonoSet prev(N_[d - 1].begin(), N_[d - 1].end());
        for (const auto& m : monomials_of_degree(3, d)) {
            bool ok = true;
            for (std::size_t i = 0; i < 3 && ok; ++i)
                if (m[i] > 0)
                    ok = prev.count(m / Monomial::variable(i, 3)) > 0;
            if (ok)
                cand.push_back(m);
        }
        if (shuffle_)
            std::shuffle(cand.begin(), cand.end(), *shuffle_);
        else
            std::reverse(cand.begin(), cand.end());  // lex-ascending: moves first

        long lo = 0, hi = static_cast<long>(cand.size());
        if (d == G_) {
            lo = hi = delta(d);
        } else {
            hi = std::min({hi, d == 1 ? hi : macaulay_upper_bound(h_[d - 1], d - 1), target_ - partial});
            if (d == G_ - 1)
                lo = target_ - partial;
        }
        if (lo > hi || lo > static_cast<long>(cand.size()))
            return;

        std::vector<Monomial> chosen;
        MonoSet chosen_set, excluded;
        std::function<void(std::size_t)> pick = [&](std::size_t k) {
            const long size = static_cast<long>(chosen.size());
            if (size > hi || size + static_cast<long>(cand.size() - k) < lo)
                return;
            if (k == cand.size()) {
                if (d < G_ && partial + size + best_remaining(size, d + 1) < target_)
                    return;
                N_.push_back(chosen);
                h_.push_back(size);
                descend(d + 1, partial + size);
                N_.pop_back();
                h_.pop_back();
                return;
            }
            const Monomial& m = cand[k];
            // include m: no downward move of m may be excluded
            bool can_include = true;
            for (const auto& w : down_moves(m))
                if (excluded.count(w)) {
                    can_include = false;
                    break;
                }
            if (can_include) {
                chosen.push_back(m);
                chosen_set.insert(m);
                pick(k + 1);
                chosen_set.erase(m);
                chosen.pop_back();
            }
            // exclude m: no upward move of m may be included
            bool can_exclude = true;
            for (const auto& w : up_moves(m))
                if (chosen_set.count(w)) {
                    can_exclude = false;
                    break;
                }
            if (can_exclude) {
                excluded.insert(m);
                pick(k + 1);
                excluded.erase(m);
            }
        };
        pick(0);
    }

    void finish()
    {
        std::vector<Monomial> gens;
        for (int d = 1; d <= G_; ++d) {
            MonoSet standard(N_[d].begin(), N_[d].end());
            for (const auto& m : monomials_of_degree(3, d))
                if (!standard.count(m))
                    gens.push_back(m.resized(4));
        }
        gens = minimalize(std::move(gens));
        if (gens.empty())
            return;
        Ideal ideal = Ideal::from_monomials(gens);
        if (!(quotient_hilbert_polynomial(ideal) == p_))
            return;
        found_.push_back(ideal);
    }

    HilbertPolynomial p_;
    std::mt19937_64* shuffle_;
    int G_ = 0;
    long target_ = 0;
    std::vector<std::vector<Monomial>> N_;
    std::vector<long> h_;
    std::vector<Ideal> found_;
};

std::vector<Monomial> canonical(const Ideal& ideal)
{
    return generator_monomials(ideal);
}

}  // namespace

bool is_strongly_stable(const Ideal& monomial_ideal)
{
    auto gens = generator_monomials(monomial_ideal);
    for (const auto& g : gens)
        for (const auto& m : up_moves(g))
            if (!in_monomial_ideal(m, gens))
                return false;
    return true;
}

Ideal borel_closure(const std::vector<Monomial>& ms)
{
    if (ms.empty())
        throw InvalidInput("Borel closure of an empty list");
    MonoSet seen;
    std::deque<Monomial> queue(ms.begin(), ms.end());
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        if (!seen.insert(m).second)
            continue;
        for (const auto& k : up_moves(m))
            if (!seen.count(k))
                queue.push_back(k);
    }
    return Ideal::from_monomials(minimalize(std::vector<Monomial>(seen.begin(), seen.end())));
}

std::vector<Ideal> enumerate_borel_ideals(const HilbertPolynomial& p, std::mt19937_64* shuffle)
{
    if (p.is_zero() || p.degree() > 2)
        throw InvalidInput("not the Hilbert polynomial of a proper subscheme of P^3: " + p.to_string());
    auto found = BorelSearch(p, shuffle).run();
    const MonomialOrder ord = MonomialOrder::degrevlex();
    std::vector<std::pair<std::vector<Monomial>, Ideal>> keyed;
    for (auto& i : found)
        keyed.emplace_back(canonical(i), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (const auto& m : a.first)
            da = std::max(da, m.degree());
        for (const auto& m : b.first)
            db = std::max(db, m.degree());
        if (da != db)
            return da < db;
        return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
                                            [&](const Monomial& x, const Monomial& y) { return ord.greater(x, y); });
    });
    std::vector<Ideal> out;
    for (auto& [key, ideal] : keyed)
        out.push_back(Ideal::from_monomials(key));
    return out;
}

Ideal lex_ideal(const HilbertPolynomial& p)
{
    if (p.is_zero() || p.degree() > 2)
        throw InvalidInput("not the Hilbert polynomial of a proper subscheme of P^3: " + p.to_string());
    const int G = gotzmann_number(p);
    const long count = ring_dimension(4, G) - as_long(p(G));
    auto mons = monomials_of_degree(4, G);  // lex-descending
    if (count < 0 || count > static_cast<long>(mons.size()))
        throw InvalidInput("no lexicographic ideal for " + p.to_string());
    std::vector<Monomial> gens;
    for (long k = 0; k < count; ++k) {
        Monomial m = mons[static_cast<std::size_t>(k)];
        m.set(3, 0);  // saturation by t
        gens.push_back(m);
    }
    Ideal lex = Ideal::from_monomials(minimalize(std::move(gens)));
    if (!(quotient_hilbert_polynomial(lex) == p))
        throw CheckFailure("lexicographic ideal has the wrong Hilbert polynomial");
    return lex;
}

std::vector<BorelCatalogEntry> borel_catalog()
{
    std::vector<BorelCatalogEntry> out;
    for (const auto& ideal : enumerate_borel_ideals(HilbertPolynomial({0, 4}))) {
        BorelCatalogEntry e;
        e.ideal = ideal;
        e.regularity = regularity(ideal);
        e.name = "B" + std::to_string(e.regularity);
        e.phi = hilbert_function_table(ideal, 7).values;
        out.push_back(std::move(e));
    }
    return out;
}

Ideal monomial_ideal(const std::vector<std::vector<int>>& exponents)
{
    std::vector<Monomial> ms;
    for (const auto& e : exponents)
        ms.push_back(Monomial::from_exponents(e));
    return Ideal::from_monomials(ms);
}

}  // namespace hilbkit
