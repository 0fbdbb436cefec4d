#include "hilbkit/error.hpp"
#include "hilbkit/ideal.hpp"
#include "hilbkit/linear_change.hpp"

#include <algorithm>
#include <random>

namespace hilbkit {

namespace {

std::vector<std::size_t> swap_with_last(std::size_t i, std::size_t n)
{
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k)
        perm[k] = k;
    std::swap(perm[i], perm[n - 1]);
    return perm;
}

Ideal permuted(const Ideal& ideal, const std::vector<std::size_t>& perm)
{
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(g.permuted(perm));
    return Ideal(ideal.nvars(), std::move(gens));
}

// Revlex division: with x_i last in degrevlex, dividing the reduced basis
// by powers of x_i gives a basis of I : x_i^∞ (or I : x_i when `once`).
Ideal divide_basis_by_variable(const Ideal& ideal, std::size_t i, bool once)
{
    if (ideal.is_zero())
        return ideal;
    const std::size_t n = ideal.nvars();
    auto perm = swap_with_last(i, n);
    Ideal moved = permuted(ideal, perm);
    std::vector<Polynomial> out;
    for (const auto& g : moved.groebner_basis()) {
        int v = g.variable_valuation(n - 1);
        if (once)
            v = std::min(v, 1);
        out.push_back(g.divide_by_variable(n - 1, v).permuted(perm));
    }
    return Ideal(n, std::move(out));
}

Ideal saturate_by_variable(const Ideal& ideal, std::size_t i)
{
    return divide_basis_by_variable(ideal, i, false);
}

std::optional<std::size_t> as_variable(const Polynomial& f)
{
    if (!f.is_monomial() || f.degree() != 1)
        return std::nullopt;
    const Monomial& m = f.terms().front().mono;
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m[i] == 1)
            return i;
    return std::nullopt;
}

// Coordinates in which `form` is the last variable.
LinearChange moving_form_last(const Polynomial& form)
{
    const std::size_t n = form.nvars();
    Vector c = linear_coefficients(form);
    std::vector<Polynomial> forms;
    // Complete `form` to a basis with standard variables, skipping one whose
    // coefficient is nonzero.
    std::size_t skip = n;
    for (std::size_t i = n; i-- > 0;)
        if (c[i] != 0) {
            skip = i;
            break;
        }
    if (skip == n)
        throw InvalidInput("zero linear form");
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip)
            forms.push_back(Polynomial::variable(i, n));
    forms.push_back(form);
    return LinearChange::sending_forms_to_variables(forms);
}

Ideal principal(const Polynomial& f)
{
    return Ideal(f.nvars(), {f});
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& ord)
{
    if (ideal.is_zero())
        return f;
    return reduce(f, ideal.groebner_basis(ord), ord);
}

const std::vector<Polynomial>& groebner_basis(const Ideal& ideal, const MonomialOrder& ord)
{
    return ideal.groebner_basis(ord);
}

Ideal initial_ideal(const Ideal& ideal, const MonomialOrder& ord)
{
    if (ideal.is_zero())
        return Ideal(ideal.nvars());
    return Ideal::from_monomials(minimalize(ideal.leading_monomials(ord)));
}

Ideal transform(const Ideal& ideal, const LinearChange& g)
{
    return Ideal(ideal.nvars(), g.apply(ideal.generators()));
}

Ideal sum(const Ideal& a, const Ideal& b)
{
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.nvars(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b)
{
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators())
            gens.push_back(f * g);
    return Ideal(a.nvars(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b)
{
    if (a.nvars() != b.nvars())
        throw InvalidInput("intersecting ideals of different rings");
    const std::size_t n = a.nvars();
    if (a.is_zero() || b.is_zero())
        return Ideal(n);
    if (a.is_monomial() && b.is_monomial()) {
        std::vector<Monomial> ms;
        for (const auto& f : a.generators())
            for (const auto& g : b.generators())
                ms.push_back(f.terms().front().mono.lcm(g.terms().front().mono));
        return Ideal::from_monomials(minimalize(std::move(ms)));
    }
    if (n + 1 > kMaxVars)
        throw InvalidInput("no room for the elimination variable");
    const Polynomial tag = Polynomial::variable(n, n + 1);
    const Polynomial one_minus_tag = Polynomial::constant(n + 1, 1) - tag;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        gens.push_back(tag * f.resized(n + 1));
    for (const auto& g : b.generators())
        gens.push_back(one_minus_tag * g.resized(n + 1));
    GbOptions opts;
    opts.grading.assign(n + 1, 1);
    opts.grading[n] = 0;
    auto basis = reduced_groebner_basis(gens, MonomialOrder::block({n}), opts);
    std::vector<Polynomial> out;
    for (const auto& g : basis)
        if (g.degree_in(n) == 0)
            out.push_back(g.resized(n).monic());
    return Ideal(n, std::move(out));
}

Ideal intersect(const std::vector<Ideal>& ideals)
{
    if (ideals.empty())
        throw InvalidInput("intersection of no ideals");
    Ideal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i)
        acc = intersect(acc, ideals[i]);
    return acc;
}

Ideal quotient(const Ideal& ideal, const Polynomial& f)
{
    if (f.is_zero())
        throw InvalidInput("quotient by the zero polynomial");
    if (!f.is_homogeneous())
        throw InvalidInput("quotient by an inhomogeneous polynomial");
    if (ideal.is_zero())
        return ideal;
    if (f.degree() == 0)
        return ideal;
    if (auto v = as_variable(f))
        return divide_basis_by_variable(ideal, *v, true);
    Ideal meet = intersect(ideal, principal(f));
    std::vector<Polynomial> out;
    for (const auto& g : meet.generators())
        out.push_back(exact_quotient(g, f));
    return Ideal(ideal.nvars(), std::move(out));
}

Ideal saturate_by_quotients(const Ideal& ideal, const Polynomial& f)
{
    if (f.is_zero())
        throw InvalidInput("saturation by the zero polynomial");
    Ideal current = ideal;
    for (;;) {
        Ideal next = quotient(current, f);
        if (equal(next, current))
            return current;
        current = std::move(next);
    }
}

Ideal saturate(const Ideal& ideal, const Polynomial& f)
{
    if (f.is_zero())
        throw InvalidInput("saturation by the zero polynomial");
    if (!f.is_homogeneous())
        throw InvalidInput("saturation by an inhomogeneous polynomial");
    if (f.degree() == 0 || ideal.is_zero())
        return ideal;
    if (f.is_monomial()) {
        Ideal current = ideal;
        const Monomial& m = f.terms().front().mono;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i] > 0)
                current = saturate_by_variable(current, i);
        return current;
    }
    if (f.degree() == 1) {
        LinearChange g = moving_form_last(f);
        Ideal moved = transform(ideal, g);
        Ideal sat = saturate_by_variable(moved, ideal.nvars() - 1);
        return transform(sat, g.inverse());
    }
    return saturate_by_quotients(ideal, f);
}

Ideal saturate_irrelevant(const Ideal& ideal)
{
    const std::size_t n = ideal.nvars();
    if (ideal.is_zero())
        return ideal;
    // Each I : x_i^∞ contains the saturation, and the saturation is their
    // intersection; a candidate contained in all of them is the saturation.
    std::vector<Ideal> by_var;
    for (std::size_t i = 0; i < n; ++i)
        by_var.push_back(saturate_by_variable(ideal, i));
    auto inside_all = [&](const Ideal& cand) {
        return std::all_of(by_var.begin(), by_var.end(), [&](const Ideal& j) { return j.contains(cand); });
    };
    for (std::size_t i = n; i-- > 0;)
        if (inside_all(by_var[i]))
            return by_var[i];
    std::mt19937_64 rng(0x5a7u);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<Scalar> c(n);
        for (auto& v : c)
            v = dist(rng);
        Polynomial form = Polynomial::linear_form(c);
        if (form.is_zero())
            continue;
        Ideal cand = saturate(ideal, form);
        if (inside_all(cand))
            return cand;
    }
    return intersect(by_var);
}

bool equal(const Ideal& a, const Ideal& b)
{
    if (a.nvars() != b.nvars())
        return false;
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return a.groebner_basis() == b.groebner_basis();
}

std::vector<Polynomial> degree_piece(const Ideal& ideal, int n)
{
    std::vector<Polynomial> out;
    if (ideal.is_zero() || n < 0)
        return out;
    auto lead = ideal.leading_monomials();
    for (const auto& m : monomials_of_degree(ideal.nvars(), n)) {
        bool in = std::any_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); });
        if (!in)
            continue;
        Polynomial mono = Polynomial::monomial(m);
        out.push_back(mono - normal_form(mono, ideal));
    }
    return out;
}

namespace {

// degree first, then lex-descending leading monomials
void sort_for_display(std::vector<Polynomial>& gens)
{
    const MonomialOrder lex = MonomialOrder::lex();
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return lex.compare(a.leading_term(lex).mono, b.leading_term(lex).mono) > 0;
    });
}

}  // namespace

std::vector<Polynomial> minimal_generators(const Ideal& ideal)
{
    if (ideal.is_zero())
        return {};
    if (ideal.is_monomial()) {
        std::vector<Polynomial> out = ideal.groebner_basis();
        sort_for_display(out);
        return out;
    }
    std::vector<Polynomial> basis = ideal.groebner_basis();
    std::stable_sort(basis.begin(), basis.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    std::vector<Polynomial> kept;
    for (const auto& g : basis) {
        if (!kept.empty()) {
            GbOptions opts;
            opts.max_degree = g.degree();
            auto partial = reduced_groebner_basis(kept, MonomialOrder::degrevlex(), opts);
            if (reduce(g, partial, MonomialOrder::degrevlex()).is_zero())
                continue;
        }
        kept.push_back(g);
    }
    sort_for_display(kept);
    return kept;
}

}  // namespace hilbkit
