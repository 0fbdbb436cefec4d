#include "hilbkit/tangent.hpp"

#include "hilbkit/error.hpp"
#include "hilbkit/gin.hpp"
#include "hilbkit/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace hilbkit {

namespace {

std::vector<Monomial> standard_monomials(const Ideal& ideal, int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    auto lead = ideal.leading_monomials();
    for (const auto& m : monomials_of_degree(ideal.nvars(), d))
        if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); }))
            out.push_back(m);
    return out;
}

using SparseRow = std::map<std::size_t, Scalar>;

std::size_t bits(const Scalar& v)
{
    return mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
}

// Rank by sparse elimination; pivots minimize fill-in, then coefficient size.
std::size_t sparse_rank(std::vector<SparseRow> rows)
{
    std::map<std::size_t, std::set<std::size_t>> in_col;  // column -> live rows
    std::vector<bool> live(rows.size(), true);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty())
            live[r] = false;
        for (const auto& [c, v] : rows[r])
            in_col[c].insert(r);
    }
    std::size_t rank = 0;
    for (;;) {
        // Markowitz cost (row length - 1) * (column count - 1)
        std::size_t best_r = rows.size(), best_c = 0, best_cost = ~std::size_t{0}, best_bits = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!live[r])
                continue;
            for (const auto& [c, v] : rows[r]) {
                std::size_t cost = (rows[r].size() - 1) * (in_col[c].size() - 1);
                std::size_t b = bits(v);
                if (cost < best_cost || (cost == best_cost && b < best_bits)) {
                    best_r = r, best_c = c, best_cost = cost, best_bits = b;
                }
            }
            if (best_cost == 0)
                break;
        }
        if (best_r == rows.size())
            return rank;
        ++rank;
        live[best_r] = false;
        const SparseRow pivot = rows[best_r];
        for (const auto& [c, v] : pivot)
            in_col[c].erase(best_r);
        const Scalar pv = pivot.at(best_c);
        std::vector<std::size_t> targets(in_col[best_c].begin(), in_col[best_c].end());
        for (auto r : targets) {
            Scalar f = rows[r].at(best_c) / pv;
            for (const auto& [c, v] : pivot) {
                auto it = rows[r].find(c);
                if (it == rows[r].end()) {
                    rows[r].emplace(c, -f * v);
                    in_col[c].insert(r);
                } else {
                    it->second -= f * v;
                    if (it->second == 0) {
                        rows[r].erase(it);
                        in_col[c].erase(r);
                    }
                }
            }
            if (rows[r].empty())
                live[r] = false;
        }
    }
}

bool warn_for(const Ideal& ideal)
{
    return !(quotient_hilbert_polynomial(ideal) == HilbertPolynomial({0, 4})) || !is_saturated(ideal);
}

// Linear syzygies of a basis of I_d (leading terms first, distinct leads).
// Each monomial of in(I)_{d+1} gets one representative element of I_{d+1},
// written as a combination of the x_v * g_i. The representatives start as
// products; a product that does not reduce to zero becomes a new one. Every
// other product gives a syzygy, and these form a basis of the linear ones.
SyzygyGenerators linear_syzygies(const std::vector<Polynomial>& gens, std::size_t n)
{
    struct Rep {
        Polynomial poly;
        std::vector<Polynomial> expr;
    };
    const std::size_t r = gens.size();
    auto product = [&](std::size_t i, std::size_t v) {
        Rep p{gens[i] * Polynomial::variable(v, n), std::vector<Polynomial>(r, Polynomial(n))};
        p.expr[i] = Polynomial::variable(v, n);
        return p;
    };
    SyzygyGenerators syz;
    std::unordered_map<Monomial, Rep, MonomialHash> rep_of;
    std::vector<std::pair<std::size_t, std::size_t>> rest;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t v = 0; v < n; ++v) {
            Rep p = product(i, v);
            Monomial lead = p.poly.terms().front().mono;
            if (!rep_of.try_emplace(lead, std::move(p)).second)
                rest.emplace_back(i, v);
        }
    for (auto [i, v] : rest) {
        Rep cur = product(i, v);
        for (;;) {
            auto hit = std::find_if(cur.poly.terms().begin(), cur.poly.terms().end(),
                                    [&](const Term& t) { return rep_of.count(t.mono) > 0; });
            if (hit == cur.poly.terms().end())
                break;
            const Rep& by = rep_of.at(hit->mono);
            Scalar c = hit->coef / by.poly.terms().front().coef;
            cur.poly -= c * by.poly;
            for (std::size_t k = 0; k < r; ++k)
                cur.expr[k] -= c * by.expr[k];
        }
        if (cur.poly.is_zero()) {
            syz.vectors.push_back(std::move(cur.expr));
        } else {
            Monomial lead = cur.poly.terms().front().mono;
            rep_of.emplace(lead, std::move(cur));
        }
    }
    return syz;
}

}  // namespace

TangentReport hom_dimension(const Ideal& ideal, const std::vector<Polynomial>& gens, const SyzygyGenerators& syzygies)
{
    if (ideal.is_zero())
        throw InvalidInput("tangent space of the zero ideal");
    TangentReport rep;
    std::map<int, std::vector<Monomial>> standard;
    auto basis_in = [&](int d) -> const std::vector<Monomial>& {
        auto it = standard.find(d);
        if (it == standard.end())
            it = standard.emplace(d, standard_monomials(ideal, d)).first;
        return it->second;
    };

    std::vector<std::size_t> offset;
    std::size_t cols = 0;
    for (const auto& g : gens) {
        auto d = g.homogeneous_degree();
        if (!d)
            throw InvalidInput("inhomogeneous generator: " + g.to_string());
        rep.generator_degrees.push_back(*d);
        offset.push_back(cols);
        cols += basis_in(*d).size();
    }
    rep.unknowns = static_cast<long>(cols);

    std::unordered_map<Monomial, Polynomial, MonomialHash> reduced;
    auto nf = [&](const Monomial& m) -> const Polynomial& {
        auto it = reduced.find(m);
        if (it == reduced.end())
            it = reduced.emplace(m, normal_form(Polynomial::monomial(m), ideal)).first;
        return it->second;
    };

    std::vector<SparseRow> rows;
    for (const auto& s : syzygies.vectors) {
        int D = -1;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_zero()) {
                D = s[i].degree() + rep.generator_degrees[i];
                break;
            }
        if (D < 0)
            continue;
        const auto& target = basis_in(D);
        if (target.empty())
            continue;
        std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
        for (std::size_t r = 0; r < target.size(); ++r)
            row_of.emplace(target[r], r);
        std::vector<std::map<std::size_t, Scalar>> block(target.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i].is_zero())
                continue;
            const auto& src = basis_in(rep.generator_degrees[i]);
            for (std::size_t k = 0; k < src.size(); ++k)
                for (const auto& st : s[i].terms())
                    for (const auto& t : nf(st.mono * src[k]).terms())
                        block[row_of.at(t.mono)][offset[i] + k] += st.coef * t.coef;
        }
        for (auto& cells : block) {
            std::erase_if(cells, [](const auto& cv) { return cv.second == 0; });
            if (!cells.empty())
                rows.push_back(std::move(cells));
        }
    }
    rep.constraint_count = static_cast<long>(rows.size());
    rep.dimension = static_cast<long>(cols - sparse_rank(std::move(rows)));
    return rep;
}

TangentReport tangent_dimension(const Ideal& ideal, const TangentOptions& opts)
{
    if (ideal.is_zero())
        throw InvalidInput("tangent space of the zero ideal");
    int top = 0;
    for (const auto& g : minimal_generators(ideal))
        top = std::max(top, g.degree());
    const int d = opts.truncation.value_or(std::max(top, regularity(ideal)));
    if (d < top)
        throw InvalidInput("truncation below the generator degrees");
    std::vector<Polynomial> gens = degree_piece(ideal, d);
    TangentReport rep = hom_dimension(ideal, gens, linear_syzygies(gens, ideal.nvars()));
    rep.truncation = d;
    rep.warning = warn_for(ideal);
    return rep;
}

}  // namespace hilbkit
