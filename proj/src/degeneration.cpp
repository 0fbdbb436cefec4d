#include "hilbkit/degeneration.hpp"

#include "hilbkit/error.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/linalg.hpp"
#include "hilbkit/linear_change.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>

namespace hilbkit {

namespace {

constexpr std::size_t kN = 4;
constexpr std::size_t kFamilyVars = 5;
constexpr std::size_t kHom = 5;  // homogenizing variable of the 6-variable ring

Polynomial param_power(int k)
{
    return Polynomial::monomial(Monomial::variable(kParam, kFamilyVars, k));
}

// sum_k a^k parts[k], shifted so the lowest power of a is a^0.
Polynomial clear_laurent(const std::map<int, Polynomial>& parts)
{
    Polynomial out(kFamilyVars);
    if (parts.empty())
        return out;
    const int low = parts.begin()->first;
    for (const auto& [k, p] : parts)
        out += p.resized(kFamilyVars) * param_power(k - low);
    return out;
}

// p in k[x,y,z,t] with x_i -> a^{w_i} x_i, powers of a cleared.
Polynomial weighted(const Polynomial& p, const std::vector<int>& w)
{
    std::map<int, Polynomial> parts;
    for (const auto& t : p.terms()) {
        auto [it, fresh] = parts.try_emplace(static_cast<int>(t.mono.weighted_degree(w)), Polynomial(kN));
        it->second += Polynomial::monomial(t.mono, t.coef);
    }
    return clear_laurent(parts);
}

// a -> 1/b followed by multiplication with b^{deg_a}.
Polynomial invert_parameter(const Polynomial& g)
{
    const int K = g.degree_in(kParam);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
        Monomial m = t.mono;
        m.set(kParam, K - m[kParam]);
        terms.push_back({m, t.coef});
    }
    return Polynomial(kFamilyVars, std::move(terms));
}

// a^k m -> a^k h^{K-k} m in k[x,y,z,t,a,h].
Polynomial homogenize(const Polynomial& g)
{
    const int K = g.degree_in(kParam);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
        Monomial m = t.mono.resized(kFamilyVars + 1);
        m.set(kHom, K - t.mono[kParam]);
        terms.push_back({m, t.coef});
    }
    return Polynomial(kFamilyVars + 1, std::move(terms));
}

Polynomial fiber(const Polynomial& g, const Scalar& value)
{
    return g.substitute(kParam, value).resized(kN);
}

Scalar draw_parameter(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(1, 1000);
    std::uniform_int_distribution<int> sign(0, 1);
    return Scalar(dist(rng) * (sign(rng) ? 1 : -1));
}

bool has_linear_form(const Ideal& ideal)
{
    return !degree_piece(ideal, 1).empty();
}

StratumReport require_stratum(const Ideal& ideal, Stratum s, const std::string& what)
{
    StratumReport rep = classify(ideal);
    if (rep.stratum != s)
        throw CheckFailure(what + ": expected " + stratum_name(s) + ", found " + stratum_name(rep.stratum));
    return rep;
}

}  // namespace

// ---- families ---------------------------------------------------------------------

ParamFamily::ParamFamily(std::vector<Polynomial> generators, std::string description)
    : description_(std::move(description))
{
    static const std::vector<int> grading{1, 1, 1, 1, 0};
    for (auto& g : generators) {
        if (g.nvars() != kFamilyVars)
            throw InvalidInput("family generators live in k[x,y,z,t,a]");
        if (!g.is_homogeneous(grading))
            throw InvalidInput("family generator not homogeneous in x,y,z,t: " + g.to_string());
        if (!g.is_zero())
            gens_.push_back(std::move(g));
    }
}

ParamFamily ParamFamily::constant(const Ideal& ideal)
{
    if (ideal.nvars() != kN)
        throw InvalidInput("families live over k[x,y,z,t]");
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(g.resized(kFamilyVars));
    return ParamFamily(std::move(gens), "constant family");
}

Ideal specialize(const ParamFamily& family, const Scalar& value)
{
    std::vector<Polynomial> gens;
    for (const auto& g : family.generators()) {
        Polynomial f = fiber(g, value);
        if (!f.is_zero())
            gens.push_back(std::move(f));
    }
    if (gens.empty())
        throw InvalidInput("every generator vanishes at a = " + value.get_str());
    return Ideal(kN, std::move(gens));
}

LimitResult family_limit_report(const ParamFamily& family, LimitPoint at, const LimitOptions& opts)
{
    if (family.generators().empty())
        throw InvalidInput("empty family");
    LimitResult out{Ideal(kN), Ideal(kN), {}, {}};

    // flatness precheck on fibers away from the special point
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < opts.precheck_fibers; ++i) {
        Scalar a = draw_parameter(rng);
        HilbertPolynomial hp = quotient_hilbert_polynomial(specialize(family, a));
        if (i == 0)
            out.generic_hp = hp;
        else if (!(hp == out.generic_hp))
            throw CheckFailure("fibers at sampled parameters have different Hilbert polynomials (" +
                               out.generic_hp.to_string() + " vs " + hp.to_string() + ")");
        out.checked_parameters.push_back(a);
    }

    std::vector<Polynomial> homog;
    for (const auto& g : family.generators())
        homog.push_back(homogenize(at == LimitPoint::Infinity ? invert_parameter(g) : g));
    Ideal total(kFamilyVars + 1, std::move(homog));
    Ideal sat = saturate(total, Polynomial::variable(kParam, kFamilyVars + 1));

    std::vector<Polynomial> special;
    for (const auto& g : sat.groebner_basis()) {
        Polynomial s = g.substitute(kHom, 1).substitute(kParam, 0).resized(kN);
        if (!s.is_zero())
            special.push_back(std::move(s));
    }
    out.special = Ideal(kN, std::move(special));
    out.limit = saturate_irrelevant(out.special);
    HilbertPolynomial hp = quotient_hilbert_polynomial(out.limit);
    if (!(hp == out.generic_hp))
        throw CheckFailure("limit has Hilbert polynomial " + hp.to_string() + ", fibers have " +
                           out.generic_hp.to_string());
    return out;
}

Ideal family_limit(const ParamFamily& family, LimitPoint at, const LimitOptions& opts)
{
    return family_limit_report(family, at, opts).limit;
}

ParamFamily weight_family(const Ideal& ideal, const std::vector<int>& w)
{
    if (ideal.nvars() != kN || w.size() != kN)
        throw InvalidInput("weights need one entry per variable of k[x,y,z,t]");
    if (std::all_of(w.begin(), w.end(), [&](int v) { return v == w.front(); }))
        throw InvalidInput("constant weights act trivially");
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(weighted(g, w));
    return ParamFamily(std::move(gens), "torus orbit");
}

LimitResult weight_limit_report(const Ideal& ideal, const std::vector<int>& w, LimitPoint at,
                                const LimitOptions& opts)
{
    LimitResult r = family_limit_report(weight_family(ideal, w), at, opts);
    std::vector<Scalar> scale;
    for (int wi : w)
        scale.push_back(wi >= 0 ? Scalar(1 << wi) : Scalar(1, 1 << -wi));
    if (!equal(transform(r.limit, LinearChange::diagonal(scale)), r.limit))
        throw CheckFailure("weight limit is not fixed by the torus");
    return r;
}

Ideal weight_limit(const Ideal& ideal, const std::vector<int>& w, LimitPoint at, const LimitOptions& opts)
{
    return weight_limit_report(ideal, w, at, opts).limit;
}

// ---- complete intersections degenerating to R3' ---------------------------------------

ParamFamily va_family(const Polynomial& ell, const Polynomial& ell1, const Polynomial& ell2, const Polynomial& p,
                      const Polynomial& q)
{
    const Polynomial a = param_power(1);
    auto up = [](const Polynomial& f) { return f.resized(kFamilyVars); };
    return ParamFamily({up(ell * ell1) + a * up(q), up(ell * ell2) - a * up(p)}, "(l*l1 + a*q, l*l2 - a*p)");
}

VADegeneration va_degeneration(const Ideal& ideal, std::uint64_t seed)
{
    if (classify(ideal).stratum != Stratum::R3Prime)
        throw InvalidInput("va_degeneration needs an R3' ideal");
    auto quadrics = degree_piece(ideal, 2);
    VADegeneration out;
    out.ell = gcd_forms(quadrics[0], quadrics[1]);
    out.ell1 = exact_quotient(quadrics[0], out.ell);
    out.ell2 = exact_quotient(quadrics[1], out.ell);
    Ideal net(kN, quadrics);
    for (const auto& c : degree_piece(ideal, 3))
        if (!net.contains(c)) {
            out.F = c;
            break;
        }
    if (out.F.is_zero())
        throw CheckFailure("no cubic generator outside the quadrics");

    // F = l1*p + l2*q through the reduced basis of (l1, l2)
    auto basis = reduced_groebner_basis(std::vector<Polynomial>{out.ell1, out.ell2}, MonomialOrder::degrevlex());
    Division d = divide(out.F, basis, MonomialOrder::degrevlex());
    if (!d.remainder.is_zero() || basis.size() != 2)
        throw CheckFailure("the cubic is not in (l1, l2)");
    Vector c1 = linear_coefficients(out.ell1), c2 = linear_coefficients(out.ell2);
    out.p = Polynomial(kN);
    out.q = Polynomial(kN);
    for (std::size_t i = 0; i < 2; ++i) {
        // basis[i] = u*l1 + v*l2
        Vector b = linear_coefficients(basis[i]);
        Matrix aug(kN, 3);
        for (std::size_t r = 0; r < kN; ++r) {
            aug(r, 0) = c1[r];
            aug(r, 1) = c2[r];
            aug(r, 2) = b[r];
        }
        RowEchelon e = row_reduce(aug);
        if (e.pivots.size() != 2 || e.pivots[0] != 0 || e.pivots[1] != 1)
            throw CheckFailure("basis element outside <l1, l2>");
        out.p += d.quotients[i] * e.reduced(0, 2);
        out.q += d.quotients[i] * e.reduced(1, 2);
    }

    std::mt19937_64 rng(seed);
    Ideal line(kN, {out.ell});
    for (int attempt = 0; attempt < 8; ++attempt) {
        if (attempt > 0 || (line.contains(out.p) && line.contains(out.q))) {
            // p + s*l2, q - s*l1 leaves F unchanged
            Polynomial s = random_form(kN, 1, 3, rng);
            out.p += s * out.ell2;
            out.q -= s * out.ell1;
        }
        if (!(out.ell1 * out.p + out.ell2 * out.q == out.F))
            throw CheckFailure("F = l1*p + l2*q failed");
        out.family = va_family(out.ell, out.ell1, out.ell2, out.p, out.q);
        out.ci_parameters.clear();
        for (int tries = 0; tries < 12 && out.ci_parameters.size() < 3; ++tries) {
            Scalar a = draw_parameter(rng);
            Ideal f = specialize(out.family, a);
            if (f.generators().size() == 2 && gcd_forms(f.generators()[0], f.generators()[1]).degree() == 0)
                out.ci_parameters.push_back(a);
        }
        if (out.ci_parameters.size() == 3)
            break;
    }
    if (out.ci_parameters.size() != 3)
        throw CheckFailure("no complete-intersection fibers found");
    out.limit = family_limit(out.family, LimitPoint::Zero);
    if (!equal(out.limit, ideal))
        throw CheckFailure("limit at 0 differs from the input ideal");
    return out;
}

// ---- R5 to R6 ---------------------------------------------------------------------------

namespace {

// Frame sending forms[k] to variable k.
Ideal in_frame(const Ideal& ideal, const std::vector<Polynomial>& forms)
{
    return transform(ideal, LinearChange::sending_forms_to_variables(forms));
}

// Echelon basis (lex-descending columns over all quintics) of the span of ps.
std::vector<Polynomial> lex_echelon(const std::vector<Polynomial>& ps)
{
    auto cols = monomials_of_degree(kN, 5);
    std::vector<Vector> rows;
    for (const auto& p : ps)
        rows.push_back(p.coordinates(cols));
    RowEchelon e = row_reduce(Matrix::from_rows(rows));
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (e.reduced(r, c) != 0)
                terms.push_back({cols[c], e.reduced(r, c)});
        out.emplace_back(kN, std::move(terms));
    }
    return out;
}

// leading monomial in lex of an echelon row: the first listed term
Monomial lex_lead(const Polynomial& p)
{
    return p.leading_term(MonomialOrder::lex()).mono;
}

// Changes of x,y,z with entries in {-1,0,1}, by increasing L1 norm.
std::vector<Matrix> small_changes()
{
    std::vector<std::pair<int, Matrix>> all;
    for (int code = 0; code < 19683; ++code) {
        Matrix m = Matrix::identity(kN);
        int c = code, norm = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                int v = c % 3 - 1;
                c /= 3;
                m(i, j) = v;
                norm += std::abs(v);
            }
        if (determinant(m) != 0)
            all.emplace_back(norm, std::move(m));
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Matrix> out;
    for (auto& [n, m] : all)
        out.push_back(std::move(m));
    return out;
}

ParamFamily case1_family(const Ideal& ideal)
{
    const std::vector<int> w{0, -2, -2, 0};
    const std::size_t n = kFamilyVars;
    std::vector<Polynomial> psi{Polynomial::variable(0, n), Polynomial::variable(1, n), Polynomial::variable(2, n),
                                Polynomial::variable(3, n) - param_power(1) * Polynomial::variable(0, n),
                                Polynomial::variable(kParam, n)};
    std::vector<Polynomial> gens;
    for (const auto& g : minimal_generators(ideal))
        gens.push_back(compose(weighted(g, w), psi));
    return ParamFamily(std::move(gens), "t -> t - a*x, y -> a^-2*y, z -> a^-2*z");
}

DegenerationStep make_step(ParamFamily family, LimitPoint at, const Ideal& start, LimitResult result)
{
    StratumReport rep = classify(result.limit);
    return DegenerationStep{std::move(family), at, start, std::move(result), rep};
}

const std::vector<int> kScaleX{1, 0, 0, 0};

bool contains_x_block(const Ideal& special)
{
    Polynomial x = Polynomial::variable(0, kN);
    for (std::size_t v = 0; v < 3; ++v)
        if (!special.contains(x * Polynomial::variable(v, kN)))
            return false;
    return special.contains(x * Polynomial::variable(3, kN).pow(4));
}

}  // namespace

DegenerationChain rs_degeneration(const Ideal& ideal)
{
    if (classify(ideal).stratum != Stratum::R5)
        throw InvalidInput("rs_degeneration needs an R5 ideal");
    auto net = factor_quadric_net(degree_piece(ideal, 2));
    if (!net)
        throw CheckFailure("quadrics of an R5 ideal do not factor as l*L");
    DegenerationChain chain{1, false, Ideal(kN), {}, Ideal(kN)};
    std::vector<Polynomial> with_ell = net->L;
    with_ell.push_back(net->ell);

    if (independent_forms(with_ell)) {
        // case 1: l -> t, L -> <x, y, z>
        Ideal framed = in_frame(ideal, with_ell);
        std::vector<Polynomial> quintics;
        for (const auto& p : degree_piece(framed, 5)) {
            Polynomial s = p.substitute(3, 0);
            if (!s.is_zero())
                quintics.push_back(s);
        }
        if (lex_echelon(quintics).size() != 2)
            throw CheckFailure("quintic part is not two-dimensional");
        const Monomial x5{5, 0, 0, 0}, x4y{4, 1, 0, 0};
        std::optional<Ideal> normal;
        for (const auto& m : small_changes()) {
            LinearChange g(m);
            auto span = lex_echelon(g.apply(quintics));
            if (lex_lead(span[0]) == x5 && lex_lead(span[1]) == x4y) {
                normal = transform(framed, g);
                break;
            }
        }
        if (!normal)
            throw CheckFailure("no small change brings the quintic leads to x^5, x^4*y");
        chain.normalized = *normal;
        ParamFamily fam = case1_family(*normal);
        LimitResult r = family_limit_report(fam, LimitPoint::Infinity);
        chain.steps.push_back(make_step(std::move(fam), LimitPoint::Infinity, *normal, std::move(r)));
    } else {
        // case 2: l -> x, L -> <x, y, z>
        chain.case_no = 2;
        std::vector<Polynomial> frame{net->ell};
        for (const auto& c : net->L) {
            auto trial = frame;
            trial.push_back(c);
            if (frame.size() < 3 && independent_forms(trial))
                frame = std::move(trial);
        }
        for (std::size_t v = 0; v < kN && frame.size() < kN; ++v) {
            auto trial = frame;
            trial.push_back(Polynomial::variable(v, kN));
            if (independent_forms(trial))
                frame = std::move(trial);
        }
        Ideal framed = in_frame(ideal, frame);
        chain.normalized = framed;
        // J_5 modulo x*(x, y, z): x-free terms and x*t^4
        const Monomial xt4{1, 0, 0, 4};
        std::vector<Polynomial> reduced;
        for (const auto& p : degree_piece(framed, 5)) {
            std::vector<Term> keep;
            for (const auto& t : p.terms())
                if (t.mono[0] == 0 || t.mono == xt4)
                    keep.push_back(t);
            reduced.emplace_back(kN, std::move(keep));
        }
        auto span = lex_echelon(reduced);
        if (span.size() != 2)
            throw CheckFailure("quintic part is not two-dimensional");
        if (lex_lead(span[0]) == xt4) {
            LimitResult r = weight_limit_report(framed, kScaleX, LimitPoint::Infinity);
            if (!contains_x_block(r.special))
                throw CheckFailure("limit does not contain x*(x, y, z, t^4)");
            chain.steps.push_back(make_step(weight_family(framed, kScaleX), LimitPoint::Infinity, framed, std::move(r)));
        } else {
            chain.alpha_zero = true;
            Polynomial h = gcd_forms(span[0], span[1]);
            if (h.degree() != 4)
                throw CheckFailure("quintics without a common quartic factor");
            Polynomial m1 = exact_quotient(span[0], h), m2 = exact_quotient(span[1], h);
            Vector a = linear_coefficients(m1), b = linear_coefficients(m2);
            // l2 in <y, z>, l1 completing it
            Polynomial ell2 = b[3] == 0 ? m2 : m1 * b[3] - m2 * a[3];
            Polynomial ell1 = independent_forms({ell2, m1}) ? m1 : m2;
            Polynomial x = Polynomial::variable(0, kN);
            Polynomial f1 = ell1 * h + x * Polynomial::variable(3, kN).pow(4);
            Ideal one(kN, {x * x, x * Polynomial::variable(1, kN), x * Polynomial::variable(2, kN), f1, ell2 * h});
            require_stratum(one, Stratum::R5, "intermediate ideal");
            LimitResult back = weight_limit_report(one, kScaleX, LimitPoint::Zero);
            if (!equal(back.limit, framed))
                throw CheckFailure("the intermediate ideal does not specialize to the input");
            chain.steps.push_back(make_step(weight_family(one, kScaleX), LimitPoint::Zero, one, std::move(back)));
            LimitResult r = weight_limit_report(one, kScaleX, LimitPoint::Infinity);
            if (!contains_x_block(r.special))
                throw CheckFailure("limit does not contain x*(x, y, z, t^4)");
            chain.steps.push_back(make_step(weight_family(one, kScaleX), LimitPoint::Infinity, one, std::move(r)));
        }
    }
    chain.terminal = chain.steps.back().result.limit;
    require_stratum(chain.terminal, Stratum::R6, "terminal ideal");
    if (!has_linear_form(chain.terminal))
        throw CheckFailure("terminal ideal contains no linear form");
    return chain;
}

}  // namespace hilbkit
