#include "hilbkit/strata.hpp"

#include "hilbkit/borel.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/gin.hpp"
#include "hilbkit/linear_change.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hilbkit {

namespace {

const std::size_t kN = 4;

Polynomial var(std::size_t i)
{
    return Polynomial::variable(i, kN);
}

bool is_form_of_degree(const Polynomial& p, int d)
{
    auto hd = p.homogeneous_degree();
    return hd && *hd == d;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InvalidInput(what);
}

bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& gens)
{
    return Ideal(kN, gens).contains(f);
}

Scalar evaluate(const Polynomial& p, const std::vector<Scalar>& pt)
{
    Scalar v = 0;
    for (const auto& t : p.terms()) {
        Scalar m = t.coef;
        for (std::size_t i = 0; i < pt.size(); ++i)
            for (int e = 0; e < t.mono[i]; ++e)
                m *= pt[i];
        v += m;
    }
    return v;
}

// Forms after the change sending `frame` to x, y, z, t.
std::vector<Polynomial> in_frame(const std::vector<Polynomial>& frame, const std::vector<Polynomial>& ps)
{
    return LinearChange::sending_forms_to_variables(frame).apply(ps);
}

Polynomial random_linear(std::mt19937_64& rng, int bound)
{
    return random_form(kN, 1, bound, rng);
}

HilbertPolynomial four_n()
{
    return HilbertPolynomial({0, 4});
}

void validate(const CIShape& s)
{
    require(is_form_of_degree(s.f, 2) && is_form_of_degree(s.g, 2), "CIShape: f and g must be quadrics");
    require(gcd_forms(s.f, s.g).degree() == 0, "CIShape: f and g have a common divisor");
}

void validate(const R3PrimeShape& s)
{
    require(is_form_of_degree(s.ell, 1) && is_form_of_degree(s.ell1, 1) && is_form_of_degree(s.ell2, 1),
            "R3PrimeShape: l, l1, l2 must be linear forms");
    require(is_form_of_degree(s.F, 3), "R3PrimeShape: F must be a cubic");
    require(independent_forms({s.ell1, s.ell2}), "R3PrimeShape: l1 and l2 are dependent");
    require(in_ideal(s.F, {s.ell1, s.ell2}), "R3PrimeShape: F is not in (l1, l2)");
    require(!in_ideal(s.F, {s.ell}), "R3PrimeShape: F is divisible by l");
}

void validate(const R4Shape& s)
{
    require(is_form_of_degree(s.ell, 1) && is_form_of_degree(s.ell1, 1) && is_form_of_degree(s.ell2, 1),
            "R4Shape: l, l1, l2 must be linear forms");
    require(is_form_of_degree(s.q, 2), "R4Shape: q must be a quadric");
    require(is_form_of_degree(s.p, 4), "R4Shape: p must be a quartic");
    require(independent_forms({s.ell1, s.ell2}), "R4Shape: l1 and l2 are dependent");
    require(!in_ideal(s.q, {s.ell1, s.ell2}), "R4Shape: q lies in (l1, l2)");
    require(in_ideal(s.p, {s.ell1, s.ell2, s.q}), "R4Shape: p is not in (l1, l2, q)");
    require(!in_ideal(s.p, {s.ell}), "R4Shape: p lies in (l)");
}

void validate(const R5Shape& s)
{
    require(s.case_no == 1 || s.case_no == 2, "R5Shape: case must be 1 or 2");
    require(is_form_of_degree(s.ell, 1), "R5Shape: l must be a linear form");
    require(s.L.size() == 3, "R5Shape: L needs three forms");
    for (const auto& f : s.L)
        require(is_form_of_degree(f, 1), "R5Shape: L must consist of linear forms");
    require(is_form_of_degree(s.ell1, 1) && is_form_of_degree(s.ell2, 1), "R5Shape: l1, l2 must be linear forms");
    require(is_form_of_degree(s.h, 4), "R5Shape: h must be a quartic");
    require(independent_forms({s.ell1, s.ell2}), "R5Shape: l1 and l2 are dependent");
    require(independent_forms(s.L), "R5Shape: L is not 3-dimensional");
    if (s.case_no == 1) {
        require(s.alpha == 0, "R5Shape: alpha must vanish in case 1");
        std::vector<Polynomial> frame = s.L;
        frame.push_back(s.ell);
        require(independent_forms(frame), "R5Shape: case 1 needs l outside L");
        for (const auto& p : in_frame(frame, {s.ell1, s.ell2, s.h}))
            require(p.degree_in(3) == 0, "R5Shape: l1, l2, h must be polynomials in L");
    } else {
        require(s.complement.size() == 3, "R5Shape: case 2 needs three complement forms");
        std::vector<Polynomial> frame{s.ell, s.complement[0], s.complement[1], s.complement[2]};
        require(independent_forms(frame), "R5Shape: l and the complement must form a basis");
        std::vector<Polynomial> both = s.L;
        both.insert(both.end(), frame.begin(), frame.begin() + 3);
        std::vector<Vector> rows;
        for (const auto& f : both)
            rows.push_back(linear_coefficients(f));
        require(rank_of(rows) == 3, "R5Shape: case 2 needs L = <l, c0, c1>");
        auto mapped = in_frame(frame, {s.ell1, s.ell2, s.h});
        for (const auto& p : mapped)
            require(p.degree_in(0) == 0, "R5Shape: l1, l2, h must be polynomials in the complement");
        if (s.alpha != 0)
            require(mapped[1].degree_in(3) == 0, "R5Shape: alpha != 0 needs l2 in <c0, c1>");
        const Monomial w5 = Monomial::variable(3, kN, 5);
        require((mapped[0] * mapped[2]).coefficient(w5) == 0 && (mapped[1] * mapped[2]).coefficient(w5) == 0,
                "R5Shape: l1*h and l2*h must lie in L");
    }
}

void validate(const R6Shape& s)
{
    require(is_form_of_degree(s.ell, 1) && is_form_of_degree(s.h, 1), "R6Shape: l and h must be linear forms");
    require(is_form_of_degree(s.f, 4), "R6Shape: f must be a quartic");
    require(is_form_of_degree(s.g, 2), "R6Shape: g must be a quadric");
    require(!in_ideal(s.f, {s.ell}), "R6Shape: f lies in (l)");
    require(independent_forms({s.ell, s.h}), "R6Shape: h lies in <l>");
    require(!in_ideal(s.g, {s.ell, s.h}), "R6Shape: g lies in (l, h)");
}

Ideal ideal_of(const CIShape& s)
{
    return Ideal(kN, {s.f, s.g});
}

Ideal ideal_of(const R3PrimeShape& s)
{
    return Ideal(kN, {s.ell * s.ell1, s.ell * s.ell2, s.F});
}

Ideal ideal_of(const R4Shape& s)
{
    return Ideal(kN, {s.ell * s.ell1, s.ell * s.ell2, s.ell * s.q, s.p});
}

Ideal ideal_of(const R5Shape& s)
{
    std::vector<Polynomial> gens;
    for (const auto& f : s.L)
        gens.push_back(s.ell * f);
    Polynomial f = s.ell1 * s.h;
    if (s.case_no == 2 && s.alpha != 0)
        f += s.alpha * s.ell * s.complement[2].pow(4);
    gens.push_back(f);
    gens.push_back(s.ell2 * s.h);
    return Ideal(kN, std::move(gens));
}

Ideal ideal_of(const R6Shape& s)
{
    return Ideal(kN, {s.ell, s.f * s.h, s.f * s.g});
}

}  // namespace

std::string stratum_name(Stratum s)
{
    switch (s) {
    case Stratum::V: return "V";
    case Stratum::R3Prime: return "R3'";
    case Stratum::R4: return "R4";
    case Stratum::R5: return "R5";
    case Stratum::R6: return "R6";
    }
    return "?";
}

Stratum parse_stratum(const std::string& name)
{
    if (name == "V")
        return Stratum::V;
    if (name == "R3'" || name == "R3p" || name == "R3prime")
        return Stratum::R3Prime;
    if (name == "R4")
        return Stratum::R4;
    if (name == "R5")
        return Stratum::R5;
    if (name == "R6")
        return Stratum::R6;
    throw InvalidInput("unknown stratum: " + name);
}

int stratum_regularity(Stratum s)
{
    switch (s) {
    case Stratum::V:
    case Stratum::R3Prime: return 3;
    case Stratum::R4: return 4;
    case Stratum::R5: return 5;
    case Stratum::R6: return 6;
    }
    return 0;
}

Stratum shape_stratum(const Shape& shape)
{
    struct Visitor {
        Stratum operator()(const CIShape&) const { return Stratum::V; }
        Stratum operator()(const R3PrimeShape&) const { return Stratum::R3Prime; }
        Stratum operator()(const R4Shape&) const { return Stratum::R4; }
        Stratum operator()(const R5Shape&) const { return Stratum::R5; }
        Stratum operator()(const R6Shape&) const { return Stratum::R6; }
    };
    return std::visit(Visitor{}, shape);
}

// ---- forms ---------------------------------------------------------------------

Polynomial random_form(std::size_t nvars, int d, int bound, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(nvars, d))
        terms.push_back({m, Scalar(dist(rng))});
    return Polynomial(nvars, std::move(terms));
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& forms)
{
    if (forms.empty() || forms.size() != p.nvars())
        throw InvalidInput("compose needs one form per variable");
    const std::size_t n = forms.front().nvars();
    std::vector<std::vector<Polynomial>> powers(forms.size());
    Polynomial out(n);
    for (const auto& t : p.terms()) {
        Polynomial m = Polynomial::constant(n, t.coef);
        for (std::size_t i = 0; i < forms.size(); ++i) {
            auto& pw = powers[i];
            if (pw.empty())
                pw.push_back(Polynomial::constant(n, 1));
            while (static_cast<int>(pw.size()) <= t.mono[i])
                pw.push_back(pw.back() * forms[i]);
            m = m * pw[static_cast<std::size_t>(t.mono[i])];
        }
        out += m;
    }
    return out;
}

bool independent_forms(const std::vector<Polynomial>& forms)
{
    std::vector<Vector> rows;
    for (const auto& f : forms) {
        if (f.is_zero())
            return false;
        if (!is_form_of_degree(f, 1))
            throw InvalidInput("not a linear form: " + f.to_string());
        rows.push_back(linear_coefficients(f));
    }
    return rank_of(rows) == forms.size();
}

Polynomial gcd_forms(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero())
        throw InvalidInput("gcd of a zero polynomial");
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw InvalidInput("gcd_forms needs homogeneous input");
    const std::size_t n = f.nvars();
    if (f.degree() == 0 || g.degree() == 0)
        return Polynomial::constant(n, 1);
    Ideal meet = intersect(Ideal(n, {f}), Ideal(n, {g}));
    const auto& basis = meet.groebner_basis();
    if (basis.size() != 1)
        throw CheckFailure("intersection of principal ideals is not principal");
    return exact_quotient(f * g, basis.front()).monic();
}

std::optional<QuadricNetFactor> factor_quadric_net(const std::vector<Polynomial>& V)
{
    if (V.size() != 3)
        throw InvalidInput("a quadric net needs three quadrics");
    std::vector<Monomial> basis = monomials_of_degree(kN, 2);
    std::vector<Vector> rows;
    for (const auto& q : V) {
        if (!is_form_of_degree(q, 2))
            throw InvalidInput("not a quadric: " + q.to_string());
        rows.push_back(q.coordinates(basis));
    }
    if (rank_of(rows) != 3)
        throw InvalidInput("the quadrics are dependent");
    Polynomial ell = gcd_forms(V[0], V[1]);
    for (std::size_t i = 0; i < 3 && ell.degree() != 1; ++i)
        for (std::size_t j = i + 1; j < 3 && ell.degree() != 1; ++j)
            ell = gcd_forms(V[i], V[j]);
    if (ell.degree() != 1)
        return std::nullopt;
    std::vector<Vector> lin;
    for (const auto& q : V) {
        Division d = divide(q, std::vector<Polynomial>{ell}, MonomialOrder::degrevlex());
        if (!d.remainder.is_zero())
            return std::nullopt;
        lin.push_back(linear_coefficients(d.quotients.front()));
    }
    RowEchelon e = row_reduce(Matrix::from_rows(lin));
    QuadricNetFactor out;
    out.ell = ell;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        out.L.push_back(Polynomial::linear_form(e.reduced.row(r)));
    return out;
}

// ---- building ---------------------------------------------------------------------

Ideal shape_ideal(const Shape& shape)
{
    return std::visit(
        [](const auto& s) {
            validate(s);
            return ideal_of(s);
        },
        shape);
}

std::vector<long> stratum_hilbert_function(int r, int upto)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<long>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(r, upto);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    for (const auto& ideal : enumerate_borel_ideals(four_n()))
        if (ideal.max_generator_degree() == r) {
            auto values = hilbert_function_table(ideal, upto).values;
            cache.emplace(key, values);
            return values;
        }
    throw InvalidInput("no Borel ideal of regularity " + std::to_string(r));
}

Ideal build_stratum_ideal(const Shape& shape)
{
    Ideal ideal = shape_ideal(shape);
    const Stratum s = shape_stratum(shape);
    const int r = stratum_regularity(s);
    auto expected = stratum_hilbert_function(r, 8);
    for (int n = 0; n <= 8; ++n)
        if (hilbert_function(ideal, n) != expected[static_cast<std::size_t>(n)])
            throw CheckFailure(stratum_name(s) + " shape has the wrong Hilbert function in degree " +
                               std::to_string(n) + ": " + ideal.to_string());
    const int reg = regularity(ideal);
    if (reg != r)
        throw CheckFailure(stratum_name(s) + " shape has regularity " + std::to_string(reg) + ": " +
                           ideal.to_string());
    return ideal;
}

// ---- sampling ---------------------------------------------------------------------

namespace {

Shape draw_shape(Stratum s, std::mt19937_64& rng, const SampleOptions& opts)
{
    const int B = opts.bound;
    switch (s) {
    case Stratum::V:
        return CIShape{random_form(kN, 2, B, rng), random_form(kN, 2, B, rng)};
    case Stratum::R3Prime: {
        R3PrimeShape r{random_linear(rng, B), random_linear(rng, B), random_linear(rng, B), Polynomial(kN)};
        r.F = r.ell1 * random_form(kN, 2, B, rng) + r.ell2 * random_form(kN, 2, B, rng);
        return r;
    }
    case Stratum::R4: {
        R4Shape r{random_linear(rng, B), random_linear(rng, B), random_linear(rng, B), random_form(kN, 2, B, rng),
                  Polynomial(kN)};
        r.p = r.ell1 * random_form(kN, 3, B, rng) + r.ell2 * random_form(kN, 3, B, rng) +
              r.q * random_form(kN, 2, B, rng);
        return r;
    }
    case Stratum::R5: {
        R5Shape r;
        std::uniform_int_distribution<int> coin(0, 1);
        r.case_no = opts.r5_case.value_or(1 + coin(rng));
        r.ell = random_linear(rng, B);
        std::vector<Polynomial> ring;  // forms generating the ring of l1, l2, h
        if (r.case_no == 1) {
            r.L = {random_linear(rng, B), random_linear(rng, B), random_linear(rng, B)};
            ring = r.L;
        } else {
            if (opts.r5_normalized) {
                r.ell = var(0);
                r.complement = {var(1), var(2), var(3)};
            } else {
                r.complement = {random_linear(rng, B), random_linear(rng, B), random_linear(rng, B)};
            }
            r.L = {r.ell, r.complement[0], r.complement[1]};
            ring = r.complement;
        }
        if (r.case_no == 1) {
            r.ell1 = compose(random_form(3, 1, B, rng), ring);
            r.ell2 = compose(random_form(3, 1, B, rng), ring);
            r.h = compose(random_form(3, 4, B, rng), ring);
            return r;
        }
        // f, g in L: either h has no c2^4 term or l1, l2 avoid c2
        const bool h_in_L = coin(rng) == 0;
        const bool alpha_zero = opts.r5_alpha_zero.value_or(coin(rng) == 0);
        Polynomial h3 = random_form(3, 4, B, rng);
        if (h_in_L)
            h3 = h3 - Polynomial::monomial(Monomial::variable(2, 3, 4), h3.coefficient(Monomial::variable(2, 3, 4)));
        auto linear = [&](bool avoid_c2) {
            return avoid_c2 ? random_form(2, 1, B, rng).resized(3) : random_form(3, 1, B, rng);
        };
        r.h = compose(h3, ring);
        r.ell1 = compose(linear(!h_in_L), ring);
        r.ell2 = compose(linear(!h_in_L || !alpha_zero), ring);
        if (!alpha_zero) {
            std::uniform_int_distribution<int> dist(1, B);
            r.alpha = Scalar(dist(rng) * (coin(rng) ? 1 : -1));
        }
        return r;
    }
    case Stratum::R6:
        return R6Shape{random_linear(rng, B), random_form(kN, 4, B, rng), random_linear(rng, B),
                       random_form(kN, 2, B, rng)};
    }
    throw InvalidInput("unknown stratum");
}

}  // namespace

Shape random_shape(Stratum s, std::mt19937_64& rng, const SampleOptions& opts)
{
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        Shape shape = draw_shape(s, rng, opts);
        try {
            shape_ideal(shape);
            return shape;
        } catch (const InvalidInput&) {
        }
    }
    throw CheckFailure("no valid " + stratum_name(s) + " shape after " + std::to_string(opts.max_attempts) +
                       " attempts");
}

Ideal sample_stratum(Stratum s, std::mt19937_64& rng, const SampleOptions& opts)
{
    return build_stratum_ideal(random_shape(s, rng, opts));
}

// ---- the family (l, f) ∩ P1 ∩ P2 ------------------------------------------------------

Ideal point_ideal(const std::vector<Scalar>& pt)
{
    if (pt.size() != kN || std::all_of(pt.begin(), pt.end(), [](const Scalar& c) { return c == 0; }))
        throw InvalidInput("a point needs four coordinates, not all zero");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < kN; ++i)
        for (std::size_t j = i + 1; j < kN; ++j)
            gens.push_back(pt[j] * var(i) - pt[i] * var(j));
    return Ideal(kN, std::move(gens));
}

Ideal rs_family_ideal(const RSFamilyShape& s)
{
    require(is_form_of_degree(s.ell, 1), "RSFamilyShape: l must be a linear form");
    require(is_form_of_degree(s.f, 4), "RSFamilyShape: f must be a quartic");
    require(!in_ideal(s.f, {s.ell}), "RSFamilyShape: f lies in (l)");
    Ideal p1 = point_ideal(s.pt1), p2 = point_ideal(s.pt2);
    require(rank_of({s.pt1, s.pt2}) == 2, "RSFamilyShape: the points coincide");
    for (const auto* pt : {&s.pt1, &s.pt2})
        require(evaluate(s.ell, *pt) != 0 || evaluate(s.f, *pt) != 0, "RSFamilyShape: a point lies on the curve");
    Ideal out = intersect({Ideal(kN, {s.ell, s.f}), p1, p2});
    if (!(quotient_hilbert_polynomial(out) == four_n()))
        throw CheckFailure("(l, f) ∩ P1 ∩ P2 does not have Hilbert polynomial 4n");
    return out;
}

RSFamilyShape random_rs_family_shape(std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (int attempt = 0; attempt < 200; ++attempt) {
        RSFamilyShape s{random_linear(rng, bound), random_form(kN, 4, bound, rng), {}, {}};
        for (int k = 0; k < 4; ++k) {
            s.pt1.push_back(Scalar(dist(rng)));
            s.pt2.push_back(Scalar(dist(rng)));
        }
        try {
            require(!s.ell.is_zero() && is_form_of_degree(s.f, 4) && !in_ideal(s.f, {s.ell}), "bad forms");
            point_ideal(s.pt1);
            point_ideal(s.pt2);
            require(rank_of({s.pt1, s.pt2}) == 2, "points coincide");
            for (const auto* pt : {&s.pt1, &s.pt2})
                require(evaluate(s.ell, *pt) != 0 || evaluate(s.f, *pt) != 0, "point on the curve");
            return s;
        } catch (const InvalidInput&) {
        }
    }
    throw CheckFailure("no valid family member after 200 attempts");
}

// ---- classification ---------------------------------------------------------------

StratumReport classify(const Ideal& ideal)
{
    if (ideal.nvars() != kN)
        throw InvalidInput("classify works in k[x,y,z,t]");
    if (!(quotient_hilbert_polynomial(ideal) == four_n()))
        throw InvalidInput("quotient Hilbert polynomial is not 4n");
    if (!is_saturated(ideal))
        throw InvalidInput("the ideal is not saturated");
    StratumReport rep;
    rep.regularity = regularity(ideal);
    rep.hilbert_values = hilbert_function_table(ideal, 7).values;
    switch (rep.regularity) {
    case 3: {
        auto quadrics = degree_piece(ideal, 2);
        if (quadrics.size() != 2)
            throw CheckFailure("a 3-regular ideal without two quadrics");
        rep.ci = gcd_forms(quadrics[0], quadrics[1]).degree() == 0;
        rep.stratum = rep.ci ? Stratum::V : Stratum::R3Prime;
        rep.components = {{"H_VA", Membership::Certain}, {"H_RS", Membership::Unknown}};
        break;
    }
    case 4:
    case 5:
    case 6:
        rep.stratum = rep.regularity == 4 ? Stratum::R4 : rep.regularity == 5 ? Stratum::R5 : Stratum::R6;
        rep.components = {{"H_RS", Membership::Certain}, {"H_VA", Membership::Unknown}};
        break;
    default:
        throw CheckFailure("regularity " + std::to_string(rep.regularity) + " outside 3..6");
    }
    return rep;
}

// ---- dimensions ---------------------------------------------------------------------

namespace {

long grass(long k, long n)
{
    return k * (n - k);
}

long proj(long vector_dim)
{
    return vector_dim - 1;
}

long dim_piece(const std::vector<Polynomial>& gens, int d)
{
    return hilbert_function(Ideal(kN, gens), d);
}

}  // namespace

std::vector<DimensionEntry> dimension_table()
{
    const Polynomial x = var(0), y = var(1), z = var(2), t = var(3);
    const long P1 = ring_dimension(kN, 1), P2 = ring_dimension(kN, 2), P4 = ring_dimension(kN, 4);
    const long lines = proj(P1);                                       // l in P(P_1)
    const long pencil = grass(2, P1);                                  // <l1, l2>
    const long F_fibre = proj(dim_piece({x, y}, 3) - dim_piece({x * x, x * y}, 3));
    const long q_fibre = proj(P2 - dim_piece({x, y}, 2));
    const long Hq = pencil + q_fibre;
    const long p_fibre = proj(dim_piece({x, y, z * z}, 4) - dim_piece({t * x, t * y, t * z * z}, 4));
    const long quartic_mod_l = P4 - dim_piece({x}, 4);                 // dim P_4 / l P_3
    const long L_over_l = grass(2, P1 - 1);
    const long H1 = lines + L_over_l + proj(quartic_mod_l);
    const long R5_fibre = proj(P1);                                    // P^3 minus V(l)
    const long h_choice = proj(P1 - 1);
    const long g_choice = proj(P2 - dim_piece({x, y}, 2));
    const long point = proj(P1);

    auto entry = [](std::string name, std::vector<long> terms, std::string how) {
        DimensionEntry e;
        e.name = std::move(name);
        e.terms = std::move(terms);
        for (long v : e.terms)
            e.value += v;
        e.derivation = std::move(how);
        return e;
    };
    return {
        entry("V", {grass(2, P2)}, "dim Grass(2, P_2)"),
        entry("R3'", {lines, pencil, F_fibre}, "l, <l1,l2>, F in P((l1,l2)_3 / l(l1,l2)_2)"),
        entry("Hq", {pencil, q_fibre}, "<l1,l2>, q in P(P_2 / (l1,l2)_2)"),
        entry("R4", {lines, Hq, p_fibre}, "l, (l1,l2,q) in Hq, p in P((l1,l2,q)_4 / l(l1,l2,q)_3)"),
        entry("H1", {lines, L_over_l, proj(quartic_mod_l)}, "l, L/<l> in Grass(2, P_1/<l>), f in P(P_4 / l P_3)"),
        entry("R5", {H1, R5_fibre}, "H1 plus 3-dimensional fibres"),
        entry("R6", {lines, proj(quartic_mod_l), h_choice, g_choice},
              "l, f in P(P_4 / l P_3), h in P(P_1 / <l>), g in P(P_2 / (l,h)_2)"),
        entry("Z", {lines, proj(quartic_mod_l), point, point}, "l, f in P(P_4 / l P_3), two points"),
    };
}

}  // namespace hilbkit
