#include "hilbkit/verify.hpp"

#include "hilbkit/borel.hpp"
#include "hilbkit/degeneration.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/gin.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/linalg.hpp"
#include "hilbkit/parser.hpp"
#include "hilbkit/strata.hpp"
#include "hilbkit/tangent.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace hilbkit {

namespace {

constexpr std::size_t kN = 4;

const std::vector<std::pair<std::string, std::vector<int>>>& group_criteria()
{
    static const std::vector<std::pair<std::string, std::vector<int>>> g{
        {"borel", {1}},    {"hilbert", {2, 3}},    {"strata", {4, 5, 6}},        {"macaulay", {7}}, {"gin", {8}},
        {"dims", {9}},     {"tangent", {10}},      {"degeneration", {11, 12}},   {"properties", {13}},
    };
    return g;
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string join(const std::vector<long>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string format_ideal(const Ideal& ideal)
{
    std::string s = "(";
    auto gens = minimal_generators(ideal);
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? ", " : "") + gens[i].to_string();
    return s + ")";
}

// Reference values of dim I_n: listed values, then C(n+3,3) - 4n.
long reference_phi(const std::vector<long>& listed, int n)
{
    if (n < static_cast<int>(listed.size()))
        return listed[static_cast<std::size_t>(n)];
    return ring_dimension(kN, n) - 4L * n;
}

// Runs `trial` count times; a trial returns an empty string on success.
std::string count_successes(int count, const std::function<std::string(int)>& trial)
{
    int ok = 0;
    std::string first;
    for (int i = 0; i < count; ++i) {
        std::string failure;
        try {
            failure = trial(i);
        } catch (const std::exception& e) {
            failure = e.what();
        }
        if (failure.empty())
            ++ok;
        else if (first.empty())
            first = "trial " + std::to_string(i) + ": " + failure;
    }
    std::string s = std::to_string(ok) + " of " + std::to_string(count);
    if (!first.empty())
        s += "; first failure " + first;
    return s;
}

std::string all_of(int count)
{
    return std::to_string(count) + " of " + std::to_string(count);
}

Ideal parse_monomials(const std::string& text)
{
    std::string body = text;
    std::replace(body.begin(), body.end(), ',', ';');
    body.erase(std::remove(body.begin(), body.end(), '('), body.end());
    body.erase(std::remove(body.begin(), body.end(), ')'), body.end());
    return to_ideal(parse_ideal(body));
}

Ideal fresh(const Ideal& ideal)
{
    return Ideal(ideal.nvars(), ideal.generators());
}

class Runner {
public:
    explicit Runner(const VerifyConfig& cfg)
        : cfg_(cfg)
    {
        for (const auto& g : cfg.only) {
            auto it = std::find_if(group_criteria().begin(), group_criteria().end(),
                                   [&](const auto& e) { return e.first == g; });
            if (it == group_criteria().end())
                throw InvalidInput("unknown verify group '" + g + "'");
            for (int c : it->second)
                wanted_.push_back(c);
        }
        report_.seed = cfg.seed;
    }

    bool wants(int criterion) const
    {
        return wanted_.empty() || std::find(wanted_.begin(), wanted_.end(), criterion) != wanted_.end();
    }

    std::mt19937_64 rng(const std::string& id) const { return std::mt19937_64(cfg_.seed ^ fnv1a(id)); }

    // body fills expected, computed and note
    void item(const std::string& id, int criterion, const std::string& description, const std::string& anchor,
              const std::function<void(VerifyItem&)>& body)
    {
        VerifyItem it;
        it.id = id;
        it.criterion = criterion;
        for (const auto& [g, cs] : group_criteria())
            if (std::find(cs.begin(), cs.end(), criterion) != cs.end())
                it.group = g;
        it.description = description;
        it.anchor = anchor;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(it);
        } catch (const std::exception& e) {
            it.computed = std::string("error: ") + e.what();
        }
        it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.items.push_back(std::move(it));
    }

    const ExpectedValues& expected() const { return cfg_.expected; }

    VerificationReport finish(double seconds)
    {
        std::sort(report_.items.begin(), report_.items.end(),
                  [](const VerifyItem& a, const VerifyItem& b) { return a.id < b.id; });
        report_.total_seconds = seconds;
        return std::move(report_);
    }

private:
    const VerifyConfig& cfg_;
    std::vector<int> wanted_;
    VerificationReport report_;
};

// ---- criteria ----------------------------------------------------------------------

void borel_items(Runner& r)
{
    std::vector<Ideal> found;
    r.item("c01.borel.count", 1, "number of saturated Borel ideals with Hilbert polynomial 4n", "borel-enumeration",
           [&](VerifyItem& it) {
               found = enumerate_borel_ideals(HilbertPolynomial({0, 4}));
               it.expected = std::to_string(r.expected().borel_generators.size());
               it.computed = std::to_string(found.size());
           });
    r.item("c01.borel.generators", 1, "generator sets of the Borel ideals, by regularity", "borel-enumeration",
           [&](VerifyItem& it) {
               for (const auto& g : r.expected().borel_generators)
                   it.expected += (it.expected.empty() ? "" : "; ") + g;
               for (const auto& I : found)
                   it.computed += (it.computed.empty() ? "" : "; ") + format_ideal(I);
           });
    r.item("c01.borel.runtime", 1, "enumeration finishes within 60 s", "borel-enumeration", [&](VerifyItem& it) {
        auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 shuffle = r.rng("c01.borel.runtime");
        auto again = enumerate_borel_ideals(HilbertPolynomial({0, 4}), &shuffle);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        it.expected = "under 60 s, same list";
        bool same = again.size() == found.size();
        for (std::size_t i = 0; same && i < found.size(); ++i)
            same = equal(again[i], found[i]);
        it.computed = std::string(s < 60 ? "under 60 s" : "over 60 s") + (same ? ", same list" : ", different list");
    });
}

void hilbert_items(Runner& r)
{
    const auto& gens = r.expected().borel_generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int reg = static_cast<int>(i) + 3;
        const std::string name = "B" + std::to_string(reg);
        if (r.wants(2)) {
            r.item("c02.hf." + name, 2, "dim I_n of " + name + " for the listed n", "hilbert-function-table",
                   [&](VerifyItem& it) {
                       Ideal I = parse_monomials(gens[i]);
                       const auto& listed = r.expected().phi.at(reg);
                       std::vector<long> got;
                       for (std::size_t n = 0; n < listed.size(); ++n)
                           got.push_back(hilbert_function(I, static_cast<int>(n)));
                       it.expected = join(listed);
                       it.computed = join(got);
                   });
            r.item("c02.q." + name, 2, "dim I_n of " + name + " for n = 5, 6, 7", "hilbert-function-table",
                   [&](VerifyItem& it) {
                       Ideal I = parse_monomials(gens[i]);
                       std::vector<long> want, got;
                       for (const auto& [n, v] : r.expected().q_values) {
                           want.push_back(v);
                           got.push_back(hilbert_function(I, n));
                       }
                       it.expected = join(want);
                       it.computed = join(got);
                   });
            r.item("c02.reg." + name, 2, "regularity of " + name, "hilbert-function-table", [&](VerifyItem& it) {
                it.expected = std::to_string(reg);
                it.computed = std::to_string(regularity(parse_monomials(gens[i])));
            });
        }
        if (r.wants(3))
            r.item("c03.hp." + name, 3, "quotient Hilbert polynomial of " + name, "hilbert-polynomial",
                   [&](VerifyItem& it) {
                       it.expected = "4*n";
                       it.computed = quotient_hilbert_polynomial(parse_monomials(gens[i])).to_string();
                   });
    }
}

// Hilbert function up to 8 and regularity against the reference table.
std::string contract_failure(const Ideal& I, const std::vector<long>& listed, int reg)
{
    auto table = hilbert_function_table(I, 8).values;
    for (int n = 0; n <= 8; ++n)
        if (table[static_cast<std::size_t>(n)] != reference_phi(listed, n))
            return "dim I_" + std::to_string(n) + " = " + std::to_string(table[static_cast<std::size_t>(n)]);
    int got = regularity(I);
    if (got != reg)
        return "regularity " + std::to_string(got);
    return {};
}

void strata_items(Runner& r)
{
    const auto& phi = r.expected().phi;
    auto suite = [&](const std::string& id, int criterion, Stratum s, int count, const std::string& anchor,
                     std::function<SampleOptions(int)> options = {}) {
        r.item(id, criterion,
               std::to_string(count) + " random " + stratum_name(s) + " shapes have the Hilbert function and regularity of B" +
                   std::to_string(stratum_regularity(s)),
               anchor, [&](VerifyItem& it) {
                   auto rng = r.rng(id);
                   const int reg = stratum_regularity(s);
                   it.expected = all_of(count);
                   it.computed = count_successes(count, [&](int i) {
                       SampleOptions o = options ? options(i) : SampleOptions{};
                       return contract_failure(shape_ideal(random_shape(s, rng, o)), phi.at(reg), reg);
                   });
               });
    };
    if (r.wants(4)) {
        suite("c04.ci", 4, Stratum::V, 100, "regularity-3-shapes");
        suite("c04.r3prime", 4, Stratum::R3Prime, 100, "regularity-3-shapes");
    }
    if (r.wants(5)) {
        suite("c05.r4", 5, Stratum::R4, 100, "regularity-4-shapes");
        r.item("c05.j4", 5, "dim J_4 = 18 for J = l(l1, l2, q) over 100 random R4 shapes", "regularity-4-shapes",
               [&](VerifyItem& it) {
                   auto rng = r.rng("c05.j4");
                   it.expected = all_of(100);
                   it.computed = count_successes(100, [&](int) -> std::string {
                       auto s = std::get<R4Shape>(random_shape(Stratum::R4, rng));
                       long d = hilbert_function(Ideal(kN, {s.ell * s.ell1, s.ell * s.ell2, s.ell * s.q}), 4);
                       return d == 18 ? "" : "dim J_4 = " + std::to_string(d);
                   });
               });
    }
    if (r.wants(6)) {
        suite("c06.r5", 6, Stratum::R5, 50, "regularity-5-6-shapes", [](int i) {
            SampleOptions o;
            o.r5_case = 1 + i % 2;
            return o;
        });
        suite("c06.r6", 6, Stratum::R6, 50, "regularity-5-6-shapes");
        r.item("c06.lL5", 6, "dim (l L)_5 = 34 over 25 random case-1 R5 shapes", "regularity-5-6-shapes",
               [&](VerifyItem& it) {
                   auto rng = r.rng("c06.lL5");
                   SampleOptions o;
                   o.r5_case = 1;
                   it.expected = all_of(25);
                   it.computed = count_successes(25, [&](int) -> std::string {
                       auto s = std::get<R5Shape>(random_shape(Stratum::R5, rng, o));
                       std::vector<Polynomial> gens;
                       for (const auto& l : s.L)
                           gens.push_back(s.ell * l);
                       long d = hilbert_function(Ideal(kN, gens), 5);
                       return d == 34 ? "" : "dim (lL)_5 = " + std::to_string(d);
                   });
               });
    }
}

void macaulay_items(Runner& r)
{
    r.item("c07.growth", 7, "minimal growth of a 3-dimensional space of linear forms in 4 variables",
           "gotzmann-bound", [&](VerifyItem& it) {
               it.expected = "9";
               it.computed = std::to_string(macaulay_min_growth(3, 1, 4));
           });
    r.item("c07.gotzmann", 7, "Gotzmann number of 4n equals the largest Borel regularity", "gotzmann-bound",
           [&](VerifyItem& it) {
               int top = 0;
               for (const auto& g : r.expected().borel_generators)
                   top = std::max(top, regularity(parse_monomials(g)));
               it.expected = "6 = 6";
               it.computed = std::to_string(gotzmann_number(HilbertPolynomial({0, 4}))) + " = " + std::to_string(top);
           });
}

void gin_items(Runner& r)
{
    for (Stratum s : {Stratum::V, Stratum::R3Prime, Stratum::R4, Stratum::R5, Stratum::R6}) {
        const int reg = stratum_regularity(s);
        std::string id = "c08.gin." + std::string(s == Stratum::R3Prime ? "R3p" : stratum_name(s));
        r.item(id, 8, "gin of 25 random " + stratum_name(s) + " samples is B" + std::to_string(reg), "gin-stratification",
               [&](VerifyItem& it) {
                   auto rng = r.rng(id);
                   const std::string& want = r.expected().borel_generators.at(static_cast<std::size_t>(reg - 3));
                   it.expected = all_of(25);
                   it.computed = count_successes(25, [&](int) -> std::string {
                       Ideal I = sample_stratum(s, rng);
                       std::string got = format_ideal(generic_initial_ideal(I, rng).gin);
                       return got == want ? "" : "gin " + got;
                   });
               });
    }
}

void dims_items(Runner& r)
{
    auto table = dimension_table();
    for (const auto& [name, value] : r.expected().dimensions) {
        std::string id = "c09.dim." + (name == "R3'" ? std::string("R3p") : name);
        r.item(id, 9, "parameter count of " + name, "dimension-count", [&](VerifyItem& it) {
            auto e = std::find_if(table.begin(), table.end(), [&](const DimensionEntry& d) { return d.name == name; });
            if (e == table.end())
                throw CheckFailure("no entry " + name);
            long sum = 0;
            std::string terms;
            for (long t : e->terms) {
                sum += t;
                terms += (terms.empty() ? "" : " + ") + std::to_string(t);
            }
            it.expected = std::to_string(value);
            it.computed = sum == e->value ? std::to_string(e->value) : "terms do not add up";
            it.note = terms + " (" + e->derivation + ")";
        });
    }
}

void tangent_items(Runner& r)
{
    const auto& gens = r.expected().borel_generators;
    r.item("c10.tangent.B6", 10, "tangent dimension at B6", "tangent-space", [&](VerifyItem& it) {
        it.expected = "23";
        it.computed = std::to_string(tangent_dimension(parse_monomials(gens.at(3))).dimension);
    });
    r.item("c10.tangent.ci", 10, "tangent dimension 16 at 10 random complete intersections", "tangent-space",
           [&](VerifyItem& it) {
               auto rng = r.rng("c10.tangent.ci");
               it.expected = all_of(10);
               it.computed = count_successes(10, [&](int) -> std::string {
                   long d = tangent_dimension(sample_stratum(Stratum::V, rng)).dimension;
                   return d == 16 ? "" : "dimension " + std::to_string(d);
               });
           });
    const std::vector<std::pair<int, long>> bounds{{3, 16}, {4, 23}, {5, 23}};
    for (const auto& [reg, bound] : bounds) {
        std::string name = "B" + std::to_string(reg);
        r.item("c10.tangent." + name, 10, "tangent dimension at " + name + " is at least " + std::to_string(bound),
               "tangent-space", [&](VerifyItem& it) {
                   long d = tangent_dimension(parse_monomials(gens.at(static_cast<std::size_t>(reg - 3)))).dimension;
                   it.expected = "at least " + std::to_string(bound);
                   it.computed = d >= bound ? it.expected : std::to_string(d);
                   it.note = "tangent dimension " + std::to_string(d);
               });
    }
}

void degeneration_items(Runner& r)
{
    if (r.wants(11))
        r.item("c11.va", 11,
               "25 random R3' ideals are flat limits of complete intersections (limit equal to the input, 3 fibers "
               "checked)",
               "ci-degeneration", [&](VerifyItem& it) {
                   auto rng = r.rng("c11.va");
                   it.expected = all_of(25);
                   it.computed = count_successes(25, [&](int) -> std::string {
                       Ideal I = sample_stratum(Stratum::R3Prime, rng);
                       VADegeneration d = va_degeneration(I, rng());
                       if (!equal(d.limit, I))
                           return "limit differs";
                       for (const auto& a : d.ci_parameters) {
                           Ideal f = specialize(d.family, a);
                           if (f.generators().size() != 2 ||
                               gcd_forms(f.generators()[0], f.generators()[1]).degree() != 0)
                               return "fiber at " + a.get_str() + " is not a complete intersection";
                       }
                       return d.ci_parameters.size() == 3 ? "" : "too few fibers";
                   });
               });
    if (!r.wants(12))
        return;
    // 0, 1: case 1; 2: case 2 with a != 0; 3: case 2 with a = 0; 4: case 2 in random coordinates
    auto options = [](int i) {
        SampleOptions o;
        switch (i % 5) {
        case 0:
        case 1:
            o.r5_case = 1;
            break;
        case 2:
        case 3:
            o.r5_case = 2;
            o.r5_normalized = true;
            o.r5_alpha_zero = i % 5 == 3;
            break;
        default:
            o.r5_case = 2;
        }
        return o;
    };
    std::vector<std::optional<DegenerationChain>> chains(25);
    r.item("c12.rs.terminal", 12, "25 random R5 ideals degenerate to R6 ideals containing a linear form",
           "r5-degeneration", [&](VerifyItem& it) {
               auto rng = r.rng("c12.rs");
               it.expected = all_of(25);
               it.computed = count_successes(25, [&](int i) -> std::string {
                   Ideal I = sample_stratum(Stratum::R5, rng, options(i));
                   chains[static_cast<std::size_t>(i)] = rs_degeneration(I);
                   const auto& c = *chains[static_cast<std::size_t>(i)];
                   if (classify(c.terminal).stratum != Stratum::R6)
                       return "terminal not in R6";
                   if (degree_piece(c.terminal, 1).empty())
                       return "no linear form";
                   return "";
               });
               std::array<int, 3> kinds{};
               for (const auto& c : chains)
                   if (c)
                       ++kinds[c->case_no == 1 ? 0 : c->alpha_zero ? 2 : 1];
               it.note = "case 1: " + std::to_string(kinds[0]) + ", case 2 a != 0: " + std::to_string(kinds[1]) +
                         ", case 2 a = 0: " + std::to_string(kinds[2]);
           });
    r.item("c12.rs.xblock", 12, "limits of x -> lambda*x at infinity contain x(x, y, z, t^4) before saturation",
           "r5-degeneration", [&](VerifyItem& it) {
               const Polynomial x = Polynomial::variable(0, kN);
               std::vector<Polynomial> block{x * x, x * Polynomial::variable(1, kN), x * Polynomial::variable(2, kN),
                                             x * Polynomial::variable(3, kN).pow(4)};
               int steps = 0, ok = 0;
               for (const auto& c : chains) {
                   if (!c || c->case_no != 2)
                       continue;
                   const auto& last = c->steps.back();
                   ++steps;
                   if (std::all_of(block.begin(), block.end(), [&](const Polynomial& b) {
                           return last.result.special.contains(b);
                       }))
                       ++ok;
               }
               if (steps == 0)
                   throw CheckFailure("no case-2 chains");
               it.expected = all_of(steps);
               it.computed = std::to_string(ok) + " of " + std::to_string(steps);
           });
}

// ---- property suites ------------------------------------------------------------------

Ideal random_ideal(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count(2, 3), deg(1, 3);
    std::vector<Polynomial> gens;
    int k = count(rng);
    for (int i = 0; i < k; ++i)
        gens.push_back(random_form(kN, deg(rng), 3, rng));
    return Ideal(kN, gens);
}

// dim I_n from the span of monomial multiples of the generators
long span_dimension(const Ideal& I, int n)
{
    std::vector<Vector> rows;
    auto basis = monomials_of_degree(kN, n);
    for (const auto& g : I.generators()) {
        int d = n - g.degree();
        if (d < 0)
            continue;
        for (const auto& m : monomials_of_degree(kN, d))
            rows.push_back(g.mul_term(m, 1).coordinates(basis));
    }
    return static_cast<long>(rank_of(rows));
}

void property_items(Runner& r)
{
    r.item("c13.macaulay", 13, "dim I_n from in(I) equals the rank of the spanning set, 50 random ideals, n <= 5",
           "engine-properties", [&](VerifyItem& it) {
               auto rng = r.rng("c13.macaulay");
               it.expected = all_of(50);
               it.computed = count_successes(50, [&](int) -> std::string {
                   Ideal I = random_ideal(rng);
                   for (int n = 0; n <= 5; ++n)
                       if (hilbert_function(I, n) != span_dimension(I, n))
                           return "mismatch at n = " + std::to_string(n);
                   return "";
               });
           });
    r.item("c13.groebner", 13, "reduced bases agree after shuffling, scaling and mixing generators, 50 ideals",
           "engine-properties", [&](VerifyItem& it) {
               auto rng = r.rng("c13.groebner");
               it.expected = all_of(50);
               it.computed = count_successes(50, [&](int) -> std::string {
                   Ideal I = random_ideal(rng);
                   auto gens = I.generators();
                   std::shuffle(gens.begin(), gens.end(), rng);
                   std::uniform_int_distribution<int> c(1, 7);
                   for (auto& g : gens)
                       g = g * make_scalar(c(rng), c(rng));
                   for (std::size_t i = 1; i < gens.size(); ++i)
                       if (gens[i].degree() >= gens[0].degree())
                           gens[i] += gens[0] * random_form(kN, gens[i].degree() - gens[0].degree(), 2, rng);
                   for (auto ord : {MonomialOrder::degrevlex(), MonomialOrder::lex()})
                       if (reduced_groebner_basis(I.generators(), ord) != reduced_groebner_basis(gens, ord))
                           return "bases differ under " + ord.key();
                   return "";
               });
           });
    r.item("c13.saturation", 13, "saturation recovers I from I*(x,y,z,t) and is idempotent, 50 samples",
           "engine-properties", [&](VerifyItem& it) {
               auto rng = r.rng("c13.saturation");
               const Ideal m(kN, {Polynomial::variable(0), Polynomial::variable(1), Polynomial::variable(2),
                                  Polynomial::variable(3)});
               const std::vector<Stratum> kinds{Stratum::V, Stratum::R3Prime, Stratum::R4};
               it.expected = all_of(50);
               it.computed = count_successes(50, [&](int i) -> std::string {
                   Ideal I = sample_stratum(kinds[static_cast<std::size_t>(i) % kinds.size()], rng);
                   Ideal S = saturate_irrelevant(product(I, m));
                   if (!equal(S, I))
                       return "saturation differs from I";
                   return equal(saturate_irrelevant(S), S) ? "" : "not idempotent";
               });
           });
    r.item("c13.semicontinuity", 13, "dim of the limit's graded pieces dominates a generic fiber, 50 families, n <= 8",
           "engine-properties", [&](VerifyItem& it) {
               auto rng = r.rng("c13.semicontinuity");
               it.expected = all_of(50);
               it.computed = count_successes(50, [&](int i) -> std::string {
                   ParamFamily F;
                   LimitPoint at = LimitPoint::Zero;
                   if (i % 2 == 0) {
                       F = va_degeneration(sample_stratum(Stratum::R3Prime, rng), rng()).family;
                   } else {
                       std::uniform_int_distribution<int> w(0, 2);
                       std::vector<int> ws;
                       do {
                           ws = {w(rng), w(rng), w(rng), w(rng)};
                       } while (std::all_of(ws.begin(), ws.end(), [&](int v) { return v == ws[0]; }));
                       F = weight_family(sample_stratum(Stratum::V, rng), ws);
                       at = i % 4 == 1 ? LimitPoint::Zero : LimitPoint::Infinity;
                   }
                   Ideal limit = family_limit(F, at);
                   std::uniform_int_distribution<int> a(2, 500);
                   Ideal fiber = specialize(F, Scalar(a(rng)));
                   for (int n = 0; n <= 8; ++n)
                       if (hilbert_function(limit, n) < hilbert_function(fiber, n))
                           return "smaller at n = " + std::to_string(n);
                   return "";
               });
           });
    r.item("c13.gin", 13, "two independent gin computations agree, 50 samples", "engine-properties",
           [&](VerifyItem& it) {
               auto rng = r.rng("c13.gin");
               const std::vector<Stratum> kinds{Stratum::V, Stratum::R3Prime, Stratum::R4, Stratum::R5, Stratum::R6};
               it.expected = all_of(50);
               it.computed = count_successes(50, [&](int i) -> std::string {
                   Ideal I = sample_stratum(kinds[static_cast<std::size_t>(i) % kinds.size()], rng);
                   std::mt19937_64 r1(rng()), r2(rng());
                   Ideal g1 = generic_initial_ideal(fresh(I), r1).gin;
                   Ideal g2 = generic_initial_ideal(fresh(I), r2).gin;
                   return equal(g1, g2) ? "" : "gins differ";
               });
           });
}

}  // namespace

const std::vector<std::string>& verify_groups()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [g, cs] : group_criteria())
            out.push_back(g);
        return out;
    }();
    return names;
}

std::size_t VerificationReport::passed() const
{
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const VerifyItem& i) { return i.pass(); }));
}

std::size_t VerificationReport::failed() const
{
    return items.size() - passed();
}

std::string VerificationReport::to_json(bool timings) const
{
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& it : items) {
        nlohmann::ordered_json e;
        e["id"] = it.id;
        e["criterion"] = it.criterion;
        e["group"] = it.group;
        e["description"] = it.description;
        e["anchor"] = it.anchor;
        e["expected"] = it.expected;
        e["computed"] = it.computed;
        e["status"] = it.pass() ? "pass" : "fail";
        if (!it.note.empty())
            e["note"] = it.note;
        j["items"].push_back(std::move(e));
    }
    j["summary"] = {{"passed", passed()}, {"failed", failed()}, {"total", items.size()}};
    if (timings) {
        nlohmann::ordered_json t;
        for (const auto& it : items)
            t[it.id] = it.seconds;
        j["timings"] = {{"items", t}, {"total", total_seconds}};
    }
    return j.dump(2);
}

std::string VerificationReport::to_text() const
{
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.pass() ? "PASS " : "FAIL ") << it.id << "  [" << it.anchor << "]  expected: " << it.expected
           << "  computed: " << it.computed;
        if (!it.note.empty())
            os << "  (" << it.note << ")";
        os << "\n";
    }
    os << passed() << " passed, " << failed() << " failed, " << total_seconds << " s\n";
    return os.str();
}

VerificationReport verify_paper(const VerifyConfig& config)
{
    auto t0 = std::chrono::steady_clock::now();
    Runner r(config);
    if (r.wants(1))
        borel_items(r);
    if (r.wants(2) || r.wants(3))
        hilbert_items(r);
    strata_items(r);
    if (r.wants(7))
        macaulay_items(r);
    if (r.wants(8))
        gin_items(r);
    if (r.wants(9))
        dims_items(r);
    if (r.wants(10))
        tangent_items(r);
    degeneration_items(r);
    if (r.wants(13))
        property_items(r);
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

}  // namespace hilbkit
