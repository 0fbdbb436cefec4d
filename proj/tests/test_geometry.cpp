#include "support.hpp"

#include "hilbkit/degeneration.hpp"
#include "hilbkit/gin.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/linear_change.hpp"
#include "hilbkit/strata.hpp"
#include "hilbkit/syzygy.hpp"
#include "hilbkit/tangent.hpp"

#include <doctest.h>

using namespace hilbkit;

TEST_SUITE("geometry") {

TEST_CASE("gin of a complete intersection of two quadrics")
{
    std::mt19937_64 rng(7);
    GinResult g = generic_initial_ideal(ideal_of("x*y - z*t; x^2 + y^2 - z^2 - t^2"), rng);
    CHECK(equal(g.gin, ideal_of("x^2; x*y; y^3")));
    CHECK(g.trials >= 1);
}

TEST_CASE("gin is Borel-fixed for random samples of every stratum")
{
    std::mt19937_64 rng(11);
    for (Stratum s : {Stratum::V, Stratum::R3Prime, Stratum::R4, Stratum::R5, Stratum::R6}) {
        Ideal I = sample_stratum(s, rng);
        CHECK(regularity(I) == stratum_regularity(s));
        CHECK(quotient_hilbert_polynomial(I).to_string() == "4*n");
        CHECK(classify(I).stratum == s);
    }
}

TEST_CASE("classification of hand-written ideals")
{
    StratumReport ci = classify(ideal_of("x*z - y^2; x*t - y*z"));
    CHECK(ci.stratum == Stratum::V);
    CHECK(ci.ci);
    // plane quartic plus... a line times a cubic: x*(x, y) with a cubic
    StratumReport r3 = classify(ideal_of("x^2; x*y; y^3 + x*z^2"));
    CHECK(r3.regularity == 3);
    CHECK(r3.stratum == Stratum::R3Prime);
    CHECK_THROWS_AS(classify(ideal_of("x; y")), InvalidInput);
}

TEST_CASE("tangent space of the twisted cubic has dimension 12")
{
    TangentReport r = tangent_dimension(ideal_of("x*z - y^2; y*t - z^2; x*t - y*z"));
    CHECK(r.dimension == 12);
    CHECK(r.warning);  // not a curve of degree 4
}

TEST_CASE("tangent space at a smooth complete intersection")
{
    CHECK(tangent_dimension(ideal_of("x*y - z*t; x^2 + y^2 - z^2 - t^2")).dimension == 16);
}

TEST_CASE("truncation above the regularity does not change the answer")
{
    Ideal I = ideal_of("x^2; x*y; x*z^2; y^4");
    long d4 = tangent_dimension(I).dimension;
    TangentOptions o;
    o.truncation = 6;
    CHECK(tangent_dimension(I, o).dimension == d4);
}

TEST_CASE("tangent dimension is invariant under coordinate changes and generator order")
{
    std::mt19937_64 rng(21);
    Ideal I = sample_stratum(Stratum::R3Prime, rng);
    long d = tangent_dimension(I).dimension;
    for (int i = 0; i < 3; ++i)
        CHECK(tangent_dimension(transform(I, LinearChange::random(4, 3, rng))).dimension == d);
    auto gens = I.generators();
    std::reverse(gens.begin(), gens.end());
    CHECK(tangent_dimension(Ideal(4, gens)).dimension == d);
}

// Taylor syzygies minus the pairs (i, j) with some m_c dividing lcm(m_i, m_j)
// while lcm(m_i, m_c) and lcm(m_j, m_c) are proper divisors of it; induction on
// the lcm shows the rest still generate.
SyzygyGenerators pruned_taylor(const std::vector<Polynomial>& gens)
{
    auto all = taylor_syzygies(gens).vectors;
    const std::size_t r = gens.size();
    std::vector<Monomial> m;
    for (const auto& g : gens)
        m.push_back(g.terms().front().mono);
    SyzygyGenerators out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j, ++k) {
            Monomial l = m[i].lcm(m[j]);
            bool redundant = false;
            for (std::size_t c = 0; c < r && !redundant; ++c)
                redundant = c != i && c != j && m[c].divides(l) && !(m[i].lcm(m[c]) == l) && !(m[j].lcm(m[c]) == l);
            if (!redundant)
                out.vectors.push_back(all[k]);
        }
    return out;
}

TEST_CASE("Hom(I, P/I) does not depend on the syzygy set")
{
    for (const char* text : {"x^2; x*y; y^3", "x^2; x*y; x*z^2; y^4", "x^2; x*y; x*z; y^5; y^4*z"}) {
        Ideal I = ideal_of(text);
        auto gens = minimal_generators(I);
        SyzygyGenerators full = taylor_syzygies(gens);
        SyzygyGenerators fewer = pruned_taylor(gens);
        CHECK(fewer.vectors.size() < full.vectors.size());
        CHECK(hom_dimension(I, gens, full).dimension == hom_dimension(I, gens, fewer).dimension);
    }
}

TEST_CASE("limit of two points colliding")
{
    // [1:0:0:0] and [1:a:0:0]
    ParseOptions p;
    p.allow_parameter = true;
    ParamFamily F = to_family(parse_ideal("z; t; y^2 - a*x*y", p));
    Ideal L = family_limit(F, LimitPoint::Zero);
    CHECK(equal(L, ideal_of("z; t; y^2")));
}

TEST_CASE("weight limits pick out initial ideals")
{
    Ideal line = ideal_of("x - y; z - t");
    CHECK(equal(weight_limit(line, {1, 0, 0, 0}, LimitPoint::Zero), ideal_of("y; z - t")));
    CHECK(equal(weight_limit(line, {1, 0, 0, 0}, LimitPoint::Infinity), ideal_of("x; z - t")));
    CHECK_THROWS_AS(weight_family(line, {2, 2, 2, 2}), InvalidInput);
}

TEST_CASE("a limit at infinity replaces a by its reciprocal")
{
    ParseOptions p;
    p.allow_parameter = true;
    ParamFamily F = to_family(parse_ideal("x - a*y; z", p));
    CHECK(equal(family_limit(F, LimitPoint::Infinity), ideal_of("y; z")));
    CHECK(equal(family_limit(F, LimitPoint::Zero), ideal_of("x; z")));
}

TEST_CASE("complete intersections degenerate onto regularity-3 ideals of R3'")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 4; ++i) {
        Ideal I = sample_stratum(Stratum::R3Prime, rng);
        VADegeneration d = va_degeneration(I);
        CHECK(equal(d.limit, I));
        CHECK(d.ci_parameters.size() == 3);
        for (const auto& c : d.ci_parameters)
            CHECK(classify(specialize(d.family, c)).ci);
    }
}

TEST_CASE("R5 ideals reach R6 through a chain of limits")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 3; ++i) {
        Ideal I = sample_stratum(Stratum::R5, rng);
        DegenerationChain c = rs_degeneration(I);
        CHECK(classify(c.terminal).stratum == Stratum::R6);
        REQUIRE_FALSE(c.steps.empty());
        CHECK(equal(c.steps.back().result.limit, c.terminal));
    }
}

TEST_CASE("the dimension table adds up")
{
    for (const auto& e : dimension_table()) {
        long sum = 0;
        for (long t : e.terms)
            sum += t;
        CHECK_MESSAGE(sum == e.value, e.name);
    }
}

}
