#include "support.hpp"

#include "hilbkit/borel.hpp"
#include "hilbkit/gin.hpp"
#include "hilbkit/groebner.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/linalg.hpp"

#include <doctest.h>

using namespace hilbkit;

TEST_SUITE("algebra") {

TEST_CASE("rationals stay canonical through arithmetic")
{
    Polynomial p = poly("3*x - 6*y") * make_scalar(2, 6);
    CHECK(p == poly("x - 2*y"));
    CHECK(p.to_string() == "x - 2*y");
    CHECK((p - p).is_zero());
}

TEST_CASE("reduced basis of the twisted cubic")
{
    Ideal I = ideal_of("x*z - y^2; y*t - z^2; x*t - y*z");
    auto gb = I.groebner_basis();
    CHECK(gb.size() == 3);
    CHECK(satisfies_buchberger_criterion(gb, MonomialOrder::degrevlex()));
    auto lex = I.groebner_basis(MonomialOrder::lex());
    CHECK(satisfies_buchberger_criterion(lex, MonomialOrder::lex()));
    // independent of generator order and scaling
    auto again = reduced_groebner_basis({poly("2*x*t - 2*y*z"), poly("z^2 - y*t"), poly("y^2 - x*z")},
                                        MonomialOrder::lex());
    CHECK(again == lex);
}

TEST_CASE("membership and normal forms")
{
    Ideal I = ideal_of("x^2; y^2");
    CHECK(I.contains(poly("x^2*z + 3*y^3")));
    CHECK_FALSE(I.contains(poly("x*y")));
    CHECK(normal_form(poly("x^2 + x*y"), I) == poly("x*y"));
}

TEST_CASE("Hilbert function of the twisted cubic is 3n+1 on the quotient")
{
    Ideal I = ideal_of("x*z - y^2; y*t - z^2; x*t - y*z");
    for (int n = 0; n <= 8; ++n)
        CHECK(ring_dimension(4, n) - hilbert_function(I, n) == 3 * n + 1);
    CHECK(quotient_hilbert_polynomial(I).to_string() == "3*n + 1");
    CHECK(regularity(I) == 2);
}

TEST_CASE("complete intersection of two quadrics")
{
    Ideal I = ideal_of("x*y - z*t; x^2 + y^2 - z^2 - t^2");
    CHECK(quotient_hilbert_polynomial(I).to_string() == "4*n");
    CHECK(quotient_hilbert_polynomial_from_series(I) == quotient_hilbert_polynomial(I));
    CHECK(regularity(I) == 3);
    CHECK(is_saturated(I));
}

TEST_CASE("saturation removes an embedded point")
{
    Ideal line = ideal_of("x; y");
    Ideal dirty = product(line, ideal_of("x; y; z; t"));
    CHECK_FALSE(is_saturated(dirty));
    CHECK(equal(saturate_irrelevant(dirty), line));
    CHECK(equal(saturate(ideal_of("x*z; y*z"), poly("z")), line));
}

TEST_CASE("intersections and quotients")
{
    Ideal a = ideal_of("x; y");
    Ideal b = ideal_of("z; t");
    Ideal both = intersect(a, b);
    CHECK(equal(both, ideal_of("x*z; x*t; y*z; y*t")));
    CHECK(equal(quotient(both, poly("z")), a));
}

TEST_CASE("Gotzmann numbers and Macaulay growth")
{
    CHECK(gotzmann_number(HilbertPolynomial({1, 3})) == 4);  // 3n + 1
    CHECK(gotzmann_number(HilbertPolynomial::constant(5)) == 5);
    CHECK(macaulay_upper_bound(3, 1) == 6);
    CHECK(macaulay_upper_bound(4, 2) == 5);
}

TEST_CASE("Borel ideals for small polynomials")
{
    CHECK(enumerate_borel_ideals(HilbertPolynomial::constant(1)).size() == 1);
    CHECK(enumerate_borel_ideals(HilbertPolynomial({1, 1})).size() == 1);
    // triple line, plane cubic plus a point, and the lex ideal (x, y^4, y^3 z)
    auto cubics = enumerate_borel_ideals(HilbertPolynomial({1, 3}));
    REQUIRE(cubics.size() == 3);
    CHECK(equal(lex_ideal(HilbertPolynomial({1, 3})), ideal_of("x; y^4; y^3*z")));
    for (const auto& I : enumerate_borel_ideals(HilbertPolynomial({0, 4}))) {
        CHECK(is_strongly_stable(I));
        CHECK(is_saturated(I));
    }
    CHECK(is_strongly_stable(lex_ideal(HilbertPolynomial({0, 4}))));
}

TEST_CASE("linear algebra over Q")
{
    Matrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    CHECK(rank(m) == 1);
    CHECK(determinant(m) == 0);
    CHECK(kernel_basis(m).size() == 1);
}

}
