#include "support.hpp"

#include "hilbkit/degeneration.hpp"
#include "hilbkit/hilbert.hpp"

#include <doctest.h>

using namespace hilbkit;

TEST_SUITE("parser") {

TEST_CASE("generators separated by semicolons, newlines and comments")
{
    IdealDocument d = parse_ideal("# a complete intersection\nx*z - y^2\n\nx*t - y*z ; ");
    CHECK(d.generators.size() == 2);
    CHECK_FALSE(d.has_parameter());
    CHECK(d.generators[0] == poly("-y^2 + x*z"));
}

TEST_CASE("rational coefficients and powers")
{
    Polynomial p = poly("1/2*x^2 - 3/4*y*z + 2*t*t");
    CHECK(p.to_string() == "1/2*x^2 - 3/4*y*z + 2*t^2");
    CHECK(poly("-x") == poly("0 - x"));
}

TEST_CASE("printing round-trips")
{
    Ideal I = ideal_of("x^2 - 2/3*y*z; x*y + t^2; y^3 - x*z*t");
    std::string text = format_generators(I.generators());
    CHECK(equal(ideal_of(text), I));
    CHECK(format_generators(ideal_of(text).generators()) == text);
}

TEST_CASE("errors carry a position")
{
    try {
        parse_ideal("x^2;\nx*y + w");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 7);
        CHECK(std::string(e.what()).find("line 2, column 7") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_ideal("x^2 +"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^ 2y"), ParseError);
    CHECK_THROWS_AS(parse_ideal("3/0*x"), ParseError);
}

TEST_CASE("homogeneity is enforced unless asked otherwise")
{
    CHECK_THROWS_AS(parse_ideal("x^2 + y"), InvalidInput);
    ParseOptions o;
    o.allow_inhomogeneous = true;
    CHECK(parse_ideal("x^2 + y", o).generators.size() == 1);
}

TEST_CASE("the parameter a needs permission")
{
    CHECK_THROWS_AS(parse_ideal("x - a*y"), InvalidInput);
    ParseOptions o;
    o.allow_parameter = true;
    IdealDocument d = parse_ideal("x - a^2*y; z", o);
    CHECK(d.has_parameter());
    CHECK_THROWS_AS(to_ideal(d), InvalidInput);
    CHECK(to_family(d).generators().size() == 2);
    // a has degree zero
    CHECK_THROWS_AS(parse_ideal("x - a", o), InvalidInput);
}

TEST_CASE("Hilbert polynomials in n")
{
    CHECK(parse_hilbert_polynomial("4*n") == HilbertPolynomial({0, 4}));
    CHECK(parse_hilbert_polynomial("3*n + 1") == HilbertPolynomial({1, 3}));
    CHECK(parse_hilbert_polynomial("1/2*n^2 + 3/2*n + 1") == HilbertPolynomial::binomial(2, 2));
    CHECK_THROWS_AS(parse_hilbert_polynomial("4*m"), ParseError);
}

}
