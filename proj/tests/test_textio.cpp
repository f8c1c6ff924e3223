#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hforms/forms.hpp"
#include "hforms/gf.hpp"
#include "hforms/textio.hpp"

using namespace hforms;

TEST_CASE("diagonal parsing and printing round-trip") {
    auto F7 = make_field(7, 1);

    DiagonalForm phi = parse_diagonal(F7, 4, "1,2,3");
    CHECK(phi.d == 4);
    CHECK(phi.coeffs == std::vector<Elem>{1, 2, 3});
    CHECK(diagonal_str(phi) == "1,2,3");

    // signed codes reduce into prime fields
    DiagonalForm neg = parse_diagonal(F7, 2, "-1,13");
    CHECK(neg.coeffs == std::vector<Elem>{6, 6});

    // spaces around separators are tolerated
    CHECK(parse_diagonal(F7, 3, " 1 , 2 ").coeffs == std::vector<Elem>{1, 2});

    CHECK(parse_diagonal(F7, 2, diagonal_str(neg)).coeffs == neg.coeffs);
}

TEST_CASE("diagonal parse errors") {
    auto F7 = make_field(7, 1);
    auto F4 = make_field(2, 2);

    CHECK_THROWS_AS(parse_diagonal(F7, 2, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagonal(F7, 2, "1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagonal(F7, 2, "1,x"), std::invalid_argument);
    // zero coefficients are rejected by form validation
    CHECK_THROWS_AS(parse_diagonal(F7, 2, "1,7"), std::invalid_argument);
    // extension fields take raw codes only, and range-check them
    CHECK_THROWS_AS(parse_diagonal(F4, 2, "4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagonal(F4, 2, "-1"), std::invalid_argument);
    CHECK(parse_diagonal(F4, 2, "3,1").coeffs == std::vector<Elem>{3, 1});
}

TEST_CASE("valued coefficient lists") {
    ValuedDiagonalForm phi = parse_valued(4, "1@0,1@1");
    CHECK(phi.d == 4);
    REQUIRE(phi.dim() == 2);
    CHECK(phi.coeffs[0].unit == 1);
    CHECK(phi.coeffs[0].vals == std::vector<std::int64_t>{0});
    CHECK(phi.coeffs[1].vals == std::vector<std::int64_t>{1});
    CHECK(valued_str(phi) == "1@0,1@1");

    ValuedDiagonalForm tower = parse_valued(3, "2@(1,0),1@(0,-2)");
    REQUIRE(tower.dim() == 2);
    CHECK(tower.coeffs[0].vals == std::vector<std::int64_t>{1, 0});
    CHECK(tower.coeffs[1].vals == std::vector<std::int64_t>{0, -2});
    CHECK(valued_str(tower) == "2@(1,0),1@(0,-2)");
    CHECK(parse_valued(3, valued_str(tower)).coeffs[1].vals ==
          tower.coeffs[1].vals);

    // negative single valuations
    CHECK(parse_valued(2, "3@-5").coeffs[0].vals ==
          std::vector<std::int64_t>{-5});
}

TEST_CASE("valued parse errors") {
    CHECK_THROWS_AS(parse_valued(2, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_valued(2, "1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_valued(2, "1@"), std::invalid_argument);
    CHECK_THROWS_AS(parse_valued(2, "@1"), std::invalid_argument);
    // mixed layer counts
    CHECK_THROWS_AS(parse_valued(2, "1@0,1@(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_valued(2, "1@(1,2"), std::invalid_argument);
}

TEST_CASE("polynomial parsing matches constructed forms") {
    auto F7 = make_field(7, 1);
    auto F5 = make_field(5, 1);

    PolyForm cubic = parse_poly(F7, 3, "x1^3 + 2*x2^3");
    CHECK(cubic == poly_from_diagonal(F7, DiagonalForm{3, {1, 2}}));
    CHECK(cubic.n == 2);

    // minus signs negate the following coefficient
    PolyForm mixed = parse_poly(F5, 3, "x1^2*x2 - x3^3");
    CHECK(mixed.n == 3);
    CHECK(mixed.terms.at({2, 1, 0}) == 1);
    CHECK(mixed.terms.at({0, 0, 3}) == 4);

    // leading minus on the first term, bare coefficient factors
    PolyForm neg = parse_poly(F5, 2, "-x1^2 + 2*3*x2^2");
    CHECK(neg.terms.at({2, 0}) == 4);
    CHECK(neg.terms.at({0, 2}) == 1);

    // like terms accumulate, cancellations drop out
    PolyForm sum = parse_poly(F5, 2, "x1^2 + 4*x1^2 + x1*x2");
    CHECK(sum.terms.count({2, 0}) == 0);
    CHECK(sum.terms.at({1, 1}) == 1);

    // repeated variables multiply out
    PolyForm split = parse_poly(F5, 3, "x1*x2*x1");
    CHECK(split.terms.at({2, 1}) == 1);

    // the variable count tracks the largest index even in dropped terms
    CHECK(parse_poly(F5, 2, "x3^2").n == 3);
}

TEST_CASE("polynomial parse errors") {
    auto F5 = make_field(5, 1);

    CHECK_THROWS_AS(parse_poly(F5, 2, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F5, 2, "+x1^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F5, 2, "x1^2 + - x2^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F5, 2, "x1^2 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F5, 2, "x0^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F5, 2, "x1^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F5, 2, "y1^2"), std::invalid_argument);
    // inhomogeneous degrees are rejected by form validation
    CHECK_THROWS_AS(parse_poly(F5, 3, "x1^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(F5, 2, "x1^2 + x2^3"), std::invalid_argument);
}

TEST_CASE("polynomial printing is canonical and round-trips") {
    auto F7 = make_field(7, 1);

    PolyForm cubic = poly_from_diagonal(F7, DiagonalForm{3, {1, 2}});
    CHECK(poly_str(cubic) == "x1^3 + 2*x2^3");

    PolyForm mixed = make_poly_form(3, 2, {{{2, 1}, 3}, {{1, 2}, 1}});
    CHECK(poly_str(mixed) == "3*x1^2*x2 + x1*x2^2");
    CHECK(parse_poly(F7, 3, poly_str(mixed)) == mixed);

    CHECK(poly_str(make_poly_form(2, 2, {})) == "0");

    // random forms round-trip through their printed spelling
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t d = 1 + rng() % 4, n = 1 + rng() % 3;
        std::map<std::vector<std::uint32_t>, Elem> terms;
        for (int t = 0; t < 4; ++t) {
            std::vector<std::uint32_t> e(n, 0);
            for (std::uint32_t i = 0; i < d; ++i) ++e[rng() % n];
            terms[e] = 1 + rng() % 6;
        }
        // the grammar infers the variable count from the largest index, so
        // keep the last variable in play
        std::vector<std::uint32_t> last(n, 0);
        last[n - 1] = d;
        terms[last] = 1;
        PolyForm phi = make_poly_form(d, n, std::move(terms));
        CHECK(parse_poly(F7, d, poly_str(phi)) == phi);
    }
}
