#include "doctest.h"

#include "powsem/errors.hpp"
#include "powsem/parse.hpp"
#include "testutil.hpp"

#include <random>

using namespace powsem;

TEST_SUITE_BEGIN("parse");

TEST_CASE("polynomial literals") {
    Series s = parse_series("z^2 + z^3");
    CHECK(s.exact());
    CHECK(*s.order() == Int(2));
    CHECK(s.coeff(Int(3)) == Cyclo(1l));

    Series m = parse_series("zeta(5)*z^3");
    CHECK(m.terms().size() == 1);
    CHECK(m.coeff(Int(3)) == Cyclo::zeta(5));

    Series q = parse_series("(1/2)*z^2 - z^4");
    CHECK(q.coeff(Int(2)) == Cyclo(Rat(1, 2)));
    CHECK(q.coeff(Int(4)) == Cyclo(-1l));
}

TEST_CASE("truncated literals") {
    Series s = parse_series("z^2 - (1/2)*z^4 + O(z^6)");
    CHECK(!s.exact());
    CHECK(s.precision() == Int(6));
    CHECK(s.coeff(Int(4)) == Cyclo(Rat(-1, 2)));
    CHECK(s.coeff(Int(6)) == Cyclo(0l));
    CHECK_THROWS_AS(s.coeff(Int(7)), error);

    Series z = parse_series("O(z^4)");
    CHECK(!z.exact());
    CHECK(z.terms().empty());
}

TEST_CASE("coefficient expressions") {
    CHECK(parse_series("(1/2)*zeta(3)^2*z^3").coeff(Int(3)) ==
          Cyclo(Rat(1, 2)) * Cyclo::zeta_pow(3, 2));
    CHECK(parse_series("2*z^2/4").coeff(Int(2)) == Cyclo(Rat(1, 2)));
    CHECK(parse_series("-z^2").coeff(Int(2)) == Cyclo(-1l));
    CHECK(parse_series("(1 + zeta(3))*z^2").coeff(Int(2)) == Cyclo(1l) + Cyclo::zeta(3));
    CHECK(parse_cyclo("zeta(12)^7 / zeta(12)") == Cyclo::zeta_pow(12, 6));
}

TEST_CASE("errors carry positions and reasons") {
    CHECK_THROWS_AS(parse_series("z^2 +"), parse_error);
    CHECK_THROWS_AS(parse_series("w^2"), parse_error);
    CHECK_THROWS_AS(parse_series("z^-2"), parse_error);
    CHECK_THROWS_AS(parse_series("z^2 / z"), parse_error);
    CHECK_THROWS_AS(parse_series("1/0"), parse_error);
    CHECK_THROWS_AS(parse_series("O(z^4) + z^2"), parse_error);
    CHECK_THROWS_AS(parse_series("z^9 + O(z^4)"), parse_error);
    CHECK_THROWS_AS(parse_series("zeta(0)"), parse_error);
    CHECK_THROWS_AS(parse_series("z^2 + O(z^3) + O(z^5)"), parse_error);
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(parse_generator("1 + z^2"), parse_error); // nonzero constant term
    CHECK_THROWS_AS(parse_generator("z"), parse_error);       // order 1
    CHECK_THROWS_AS(parse_generator("0"), parse_error);
    CHECK_THROWS_AS(parse_generator("O(z^8)"), parse_error);  // no visible coefficient
    CHECK(*parse_generator("z^2 + z^5").order() == Int(2));
}

TEST_CASE("monomial and cyclo literals") {
    Monomial m = parse_monomial("-z^2");
    CHECK(m.coeff == Cyclo(-1l));
    CHECK(m.degree == Int(2));
    CHECK_THROWS_AS(parse_monomial("z^2 + z^3"), parse_error);
    CHECK_THROWS_AS(parse_monomial("z"), parse_error);
    CHECK(parse_cyclo("5/6") == Cyclo(Rat(5, 6)));
    CHECK_THROWS_AS(parse_cyclo("z^2"), parse_error);
}

TEST_CASE("round trip: parse(render(s)) == s") {
    std::mt19937 rng(808);
    for (int i = 0; i < 80; ++i) {
        Series s = powsem::testing::random_poly(rng, 1, 6);
        if (i % 3 == 0) s = s.truncated(Int(5 + static_cast<long>(rng() % 6)));
        Series back = parse_series(s.str());
        Equality eq = equals(back, s);
        if (s.exact()) {
            CHECK(eq.is_exact());
        } else {
            CHECK(eq.holds());
            CHECK(back.precision() == s.precision());
            CHECK(!back.exact());
        }
    }
}

TEST_CASE("round trip covers cyclotomic sums") {
    Series s = Series::polynomial(
        {{Int(2), Cyclo(Rat(1, 2)) + Cyclo::zeta(12) * Cyclo(Rat(-3, 2))},
         {Int(5), Cyclo::zeta_pow(7, 3)}});
    CHECK(equals(parse_series(s.str()), s).is_exact());
}

TEST_CASE("literal_lines strips comments and blanks") {
    auto lines = literal_lines("z^2 # leading generator\n\n# full comment line\n -z^2 \n");
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "z^2");
    CHECK(lines[1] == "-z^2");
}

TEST_SUITE_END();
