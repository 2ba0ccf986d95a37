#include <catch_amalgamated.hpp>

#include <pseudowalk/io.hpp>
#include <pseudowalk/verify.hpp>

using namespace pw;

TEST_CASE("measures serialize exactly", "[io]")
{
    SignedMeasure m;
    m.add(-1, make_rational(-1, 6));
    m.add(2, make_rational(7, 6));
    CHECK(measure_csv(m) == "k,numerator,denominator\n-1,-1,6\n2,7,6\n");
    CHECK(measure_json(m).dump() == R"([{"k":-1,"num":"-1","den":"6"},{"k":2,"num":"7","den":"6"}])");
}

TEST_CASE("big integers are never truncated", "[io]")
{
    SignedMeasure m;
    m.add(0, make_rational(1, 1) / ipow(Rational(3), 60));
    CHECK(measure_json(m)[0]["den"] == "42391158275216203514294433201");
}

TEST_CASE("float rendering honours the precision", "[io]")
{
    CHECK(format_double(1.0 / 3.0, 4) == "0.3333");
    CHECK(rational_json(make_rational(3, 5)) == "3/5");
    CHECK(complex_json({0.5, -0.25}, 12).dump() == "[0.5,-0.25]");
    CHECK_THROWS_AS(format_double(1.0, 0), DomainError);
    CHECK_THROWS_AS(format_double(1.0, 18), DomainError);
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("verification is deterministic and sorted", "[io]")
{
    const auto a = run_verification("appendix"), b = run_verification("appendix");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].pass);
        if (i) CHECK(a[i - 1].id <= a[i].id);
    }
    CHECK_THROWS_AS(run_verification("nope"), DomainError);
}
