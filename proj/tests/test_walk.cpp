#include <catch_amalgamated.hpp>

#include <pseudowalk/pseudowalk.hpp>

using namespace pw;

TEST_CASE("step law for N=1 is the simple lazy walk", "[walk]")
{
    const SignedMeasure m = step_pmf(WalkParams(1, make_rational(1, 4)));
    CHECK(m.mass(-1) == make_rational(1, 4));
    CHECK(m.mass(0) == make_rational(1, 2));
    CHECK(m.mass(1) == make_rational(1, 4));
    CHECK(m.support() == std::vector<long>{-1, 0, 1});
}

TEST_CASE("step laws frozen from the fraction oracle", "[walk]")
{
    const SignedMeasure m2 = step_pmf(WalkParams(2, make_rational(1, 8)));
    const std::map<long, Rational> e2 = {{-2, make_rational(-1, 8)}, {-1, make_rational(1, 2)}, {0, make_rational(1, 4)},
                                         {1, make_rational(1, 2)},   {2, make_rational(-1, 8)}};
    CHECK(m2.masses() == e2);
    const SignedMeasure m3 = step_pmf(WalkParams(3, make_rational(1, 32)));
    CHECK(m3.mass(-3) == make_rational(1, 32));
    CHECK(m3.mass(-2) == make_rational(-3, 16));
    CHECK(m3.mass(-1) == make_rational(15, 32));
    CHECK(m3.mass(0) == make_rational(3, 8));
    CHECK(m3.total_mass() == 1);
}

TEST_CASE("three-step law for N=2 frozen from the convolution oracle", "[walk]")
{
    const WalkParams p(2, make_rational(1, 8));
    const SignedMeasure s3 = walk_pmf_closed(p, 3);
    const std::map<long, Rational> expect = {
        {-6, make_rational(-1, 512)}, {-5, make_rational(3, 128)}, {-4, make_rational(-21, 256)}, {-3, make_rational(7, 128)},
        {-2, make_rational(-15, 512)}, {-1, make_rational(27, 64)}, {0, make_rational(29, 128)},  {1, make_rational(27, 64)},
        {2, make_rational(-15, 512)}, {3, make_rational(7, 128)},  {4, make_rational(-21, 256)}, {5, make_rational(3, 128)},
        {6, make_rational(-1, 512)}};
    CHECK(s3.masses() == expect);
    CHECK(walk_pmf_convolution(p, 3) == s3);
    CHECK(walk_cdf_closed(p, 3, 6) == 1);
    CHECK_THROWS_AS(walk_cdf_closed(p, 3, -7), DomainError);
}

TEST_CASE("zero steps is a point mass at the origin", "[walk]")
{
    const SignedMeasure m = walk_pmf_closed(WalkParams(2, make_rational(1, 8)), 0);
    CHECK(m == SignedMeasure::dirac(0));
}

TEST_CASE("step distribution function", "[walk]")
{
    for (int N = 1; N <= 5; ++N) {
        const WalkParams p(N, 1 / ipow(Rational(4), N));
        Rational run = 0;
        for (long k = -N; k <= N; ++k) {
            run += step_pmf(p).mass(k);
            CHECK(step_cdf(p, k) == run);
        }
    }
}

TEST_CASE("total variation and characteristic function", "[walk]")
{
    const WalkParams p(2, make_rational(1, 8));
    CHECK(bounds(p).m1 == make_rational(3, 2));
    CHECK(bounds(p).m_inf == 1);
    CHECK(char_fn(p, 0.0) == Catch::Approx(1.0));
    // 1 + kappa c (2 - 2 cos)^N evaluated at theta = pi
    CHECK(char_fn(p, std::numbers::pi) == Catch::Approx(1.0 - 16.0 / 8.0));
    const std::complex<double> g = step_genfun(p, {2.0, 0.0});
    CHECK(g.real() == Catch::Approx(1.0 - 1.0 / 8.0 / 4.0));
}

TEST_CASE("generator is kappa c times the iterated Laplacian", "[walk]")
{
    const WalkParams p(3, make_rational(1, 32));
    const ValueTable f = ValueTable::from(-12, 12, [](long i) -> Rational { return ipow(Rational(i), 7) - 3 * ipow(Rational(i), 2); });
    for (long j = -3; j <= 3; ++j) {
        CHECK(generator_apply(p, f, j) == p.kappa * p.c * iterated_laplacian(f, j, 3));
        CHECK(iterated_laplacian(f, j, 3) == iterated_laplacian_composed(f, j, 3));
    }
}

TEST_CASE("finite differences of a table", "[walk]")
{
    const ValueTable f = ValueTable::from(-5, 5, [](long i) { return Rational(i * i); });
    CHECK(forward_diff(f, 0, 1) == 1);
    CHECK(forward_diff(f, 0, 2) == 2);
    CHECK(backward_diff(f, 0, 1) == -1);
    CHECK(iterated_laplacian(f, 0, 1) == 2);
    CHECK_THROWS_AS(forward_diff(f, 4, 3), MissingValue);
}

TEST_CASE("walk parameters are validated", "[walk][errors]")
{
    CHECK_THROWS_AS(WalkParams(0, make_rational(1, 4)), DomainError);
    CHECK_THROWS_AS(WalkParams(2, Rational(0)), DomainError);
    CHECK(WalkParams(2, make_rational(1, 8)).kappa == -1);
    CHECK(WalkParams(3, make_rational(1, 32)).kappa == 1);
}

TEST_CASE("rational literals", "[walk][errors]")
{
    CHECK(parse_rational("3/12") == make_rational(1, 4));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS_AS(parse_rational("0.25"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("binomials with negative upper index", "[walk]")
{
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-3, 2) == 6);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(-2, 2) == 6);
}
