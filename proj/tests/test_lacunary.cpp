#include <catch_amalgamated.hpp>

#include <pseudowalk/pseudowalk.hpp>

using namespace pw;

TEST_CASE("lacunary determinant of a small system", "[lacunary]")
{
    // rows (1, u^2) for u = 2, 3: det = 9 - 4
    const LacunarySystem<Rational> s{1, 1, 1, {Rational(2), Rational(3)}, {}};
    CHECK(s.exponents() == std::vector<long>{0, 2});
    CHECK(lacunary_det(s) == 5);
    CHECK(lacunary_det_direct(s) == 5);
}

TEST_CASE("no gap reduces to the Vandermonde determinant", "[lacunary]")
{
    const std::vector<Rational> u = {Rational(1), Rational(2), Rational(4)};
    const LacunarySystem<Rational> s{2, 0, 1, u, {}};
    CHECK(lacunary_det(s) == vandermonde(u));
    CHECK(vandermonde(u) == (2 - 1) * (4 - 1) * (4 - 2));
}

TEST_CASE("elementary symmetric functions", "[lacunary]")
{
    const std::vector<Rational> u = {Rational(1), Rational(2), Rational(3)};
    const std::vector<Rational> e = esym_all(u);
    CHECK(e == std::vector<Rational>{1, 6, 11, 6});
    CHECK(esym_at(e, 4) == 0);
    CHECK(esym_at(e, -1) == 0);
    CHECK(esym_all(u, 1) == std::vector<Rational>{1, 4, 3});
}

TEST_CASE("Cramer solution round-trips", "[lacunary]")
{
    LacunarySystem<Rational> s{2, 2, 2, {make_rational(-1, 2), Rational(3), make_rational(5, 3), Rational(-2)}, {}};
    const std::vector<Rational> x = {Rational(1), make_rational(-2, 7), Rational(4), make_rational(1, 9)};
    s.rhs = lacunary_apply(s, x);
    CHECK(lacunary_solve(s) == x);
    CHECK(lacunary_solve_naive(s) == x);
}

TEST_CASE("a vanishing Schur block is reported", "[lacunary][errors]")
{
    // e_1 = 0 makes the 1x1 block of the (1,1,1) system vanish
    LacunarySystem<Rational> s{1, 1, 1, {Rational(1), Rational(-1)}, {Rational(1), Rational(1)}};
    CHECK(lacunary_det(s) == 0);
    CHECK_THROWS_AS(lacunary_solve(s), SingularSchur);
}

TEST_CASE("repeated nodes are rejected", "[lacunary][errors]")
{
    const LacunarySystem<Rational> s{1, 1, 1, {Rational(2), Rational(2)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(lacunary_solve(s), DegenerateNodes);
}

TEST_CASE("alternating sums and the structured inverse", "[lacunary]")
{
    CHECK(alternating_factorial_sum(3, 1, 1) == -6);
    CHECK(alternating_factorial_sum(2, 2, 3) == 0);
    CHECK(alternating_factorial_sum(1, 3, 2) == make_rational(1, 20));
    CHECK(alternating_factorial_sum_closed(1, 3, 2) == make_rational(1, 20));
    CHECK(binomial_block_solve(2, 4, 2) == RationalMatrix::column({make_rational(1, 2), make_rational(-1, 5)}));
    CHECK(binomial_block_solve(3, 8, 5) == RationalMatrix::column({make_rational(25, 14), make_rational(-25, 14), make_rational(1, 2)}));
    CHECK(gauss_solve(binomial_block(3, 8), binomial_column(3, 5)) == binomial_block_solve(3, 8, 5));
    CHECK_THROWS_AS(binomial_block_solve(3, 4, 5), DomainError);
}

TEST_CASE("singular matrices are reported", "[lacunary][errors]")
{
    RationalMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    CHECK(determinant(m) == 0);
    CHECK_THROWS_AS(gauss_solve(m, RationalMatrix::column({Rational(1), Rational(0)})), SingularMatrix);
}
