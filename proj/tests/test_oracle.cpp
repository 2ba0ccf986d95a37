#include <catch_amalgamated.hpp>

#include <pseudowalk/pseudowalk.hpp>

using namespace pw;

TEST_CASE("first absorption step for N=1", "[oracle]")
{
    const AbsorbingDP dp{WalkParams(1, make_rational(1, 4)), -1, 1, 3, 0};
    const DPRun run = run_absorbing(dp);
    CHECK(run.absorbed[1].mass(-1) == make_rational(1, 4));
    CHECK(run.absorbed[1].mass(1) == make_rational(1, 4));
    CHECK(run.mass_conserved);
}

TEST_CASE("series value and certified tail", "[oracle]")
{
    const AbsorbingDP dp{WalkParams(2, make_rational(1, 8)), std::nullopt, 1, 40, 0};
    const SeriesValue v = eval_series(first_passage_series(dp, 1), make_rational(1, 20));
    CHECK(v.value.get_d() == Catch::Approx(0.025174078114044082537).epsilon(1e-13));
    CHECK(v.tail > 0);
    CHECK(v.tail.get_d() < 1e-40);
    CHECK(std::fabs(v.value.get_d() - H_plus(dp.params, 1, 1, 0.05).real()) <= v.tail.get_d() + 1e-15);
}

TEST_CASE("the tail bound needs M1 z below 1", "[oracle][errors]")
{
    const AbsorbingDP dp{WalkParams(2, make_rational(1, 8)), std::nullopt, 1, 10, 0};
    CHECK_THROWS_AS(eval_series(first_passage_series(dp, 1), make_rational(2, 3)), DomainError);
}

TEST_CASE("DP preconditions", "[oracle][errors]")
{
    const WalkParams p(2, make_rational(1, 8));
    CHECK_THROWS_AS(run_absorbing(AbsorbingDP{p, std::nullopt, std::nullopt, 5, 0}), DomainError);
    CHECK_THROWS_AS(run_absorbing(AbsorbingDP{p, -1, 1, 5, 3}), DomainError);
    CHECK_THROWS_AS(markov_functional_series(AbsorbingDP{p, std::nullopt, 1, 5, 0}, 9, Polynomial::constant(1)), HorizonTooLarge);
}

TEST_CASE("functional series of a constant is the absorption series", "[oracle]")
{
    const AbsorbingDP dp{WalkParams(2, make_rational(1, 8)), std::nullopt, 2, 20, 0};
    const TruncatedSeries s = markov_functional_series(dp, 0, Polynomial::constant(1));
    const TruncatedSeries a = first_passage_series(dp, 2), b = first_passage_series(dp, 3);
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) CHECK(s.coeffs[n] == a.coeffs[n] + b.coeffs[n]);
}
