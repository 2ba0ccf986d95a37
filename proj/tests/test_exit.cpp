#include <catch_amalgamated.hpp>

#include <pseudowalk/pseudowalk.hpp>

using namespace pw;

TEST_CASE("two-sided H frozen from the absorbing DP", "[exit]")
{
    const WalkParams p(2, make_rational(1, 8));
    const auto h = exit_H_all(p, -1, 1, 0.05);
    CHECK(h.at(-2).real() == Catch::Approx(-0.0063291139240506329114).epsilon(1e-13));
    CHECK(h.at(-1).real() == Catch::Approx(0.025316455696202531646).epsilon(1e-13));
    CHECK(h.at(1).real() == Catch::Approx(0.025316455696202531646).epsilon(1e-13));
    CHECK(h.at(2).real() == Catch::Approx(-0.0063291139240506329114).epsilon(1e-13));
    const auto naive = exit_H_naive(p, -1, 1, 0.05);
    for (const auto& [l, v] : h) CHECK(std::abs(v - naive.at(l)) < 1e-14);
}

TEST_CASE("two-sided double generating function", "[exit]")
{
    const WalkParams p(2, make_rational(1, 8));
    for (cplx zeta : {cplx(0.5, 0.2), cplx(1.5, -0.5)})
        CHECK(std::abs(exit_H_double(p, -2, 3, 0.3, zeta) - exit_H_double_sum(p, -2, 3, 0.3, zeta)) < 1e-13);
}

TEST_CASE("gambler's ruin for N=1", "[exit]")
{
    const auto [down, up] = ruin_probs(1, -2, 3);
    CHECK(down == make_rational(3, 5));
    CHECK(up == make_rational(2, 5));
}

TEST_CASE("exit law for N=2, a=-1, b=1", "[exit]")
{
    const ExitLaw law = dist_S_ab(2, -1, 1);
    const SignedMeasure m = law.measure();
    CHECK(m.mass(-2) == make_rational(-1, 6));
    CHECK(m.mass(-1) == make_rational(2, 3));
    CHECK(m.mass(1) == make_rational(2, 3));
    CHECK(m.mass(2) == make_rational(-1, 6));
    CHECK(law.K == 1);
    CHECK(exit_K_product(2, -1, 1) == 1);
    CHECK(moments_S_ab(2, -1, 1, 4) == -4);
    CHECK(moment_2N_closed(2, -1, 1) == -4);
}

TEST_CASE("N=3 exit law: variant outer masses carry an extra factor 2", "[exit]")
{
    const SignedMeasure m = dist_S_ab(3, -1, 1).measure();
    CHECK(m.mass(-3) == make_rational(1, 20));
    CHECK(m.mass(-2) == make_rational(-3, 10));
    CHECK(m.mass(-1) == make_rational(3, 4));
    CHECK(m.total_mass() == 1);
    CHECK(ruin_probs(3, -1, 1).first == make_rational(1, 2));
}

TEST_CASE("side moments and integral forms", "[exit]")
{
    for (long n = 1; n <= 7; ++n) {
        CHECK(side_moments(2, -2, 3, n, Side::upper) == side_moments_closed(2, -2, 3, n, Side::upper));
        CHECK(side_moments(2, -2, 3, n, Side::lower) == side_moments_closed(2, -2, 3, n, Side::lower));
    }
    CHECK(beta_int(2, 3) == make_rational(1, 12));
    CHECK(double_integral_upper(0, 0, 0, 0) == make_rational(1, 2));
    CHECK(double_integral_upper(1, 0, 0, 0) == make_rational(1, 3));
    CHECK(double_integral_lower(1, 0, 0, 0) == make_rational(1, 6));
}

TEST_CASE("boundary polynomials for N=2", "[exit]")
{
    const BoundaryPolys bp = boundary_polys(2, -1, 2);
    // P-_0(x) = (x-b)(x-b-1)(2x-3a+b+2)/((b-a)(b-a+1)(b-a+2))
    const Rational x(5);
    CHECK(bp.pminus[0](x) == Rational(3 * 2 * 17) / 60);
    for (long j = 0; j < 2; ++j) CHECK(bp.pplus[j].degree() <= 3);
}

TEST_CASE("Lauricella problem with constant data", "[exit]")
{
    ValueTable one;
    for (long l : exit_points(2, -2, 2)) one.set(l, 1);
    const LauricellaSolution s = lauricella_solve(2, -2, 2, one);
    CHECK(s.pde_holds);
    CHECK(s.boundary_holds);
    CHECK(s.phi == Polynomial::constant(1));
}

TEST_CASE("interval preconditions", "[exit][errors]")
{
    CHECK_THROWS_AS(dist_S_ab(2, 0, 3), DomainError);
    CHECK_THROWS_AS(dist_S_ab(2, -1, 0), DomainError);
    CHECK_THROWS_AS(ruin_probs(2, 1, 3), DomainError);
}
