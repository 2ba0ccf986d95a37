#include <catch_amalgamated.hpp>

#include <pseudowalk/pseudowalk.hpp>

using namespace pw;

TEST_CASE("H+ frozen from the absorbing DP", "[overshoot]")
{
    const WalkParams p2(2, make_rational(1, 8));
    CHECK(H_plus(p2, 1, 1, 0.05).real() == Catch::Approx(0.025174078114044082537).epsilon(1e-13));
    CHECK(H_plus(p2, 1, 2, 0.05).real() == Catch::Approx(-0.0063333787714908554702).epsilon(1e-13));
    const WalkParams p3(3, make_rational(1, 32));
    CHECK(H_plus(p3, 2, 2, 0.05).real() == Catch::Approx(-0.0089628612864811864042).epsilon(1e-12));
    CHECK(H_plus(p3, 2, 3, 0.05).real() == Catch::Approx(0.001368085557671410247).epsilon(1e-12));
    CHECK(H_plus(p3, 2, 4, 0.05).real() == Catch::Approx(0.000037700501804231143255).epsilon(1e-10));
}

TEST_CASE("H- by reflection and by the direct inversion", "[overshoot]")
{
    const WalkParams p(2, make_rational(1, 8));
    CHECK(H_minus(p, -1, -1, 0.05).real() == Catch::Approx(0.025174078114044082537).epsilon(1e-13));
    CHECK(H_minus(p, -1, -2, 0.05).real() == Catch::Approx(-0.0063333787714908554702).epsilon(1e-13));
    for (int N = 1; N <= 4; ++N) {
        const WalkParams q(N, 1 / ipow(Rational(4), N));
        for (long a = -3; a <= -1; ++a)
            for (long l = a - N + 1; l <= a; ++l) CHECK(std::abs(H_minus(q, a, l, 0.3) - H_minus_direct(q, a, l, 0.3)) < 1e-13);
    }
}

TEST_CASE("Vandermonde solve agrees with the Lagrange form", "[overshoot]")
{
    const WalkParams p(3, make_rational(1, 32));
    const std::vector<cplx> h = H_plus_vandermonde(p, 2, 0.4);
    for (long l = 2; l <= 4; ++l) CHECK(std::abs(h[l - 2] - H_plus(p, 2, l, 0.4)) < 1e-13);
}

TEST_CASE("double generating function of the overshoot", "[overshoot]")
{
    const WalkParams p(2, make_rational(1, 8));
    for (cplx zeta : {cplx(0.5, 0.2), cplx(2.0, 0.0), cplx(-1.0, 1.0)})
        CHECK(std::abs(H_plus_double(p, 3, 0.2, zeta) - H_plus_double_sum(p, 3, 0.2, zeta)) < 1e-14);
}

TEST_CASE("law of the overshoot for small N", "[overshoot]")
{
    CHECK(dist_S_b_plus(1, 4).masses == std::vector<Rational>{1});
    CHECK(dist_S_b_plus(2, 4).masses == std::vector<Rational>{5, -4});
    CHECK(dist_S_b_plus(3, 1).masses == std::vector<Rational>{3, -3, 1});
    CHECK(dist_S_b_plus(4, 2).masses == std::vector<Rational>{10, -20, 15, -4});
    CHECK_THROWS_AS(dist_S_b_plus(2, 0), DomainError);
}

TEST_CASE("moments of the overshoot", "[overshoot]")
{
    CHECK(moments_S_b_plus(2, 2, 2) == -6);
    CHECK(moments_S_b_plus(2, 2, 1) == 0);
    CHECK(moments_S_b_plus(3, 1, 3) == -falling_factorial(-1, 3));
    CHECK(factorial_moment_shifted(3, 2, 2, 3) == 0);
    CHECK(factorial_moment_shifted(3, 2, 5, 2) == falling_factorial(-5, 2));
}

TEST_CASE("generating function of the overshoot law", "[overshoot]")
{
    // N=2: (b+1) zeta^b - b zeta^{b+1}
    CHECK(genfun_S_b_plus(2, 3, Rational(2)) == 4 * 8 - 3 * 16);
    CHECK(genfun_S_b_plus_integral(3, 2, make_rational(1, 3)) == genfun_S_b_plus(3, 2, make_rational(1, 3)));
}

TEST_CASE("Newton interpolation of the overshoot expectation", "[overshoot]")
{
    const ValueTable f{{-1, Rational(7)}, {0, Rational(-2)}, {1, Rational(3)}, {2, make_rational(1, 2)}, {3, Rational(5)}};
    CHECK(expect_f_S_b_plus(3, 1, f) == expect_f_S_b_plus_direct(3, 1, f));
    CHECK(expect_from_x(3, 1, -1, f) == expect_from_x_shifted(3, 1, -1, f));
}

TEST_CASE("strong pseudo-Markov identity for N=2", "[overshoot]")
{
    const WalkParams p(2, make_rational(1, 8));
    const Polynomial f({Rational(1), Rational(0), Rational(0), Rational(1)});
    const MarkovReport r = markov_check(p, 2, 0, 2, f, make_rational(1, 20));
    CHECK(r.lhs_exact == r.rhs_exact);
    CHECK(r.rhs_exact == 3 * expect_after(p, 2, 2, f) - 2 * expect_after(p, 3, 2, f));
    CHECK(r.series_ok);
}
