#include <catch_amalgamated.hpp>

#include <pseudowalk/pseudowalk.hpp>

using namespace pw;

TEST_CASE("N=1 reduces to Brownian motion", "[continuum]")
{
    const double c = 0.5, lam = 2.0, r = std::sqrt(lam / c);
    CHECK(std::abs(lambda_potential(1, c, lam, 0.7) - std::exp(-r * 0.7) / (2.0 * std::sqrt(c * lam))) < 1e-14);
    CHECK(std::abs(lf_tau_b(1, c, 1.3, lam, 0.0) - std::exp(-r * 1.3)) < 1e-14);
    const double a = -0.6, b = 1.1;
    const cplx two_sided = (std::sinh(r * b) + std::sinh(-r * a)) / std::sinh(r * (b - a));
    CHECK(std::abs(lf_tau_ab(1, c, a, b, lam, 0.0) - two_sided) < 1e-14);
}

TEST_CASE("potential is even and has mass 1/lambda", "[continuum]")
{
    for (int N = 1; N <= 3; ++N) {
        CHECK(std::abs(lambda_potential(N, 0.3, 1.5, 0.8) - lambda_potential(N, 0.3, 1.5, -0.8)) < 1e-15);
        CHECK(std::abs(lambda_potential(N, 0.3, 1.5, 0.8).imag()) < 1e-14);
    }
}

TEST_CASE("overshoot of the continuum walk", "[continuum]")
{
    for (int N = 1; N <= 4; ++N) {
        CHECK(std::abs(fourier_X_b_plus(N, 1.5, 0.0) - 1.0) < 1e-15);
        CHECK(law_X_b_plus(N, 1.5).total_mass() == Catch::Approx(1.0));
    }
    // N=2: the weight of the first Dirac derivative is b
    const DiracComb d = law_X_b_plus(2, 1.5);
    REQUIRE(d.anchors.size() == 1);
    CHECK(d.anchors[0].location == 1.5);
    CHECK(d.anchors[0].coeffs[1] == Catch::Approx(1.5));
}

TEST_CASE("two-sided continuum coefficients", "[continuum]")
{
    const BoldCoeffs c1 = bold_I_coeffs(1, -1.0, 3.0);
    CHECK(c1.minus[0] == Catch::Approx(0.75));
    CHECK(c1.plus[0] == Catch::Approx(0.25));
    for (int N = 1; N <= 4; ++N) {
        const BoldCoeffs c = bold_I_coeffs(N, -0.7, 2.2);
        CHECK(c.minus[0] + c.plus[0] == Catch::Approx(1.0).epsilon(1e-13));
        const BoldCoeffs s = bold_I_coeffs(N, -1.3, 1.3);
        for (int j = 0; j < N; ++j) CHECK(s.minus[j] == Catch::Approx((j % 2 ? -1.0 : 1.0) * s.plus[j]).epsilon(1e-13));
    }
}

TEST_CASE("bold I is the limit of the discrete coefficients", "[continuum]")
{
    const double e1 = probe_bold_I(2, -1.0, 1.0, 0.1), e2 = probe_bold_I(2, -1.0, 1.0, 0.05), e3 = probe_bold_I(2, -1.0, 1.0, 0.025);
    CHECK(e1 > e2);
    CHECK(e2 > e3);
    CHECK(probe_bold_I(1, -0.5, 1.5, 0.1) < 1e-15);
}

TEST_CASE("discrete Laplace-Fourier transforms approach the continuum ones", "[continuum]")
{
    const WalkParams p(2, make_rational(1, 8));
    const double e1 = probe_lf_tau_b(p, 1.0, 1.0, 0.5, 0.1), e2 = probe_lf_tau_b(p, 1.0, 1.0, 0.5, 0.05);
    CHECK(e1 > e2);
    CHECK(e2 < 0.05);
}

TEST_CASE("lattice rounding of endpoints", "[continuum]")
{
    CHECK(lattice_floor(-1.0, 0.1) == -10);
    CHECK(lattice_floor(-1.01, 0.1) == -11);
    CHECK(lattice_ceil(1.0, 0.05) == 20);
    CHECK(lattice_ceil(1.01, 0.05) == 21);
}

TEST_CASE("continuum preconditions", "[continuum][errors]")
{
    CHECK_THROWS_AS(lambda_potential(2, 0.3, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(lf_tau_ab(2, 0.3, 0.5, 1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(continuum_phis(0), DomainError);
}
