#include <catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <algorithm>

#include <pseudowalk/pseudowalk.hpp>

using namespace pw;

namespace {

// all 2N roots of (1-z) u^N - kappa c z (u-1)^{2N} from the companion matrix
std::vector<cplx> companion_roots(const WalkParams& p, double z)
{
    const int d = 2 * p.N;
    std::vector<double> coef(d + 1, 0.0);
    const double kc = p.kappa * to_double(p.c) * z;
    for (int i = 0; i <= d; ++i) coef[i] = -kc * to_double(binomial(d, i)) * ((d - i) % 2 ? -1.0 : 1.0);
    coef[p.N] += 1.0 - z;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -coef[i] / coef[d];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    std::vector<cplx> out;
    for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

double nearest(const std::vector<cplx>& pool, cplx x)
{
    double best = 1e300;
    for (cplx y : pool) best = std::min(best, std::abs(x - y));
    return best;
}

} // namespace

TEST_CASE("radical roots agree with the companion matrix", "[spectral]")
{
    for (int N = 1; N <= 5; ++N)
        for (const Rational& c : std::vector<Rational>{1 / ipow(Rational(4), N), 1 / ipow(Rational(2), 2 * N - 1)})
            for (double z : {0.1, 0.5, 0.9}) {
                const WalkParams p(N, c);
                const RootSet r = roots(p, z);
                const std::vector<cplx> pool = companion_roots(p, z);
                for (int j = 0; j < N; ++j) {
                    CHECK(nearest(pool, r.u[j]) < 1e-8);
                    CHECK(nearest(pool, r.v[j]) < 1e-8 * std::abs(r.v[j]));
                    CHECK(std::abs(r.u[j]) < 1.0);
                }
            }
}

TEST_CASE("N=1 roots are the classical ones", "[spectral]")
{
    const double z = 0.5;
    const RootSet r = roots(WalkParams(1, make_rational(1, 4)), z);
    const double u = 2.0 * (1.0 - z / 2.0 - std::sqrt(1.0 - z)) / z;
    CHECK(r.u[0].real() == Catch::Approx(u).epsilon(1e-13));
    CHECK(r.u[0].imag() == 0.0);
}

TEST_CASE("N=2 roots are conjugate with the corrected radical form", "[spectral]")
{
    const RootSet r = roots(WalkParams(2, make_rational(1, 8)), 0.5);
    const double sw = std::sqrt(r.w);
    CHECK(std::abs(r.u[1] - std::conj(r.u[0])) < 1e-15);
    CHECK(std::abs(r.u[0] - cplx(1.0 - r.b[0] * sw, -(r.w - r.a[0] * sw))) < 1e-14);
    CHECK(r.a[0] == Catch::Approx(std::sqrt((std::sqrt(r.w * r.w + 4.0) + r.w) / 2.0)));
}

TEST_CASE("N=3 middle root is real", "[spectral]")
{
    const RootSet r = roots(WalkParams(3, make_rational(1, 32)), 0.4);
    CHECK(r.u[1].imag() == 0.0);
    CHECK(r.u[1].real() == Catch::Approx(1.0 + r.w - std::sqrt(r.w * (r.w + 2.0))).epsilon(1e-14));
}

TEST_CASE("G_k frozen from the convolution oracle", "[spectral]")
{
    CHECK(G_k(WalkParams(1, make_rational(1, 4)), 0.05, 0).real() == Catch::Approx(1.0259783520851540955).epsilon(1e-14));
    CHECK(G_k(WalkParams(2, make_rational(1, 8)), 0.05, 3).real() == Catch::Approx(-0.0003062502694274347158).epsilon(1e-12));
}

TEST_CASE("G_k is even in k", "[spectral]")
{
    const WalkParams p(3, make_rational(1, 32));
    for (long k = 1; k <= 6; ++k) CHECK(std::abs(G_k(p, 0.3, k) - G_k(p, 0.3, -k)) < 1e-14);
}

TEST_CASE("double generating function on the unit circle", "[spectral]")
{
    const WalkParams p(2, make_rational(1, 8));
    for (double th : {0.0, 0.7, 2.0, 3.1})
        CHECK(std::abs(G_double(p, std::polar(1.0, th), 0.3) - G_double_unit_circle(p, th, 0.3)) < 1e-13);
}

TEST_CASE("roots reject z outside (0,1)", "[spectral][errors]")
{
    const WalkParams p(2, make_rational(1, 8));
    CHECK_THROWS_AS(roots(p, 1.0), DomainError);
    CHECK_THROWS_AS(roots(p, 0.0), DomainError);
    CHECK_THROWS_AS(roots(p, -0.2), DomainError);
}
