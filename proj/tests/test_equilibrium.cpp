#include "test_support.hpp"

#include "equilibrium.hpp"

using namespace freud;
using namespace testing;

namespace {
const Real& pi() {
    static const Real v = [] {
        ScopedPrecision g(100);
        return pi_value();
    }();
    return v;
}
}  // namespace

TEST_CASE("edge A") {
    Precision p;
    const auto& c = ctx60();
    CHECK_REL(edge_A(Real(2), c), mp::sqrt(Real(2)), tenpow(-60));
    CHECK_REL(edge_A(Real(1), c), pi(), tenpow(-60));
    CHECK_REL(edge_A(Real(4), c), mp::pow(Real(4) / 3, Real("0.25")), tenpow(-60));
    CHECK_THROWS_AS(edge_A(Real(0), c), DomainError);
}

TEST_CASE("full-line density") {
    Precision p;
    const auto& c = ctx60();
    CHECK_REL(density_full(Real(2), Real(1), c), 1 / pi(), tenpow(-50));
    CHECK(mp::abs(density_full(Real(2), mp::sqrt(Real(2)), c)) < tenpow(-30));
    const Real b("0.5"), x = tenpow(-6);
    const Real lead = mp::pow(x, Real("-0.5")) * b * mp::tan(pi() * b / 2) / (2 * pi());
    CHECK_REL(density_full(b, x, c), lead, Real("0.01"));
    CHECK(density_full(Real(3), Real("0.7"), c) > 0);
}

TEST_CASE("solve_support at beta 2") {
    Precision p;
    const auto& c = ctx60();
    SupportData sd = solve_support(Real(2), Real(1), c);
    CHECK_REL(sd.a, Real(5), tenpow(-40));
    CHECK_REL(sd.a_prime, Real(1), tenpow(-40));
    CHECK_REL(sd.rho, Real(1), tenpow(-40));
    CHECK_REL(sd.f_at_a, Real(1), tenpow(-40));
    CHECK_REL(sd.ell, Real("-1.5"), tenpow(-40));
    CHECK_REL(solve_support(Real(2), Real("0.25"), c).a, Real("4.25"), tenpow(-40));
    CHECK_THROWS_AS(solve_support(Real(2), Real(0), c), DomainError);
}

TEST_CASE("support data invariants") {
    Precision p;
    const auto& c = ctx60();
    for (const char* b : {"0.5", "1.5", "3"}) {
        SupportData sd = solve_support(Real(b), Real("0.4"), c);
        CHECK(sd.a > sd.mu);
        CHECK(sd.rho > 0);
        CHECK(sd.f_at_a > 0);
        CHECK_REL(sd.a_prime * sd.f_at_a, sd.rho, tenpow(-40));
        CHECK_REL(sd.zeta_prime_at_mu, sd.rho * sd.rho * (sd.a - sd.mu), tenpow(-40));
        CHECK_REL(sd.eta_prime_at_a, mp::pow(sd.f_at_a / (2 * mp::sqrt(sd.a - sd.mu)), Real(2) / 3), tenpow(-40));
    }
}

TEST_CASE("a tends to 4 pi^2 for beta 1") {
    Precision p;
    const Real mu = tenpow(-5);
    const Real a = solve_support(Real(1), mu, ctx60()).a;
    CHECK(mp::abs(a - 4 * pi() * pi()) < 10 * mu * mp::abs(mp::log(mu)));
}

TEST_CASE("integral bundle") {
    Precision p;
    const auto& c = ctx60();
    IntegralBundle ib = integral_bundle(Real(2), Real(1), Real(5), c);
    CHECK_REL(ib.Im1, pi(), tenpow(-50));
    for (const char* b : {"0.5", "4"}) {
        const Real beta(b), mu(1);
        SupportData sd = solve_support(beta, mu, c);
        IntegralBundle I = integral_bundle(beta, mu, sd.a, c);
        CHECK(I.I0 > 0);
        CHECK(I.Im2 > 0);
        CHECK(I.J > 0);
        CHECK_REL(I.I0 - mu * I.Im1, 4 * pi() / beta, tenpow(-40));
        const Real rhs = 4 * pi() * (beta + 1) * (sd.a + mu) / (beta * (beta + 2)) +
                         2 * pi() * (sd.a + mu + beta * mu) * mu * sd.rho / (beta * (beta + 2));
        CHECK_REL(I.I1, rhs, tenpow(-30));
    }
}

TEST_CASE("f and its derivative") {
    Precision p;
    const auto& c = ctx60();
    SupportData s2 = solve_support(Real(2), Real("0.7"), c);
    for (const Complex& z : {Complex(Real(2)), Complex(Real(3), Real(1)), Complex(Real("0.2"), Real(-4))}) {
        CHECK(abs(f_eval(s2, z, c) - Complex(Real(1))) < tenpow(-40));
        CHECK(abs(f_prime(s2, z, c)) < tenpow(-30));
    }
    SupportData s1 = solve_support(Real(1), Real(1), c);
    CHECK_REL(f_eval(s1, Complex(s1.a), c).re, s1.rho / a_prime_implicit(Real(1), Real(1), s1.a, c), tenpow(-40));
    CHECK_REL(f_eval(s1, Complex(s1.mu), c).re, s1.rho, tenpow(-40));

    SupportData s3 = solve_support(Real(3), Real("0.5"), c);
    const Real h = tenpow(-10);
    const Real fd = (f_eval(s3, Complex(s3.mu + h), c).re - f_eval(s3, Complex(s3.mu - h), c).re) / (2 * h);
    CHECK_REL(f_prime(s3, Complex(s3.mu), c).re, fd, tenpow(-8));
    CHECK_THROWS_AS(f_eval(s3, Complex(Real(-1)), c), DomainError);
}

TEST_CASE("f routes agree") {
    Precision p;
    const auto& c = ctx60();
    // mu large enough that the circle stays well away from the branch point at 0
    SupportData sd = solve_support(Real("1.5"), Real(2), c);
    const Complex z((sd.a + sd.mu) / 2, Real("0.4"));
    CHECK(abs(f_eval(sd, z, c, FRoute::halfline) - f_eval(sd, z, c, FRoute::contour)) < tenpow(-40));
    CHECK(abs(f_eval(sd, z, c, FRoute::halfline) - f_eval(sd, z, c, FRoute::regular)) < tenpow(-40));
}

TEST_CASE("C0-1 identity at beta 4") {
    Precision p;
    const auto& c = ctx60();
    const Real beta(4), mu(1), h = tenpow(-8);
    SupportData sd = solve_support(beta, mu, c);
    const Real drho = (solve_support(beta, mu + h, c).rho - solve_support(beta, mu - h, c).rho) / (2 * h);
    const Real from_dfdmu = (beta / 2 - 1) / mu * sd.rho + beta * (sd.a_prime - 1) / (mu * (sd.a - mu));
    CHECK_REL(drho, from_dfdmu, tenpow(-6));
    CHECK_REL(f_prime(sd, Complex(mu), c).re / sd.rho, 2 * drho / sd.rho + (sd.a_prime - 1) / (sd.a - mu), tenpow(-6));
}

TEST_CASE("density on the support") {
    Precision p;
    const auto& c = ctx60();
    SupportData sd = solve_support(Real(2), Real(1), c);
    CHECK_REL(psi_support(sd, Real(3), c), 1 / (2 * pi()), tenpow(-40));
    CHECK(psi_support(sd, sd.a - tenpow(-20), c) < tenpow(-9));
    SupportData s3 = solve_support(Real(3), Real("0.5"), c);
    const Real x = (s3.a + s3.mu) / 3;
    CHECK_REL(psi_support(s3, x, c), psi_support_alter(s3, x, c), tenpow(-40));
    CHECK(mp::abs(psi_tail_mass(s3, s3.mu, c) - 1) < tenpow(-20));
}

TEST_CASE("phi") {
    Precision p;
    const auto& c = ctx60();
    SupportData sd = solve_support(Real("1.5"), Real("0.5"), c);
    const Real x = (sd.a + sd.mu) / 2;
    CHECK(abs(phi_boundary(sd, x, 1, c) + phi_boundary(sd, x, -1, c)) < tenpow(-30));
    CHECK(abs(phi_eval(sd, Complex(sd.a + tenpow(-30)), c)) < tenpow(-20));
    CHECK(phi_eval(sd, Complex(sd.a + 1), c).re < 0);
    CHECK_THROWS_AS(phi_eval(sd, Complex(x), c), DomainError);

    // beta = 2, mu near 0: -(1/2) int_4^8 sqrt((xi - 4)/xi) d xi in closed form
    SupportData s0 = solve_support(Real(2), tenpow(-12), c);
    const Real u = mp::sqrt(Real(2));
    const Real closed = -(u * 4 - 4 * mp::log((u + 1)));
    CHECK(mp::abs(phi_eval(s0, Complex(Real(8)), c).re - closed / 2) < tenpow(-5));
}

TEST_CASE("g function") {
    Precision p;
    const auto& c = ctx60();
    SupportData sd = solve_support(Real(2), Real(1), c);
    const Complex big(tenpow(6));
    CHECK(abs(g_prime_eval(sd, big, c) * big - Complex(Real(1))) < tenpow(-5));
    const Complex z(Real(7), Real("0.5"));
    const Real h = tenpow(-15);
    const Complex fd = (g_eval(sd, z + Complex(h), c).g - g_eval(sd, z - Complex(h), c).g) / (2 * h);
    CHECK(abs(fd - g_prime_eval(sd, z, c)) / abs(fd) < tenpow(-8));
    CHECK(mp::abs(euler_lagrange_residual(sd, Real(3), c)) < tenpow(-20));
}

TEST_CASE("small-mu expansion") {
    Precision p;
    const auto& c = ctx60();
    SmallMuExpansion e2 = small_mu_expansion(Real(2), Real("0.01"), c);
    CHECK_REL(e2.a0, Real(4), tenpow(-50));
    CHECK_REL(e2.a1, Real(1), tenpow(-50));
    CHECK_REL(e2.rho_approx, Real(1), tenpow(-50));
    const Real mu = tenpow(-4);
    SmallMuExpansion e1 = small_mu_expansion(Real(1), mu, c);
    CHECK_REL(e1.a0, 4 * pi() * pi(), tenpow(-50));
    CHECK_REL(e1.rho_approx, -mp::log(mu) / (4 * pi() * pi()), tenpow(-40));
}

TEST_CASE("scalings") {
    Precision p;
    const auto& c = ctx60();
    const unsigned n = 12;
    const Real s("1.5");
    Scaling sc = scaling_lambda(Real(2), n, s, c);
    CHECK_REL(sc.lambda, pi() * s / (mp::sqrt(Real(2)) * n), tenpow(-50));
    CHECK_REL(sc.mu, pi() * pi() * s * s / (4 * n * n), tenpow(-50));
    CHECK_REL(scaling_lambda_only(Real("0.5"), n, s, c), 4 * pi() * pi() * s / (n * n), tenpow(-50));
}
