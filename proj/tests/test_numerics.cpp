#include "test_support.hpp"

#include <locale>

using namespace freud;
using namespace testing;

TEST_CASE("precision context rejects fewer than 30 digits") {
    CHECK_THROWS_AS(PrecisionContext(29), DomainError);
    CHECK(PrecisionContext(30).digits == 30);
}

TEST_CASE("scoped precision restores the previous setting") {
    const auto before = Real::default_precision();
    {
        ScopedPrecision g(123);
        CHECK(Real::default_precision() == 123);
    }
    CHECK(Real::default_precision() == before);
}

TEST_CASE("parse and format") {
    Precision p;
    CHECK_THROWS_AS(parse_real("twelve"), DomainError);
    CHECK(parse_real("0.25") == Real(1) / 4);
    std::locale::global(std::locale::classic());
    CHECK(to_string(Real("-1.5"), 10) == "-1.5");
    CHECK(to_string(Real(5), 60) == "5");
}

TEST_CASE("complex principal branch") {
    Precision p;
    const Complex m1(Real(-1));
    CHECK(abs(sqrt(m1) - Complex(Real(0), Real(1))) < tenpow(-70));
    CHECK(abs(log(m1) - Complex(Real(0), pi_value())) < tenpow(-70));
    const Complex z(Real("0.3"), Real("-2"));
    CHECK(abs(exp(log(z)) - z) < tenpow(-70));
}

TEST_CASE("ln_gamma") {
    Precision p;
    const auto& c = ctx60();
    CHECK(mp::abs(ln_gamma(Real(1), c)) < tenpow(-70));
    CHECK_REL(ln_gamma(Real("0.5"), c), mp::log(pi_value()) / 2, tenpow(-60));
    CHECK_REL(ln_gamma(Real(5), c), mp::log(Real(24)), tenpow(-60));
    // recurrence up to x + 20 and the Stirling series there
    const Real x = Real(1) / 4;
    Real y = x + 20, shift = 0;
    for (int k = 0; k < 20; ++k) shift += mp::log(x + k);
    Real st = (y - Real(0.5)) * mp::log(y) - y + mp::log(2 * pi_value()) / 2;
    Real yk = y;
    for (unsigned k = 1; k <= 25; ++k) {
        st += bernoulli(2 * k) / (Real(2 * k) * (2 * k - 1) * yk);
        yk *= y * y;
    }
    CHECK_REL(ln_gamma(x, c), st - shift, tenpow(-40));
    CHECK(mp::abs(ln_gamma(x, c) - Real("1.28802252469808")) < tenpow(-13));
}

TEST_CASE("upper incomplete gamma") {
    Precision p;
    const auto& c = ctx60();
    CHECK_REL(upper_incomplete_gamma(Real(1), Real(2), c), mp::exp(Real(-2)), tenpow(-60));
    CHECK_REL(upper_incomplete_gamma(Real(3), Real(0), c), Real(2), tenpow(-60));
    CHECK_REL(upper_incomplete_gamma(Real("0.5"), Real(1), c), mp::sqrt(pi_value()) * mp::erfc(Real(1)), tenpow(-55));
    // defining integral on [1, inf) after t = 1 + u/(1-u)
    Real q = tanh_sinh(
        [](const Real& u) {
            if (u >= 1) return Real(0);
            Real t = 1 + u / (1 - u);
            return mp::exp(-t) / mp::sqrt(t) / ((1 - u) * (1 - u));
        },
        Real(0), Real(1), tenpow(-40));
    CHECK_REL(upper_incomplete_gamma(Real("0.5"), Real(1), c), q, tenpow(-30));
}

TEST_CASE("beta function") {
    Precision p;
    const auto& c = ctx60();
    CHECK_REL(beta_function(Real("0.5"), Real("0.5"), c), pi_value(), tenpow(-60));
    CHECK_REL(beta_function(Real(1), Real("0.5"), c), Real(2), tenpow(-60));
    Real q = tanh_sinh([](const Real& x) { return mp::pow(x, Real(-0.75)) / mp::sqrt(1 - x); }, Real(0), Real(1),
                       tenpow(-40));
    CHECK_REL(beta_function(Real("0.25"), Real("0.5"), c), q, tenpow(-25));
    CHECK(mp::abs(beta_function(Real("0.25"), Real("0.5"), c) - Real("5.24412")) < tenpow(-5));
}

TEST_CASE("brent root") {
    Precision p;
    const auto& c = ctx60();
    Real r = brent_root([](const Real& x) { return x * x - 2; }, Real(1), Real(2), tenpow(-65), c);
    CHECK_REL(r, mp::sqrt(Real(2)), tenpow(-60));
    r = brent_root([](const Real& x) { return mp::cos(x); }, Real(1), Real(2), tenpow(-65), c);
    CHECK_REL(r, pi_value() / 2, tenpow(-60));
    CHECK_THROWS(brent_root([](const Real& x) { return x * x + 1; }, Real(1), Real(2), tenpow(-30), c));
}

TEST_CASE("zeta derivative and Glaisher") {
    Precision p;
    const auto& c = ctx60();
    const Real z = zeta_prime_minus_one(c);
    CHECK(mp::abs(z + glaisher_log(c) - Real(1) / 12) < tenpow(-60));
    // reference digits from an independent arbitrary-precision package
    CHECK(mp::abs(z - Real("-0.1654211437004509292139196602427806427640363803352017836665223063573597")) <
          tenpow(-60));
    CHECK_REL(zeta_prime(Real(0), c), -mp::log(2 * pi_value()) / 2, tenpow(-50));
    CHECK(mp::abs(3 * z + mp::log(Real(2)) / 12 - mp::log(pi_value()) / 4 - Real("-0.7246836")) < tenpow(-7));
}

TEST_CASE("bernoulli numbers") {
    Precision p;
    CHECK(bernoulli(2) == Real(1) / 6);
    CHECK(bernoulli(4) == Real(-1) / 30);
    CHECK(bernoulli(12) == Real(-691) / 2730);
}

TEST_CASE("gauss-jacobi weight and exactness") {
    Precision p;
    auto rule = gauss_jacobi(16, Real("0.5"), Real("-0.5"), 80);
    Real w = 0;
    for (size_t i = 0; i < rule->size(); ++i) {
        CHECK(rule->w[i] > 0);
        w += rule->w[i];
    }
    CHECK(mp::abs(w - pi_value()) < tenpow(-30));
    // (1-x)^{1/2}(1+x)^{-1/2} x^k for k = 31 is exact at 16 nodes; compare with the k = 31 moment
    Real m = 0;
    for (size_t i = 0; i < rule->size(); ++i) m += rule->w[i] * mp::pow(rule->x[i], 31);
    auto big = gauss_jacobi(40, Real("0.5"), Real("-0.5"), 80);
    Real ref = 0;
    for (size_t i = 0; i < big->size(); ++i) ref += big->w[i] * mp::pow(big->x[i], 31);
    CHECK_REL(m, ref, tenpow(-50));
}

TEST_CASE("graded integration") {
    Precision p;
    Real v = integrate_graded<Real>([](const Real&) { return Real(1); }, Real(0), Real(1), Real("-0.5"), Real(0),
                                    Real(0), 80);
    CHECK_REL(v, Real(2), tenpow(-60));
    const Real d = tenpow(-6);
    v = integrate_graded<Real>([&](const Real& x) { return 1 / (x + d); }, Real(0), Real(1), Real(0), Real(0), d, 80);
    CHECK_REL(v, mp::log((1 + d) / d), tenpow(-50));
}

TEST_CASE("trapezoid on a circle") {
    Precision p;
    auto r = trapezoid_circle([](const Complex& z) { return Complex(Real(1)) / z; }, Complex(Real("0.5")), Real(1),
                              tenpow(-60), 8, 4096);
    CHECK(r.converged);
    CHECK(abs(r.value - Complex(Real(0), 2 * pi_value())) < tenpow(-55));
}

TEST_CASE("tanh-sinh with a log singularity") {
    Precision p;
    Real v = tanh_sinh([](const Real& x) { return mp::log(x); }, Real(0), Real(1), tenpow(-40));
    CHECK(mp::abs(v + 1) < tenpow(-35));
}
