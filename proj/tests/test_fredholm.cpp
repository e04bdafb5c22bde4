#include "test_support.hpp"

#include "asymptotics.hpp"
#include "fredholm.hpp"

using namespace freud;
using namespace testing;

TEST_CASE("small s") {
    Precision p;
    const auto& c = ctx60();
    const Real s = tenpow(-6);
    NystromResult r = sine_det_fixed(s, 20, c);
    CHECK(r.log_det <= 0);
    CHECK(mp::abs(r.log_det / s + 2) < tenpow(-5));
    CHECK(mp::abs(sine_det_fixed(Real("0.1"), 40, c).log_det - sine_det_fixed(Real("0.1"), 80, c).log_det) <
          tenpow(-8));
}

TEST_CASE("two linear algebra routes") {
    Precision p;
    NystromResult r = sine_det_fixed(Real("2.5"), 60, ctx60());
    CHECK(mp::abs(r.log_det - r.log_det_lu) < tenpow(-10));
}

TEST_CASE("converged determinant against the large-gap form") {
    Precision p;
    const auto& c = ctx60();
    NystromResult r = sine_det(Real(4), 20, c);
    CHECK(r.residual_estimate <= tenpow(-8));
    CHECK(mp::abs(r.log_det - sine_gap_asymp(Real(4), c)) <= Real("0.01"));
    NystromResult r5 = sine_det(Real(5), 20, c);
    CHECK(mp::abs(r5.log_det - Real("-124.497")) < Real("0.01"));
}

TEST_CASE("residual shrinks as nodes double") {
    Precision p;
    const auto& c = ctx60();
    const Real s("1.5");
    const Real ref = sine_det_fixed(s, 160, c).log_det;
    const Real e10 = mp::abs(sine_det_fixed(s, 10, c).log_det - ref);
    const Real e20 = mp::abs(sine_det_fixed(s, 20, c).log_det - ref);
    const Real e40 = mp::abs(sine_det_fixed(s, 40, c).log_det - ref);
    CHECK(e20 < e10);
    CHECK(e40 < e20);
}

TEST_CASE("gap probability decreases in s") {
    Precision p;
    const auto& c = ctx60();
    Real prev = 1;
    for (int k = 1; k <= 10; ++k) {
        const Real v = mp::exp(sine_det(Real(k) / 2, 20, c).log_det);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("argument checks") {
    Precision p;
    const auto& c = ctx60();
    CHECK_THROWS_AS(sine_det(Real(0), 20, c), DomainError);
    CHECK_THROWS_AS(sine_det(Real(1), 10, c), DomainError);
    CHECK_THROWS_AS(kernel_convergence_report(Real("0.5"), {10}, {{Real(0), Real(0)}}, c), DomainError);
    CHECK_THROWS_AS(kernel_convergence_report(Real(2), {20, 10}, {{Real(0), Real(0)}}, c), DomainError);
}

TEST_CASE("kernel convergence report") {
    Precision p;
    const auto& c = ctx60();
    KernelReport rep = kernel_convergence_report(Real(2), {10, 20, 40}, {{Real("0.3"), Real("-0.2")}}, c);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[1].max_error < rep.rows[0].max_error);
    CHECK(rep.rows[2].max_error < rep.rows[1].max_error);
    CHECK(rep.monotone);
    // diagonal uses the limit 1
    KernelReport diag = kernel_convergence_report(Real(2), {40}, {{Real("0.25"), Real("0.25")}}, c);
    CHECK(diag.rows[0].max_error < Real("0.05"));
}

TEST_CASE("beta 1 kernel error decreases with n") {
    Precision p;
    KernelReport rep = kernel_convergence_report(Real(1), {10, 20, 40}, {{Real("0.3"), Real("-0.2")}}, ctx60());
    CHECK(rep.rows[1].max_error < rep.rows[0].max_error);
    CHECK(rep.rows[2].max_error < rep.rows[1].max_error);
}

TEST_CASE("beta 1 kernel error at n 40 below 0.2" * doctest::test_suite("beta1_bound")) {
    Precision p;
    KernelReport b1 = kernel_convergence_report(Real(1), {40}, {{Real("0.3"), Real("-0.2")}}, ctx60());
    CHECK(b1.rows[0].max_error < Real("0.2"));
}
