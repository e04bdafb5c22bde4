#include "verify.hpp"

#include "asymptotics.hpp"
#include "fredholm.hpp"
#include "oracle.hpp"

#include <functional>

namespace freud {

namespace mp = boost::multiprecision;

namespace {

struct Measured {
    Real residual;
    Real tolerance;
    std::string detail;
};

Real rmax(const Real& a, const Real& b) { return a < b ? b : a; }

Real rel(const Real& got, const Real& want) {
    if (want == 0) return mp::abs(got);
    return mp::abs((got - want) / want);
}

class Suite {
public:
    explicit Suite(const PrecisionContext& ctx) : ctx_(ctx) {}

    void run(const std::string& module, const std::string& name, const std::function<Measured()>& body) {
        CheckResult r;
        r.module = module;
        r.name = name;
        try {
            ScopedPrecision guard(ctx_.digits + kGuardDigits);
            Measured m = body();
            r.passed = m.residual <= m.tolerance;
            r.residual = to_string(m.residual, 6);
            r.tolerance = to_string(m.tolerance, 3);
            r.detail = m.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    PrecisionContext ctx_;
    std::vector<CheckResult> results_;
};

Measured bounded(const Real& residual, const Real& tol, std::string detail = {}) {
    return {residual, tol, std::move(detail)};
}

// 0 when the predicate holds, 1 otherwise.
Measured holds(bool ok, std::string detail = {}) {
    return {Real(ok ? 0 : 1), Real(0), std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_verification(const PrecisionContext& ctx) {
    // Shared inputs below are built at working precision too.
    ScopedPrecision outer(ctx.digits + kGuardDigits);
    Suite s(ctx);
    const Real tight = pow10(-25);
    const Real t20 = pow10(-20);

    // numerics
    s.run("numerics", "zeta_prime_two_routes", [&] {
        ScopedPrecision g(ctx.digits + kGuardDigits);
        Real a = zeta_prime_minus_one(ctx);
        Real b = Real(1) / 12 - glaisher_log(ctx);
        return bounded(mp::abs(a - b), pow10(-static_cast<int>(ctx.digits) + 10));
    });
    s.run("numerics", "gauss_jacobi_polynomial_exact", [&] {
        // int (1-x)^{1/2} (1+x)^{-1/2} (1+x)^2 dx = 2^{3} B(3/2, 5/2)
        auto rule = gauss_jacobi(8, Real(0.5), Real(-0.5), ctx.digits + kGuardDigits);
        Real v = 0;
        for (size_t i = 0; i < rule->size(); ++i) v += rule->w[i] * (1 + rule->x[i]) * (1 + rule->x[i]);
        return bounded(rel(v, 8 * beta_function(Real(1.5), Real(2.5), ctx)), pow10(-static_cast<int>(ctx.digits)));
    });
    s.run("numerics", "trapezoid_circle_residue", [&] {
        auto r = trapezoid_circle([](const Complex& z) { return Complex(Real(1)) / z; }, Complex(Real(0)), Real(1),
                                  pow10(-static_cast<int>(ctx.digits)), 8, 64);
        return bounded(abs(r.value - Complex(Real(0), 2 * pi_value())), pow10(-static_cast<int>(ctx.digits)));
    });
    s.run("numerics", "incomplete_gamma_exponential", [&] {
        Real mu("0.8");
        return bounded(rel(upper_incomplete_gamma(Real(1), mu, ctx), mp::exp(-mu)), pow10(-static_cast<int>(ctx.digits)));
    });
    s.run("numerics", "tanh_sinh_endpoint_singularity", [&] {
        Real v = tanh_sinh([](const Real& x) { return 1 / mp::sqrt(x); }, Real(0), Real(1), pow10(-40));
        return bounded(mp::abs(v - 2), pow10(-30));
    });

    s.run("numerics", "gauss_jacobi_16_half_weight", [&] {
        auto rule = gauss_jacobi(16, Real(0.5), Real(-0.5), ctx.digits + kGuardDigits);
        Real v = 0;
        for (size_t i = 0; i < rule->size(); ++i) v += rule->w[i];
        return bounded(mp::abs(v - pi_value()), pow10(-30));
    });
    s.run("numerics", "gauss_legendre_monomials", [&] {
        auto rule = gauss_legendre(8, ctx.digits + kGuardDigits);
        Real r = 0;
        for (unsigned k = 0; k <= 15; k += 2) {
            Real v = 0;
            for (size_t i = 0; i < rule->size(); ++i) v += rule->w[i] * mp::pow(rule->x[i], k);
            r = rmax(r, rel(v, Real(2) / (k + 1)));
        }
        return bounded(r, pow10(-static_cast<int>(ctx.digits) + 10));
    });
    s.run("numerics", "trapezoid_geometric_convergence", [&] {
        // pole at distance 1/2 from the centre of the unit circle
        auto f = [](const Complex& z) { return Complex(Real(1)) / z; };
        auto at = [&](unsigned n) {
            return trapezoid_circle(f, Complex(Real(0.5)), Real(1), Real(0), n, n).value;
        };
        bool ok = true;
        std::string detail;
        for (unsigned n : {8u, 16u, 32u}) {
            Real e1 = abs(at(n) - at(4 * n)), e2 = abs(at(2 * n) - at(8 * n));
            ok = ok && e2 <= e1 * e1;
            detail += to_string(e1, 3) + " ";
        }
        return holds(ok, detail);
    });
    s.run("numerics", "brent_deterministic", [&] {
        auto f = [](const Real& x) { return x * x - 2; };
        Real a = brent_root(f, Real(1), Real(2), pow10(-60), ctx);
        Real b = brent_root(f, Real(1), Real(2), pow10(-60), ctx);
        return holds(a == b && mp::abs(a * a - 2) < pow10(-55));
    });

    // equilibrium
    for (const char* mu_text : {"0.5", "2"}) {
        const std::string tag = std::string("beta2_closed_forms_mu_") + mu_text;
        s.run("equilibrium", tag, [&, mu_text] {
            Real mu(mu_text);
            SupportData sd = solve_support(Real(2), mu, ctx);
            Real r = rel(sd.a, mu + 4);
            r = rmax(r, rel(sd.rho, Real(1)));
            r = rmax(r, rel(sd.a_prime, Real(1)));
            r = rmax(r, rel(sd.f_at_a, Real(1)));
            return bounded(r, tight);
        });
    }
    s.run("equilibrium", "beta2_ell_at_mu_1", [&] {
        SupportData sd = solve_support(Real(2), Real(1), ctx);
        return bounded(rel(sd.ell, Real(-1.5)), tight);
    });
    const Real vb("1.5"), vm("0.2");
    SupportData sd15;
    IntegralBundle ib;
    s.run("equilibrium", "solve_support_edge_equation", [&] {
        sd15 = solve_support(vb, vm, ctx);
        ib = integral_bundle(vb, vm, sd15.a, ctx);
        return bounded(mp::abs(edge_equation(vb, vm, sd15.a, ctx)), tight);
    });
    s.run("equilibrium", "integral_identity_a", [&] {
        return bounded(rel(ib.I0, vm * ib.Im1 + 4 * pi_value() / vb), tight);
    });
    s.run("equilibrium", "integral_identity_b", [&] {
        const Real& a = sd15.a;
        Real rhs = 4 * pi_value() * (vb + 1) * (a + vm) / (vb * (vb + 2)) +
                   2 * pi_value() * (a + vm + vb * vm) * vm * sd15.rho / (vb * (vb + 2));
        return bounded(rel(ib.I1, rhs), tight);
    });
    s.run("equilibrium", "integral_identity_c", [&] { return bounded(rel(ib.Im2, (ib.Im1 - ib.J) / vm), tight); });
    s.run("equilibrium", "integral_identity_d", [&] {
        Real rhs = (2 * pi_value() - (sd15.a - vm) / 2 * ib.Im1) / ((vb / 2 - 1) * sd15.a);
        return bounded(rel(ib.J, rhs), tight);
    });
    s.run("equilibrium", "integral_identity_e", [&] {
        Real ap = a_prime_implicit(vb, vm, sd15.a, ctx);
        return bounded(rel(ib.Im1, 4 * pi_value() * ap / (sd15.a - vm * ap)), tight);
    });
    s.run("equilibrium", "integral_identity_f", [&] {
        Real ap = a_prime_implicit(vb, vm, sd15.a, ctx);
        Real fa = f_eval(sd15, Complex(sd15.a), ctx).re;
        return bounded(rel(fa, sd15.rho / ap), tight);
    });
    s.run("equilibrium", "f_at_mu_equals_rho", [&] {
        return bounded(rel(f_eval(sd15, Complex(vm), ctx).re, sd15.rho), tight);
    });
    s.run("equilibrium", "support_mass", [&] {
        return bounded(mp::abs(psi_tail_mass(sd15, vm, ctx) - 1), t20);
    });
    s.run("equilibrium", "full_line_mass_beta_half", [&] {
        return bounded(mp::abs(full_line_mass(Real(0.5), ctx) - 1), t20);
    });
    s.run("equilibrium", "psi_two_representations", [&] {
        Real x = (sd15.a + vm) / 2;
        return bounded(rel(psi_support(sd15, x, ctx), psi_support_alter(sd15, x, ctx)), tight);
    });
    s.run("equilibrium", "phi_single_vs_double", [&] {
        Complex z((sd15.a + vm) / 2, (sd15.a - vm) / 3);
        Complex p1 = phi_eval(sd15, z, ctx), p2 = phi_eval(sd15, z, ctx, PhiRoute::double_integral);
        return bounded(abs(p1 - p2), t20);
    });
    s.run("equilibrium", "phi_five_points", [&] {
        Real r = 0;
        const Real w = sd15.a - vm;
        for (int k = 1; k <= 5; ++k) {
            Complex z(vm + w * k / 6, w * Real(k % 2 ? 1 : -1) / (k + 2));
            r = rmax(r, abs(phi_eval(sd15, z, ctx) - phi_eval(sd15, z, ctx, PhiRoute::double_integral)));
        }
        return bounded(r, t20);
    });
    s.run("equilibrium", "f_at_mu_grid", [&] {
        Real r = 0;
        for (const char* b : {"0.5", "1", "3", "4.6"})
            for (const char* m : {"0.05", "2"}) {
                SupportData sd = solve_support(Real(b), Real(m), ctx);
                r = rmax(r, rel(f_eval(sd, Complex(sd.mu), ctx).re, sd.rho));
            }
        return bounded(r, tight);
    });
    s.run("equilibrium", "phi_real_vs_contour", [&] {
        SupportData sd = solve_support(Real(3), Real(0.8), ctx);
        Complex z(sd.a, (sd.a - sd.mu) / 4);
        Complex p1 = phi_eval(sd, z, ctx), p2 = phi_eval(sd, z, ctx, PhiRoute::single_contour);
        return bounded(abs(p1 - p2), t20);
    });
    s.run("equilibrium", "phi_boundary_sum_zero", [&] {
        Real x = (sd15.a + vm) / 2;
        return bounded(abs(phi_boundary(sd15, x, 1, ctx) + phi_boundary(sd15, x, -1, ctx)), t20);
    });
    s.run("equilibrium", "phi_boundary_mass", [&] {
        Real x = (sd15.a + vm) / 2;
        Complex lhs = phi_boundary(sd15, x, 1, ctx) * Real(2);
        Complex rhs(Real(0), 2 * pi_value() * psi_tail_mass(sd15, x, ctx));
        return bounded(abs(lhs - rhs), t20);
    });
    s.run("equilibrium", "phi_negative_beyond_edge", [&] {
        bool ok = true;
        for (const Real& x : {sd15.a + Real("0.1"), sd15.a + 1, 2 * sd15.a})
            ok = ok && phi_eval(sd15, Complex(x), ctx).re < 0;
        return holds(ok);
    });
    s.run("equilibrium", "phi_positive_off_support", [&] {
        const Real d("0.05");
        bool ok = true;
        for (const Real& x : {vm * (1 + d) + Real("0.01"), (sd15.a + vm) / 2, sd15.a - d - Real("0.01")})
            ok = ok && phi_eval(sd15, Complex(x, d * x / 2), ctx).re > 0;
        return holds(ok);
    });
    s.run("equilibrium", "euler_lagrange_equality", [&] {
        SupportData sd = solve_support(Real(3), Real(0.8), ctx);
        return bounded(mp::abs(euler_lagrange_residual(sd, (sd.a + sd.mu) / 2, ctx)), t20);
    });
    s.run("equilibrium", "euler_lagrange_inequality", [&] {
        SupportData sd = solve_support(Real(3), Real(0.8), ctx);
        return holds(euler_lagrange_residual(sd, sd.a + 1, ctx) < 0);
    });
    s.run("equilibrium", "g_prime_decay", [&] {
        SupportData sd = solve_support(Real(2), Real(1), ctx);
        Complex z(Real(1000000));
        return bounded(abs(g_prime_eval(sd, z, ctx) * z - Complex(Real(1))), pow10(-5));
    });
    s.run("equilibrium", "g_prime_finite_difference", [&] {
        Complex z(sd15.a + 1, Real(1));
        Real h = pow10(-12);
        Complex fd = (g_eval(sd15, z + Complex(h), ctx).g - g_eval(sd15, z - Complex(h), ctx).g) / (2 * h);
        Complex gp = g_prime_eval(sd15, z, ctx);
        return bounded(abs(fd - gp) / abs(gp), pow10(-8));
    });
    s.run("equilibrium", "rho_derivative", [&] {
        Real h = pow10(-8) * vm;
        Real fd = (solve_support(vb, vm + h, ctx).rho - solve_support(vb, vm - h, ctx).rho) / (2 * h);
        Real rhs = (vb / 2 - 1) / vm * sd15.rho + vb * (sd15.a_prime - 1) / (vm * (sd15.a - vm));
        return bounded(rel(fd, rhs), pow10(-6));
    });
    s.run("equilibrium", "f_prime_at_mu_identity", [&] {
        Real h = pow10(-8) * vm;
        Real drho = (solve_support(vb, vm + h, ctx).rho - solve_support(vb, vm - h, ctx).rho) / (2 * h);
        Real lhs = f_prime(sd15, Complex(vm), ctx).re / sd15.rho;
        Real rhs = 2 * drho / sd15.rho + (sd15.a_prime - 1) / (sd15.a - vm);
        return bounded(rel(lhs, rhs), pow10(-6));
    });
    s.run("equilibrium", "f_prime_at_a_identity", [&] {
        Real h = pow10(-8) * vm;
        Real dfa = (solve_support(vb, vm + h, ctx).f_at_a - solve_support(vb, vm - h, ctx).f_at_a) / (2 * h);
        Real lhs = f_prime(sd15, Complex(sd15.a), ctx).re / sd15.f_at_a * sd15.a_prime;
        Real rhs = Real(2) / 3 * dfa / sd15.f_at_a - (sd15.a_prime - 1) / (3 * (sd15.a - vm));
        return bounded(rel(lhs, rhs), pow10(-6));
    });
    s.run("equilibrium", "small_mu_beta2", [&] {
        SmallMuExpansion e = small_mu_expansion(Real(2), Real("0.01"), ctx);
        return bounded(rmax(rel(e.a0, Real(4)), rel(e.rho_approx, Real(1))), tight);
    });
    s.run("equilibrium", "scaling_beta2", [&] {
        Real lam = scaling_lambda_only(Real(2), 10, Real(1), ctx);
        return bounded(rel(lam, pi_value() / (mp::sqrt(Real(2)) * 10)), tight);
    });

    // asymptotics
    s.run("asymptotics", "C2_beta2_closed_form", [&] {
        SupportData sd = solve_support(Real(2), Real(1), ctx);
        return bounded(rel(coeffs_C({Real(2), Real(0.5)}, sd, ctx).C2, Real(-2.5)), tight);
    });
    s.run("asymptotics", "C2_alpha_free", [&] {
        Real a = coeffs_C({vb, Real("0.3")}, sd15, ctx).C2;
        Real b = coeffs_C({vb, Real("-0.7")}, sd15, ctx).C2;
        return bounded(mp::abs(a - b), pow10(-static_cast<int>(ctx.digits)));
    });
    {
        const Real b3(3), m3("0.5"), h = pow10(-6) * m3;
        const FreudParams p3{b3, Real("0.3")};
        HankelAsymptotics cp, cm;
        DiffCoeffs d3;
        s.run("asymptotics", "C2_derivative_is_D2", [&] {
            cp = coeffs_C(p3, solve_support(b3, m3 + h, ctx), ctx);
            cm = coeffs_C(p3, solve_support(b3, m3 - h, ctx), ctx);
            d3 = coeffs_D(p3, solve_support(b3, m3, ctx), ctx);
            return bounded(rel((cp.C2 - cm.C2) / (2 * h), d3.D2), pow10(-6));
        });
        s.run("asymptotics", "C1_derivative_is_D1",
              [&] { return bounded(rel((cp.C1 - cm.C1) / (2 * h), d3.D1), pow10(-6)); });
        s.run("asymptotics", "C0_derivative_is_D0_full",
              [&] { return bounded(rel((cp.C0 - cm.C0) / (2 * h), d3.D0_full), pow10(-6)); });
    }
    s.run("asymptotics", "C_derivatives_grid", [&] {
        Real r = 0;
        for (const char* b : {"0.5", "1.5", "4.6"})
            for (const char* m : {"0.2", "2"}) {
                const Real beta(b), mu(m), h = pow10(-6) * mu;
                const FreudParams p{beta, Real("0.5")};
                HankelAsymptotics hp = coeffs_C(p, solve_support(beta, mu + h, ctx), ctx);
                HankelAsymptotics hm = coeffs_C(p, solve_support(beta, mu - h, ctx), ctx);
                DiffCoeffs d = coeffs_D(p, solve_support(beta, mu, ctx), ctx);
                r = rmax(r, rel((hp.C2 - hm.C2) / (2 * h), d.D2));
                r = rmax(r, rel((hp.C1 - hm.C1) / (2 * h), d.D1));
            }
        return bounded(r, pow10(-6));
    });
    s.run("asymptotics", "D0_full_gap_small_mu", [&] {
        // |D0_full - D0| sqrt(mu) on a shrinking grid stays within a fixed multiple of its first value
        const FreudParams p{Real(2), Real("0.5")};
        std::vector<Real> v;
        for (int e : {2, 3, 4}) {
            const Real mu = pow10(-e);
            DiffCoeffs d = coeffs_D(p, solve_support(Real(2), mu, ctx), ctx);
            v.push_back(mp::abs(d.D0_full - d.D0) * mp::sqrt(mu));
        }
        const Real bound = 10 * v[0];
        return holds(v[1] <= bound && v[2] <= bound,
                     to_string(v[0], 4) + " " + to_string(v[1], 4) + " " + to_string(v[2], 4));
    });
    s.run("asymptotics", "c_hat_beta2", [&] {
        const Real s1(1);
        std::vector<Real> e;
        for (unsigned n : {100u, 1000u, 10000u}) {
            Scaling sc = scaling_lambda(Real(2), n, s1, ctx);
            SupportData sd = solve_support(Real(2), sc.mu, ctx);
            Real c0 = coeffs_C({Real(2), Real("0.5")}, sd, ctx).C0 + coeffs_C({Real(2), Real("-0.5")}, sd, ctx).C0;
            e.push_back(mp::abs(c0 - mp::log(Real(n)) / 4 + mp::log(s1) / 4 - c_hat(Real(2), ctx)));
        }
        return holds(e[1] < e[0] && e[2] < e[1] && e[2] < Real("0.01"),
                     to_string(e[0], 4) + " " + to_string(e[1], 4) + " " + to_string(e[2], 4));
    });
    s.run("asymptotics", "D2_negative_D1_zero_at_alpha_0", [&] {
        DiffCoeffs d = coeffs_D({vb, Real(0)}, sd15, ctx);
        return holds(d.D2 < 0 && d.D1 == 0);
    });
    s.run("asymptotics", "zn_asymptotics_beta2_n20", [&] {
        return bounded(mp::abs(log_zn_product(20, ctx) - log_zn_asymp(Real(2), 20, ctx).value), Real("0.01"));
    });
    s.run("asymptotics", "gap_constant_matches_sine", [&] {
        GapAsymptotics g = gap_asymp(Real(2), ctx);
        Real r = 0;
        for (const char* st : {"0.5", "1", "4"}) r = rmax(r, mp::abs(g.value_at(Real(st)) - sine_gap_asymp(Real(st), ctx)));
        return bounded(r, pow10(-30));
    });
    s.run("asymptotics", "gap_terms_continuous_at_beta_1", [&] {
        const Real b = 1 - pow10(-30);
        GapAsymptotics lo = gap_asymp(b, ctx), hi = gap_asymp(Real(1), ctx);
        return bounded(rmax(mp::abs(lo.leading - hi.leading), mp::abs(lo.log_coeff - hi.log_coeff)), t20);
    });
    s.run("asymptotics", "order_n_terms_cancel", [&] {
        return bounded(mp::abs(log_gap_ratio_asymp(Real(2), 30, Real(1), ctx).n_coefficient), t20);
    });
    s.run("asymptotics", "gap_ratio_vs_fredholm", [&] {
        Real a = log_gap_ratio_asymp(Real(2), 30, Real(1), ctx).value;
        Real b = sine_det(Real(1), 40, ctx).log_det;
        return bounded(mp::abs(a - b), Real("0.05"));
    });

    // oracle
    s.run("oracle", "hankel_size2_factorial_moments", [&] {
        return bounded(mp::abs(hankel_exact(2, {Real(2), Real(0)}, Real(0), ctx) + mp::log(Real(16))), tight);
    });
    s.run("oracle", "gaussian_moments", [&] {
        Real r = 0;
        for (unsigned j = 0; j <= 4; ++j) {
            Real want = mp::exp(ln_gamma(Real(j + 1) / 2, ctx)) / (2 * mp::pow(Real(3), Real(j + 1) / 2));
            r = rmax(r, rel(moment(j, {Real(4), Real(0)}, Real(0), Real(3), ctx), want));
        }
        return bounded(r, tight);
    });
    s.run("oracle", "orthonormality", [&] {
        PrecisionContext hc(60);
        MomentMatrix mm(4, {Real(2), Real(0.5)}, Real("0.8"), Real(4), hc);
        OrthoBasis basis(mm);
        // Gram matrix from the exact moments: C M C^T = I.
        Real r = 0;
        for (unsigned j = 0; j < 4; ++j)
            for (unsigned k = 0; k < 4; ++k) {
                const auto& cj = basis.coefficients(j);
                const auto& ck = basis.coefficients(k);
                Real g = 0;
                for (size_t p = 0; p < cj.size(); ++p)
                    for (size_t q = 0; q < ck.size(); ++q) g += cj[p] * ck[q] * mm.entries()(p, q);
                r = rmax(r, mp::abs(g - (j == k ? 1 : 0)));
            }
        return bounded(r, tight);
    });
    s.run("oracle", "kappa_product_recomposes", [&] {
        PrecisionContext hc(90);
        MomentMatrix mm(6, {Real(2), Real(0.5)}, Real("0.8"), Real(6), hc);
        OrthoBasis basis(mm);
        Real s2 = 0;
        for (unsigned k = 0; k < 6; ++k) s2 -= 2 * mp::log(basis.kappa(k));
        return bounded(mp::abs(s2 - mm.log_det()), pow10(-50));
    });
    s.run("oracle", "diff_identity_two_forms", [&] {
        DiffIdentity d = diff_identity_rhs(5, {vb, Real("0.3")}, Real("0.6"), ctx);
        return bounded(rel(d.cd, d.sum), tight);
    });
    s.run("oracle", "diff_identity_finite_difference", [&] {
        const FreudParams p{vb, Real("0.3")};
        const Real mu("0.6"), h = pow10(-10);
        Real fd = (hankel_exact(5, p, mu + h, ctx) - hankel_exact(5, p, mu - h, ctx)) / (2 * h);
        return bounded(rel(fd, diff_identity_rhs(5, p, mu, ctx).cd), pow10(-8));
    });
    s.run("oracle", "diff_identity_expansion_residual_decreases", [&] {
        const FreudParams p{Real(2), Real(0.5)};
        const Real mu("0.8");
        DiffCoeffs d = coeffs_D(p, solve_support(Real(2), mu, ctx), ctx);
        std::vector<Real> res;
        for (unsigned n : {4u, 8u, 16u}) {
            Real nn(n);
            res.push_back(mp::abs(diff_identity_rhs(n, p, mu, ctx).cd - (d.D2 * nn * nn + d.D1 * nn + d.D0)));
        }
        return holds(res[1] < res[0] && res[2] < res[1],
                     "residuals " + to_string(res[0], 4) + " " + to_string(res[1], 4) + " " + to_string(res[2], 4));
    });
    s.run("oracle", "precision_witness", [&] {
        const FreudParams p{Real(2), Real("0.5")};
        Real a = hankel_exact(8, p, Real("0.8"), PrecisionContext(100));
        Real b = hankel_exact(8, p, Real("0.8"), PrecisionContext(200));
        return bounded(mp::abs(a - b), pow10(-40));
    });
    s.run("oracle", "diff_identity_integrates", [&] {
        const FreudParams p{Real(2), Real("0.5")};
        const Real m1("0.5"), m2("0.8");
        auto rule = gauss_legendre(24, ctx.digits + kGuardDigits);
        Real sum = 0;
        for (size_t i = 0; i < rule->size(); ++i) {
            Real mu = (m1 + m2) / 2 + (m2 - m1) / 2 * rule->x[i];
            sum += rule->w[i] * diff_identity_rhs(4, p, mu, ctx).cd;
        }
        sum *= (m2 - m1) / 2;
        Real want = hankel_exact(4, p, m2, ctx) - hankel_exact(4, p, m1, ctx);
        return bounded(mp::abs(sum - want), pow10(-8));
    });
    s.run("oracle", "split_identity_direct", [&] {
        Real r = 0;
        for (const char* b : {"1", "2"})
            for (const char* l : {"0", "0.3"})
                r = rmax(r, mp::abs(fullline_hankel(4, Real(b), Real(l), ctx) -
                                       fullline_hankel_direct(4, Real(b), Real(l), ctx)));
        return bounded(r, t20);
    });
    s.run("oracle", "zn_product_vs_quadrature", [&] {
        Real r = 0;
        for (unsigned n = 1; n <= 2; ++n)
            r = rmax(r, mp::abs(log_gap_integral_quadrature(n, Real(2), Real(0), PrecisionContext(30)) -
                                   log_zn_product(n, ctx)));
        return bounded(r, pow10(-8));
    });
    s.run("oracle", "zn_product_vs_hankel", [&] {
        return bounded(mp::abs(fullline_hankel(4, Real(2), Real(0), ctx) - log_zn_product(4, ctx)), t20);
    });
    s.run("oracle", "finite_gap_monotone", [&] {
        Real prev = 1;
        bool ok = true;
        for (const char* l : {"0.05", "0.1", "0.2", "0.4"}) {
            Real f = finite_gap(8, Real(2), Real(l), ctx);
            ok = ok && f <= prev && f > 0;
            prev = f;
        }
        return holds(ok);
    });
    s.run("oracle", "kernel_forms_agree", [&] {
        FullLineKernel K(8, Real(2), ctx);
        Real r = mp::abs(K(Real("0.3"), Real("-0.5")) - K.sum_form(Real("0.3"), Real("-0.5")));
        r = rmax(r, mp::abs(K(Real("0.3"), Real("0.3")) - K.sum_form(Real("0.3"), Real("0.3"))));
        r = rmax(r, mp::abs(K(Real("0.3"), Real("-0.5")) - K(Real("-0.5"), Real("0.3"))));
        return bounded(r, t20);
    });

    // fredholm
    s.run("fredholm", "eigen_vs_lu", [&] {
        NystromResult r = sine_det_fixed(Real(3), 40, ctx);
        return bounded(mp::abs(r.log_det - r.log_det_lu), pow10(-10));
    });
    s.run("fredholm", "self_convergence_small_s", [&] {
        Real a = sine_det_fixed(Real("0.1"), 40, ctx).log_det, b = sine_det_fixed(Real("0.1"), 80, ctx).log_det;
        return bounded(mp::abs(a - b), pow10(-8));
    });
    s.run("fredholm", "trace_slope_at_zero", [&] {
        const Real s0 = pow10(-6);
        Real slope = sine_det_fixed(s0, 20, ctx).log_det / s0;
        return bounded(mp::abs(slope + 2), pow10(-5));
    });
    s.run("fredholm", "sine_det_vs_asymptotic_s4", [&] {
        return bounded(mp::abs(sine_det(Real(4), 40, ctx).log_det - sine_gap_asymp(Real(4), ctx)), Real("0.01"));
    });
    s.run("fredholm", "gap_probability_decreasing", [&] {
        Real prev = 1;
        bool ok = true;
        for (int k = 1; k <= 10; ++k) {
            Real v = sine_det(Real(k) / 2, 40, ctx).log_det;
            ok = ok && v < prev && v <= 0;
            prev = v;
        }
        return holds(ok);
    });
    s.run("fredholm", "asymptotic_residual_decreasing", [&] {
        std::vector<Real> r;
        for (int k = 2; k <= 5; ++k) r.push_back(mp::abs(sine_det(Real(k), 40, ctx).log_det - sine_gap_asymp(Real(k), ctx)));
        return holds(r[1] < r[0] && r[2] < r[1] && r[3] < r[2]);
    });
    s.run("fredholm", "kernel_convergence_beta2", [&] {
        KernelReport rep = kernel_convergence_report(Real(2), {10, 20, 40}, {{Real("0.3"), Real("-0.2")}}, ctx);
        bool strict = rep.rows[1].max_error < rep.rows[0].max_error && rep.rows[2].max_error < rep.rows[1].max_error;
        return holds(rep.monotone && strict, "error at n=40 " + to_string(rep.rows[2].max_error, 4));
    });
    return s.take();
}

}  // namespace freud
