#include "equilibrium.hpp"

#include <cmath>

namespace freud {

namespace mp = boost::multiprecision;

namespace {

unsigned work_digits(const PrecisionContext& ctx) { return ctx.digits + kGuardDigits; }

Real rpow(const Real& x, const Real& e) { return mp::pow(x, e); }

Real min_real(const Real& a, const Real& b) { return a < b ? a : b; }
Real max_real(const Real& a, const Real& b) { return a > b ? a : b; }

void check_beta(const Real& beta) {
    if (!(beta > 0)) throw DomainError("beta must be positive");
}

void check_support_args(const Real& beta, const Real& mu) {
    check_beta(beta);
    if (!(mu > 0)) throw DomainError("mu must be positive");
}

void check_z(const Complex& z) {
    if (z.im == 0 && z.re <= 0) throw DomainError("z must not lie on (-inf, 0]");
}

// Distance from z to the cut (-inf, 0].
Real cut_distance(const Complex& z) {
    if (z.re >= 0) return abs(z);
    return mp::abs(z.im);
}

Complex f_halfline(const SupportData& sd, const Complex& z, unsigned W, bool derivative) {
    const Real& beta = sd.beta;
    const Real zabs = abs(z);
    // [0, 1] with the t^{beta/2-1} factor carried by the Jacobi weight.
    auto inner = [&](const Real& t) {
        Real root = mp::sqrt((t + sd.mu) / (t + sd.a));
        Complex den = z + t;
        if (derivative) return -(Complex(root) / (den * den));
        return Complex(root) / den;
    };
    Complex part1 = integrate_graded<Complex>(inner, Real(0), Real(1), beta / 2 - 1, Real(0),
                                              min_real(sd.mu, zabs), W);
    // [1, inf) after t = 1/v, weight v^{-beta/2}.
    auto tail = [&](const Real& v) {
        Real root = mp::sqrt((1 + sd.mu * v) / (1 + sd.a * v));
        Complex den = Complex(Real(1)) + z * v;
        if (derivative) return -(Complex(root * v) / (den * den));
        return Complex(root) / den;
    };
    Real d2 = 1 / max_real(sd.a, zabs);
    Complex part2 = integrate_graded<Complex>(tail, Real(0), Real(1), -beta / 2, Real(0), d2, W);
    const Real pi = pi_value();
    return (part1 + part2) * (beta / (2 * pi) * mp::sin(pi * beta / 2));
}

Complex f_regular(const SupportData& sd, const Complex& z, unsigned W) {
    const Real p = sd.beta / 2 - 1;
    const Complex zp = (z - Complex(sd.mu)) * pow(z, p);
    auto integrand = [&](const Real& t) {
        Complex diff = Complex(t) - z;
        if (diff.re == 0 && diff.im == 0) {
            return Complex(rpow(t, p) + p * (t - sd.mu) * rpow(t, p - 1));
        }
        return (Complex((t - sd.mu) * rpow(t, p)) - zp) / diff;
    };
    Complex v = integrate_graded<Complex>(integrand, sd.mu, sd.a, Real(-0.5), Real(-0.5), sd.mu, W);
    return v * (sd.beta / (2 * pi_value()));
}

// Predicted trapezoid nodes for the circle |t - a| = a - mu/2 and a pole at z.
Real contour_nodes_estimate(const SupportData& sd, const Complex& z, unsigned W) {
    const Real r = sd.a - sd.mu / 2;
    Real q = max_real((sd.a - sd.mu) / r, r / sd.a);
    q = max_real(q, abs(z - Complex(sd.a)) / r);
    if (!(q < 1)) return Real(1e30);
    return Real(W) * mp::log(Real(10)) / (-mp::log(q));
}

bool contour_eligible(const SupportData& sd, const Complex& z) {
    const Real r = sd.a - sd.mu / 2;
    return abs(z - Complex(sd.a)) < r - sd.mu / 4;
}

std::optional<Complex> f_contour(const SupportData& sd, const Complex& z, unsigned W, bool derivative) {
    if (!contour_eligible(sd, z)) return std::nullopt;
    const Real p = sd.beta / 2 - 1;
    auto integrand = [&](const Complex& t) {
        Complex ratio = sqrt(t - Complex(sd.mu)) / sqrt(t - Complex(sd.a));
        Complex den = t - z;
        if (derivative) den = den * den;
        return ratio * pow(t, p) / den;
    };
    const Real tol = pow10(-static_cast<int>(W - 5));
    CircleResult res = trapezoid_circle(integrand, Complex(sd.a), sd.a - sd.mu / 2, tol, 64, 1u << 14);
    if (!res.converged) return std::nullopt;
    const Real pi = pi_value();
    // beta / (4 pi i) times the loop integral.
    Complex v = res.value / (I_unit() * (4 * pi));
    return v * sd.beta;
}

Complex f_prime_cauchy(const SupportData& sd, const Complex& z, unsigned W) {
    const Real rc = cut_distance(z) / 3;
    auto integrand = [&](const Complex& w) {
        Complex d = w - z;
        return f_regular(sd, w, W) / (d * d);
    };
    const Real tol = pow10(-static_cast<int>(W - 5));
    CircleResult res = trapezoid_circle(integrand, z, rc, tol, 32, 4096);
    if (!res.converged) throw NumericError("f_prime: Cauchy contour did not converge");
    return res.value / (I_unit() * (2 * pi_value()));
}

Complex f_dispatch(const SupportData& sd, const Complex& z, unsigned W, FRoute route, bool derivative) {
    switch (route) {
        case FRoute::halfline:
            if (!(sd.beta < 2)) throw DomainError("half-line representation requires beta < 2");
            return f_halfline(sd, z, W, derivative);
        case FRoute::contour: {
            auto v = f_contour(sd, z, W, derivative);
            if (!v) throw NumericError("contour representation failed (placement or convergence)");
            return *v;
        }
        case FRoute::regular:
            return derivative ? f_prime_cauchy(sd, z, W) : f_regular(sd, z, W);
        case FRoute::automatic:
            break;
    }
    if (sd.beta < 2) return f_halfline(sd, z, W, derivative);
    if (contour_eligible(sd, z) && contour_nodes_estimate(sd, z, W) <= 4096) {
        auto v = f_contour(sd, z, W, derivative);
        if (v) return *v;
    }
    return derivative ? f_prime_cauchy(sd, z, W) : f_regular(sd, z, W);
}

// f_halfline at real y > 0 in real arithmetic.
Real f_halfline_real(const SupportData& sd, const Real& y, unsigned W) {
    const Real& beta = sd.beta;
    auto inner = [&](const Real& t) { return mp::sqrt((t + sd.mu) / (t + sd.a)) / (y + t); };
    Real part1 = integrate_graded<Real>(inner, Real(0), Real(1), beta / 2 - 1, Real(0), min_real(sd.mu, y), W);
    auto tail = [&](const Real& v) { return mp::sqrt((1 + sd.mu * v) / (1 + sd.a * v)) / (1 + y * v); };
    Real part2 = integrate_graded<Real>(tail, Real(0), Real(1), -beta / 2, Real(0), 1 / max_real(sd.a, y), W);
    const Real pi = pi_value();
    return (part1 + part2) * (beta / (2 * pi) * mp::sin(pi * beta / 2));
}

// f on the real axis inside the support, by the cheapest real-line representation.
Real f_real(const SupportData& sd, const Real& y, unsigned W) {
    if (sd.beta < 2) return f_halfline_real(sd, y, W);
    return f_regular(sd, Complex(y), W).re;
}

Real psi_from_f(const SupportData& sd, const Real& x, const Real& f) {
    return mp::sqrt((sd.a - x) / (x - sd.mu)) * f / (2 * pi_value());
}

}  // namespace

Real edge_A(const Real& beta, const PrecisionContext& ctx) {
    check_beta(beta);
    ScopedPrecision guard(work_digits(ctx));
    return rpow(beta_function(beta / 2, Real(0.5), ctx), 1 / beta);
}

Real density_full(const Real& beta, const Real& x, const PrecisionContext& ctx) {
    check_beta(beta);
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real A = edge_A(beta, ctx);
    const Real ax = mp::abs(x);
    const Real pi = pi_value();
    if (ax > A * (1 + pow10(-static_cast<int>(ctx.digits)))) throw DomainError("density_full: |x| > A");
    if (ax >= A) return Real(0);
    if (ax == 0) {
        if (beta > 1) return beta / ((beta - 1) * pi * A);
        throw DomainError("density_full: density diverges at 0 for beta <= 1");
    }
    auto integrand = [&](const Real& y) { return rpow(y, beta - 1) / mp::sqrt(y + ax); };
    const Real Y = 4 * ax;
    if (Y >= A) {
        Real v = integrate_graded<Real>(integrand, ax, A, Real(-0.5), Real(0), ax, W);
        return beta / (pi * rpow(A, beta)) * v;
    }
    Real v = integrate_graded<Real>(integrand, ax, Y, Real(-0.5), Real(0), ax, W);
    // Beyond 4|x| expand 1/sqrt(y^2 - x^2) in (x/y)^2 and integrate term by term.
    const unsigned K = static_cast<unsigned>(std::ceil(0.85 * W)) + 4;
    const Real x2 = ax * ax;
    Real c = 1, xp = 1;
    for (unsigned k = 0; k < K; ++k) {
        const Real e = beta - 1 - 2 * k;
        Real piece = e == 0 ? Real(mp::log(A / Y)) : Real((rpow(A, e) - rpow(Y, e)) / e);
        v += c * xp * piece;
        c *= Real(2 * k + 1) / (2 * k + 2);
        xp *= x2;
    }
    return beta / (pi * rpow(A, beta)) * v;
}

Real full_line_mass(const Real& beta, const PrecisionContext& ctx) {
    check_beta(beta);
    ScopedPrecision guard(work_digits(ctx));
    const Real A = edge_A(beta, ctx);
    auto psi = [&](const Real& x) { return density_full(beta, x, ctx); };
    return 2 * tanh_sinh(psi, Real(0), A, pow10(-static_cast<int>(ctx.digits)));
}

Real edge_equation(const Real& beta, const Real& mu, const Real& a, const PrecisionContext& ctx) {
    check_support_args(beta, mu);
    if (!(a > mu)) throw DomainError("edge_equation: a must exceed mu");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real p = beta / 2 - 1;
    auto integrand = [&](const Real& t) { return rpow(t, p); };
    Real v = integrate_graded<Real>(integrand, mu, a, Real(0.5), Real(-0.5), mu, W);
    return beta / (4 * pi_value()) * v - 1;
}

Real a_prime_implicit(const Real& beta, const Real& mu, const Real& a, const PrecisionContext& ctx) {
    check_support_args(beta, mu);
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real p = beta / 2 - 1;
    const Real L = a - mu;
    const Real d = mu / L;
    auto T = [&](const Real& y) { return mu + L * y; };
    Real K0 = integrate_graded<Real>([&](const Real& y) { return rpow(T(y), p); }, Real(0), Real(1),
                                     Real(0.5), Real(-0.5), d, W);
    Real K1 = integrate_graded<Real>([&](const Real& y) { return rpow(T(y), p - 1) * y; }, Real(0),
                                     Real(1), Real(0.5), Real(-0.5), d, W);
    Real K2 = integrate_graded<Real>([&](const Real& y) { return rpow(T(y), p - 1) * (1 - y); },
                                     Real(0), Real(1), Real(0.5), Real(-0.5), d, W);
    return (K0 - L * p * K2) / (K0 + L * p * K1);
}

IntegralBundle integral_bundle(const Real& beta, const Real& mu, const Real& a,
                               const PrecisionContext& ctx) {
    check_support_args(beta, mu);
    if (!(a > mu)) throw DomainError("integral_bundle: a must exceed mu");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    auto moment = [&](const Real& e, const Real& el) {
        return integrate_graded<Real>([&](const Real& t) { return rpow(t, e); }, mu, a, el,
                                      Real(-0.5), mu, W);
    };
    const Real h = beta / 2;
    IntegralBundle b;
    b.I0 = moment(h, Real(-0.5));
    b.Im1 = moment(h - 1, Real(-0.5));
    b.Im2 = moment(h - 2, Real(-0.5));
    b.I1 = moment(h + 1, Real(-0.5));
    b.J = moment(h - 2, Real(0.5));
    return b;
}

SupportData solve_support(const Real& beta, const Real& mu, const PrecisionContext& ctx) {
    check_support_args(beta, mu);
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real a0 = rpow(2 * beta_function(beta / 2, Real(0.5), ctx), 2 / beta);
    Real lo = mu * (1 + pow10(-10));
    Real hi = max_real(4 * a0, mu + 8 * a0);
    auto E = [&](const Real& a) { return edge_equation(beta, mu, a, ctx); };
    for (int i = 0; i < 200 && E(hi) < 0; ++i) hi *= 2;
    const Real tol = pow10(-static_cast<int>(W - 5));
    SupportData sd;
    sd.beta = beta;
    sd.mu = mu;
    sd.a = brent_root(E, lo, hi, tol, ctx);
    IntegralBundle b = integral_bundle(beta, mu, sd.a, ctx);
    const Real pi = pi_value();
    sd.rho = beta / (2 * pi) * b.Im1;
    sd.a_prime = sd.a * b.Im1 / (4 * pi + mu * b.Im1);
    sd.f_at_a = sd.rho / sd.a_prime;
    sd.ell = -b.I0 / (2 * pi) + mp::log((sd.a - mu) / 4);
    sd.zeta_prime_at_mu = sd.rho * sd.rho * (sd.a - mu);
    sd.eta_prime_at_a = rpow(sd.f_at_a / (2 * mp::sqrt(sd.a - mu)), Real(2) / 3);
    return sd;
}

Complex f_eval(const SupportData& sd, const Complex& z, const PrecisionContext& ctx, FRoute route) {
    check_z(z);
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    return f_dispatch(sd, z, W, route, false);
}

Complex f_eval(const Real& beta, const Real& mu, const Complex& z, const PrecisionContext& ctx) {
    return f_eval(solve_support(beta, mu, ctx), z, ctx);
}

Complex f_prime(const SupportData& sd, const Complex& z, const PrecisionContext& ctx, FRoute route) {
    check_z(z);
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    return f_dispatch(sd, z, W, route, true);
}

Complex f_prime(const Real& beta, const Real& mu, const Complex& z, const PrecisionContext& ctx) {
    return f_prime(solve_support(beta, mu, ctx), z, ctx);
}

Real psi_support(const SupportData& sd, const Real& x, const PrecisionContext& ctx) {
    if (!(x > sd.mu) || !(x < sd.a)) throw DomainError("psi_support: x outside (mu, a)");
    ScopedPrecision guard(work_digits(ctx));
    return psi_from_f(sd, x, f_eval(sd, Complex(x), ctx).re);
}

Real psi_support_alter(const SupportData& sd, const Real& x, const PrecisionContext& ctx) {
    if (!(x > sd.mu) || !(x < sd.a)) throw DomainError("psi_support: x outside (mu, a)");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    return psi_from_f(sd, x, f_regular(sd, Complex(x), W).re);
}

Real psi_support(const Real& beta, const Real& mu, const Real& x, const PrecisionContext& ctx) {
    return psi_support(solve_support(beta, mu, ctx), x, ctx);
}

Real psi_tail_mass(const SupportData& sd, const Real& lo, const PrecisionContext& ctx) {
    if (lo < sd.mu || !(lo < sd.a)) throw DomainError("psi_tail_mass: lower limit outside [mu, a)");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real two_pi = 2 * pi_value();
    if (lo == sd.mu) {
        auto F = [&](const Real& y) { return f_real(sd, y, W) / two_pi; };
        return integrate_graded<Real>(F, sd.mu, sd.a, Real(-0.5), Real(0.5), sd.mu, W);
    }
    auto F = [&](const Real& y) { return f_real(sd, y, W) / (two_pi * mp::sqrt(y - sd.mu)); };
    return integrate_graded<Real>(F, lo, sd.a, Real(0), Real(0.5), lo - sd.mu, W);
}

namespace {

Complex phi_log_part(const SupportData& sd, const Complex& z, Complex& R) {
    Complex sm = sqrt(z - Complex(sd.mu));
    Complex sa = sqrt(z - Complex(sd.a));
    R = sa * sm;
    return log((sm + sa) / mp::sqrt(sd.a - sd.mu)) * Real(2);
}

Complex phi_single_real(const SupportData& sd, const Complex& z, unsigned W) {
    Complex R;
    Complex L = phi_log_part(sd, z, R);
    const Real h = sd.beta / 2;
    const Complex zh = pow(z, h);
    auto integrand = [&](const Real& x) {
        Complex diff = Complex(x) - z;
        if (diff.re == 0 && diff.im == 0) return Complex(h * rpow(x, h - 1));
        return (Complex(rpow(x, h)) - zh) / diff;
    };
    Complex Q = integrate_graded<Complex>(integrand, sd.mu, sd.a, Real(-0.5), Real(-0.5), sd.mu, W);
    return L - R * Q / (2 * pi_value());
}

Complex phi_single_contour(const SupportData& sd, const Complex& z, unsigned W) {
    if (!contour_eligible(sd, z)) throw DomainError("phi contour: z not inside the circle");
    Complex R;
    Complex L = phi_log_part(sd, z, R);
    const Real h = sd.beta / 2;
    auto integrand = [&](const Complex& x) {
        Complex den = sqrt(x - Complex(sd.a)) * sqrt(x - Complex(sd.mu)) * (x - z);
        return pow(x, h) / den;
    };
    const Real tol = pow10(-static_cast<int>(W - 5));
    CircleResult res = trapezoid_circle(integrand, Complex(sd.a), sd.a - sd.mu / 2, tol, 64, 1u << 14);
    if (!res.converged) throw NumericError("phi contour: trapezoid did not converge");
    return L - R * res.value / (I_unit() * (4 * pi_value()));
}

Complex phi_double(const SupportData& sd, const Complex& z, const PrecisionContext& ctx, unsigned W) {
    const Complex dz = z - Complex(sd.a);
    const Complex sstar = Complex(sd.mu - sd.a) / dz;
    const Complex s0 = Complex(-sd.a) / dz;
    Real d = min_real(abs(sstar), abs(s0));
    auto integrand = [&](const Real& s) {
        Complex xi = Complex(sd.a) + dz * s;
        return f_eval(sd, xi, ctx) / sqrt(xi - Complex(sd.mu));
    };
    Complex v = integrate_graded<Complex>(integrand, Real(0), Real(1), Real(0.5), Real(0), d, W);
    Complex pref = dz * sqrt(dz);
    return -(pref * v) / Real(2);
}

}  // namespace

Complex phi_eval(const SupportData& sd, const Complex& z, const PrecisionContext& ctx, PhiRoute route) {
    if (z.im == 0 && z.re <= sd.a) throw DomainError("phi_eval: z on (-inf, a]; use phi_boundary");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    switch (route) {
        case PhiRoute::single_contour: return phi_single_contour(sd, z, W);
        case PhiRoute::double_integral: return phi_double(sd, z, ctx, W);
        case PhiRoute::single_real: break;
    }
    return phi_single_real(sd, z, W);
}

Complex phi_eval(const Real& beta, const Real& mu, const Complex& z, const PrecisionContext& ctx) {
    return phi_eval(solve_support(beta, mu, ctx), z, ctx);
}

Complex phi_boundary(const SupportData& sd, const Real& x, int side, const PrecisionContext& ctx) {
    if (!(x > 0) || !(x < sd.a)) throw DomainError("phi_boundary: x outside (0, a)");
    if (side != 1 && side != -1) throw DomainError("phi_boundary: side must be +1 or -1");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real eps = pow10(-static_cast<int>(ctx.digits / 2)) * x * side;
    Complex far = phi_single_real(sd, Complex(x, eps), W);
    Complex near = phi_single_real(sd, Complex(x, eps / 2), W);
    return near * Real(2) - far;
}

Complex g_prime_eval(const SupportData& sd, const Complex& z, const PrecisionContext& ctx) {
    if (z.im == 0 && z.re <= sd.a) throw DomainError("g_prime: z on (-inf, a]");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real p = sd.beta / 2 - 1;
    auto integrand = [&](const Real& x) { return Complex(rpow(x, p)) / (Complex(x) - z); };
    Complex v = integrate_graded<Complex>(integrand, sd.mu, sd.a, Real(0.5), Real(-0.5), sd.mu, W);
    Complex ratio = sqrt(z - Complex(sd.a)) / sqrt(z - Complex(sd.mu));
    return -(ratio * v) * (sd.beta / (4 * pi_value()));
}

GValue g_eval(const SupportData& sd, const Complex& z, const PrecisionContext& ctx) {
    ScopedPrecision guard(work_digits(ctx));
    GValue out;
    out.g = phi_eval(sd, z, ctx) + pow(z, sd.beta / 2) / Real(2) + Complex(sd.ell);
    out.g_prime = g_prime_eval(sd, z, ctx);
    return out;
}

namespace {

// int_0^delta G(v) log v dv with v = delta u^k, removing the endpoint log singularity.
template <class G>
Real log_endpoint_panel(G&& g, const Real& delta, unsigned W) {
    const unsigned k = 24;
    auto rule = gauss_legendre(panel_nodes(W), W);
    const Real ld = mp::log(delta);
    Real acc = 0;
    for (size_t i = 0; i < rule->size(); ++i) {
        Real u = (rule->x[i] + 1) / 2;
        Real uk1 = mp::pow(u, static_cast<int>(k - 1));
        Real v = delta * uk1 * u;
        acc += rule->w[i] * g(v) * (ld + k * mp::log(u)) * k * delta * uk1;
    }
    return acc / 2;
}

}  // namespace

Real euler_lagrange_residual(const SupportData& sd, const Real& x, const PrecisionContext& ctx) {
    if (!(x > sd.mu)) throw DomainError("euler_lagrange_residual: x must exceed mu");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real two_pi = 2 * pi_value();
    auto fval = [&](const Real& y) { return f_real(sd, y, W); };
    auto psi = [&](const Real& y) { return psi_from_f(sd, y, fval(y)); };
    Real total = 0;
    if (x < sd.a) {
        // Left of x: hard edge at mu, log singularity at x.
        const Real m1 = (sd.mu + x) / 2;
        total += integrate_graded<Real>(
            [&](const Real& y) { return mp::log(x - y) * mp::sqrt(sd.a - y) * fval(y) / two_pi; },
            sd.mu, m1, Real(-0.5), Real(0), sd.mu, W);
        const Real Ll = x - m1, dl = Ll / 16;
        auto gl = [&](const Real& v) { return psi(x - v); };
        total += integrate_graded<Real>([&](const Real& v) { return mp::log(v) * gl(v); }, dl, Ll,
                                        Real(0), Real(0), dl, W);
        total += log_endpoint_panel(gl, dl, W);
        // Right of x: log singularity at x, soft edge at a.
        const Real m2 = (x + sd.a) / 2;
        const Real Lr = m2 - x, dr = Lr / 16;
        auto gr = [&](const Real& v) { return psi(x + v); };
        total += log_endpoint_panel(gr, dr, W);
        total += integrate_graded<Real>([&](const Real& v) { return mp::log(v) * gr(v); }, dr, Lr,
                                        Real(0), Real(0), dr, W);
        total += integrate_graded<Real>(
            [&](const Real& y) { return mp::log(y - x) * fval(y) / (two_pi * mp::sqrt(y - sd.mu)); },
            m2, sd.a, Real(0), Real(0.5), m2 - x, W);
    } else {
        const Real m = (sd.mu + sd.a) / 2;
        total += integrate_graded<Real>(
            [&](const Real& y) { return mp::log(x - y) * mp::sqrt(sd.a - y) * fval(y) / two_pi; },
            sd.mu, m, Real(-0.5), Real(0), sd.mu, W);
        const Real gap = x - sd.a;
        auto F = [&](const Real& v) {
            Real y = sd.a - v;
            return mp::log(gap + v) * fval(y) / (two_pi * mp::sqrt(y - sd.mu));
        };
        total += integrate_graded<Real>(F, Real(0), sd.a - m, Real(0.5), Real(0),
                                        gap > 0 ? gap : Real(sd.a - m), W);
    }
    return 2 * total - rpow(x, sd.beta / 2) - 2 * sd.ell;
}

SmallMuExpansion small_mu_expansion(const Real& beta, const Real& mu, const PrecisionContext& ctx) {
    check_support_args(beta, mu);
    ScopedPrecision guard(work_digits(ctx));
    const Real pi = pi_value();
    const Real B = beta_function(beta / 2, Real(0.5), ctx);
    SmallMuExpansion e;
    e.a0 = rpow(2 * B, 2 / beta);
    if (beta > 1) {
        e.a1 = 1 / (beta - 1);
        e.rho_exponent = 0;
        e.a_approx = e.a0 + e.a1 * mu;
        e.rho_approx = 2 * beta / ((beta - 1) * e.a0);
    } else if (beta == 1) {
        e.a1 = 0;
        e.rho_exponent = 0;
        e.a_approx = 4 * pi * pi - mu * mp::log(mu) / 2;
        e.rho_approx = -mp::log(mu) / (4 * pi * pi);
    } else {
        e.a1 = mp::sqrt(e.a0) / (2 * pi * (beta + 1)) * B * mp::tan(pi * beta / 2);
        e.rho_exponent = (beta - 1) / 2;
        e.a_approx = e.a0 + e.a1 * rpow(mu, (beta + 1) / 2);
        e.rho_approx = beta / (2 * pi * mp::sqrt(e.a0)) * beta_function((1 - beta) / 2, Real(0.5), ctx) *
                       rpow(mu, e.rho_exponent);
    }
    return e;
}

Real scaling_lambda_only(const Real& beta, unsigned n, const Real& s, const PrecisionContext& ctx) {
    check_beta(beta);
    if (n < 1) throw DomainError("scaling: n must be positive");
    if (!(s > 0)) throw DomainError("scaling: s must be positive");
    ScopedPrecision guard(work_digits(ctx));
    const Real pi = pi_value();
    if (beta > 1) return (beta - 1) / beta * pi * edge_A(beta, ctx) * s / n;
    if (beta == 1) {
        if (n < 2) throw DomainError("scaling: beta = 1 needs n >= 2");
        return pi * edge_A(beta, ctx) * s / (n * mp::log(Real(n)));
    }
    return rpow(2 * pi / mp::tan(pi * beta / 2), 1 / beta) * s / rpow(Real(n), 1 / beta);
}

Scaling scaling_lambda(const Real& beta, unsigned n, const Real& s, const PrecisionContext& ctx) {
    ScopedPrecision guard(work_digits(ctx));
    Scaling out;
    out.lambda = scaling_lambda_only(beta, n, s, ctx);
    Real l2 = scaling_lambda_only(beta, 2 * n, s, ctx);
    out.mu = rpow(Real(2), 2 / beta) * l2 * l2;
    return out;
}

}  // namespace freud
