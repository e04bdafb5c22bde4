#include "asymptotics.hpp"

namespace freud {

namespace mp = boost::multiprecision;

namespace {

unsigned work_digits(const PrecisionContext& ctx) { return ctx.digits + kGuardDigits; }

}  // namespace

Real HankelAsymptotics::n_term(unsigned n) const {
    const Real nn(n);
    return C2 * nn * nn + C1 * nn - mp::log(nn) / 6 + C0;
}

HankelAsymptotics coeffs_C(const FreudParams& params, const SupportData& sd, const PrecisionContext& ctx) {
    ScopedPrecision guard(work_digits(ctx));
    const Real& beta = params.beta;
    const Real& alpha = params.alpha;
    const Real& a = sd.a;
    const Real& mu = sd.mu;
    const Real& rho = sd.rho;
    const Real sa = mp::sqrt(a), sm = mp::sqrt(mu);
    HankelAsymptotics c;
    c.C2 = mp::log((a - mu) / 4) - 3 / beta - mu * rho / beta - mu * (a - mu) * rho * rho / (4 * beta);
    c.C1 = mp::log(2 * pi_value()) + 2 * alpha * mp::log((sa + sm) / 2) - 2 * alpha / beta +
           alpha / beta * sm * (sa - sm) * rho;
    c.C0 = 2 * zeta_prime_minus_one(ctx) - mp::log((a - mu) / 4 * rho) / 6 + mp::log(sd.a_prime) / 24 +
           alpha * alpha / 2 * mp::log((sa + sm) * (sa + sm) / (4 * sm * sa));
    return c;
}

Real log_htilde_asymp(unsigned n, const FreudParams& params, const SupportData& sd,
                      const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("log_htilde_asymp: n must be positive");
    ScopedPrecision guard(work_digits(ctx));
    return coeffs_C(params, sd, ctx).n_term(n);
}

DiffCoeffs coeffs_D(const FreudParams& params, const SupportData& sd, const Real& f_prime_at_mu,
                    const Real& f_prime_at_a, const PrecisionContext& ctx) {
    ScopedPrecision guard(work_digits(ctx));
    const Real& alpha = params.alpha;
    const Real& a = sd.a;
    const Real& mu = sd.mu;
    const Real& rho = sd.rho;
    const Real L = a - mu;
    const Real f_mu = rho;
    const Real& f_a = sd.f_at_a;
    const Real a2 = 2 * alpha * alpha;
    DiffCoeffs d;
    d.D2 = -L * rho * rho / 4;
    d.D1 = alpha / 2 * rho * (mp::sqrt(a / mu) - 1);
    d.D0 = -(a2 / mu + f_prime_at_mu / (2 * rho)) / 8;
    const Real r1 = mp::sqrt(a / mu) - 1;
    const Real r2 = 1 - mp::sqrt(mu / a);
    d.D0_full = (1 - a2 * r1 * r1 - L * f_prime_at_mu / (2 * f_mu)) / (8 * L) -
                f_mu / (f_a * L) * (1 - a2 * r2 * r2 + L * f_prime_at_a / (2 * f_a)) / 8;
    return d;
}

DiffCoeffs coeffs_D(const FreudParams& params, const SupportData& sd, const PrecisionContext& ctx) {
    ScopedPrecision guard(work_digits(ctx));
    const Real fpm = f_prime(sd, Complex(sd.mu), ctx).re;
    const Real fpa = f_prime(sd, Complex(sd.a), ctx).re;
    return coeffs_D(params, sd, fpm, fpa, ctx);
}

Real zn_constant(const Real& beta, const PrecisionContext& ctx) {
    if (beta < 1) throw DomainError("zn_constant: c(beta) is known only for beta >= 1");
    ScopedPrecision guard(work_digits(ctx));
    return zeta_prime_minus_one(ctx) - mp::log(beta / 2) / 12;
}

ZnAsymptotics log_zn_asymp(const Real& beta, unsigned n, const PrecisionContext& ctx) {
    if (!(beta > 0)) throw DomainError("beta must be positive");
    if (n < 2) throw DomainError("log_zn_asymp: n must be at least 2");
    ScopedPrecision guard(work_digits(ctx));
    const Real nn(n);
    const Real A = edge_A(beta, ctx);
    ZnAsymptotics z;
    z.value = (mp::log(A / 2) - 3 / (2 * beta)) * nn * nn + nn * mp::log(2 * pi_value()) - mp::log(nn) / 12;
    if (beta >= 1)
        z.value += zn_constant(beta, ctx);
    else
        z.partial = true;
    return z;
}

Real GapAsymptotics::value_at(const Real& s) const {
    Real v = leading * mp::pow(s, power) + log_coeff * mp::log(s);
    if (constant) v += *constant;
    return v;
}

Real gap_constant(const PrecisionContext& ctx) {
    ScopedPrecision guard(work_digits(ctx));
    return 3 * zeta_prime_minus_one(ctx) + mp::log(Real(2)) / 12 - mp::log(pi_value()) / 4;
}

GapAsymptotics gap_asymp(const Real& beta, const PrecisionContext& ctx) {
    if (!(beta > 0)) throw DomainError("beta must be positive");
    ScopedPrecision guard(work_digits(ctx));
    GapAsymptotics g;
    if (beta >= 1) {
        const Real pi = pi_value();
        g.leading = -pi * pi / 2;
        g.power = 2;
        g.log_coeff = Real(-1) / 4;
        g.constant = gap_constant(ctx);
    } else {
        const Real B = beta_function(beta / 2, Real(0.5), ctx);
        g.leading = -beta / 2 * B * B;
        g.power = 2 * beta;
        g.log_coeff = -beta / 4;
    }
    return g;
}

Real sine_gap_asymp(const Real& s, const PrecisionContext& ctx) {
    if (!(s > 0)) throw DomainError("s must be positive");
    ScopedPrecision guard(work_digits(ctx));
    const Real pi = pi_value();
    return -pi * pi / 2 * s * s - mp::log(pi * s) / 4 + 3 * zeta_prime_minus_one(ctx) + mp::log(Real(2)) / 12;
}

Real c_hat(const Real& beta, const PrecisionContext& ctx) {
    ScopedPrecision guard(work_digits(ctx));
    return 4 * zeta_prime_minus_one(ctx) - mp::log(beta / 2) / 12 - mp::log(pi_value()) / 4;
}

GapRatioAsymptotics log_gap_ratio_asymp(const Real& beta, unsigned n, const Real& s,
                                        const PrecisionContext& ctx, const Real& guard_M) {
    if (!(beta > 0)) throw DomainError("beta must be positive");
    if (n < 1) throw DomainError("log_gap_ratio_asymp: n must be positive");
    ScopedPrecision guard(work_digits(ctx));
    GapRatioAsymptotics out;
    Scaling sc = scaling_lambda(beta, n, s, ctx);
    out.lambda = scaling_lambda_only(beta, 2 * n, s, ctx);
    out.mu = sc.mu;
    SupportData sd = solve_support(beta, out.mu, ctx);
    const Real nn(n);
    const Real bound = guard_M / (sd.rho * nn);
    out.window_lower = bound * bound;
    out.in_window = out.mu >= out.window_lower;

    const HankelAsymptotics hp = coeffs_C({beta, Real(0.5)}, sd, ctx);
    const HankelAsymptotics hm = coeffs_C({beta, Real(-0.5)}, sd, ctx);
    const Real two_pi_log = mp::log(2 * pi_value());
    out.n_coefficient = hp.C1 + hm.C1 - 2 * two_pi_log;

    const Real A = edge_A(beta, ctx);
    Real v = -4 * nn * nn / beta * mp::log(Real(2)) + hp.n_term(n) + hm.n_term(n);
    v -= (mp::log(A / 2) - 3 / (2 * beta)) * 4 * nn * nn + 2 * nn * two_pi_log - mp::log(2 * nn) / 12;
    if (beta >= 1) {
        v -= zn_constant(beta, ctx);
        out.constant_known = true;
    }
    out.value = v;
    return out;
}

}  // namespace freud
