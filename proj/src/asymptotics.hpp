#pragma once

#include "equilibrium.hpp"

#include <optional>

namespace freud {

struct HankelAsymptotics {
    Real C2;
    Real C1;
    Real C0;

    Real n_term(unsigned n) const;
};

struct DiffCoeffs {
    Real D2;
    Real D1;
    Real D0;
    Real D0_full;
};

HankelAsymptotics coeffs_C(const FreudParams& params, const SupportData& sd, const PrecisionContext& ctx);
Real log_htilde_asymp(unsigned n, const FreudParams& params, const SupportData& sd,
                      const PrecisionContext& ctx);

// f_prime_at_mu and f_prime_at_a are x-derivatives of f(x; mu) at x = mu and x = a(mu).
DiffCoeffs coeffs_D(const FreudParams& params, const SupportData& sd, const Real& f_prime_at_mu,
                    const Real& f_prime_at_a, const PrecisionContext& ctx);
DiffCoeffs coeffs_D(const FreudParams& params, const SupportData& sd, const PrecisionContext& ctx);

// log(Z_n / n!). The constant c(beta) is known only for beta >= 1.
struct ZnAsymptotics {
    Real value;
    bool partial = false;
};
Real zn_constant(const Real& beta, const PrecisionContext& ctx);
ZnAsymptotics log_zn_asymp(const Real& beta, unsigned n, const PrecisionContext& ctx);

struct GapAsymptotics {
    Real leading;
    Real power;  // 2 for beta >= 1, 2 beta below
    Real log_coeff;
    std::optional<Real> constant;

    // Leading terms plus the constant when it is known.
    Real value_at(const Real& s) const;
};
Real gap_constant(const PrecisionContext& ctx);
GapAsymptotics gap_asymp(const Real& beta, const PrecisionContext& ctx);
Real sine_gap_asymp(const Real& s, const PrecisionContext& ctx);

// Constant of C0(+1/2) + C0(-1/2) - (1/4) ln n + (1/4) ln s for beta > 1.
Real c_hat(const Real& beta, const PrecisionContext& ctx);

struct GapRatioAsymptotics {
    Real value;          // log(H_2n(lambda(2n,s)) / H_2n(0)) without error terms
    Real n_coefficient;  // coefficient of n in the assembly, zero identically
    Real lambda;         // lambda(2n, s)
    Real mu;             // mu(n, s)
    Real window_lower;   // (M / (rho n))^2
    bool in_window = false;
    bool constant_known = false;
};
GapRatioAsymptotics log_gap_ratio_asymp(const Real& beta, unsigned n, const Real& s,
                                        const PrecisionContext& ctx, const Real& guard_M = Real(10));

}  // namespace freud
