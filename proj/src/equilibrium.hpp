#pragma once

#include "numerics.hpp"

#include <optional>

namespace freud {

struct FreudParams {
    Real beta;
    Real alpha;
};

struct SupportData {
    Real beta;
    Real mu;
    Real a;
    Real a_prime;
    Real rho;
    Real f_at_a;
    Real ell;
    Real zeta_prime_at_mu;
    Real eta_prime_at_a;
};

struct IntegralBundle {
    Real I0;
    Real Im1;
    Real Im2;
    Real I1;
    Real J;
};

Real edge_A(const Real& beta, const PrecisionContext& ctx);

// Full-line equilibrium density on [-A, A].
Real density_full(const Real& beta, const Real& x, const PrecisionContext& ctx);
// Total mass of the full-line density, integrated numerically.
Real full_line_mass(const Real& beta, const PrecisionContext& ctx);

SupportData solve_support(const Real& beta, const Real& mu, const PrecisionContext& ctx);
IntegralBundle integral_bundle(const Real& beta, const Real& mu, const Real& a,
                               const PrecisionContext& ctx);

// Left-hand side of the edge equation minus one, as a function of a.
Real edge_equation(const Real& beta, const Real& mu, const Real& a, const PrecisionContext& ctx);
// da/dmu by implicit differentiation of the edge equation in the scaled variable.
Real a_prime_implicit(const Real& beta, const Real& mu, const Real& a, const PrecisionContext& ctx);

enum class FRoute { automatic, halfline, contour, regular };

Complex f_eval(const SupportData& sd, const Complex& z, const PrecisionContext& ctx,
               FRoute route = FRoute::automatic);
Complex f_eval(const Real& beta, const Real& mu, const Complex& z, const PrecisionContext& ctx);
Complex f_prime(const SupportData& sd, const Complex& z, const PrecisionContext& ctx,
                FRoute route = FRoute::automatic);
Complex f_prime(const Real& beta, const Real& mu, const Complex& z, const PrecisionContext& ctx);

// Density on (mu, a): from f, and from the nonsingular integral form.
Real psi_support(const SupportData& sd, const Real& x, const PrecisionContext& ctx);
Real psi_support_alter(const SupportData& sd, const Real& x, const PrecisionContext& ctx);
Real psi_support(const Real& beta, const Real& mu, const Real& x, const PrecisionContext& ctx);
// Mass of the density on [lo, a] for mu <= lo < a.
Real psi_tail_mass(const SupportData& sd, const Real& lo, const PrecisionContext& ctx);

enum class PhiRoute { single_real, single_contour, double_integral };

Complex phi_eval(const SupportData& sd, const Complex& z, const PrecisionContext& ctx,
                 PhiRoute route = PhiRoute::single_real);
Complex phi_eval(const Real& beta, const Real& mu, const Complex& z, const PrecisionContext& ctx);
// Boundary value on (0, a) from above (side = +1) or below (side = -1).
Complex phi_boundary(const SupportData& sd, const Real& x, int side, const PrecisionContext& ctx);

struct GValue {
    Complex g;
    Complex g_prime;
};
GValue g_eval(const SupportData& sd, const Complex& z, const PrecisionContext& ctx);
Complex g_prime_eval(const SupportData& sd, const Complex& z, const PrecisionContext& ctx);

// 2 * int log|x - y| psi(y) dy - x^{beta/2} - 2 ell, by direct quadrature.
Real euler_lagrange_residual(const SupportData& sd, const Real& x, const PrecisionContext& ctx);

struct SmallMuExpansion {
    Real a0;
    Real a1;           // 1/(beta-1) for beta > 1, the mu^{(beta+1)/2} coefficient for beta < 1
    Real rho_exponent; // power of mu in the leading rho term (0 for beta > 1)
    Real a_approx;
    Real rho_approx;
};
SmallMuExpansion small_mu_expansion(const Real& beta, const Real& mu, const PrecisionContext& ctx);

struct Scaling {
    Real lambda;
    Real mu;
};
Real scaling_lambda_only(const Real& beta, unsigned n, const Real& s, const PrecisionContext& ctx);
Scaling scaling_lambda(const Real& beta, unsigned n, const Real& s, const PrecisionContext& ctx);

}  // namespace freud
