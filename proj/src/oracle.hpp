#pragma once

#include "equilibrium.hpp"
#include "linalg.hpp"

namespace freud {

// int_mu^inf x^{j+alpha} exp(-nweight x^{beta/2}) dx
Real moment(unsigned j, const FreudParams& params, const Real& mu, const Real& nweight,
            const PrecisionContext& ctx);

// Hankel moment matrix on [mu, inf) and its Cholesky factor, built at ctx.digits.
class MomentMatrix {
public:
    MomentMatrix(unsigned size, const FreudParams& params, const Real& mu, const Real& nweight,
                 const PrecisionContext& ctx);

    unsigned size() const { return size_; }
    const Matrix& entries() const { return m_; }
    const Matrix& chol() const { return l_; }
    Real log_det() const;
    const FreudParams& params() const { return params_; }
    const Real& mu() const { return mu_; }
    const Real& nweight() const { return nweight_; }
    unsigned digits() const { return digits_; }

private:
    unsigned size_;
    FreudParams params_;
    Real mu_;
    Real nweight_;
    unsigned digits_;
    Matrix m_;
    Matrix l_;
};

// Orthonormal polynomials p_0..p_{size-1} for the weight of a MomentMatrix.
class OrthoBasis {
public:
    explicit OrthoBasis(const MomentMatrix& mm);

    unsigned size() const { return size_; }
    Real kappa(unsigned k) const;
    Real eval(unsigned k, const Real& x) const;
    Real derivative(unsigned k, const Real& x) const;
    // Monomial coefficients of p_k, lowest degree first.
    const std::vector<Real>& coefficients(unsigned k) const;

private:
    unsigned size_;
    unsigned digits_;
    std::vector<std::vector<Real>> coef_;
};

// Digits used for an n x n Hankel matrix: max(ctx.digits, 30 + 6 n).
unsigned hankel_digits(unsigned nsize, const PrecisionContext& ctx);

// log det of the size-n matrix with weight x^alpha exp(-n x^{beta/2}) on [mu, inf).
Real hankel_exact(unsigned nsize, const FreudParams& params, const Real& mu, const PrecisionContext& ctx);

struct DiffIdentity {
    Real cd;   // confluent Christoffel-Darboux form
    Real sum;  // -w(mu) sum_{j<n} p_j(mu)^2
};
DiffIdentity diff_identity_rhs(unsigned nsize, const FreudParams& params, const Real& mu,
                               const PrecisionContext& ctx);

// log H_{2n}(lambda) for the full-line weight exp(-2n |x|^beta), assembled from the
// two half-line determinants at alpha = +-1/2.
Real fullline_hankel(unsigned nsize_even, const Real& beta, const Real& lambda, const PrecisionContext& ctx);
// Same determinant from the full-line moment matrix directly.
Real fullline_hankel_direct(unsigned nsize, const Real& beta, const Real& lambda,
                            const PrecisionContext& ctx);
Real finite_gap(unsigned nsize_even, const Real& beta, const Real& lambda, const PrecisionContext& ctx);
Real log_finite_gap(unsigned nsize_even, const Real& beta, const Real& lambda, const PrecisionContext& ctx);

// Christoffel-Darboux kernel of size n for exp(-n |x|^beta) on the line. x == y uses the
// confluent limit.
class FullLineKernel {
public:
    FullLineKernel(unsigned nsize, const Real& beta, const PrecisionContext& ctx);

    Real operator()(const Real& x, const Real& y) const;
    // sum_{k<n} P_k(x) P_k(y) times the weight factor.
    Real sum_form(const Real& x, const Real& y) const;
    // Full-line orthonormal polynomial P_k and its leading coefficient.
    Real poly(unsigned k, const Real& t) const;
    Real poly_derivative(unsigned k, const Real& t) const;
    Real chi(unsigned k) const;
    unsigned size() const { return n_; }

private:
    unsigned n_;
    Real beta_;
    unsigned digits_;
    Real c_;  // 2^{2/beta}
    std::unique_ptr<OrthoBasis> even_;
    std::unique_ptr<OrthoBasis> odd_;
};

Real kernel_eval(unsigned nsize, const Real& beta, const Real& x, const Real& y, const PrecisionContext& ctx);

// log(Z_n / n!) at beta = 2 from the product of factorials.
Real log_zn_product(unsigned n, const PrecisionContext& ctx);
// (1/n!) times the n-fold integral of prod |x_j - x_k|^2 prod exp(-n |x_j|^beta) over
// (R \ [-lambda, lambda])^n by tensor-product quadrature, n <= 3. Returns the logarithm.
Real log_gap_integral_quadrature(unsigned n, const Real& beta, const Real& lambda,
                                 const PrecisionContext& ctx);

}  // namespace freud
