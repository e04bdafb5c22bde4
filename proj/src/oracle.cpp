#include "oracle.hpp"

#include <algorithm>
#include <cmath>

namespace freud {

namespace mp = boost::multiprecision;

namespace {

unsigned work_digits(const PrecisionContext& ctx) { return ctx.digits + kGuardDigits; }

void check_params(const FreudParams& params) {
    if (!(params.beta > 0)) throw DomainError("beta must be positive");
}

}  // namespace

Real moment(unsigned j, const FreudParams& params, const Real& mu, const Real& nweight,
            const PrecisionContext& ctx) {
    check_params(params);
    if (!(j + params.alpha > -1)) throw DomainError("moment: j + alpha must exceed -1");
    if (mu < 0) throw DomainError("moment: mu must be nonnegative");
    if (!(nweight > 0)) throw DomainError("moment: weight parameter must be positive");
    ScopedPrecision guard(work_digits(ctx));
    const Real a = 2 * (j + params.alpha + 1) / params.beta;
    const Real x = nweight * mp::pow(mu, params.beta / 2);
    return 2 / params.beta * mp::pow(nweight, -a) * upper_incomplete_gamma(a, x, ctx);
}

MomentMatrix::MomentMatrix(unsigned size, const FreudParams& params, const Real& mu, const Real& nweight,
                           const PrecisionContext& ctx)
    : size_(size), params_(params), mu_(mu), nweight_(nweight), digits_(ctx.digits), m_(size) {
    if (size < 1) throw DomainError("moment matrix: size must be positive");
    ScopedPrecision guard(work_digits(ctx));
    std::vector<Real> mom(2 * size - 1);
    for (unsigned k = 0; k < mom.size(); ++k) mom[k] = moment(k, params, mu, nweight, ctx);
    for (unsigned j = 0; j < size; ++j)
        for (unsigned k = 0; k < size; ++k) m_(j, k) = mom[j + k];
    l_ = cholesky(m_);
}

Real MomentMatrix::log_det() const {
    ScopedPrecision guard(digits_ + kGuardDigits);
    Real s = 0;
    for (unsigned k = 0; k < size_; ++k) s += mp::log(l_(k, k));
    return 2 * s;
}

OrthoBasis::OrthoBasis(const MomentMatrix& mm) : size_(mm.size()), digits_(mm.digits()) {
    ScopedPrecision guard(digits_ + kGuardDigits);
    const Matrix& l = mm.chol();
    // Rows of L^{-1}: p(x) = L^{-1} (1, x, x^2, ...).
    coef_.assign(size_, {});
    for (unsigned k = 0; k < size_; ++k) {
        std::vector<Real> row(k + 1, Real(0));
        row[k] = 1 / l(k, k);
        for (unsigned j = k; j-- > 0;) {
            // Column j of row k: -(sum_{i=j+1..k} row[i] L(i, j)) / L(j, j).
            Real s = 0;
            for (unsigned i = j + 1; i <= k; ++i) s += row[i] * l(i, j);
            row[j] = -s / l(j, j);
        }
        coef_[k] = std::move(row);
    }
}

Real OrthoBasis::kappa(unsigned k) const {
    if (k >= size_) throw DomainError("ortho basis: index out of range");
    return coef_[k][k];
}

const std::vector<Real>& OrthoBasis::coefficients(unsigned k) const {
    if (k >= size_) throw DomainError("ortho basis: index out of range");
    return coef_[k];
}

Real OrthoBasis::eval(unsigned k, const Real& x) const {
    const auto& c = coefficients(k);
    ScopedPrecision guard(digits_ + kGuardDigits);
    Real v = 0;
    for (size_t j = c.size(); j-- > 0;) v = v * x + c[j];
    return v;
}

Real OrthoBasis::derivative(unsigned k, const Real& x) const {
    const auto& c = coefficients(k);
    ScopedPrecision guard(digits_ + kGuardDigits);
    Real v = 0;
    for (size_t j = c.size(); j-- > 1;) v = v * x + c[j] * j;
    return v;
}

unsigned hankel_digits(unsigned nsize, const PrecisionContext& ctx) {
    return std::max(ctx.digits, 30 + 6 * nsize);
}

namespace {

// Builds a moment matrix, doubling the digits on a failed factorization.
template <class Build>
auto with_retries(unsigned digits, Build&& build) {
    for (int attempt = 0;; ++attempt) {
        try {
            return build(PrecisionContext(digits));
        } catch (const NumericError&) {
            if (attempt == 3) throw NumericError("precision insufficient: Hankel factorization failed");
            digits *= 2;
        }
    }
}

}  // namespace

Real hankel_exact(unsigned nsize, const FreudParams& params, const Real& mu, const PrecisionContext& ctx) {
    check_params(params);
    if (nsize < 1) throw DomainError("hankel_exact: size must be positive");
    if (mu < 0) throw DomainError("hankel_exact: mu must be nonnegative");
    return with_retries(hankel_digits(nsize, ctx), [&](const PrecisionContext& hc) {
        return MomentMatrix(nsize, params, mu, Real(nsize), hc).log_det();
    });
}

DiffIdentity diff_identity_rhs(unsigned nsize, const FreudParams& params, const Real& mu,
                               const PrecisionContext& ctx) {
    check_params(params);
    if (!(params.alpha > -1)) throw DomainError("diff_identity_rhs: alpha must exceed -1");
    if (nsize < 1) throw DomainError("diff_identity_rhs: size must be positive");
    if (!(mu > 0)) throw DomainError("diff_identity_rhs: mu must be positive");
    return with_retries(hankel_digits(nsize + 1, ctx), [&](const PrecisionContext& hc) {
        MomentMatrix mm(nsize + 1, params, mu, Real(nsize), hc);
        OrthoBasis basis(mm);
        ScopedPrecision guard(hc.digits + kGuardDigits);
        const Real w = mp::pow(mu, params.alpha) * mp::exp(-Real(nsize) * mp::pow(mu, params.beta / 2));
        const unsigned n = nsize;
        const Real pn = basis.eval(n, mu), pm = basis.eval(n - 1, mu);
        const Real dpn = basis.derivative(n, mu), dpm = basis.derivative(n - 1, mu);
        DiffIdentity d;
        d.cd = -w * basis.kappa(n - 1) / basis.kappa(n) * (dpn * pm - pn * dpm);
        Real s = 0;
        for (unsigned j = 0; j < n; ++j) {
            Real p = basis.eval(j, mu);
            s += p * p;
        }
        d.sum = -w * s;
        return d;
    });
}

Real fullline_hankel(unsigned nsize_even, const Real& beta, const Real& lambda, const PrecisionContext& ctx) {
    if (nsize_even < 2 || nsize_even % 2 != 0) throw DomainError("fullline_hankel: size must be even");
    if (lambda < 0) throw DomainError("fullline_hankel: lambda must be nonnegative");
    if (!(beta > 0)) throw DomainError("beta must be positive");
    const unsigned n = nsize_even / 2;
    const unsigned D = hankel_digits(n, ctx);
    ScopedPrecision guard(D + kGuardDigits);
    const Real mu = mp::pow(Real(2), 2 / beta) * lambda * lambda;
    const Real nn(n);
    Real v = -4 * nn * nn / beta * mp::log(Real(2));
    v += hankel_exact(n, {beta, Real(0.5)}, mu, ctx);
    v += hankel_exact(n, {beta, Real(-0.5)}, mu, ctx);
    return v;
}

Real fullline_hankel_direct(unsigned nsize, const Real& beta, const Real& lambda,
                            const PrecisionContext& ctx) {
    if (nsize < 1) throw DomainError("fullline_hankel_direct: size must be positive");
    if (lambda < 0) throw DomainError("fullline_hankel_direct: lambda must be nonnegative");
    if (!(beta > 0)) throw DomainError("beta must be positive");
    return with_retries(hankel_digits(nsize, ctx), [&](const PrecisionContext& hc) {
        ScopedPrecision guard(hc.digits + kGuardDigits);
        const Real N(nsize);
        const Real x = N * mp::pow(lambda, beta);
        std::vector<Real> mom(2 * nsize - 1, Real(0));
        for (unsigned k = 0; k < mom.size(); k += 2) {
            const Real a = Real(k + 1) / beta;
            mom[k] = 2 / beta * mp::pow(N, -a) * upper_incomplete_gamma(a, x, hc);
        }
        Matrix m(nsize);
        for (unsigned j = 0; j < nsize; ++j)
            for (unsigned k = 0; k < nsize; ++k) m(j, k) = mom[j + k];
        Matrix l = cholesky(m);
        Real s = 0;
        for (unsigned k = 0; k < nsize; ++k) s += mp::log(l(k, k));
        return Real(2 * s);
    });
}

Real log_finite_gap(unsigned nsize_even, const Real& beta, const Real& lambda, const PrecisionContext& ctx) {
    ScopedPrecision guard(hankel_digits(nsize_even / 2, ctx) + kGuardDigits);
    return fullline_hankel(nsize_even, beta, lambda, ctx) - fullline_hankel(nsize_even, beta, Real(0), ctx);
}

Real finite_gap(unsigned nsize_even, const Real& beta, const Real& lambda, const PrecisionContext& ctx) {
    ScopedPrecision guard(hankel_digits(nsize_even / 2, ctx) + kGuardDigits);
    return mp::exp(log_finite_gap(nsize_even, beta, lambda, ctx));
}

FullLineKernel::FullLineKernel(unsigned nsize, const Real& beta, const PrecisionContext& ctx)
    : n_(nsize), beta_(beta) {
    if (nsize < 1) throw DomainError("kernel: size must be positive");
    if (!(beta > 0)) throw DomainError("beta must be positive");
    const unsigned half = nsize / 2 + 1;
    digits_ = hankel_digits(half, ctx);
    for (int attempt = 0;; ++attempt) {
        try {
            PrecisionContext hc(digits_);
            ScopedPrecision guard(digits_ + kGuardDigits);
            c_ = mp::pow(Real(2), 2 / beta);
            const Real nw = Real(nsize) / 2;
            even_ = std::make_unique<OrthoBasis>(MomentMatrix(half, {beta, Real(-0.5)}, Real(0), nw, hc));
            odd_ = std::make_unique<OrthoBasis>(MomentMatrix(half, {beta, Real(0.5)}, Real(0), nw, hc));
            return;
        } catch (const NumericError&) {
            if (attempt == 3) throw NumericError("precision insufficient: Hankel factorization failed");
            digits_ *= 2;
        }
    }
}

Real FullLineKernel::poly(unsigned k, const Real& t) const {
    ScopedPrecision guard(digits_ + kGuardDigits);
    const Real x = c_ * t * t;
    if (k % 2 == 0) return even_->eval(k / 2, x) * mp::pow(c_, Real(0.25));
    return t * odd_->eval(k / 2, x) * mp::pow(c_, Real(0.75));
}

Real FullLineKernel::poly_derivative(unsigned k, const Real& t) const {
    ScopedPrecision guard(digits_ + kGuardDigits);
    const Real x = c_ * t * t;
    const Real dx = 2 * c_ * t;
    if (k % 2 == 0) return even_->derivative(k / 2, x) * dx * mp::pow(c_, Real(0.25));
    return (odd_->eval(k / 2, x) + t * odd_->derivative(k / 2, x) * dx) * mp::pow(c_, Real(0.75));
}

Real FullLineKernel::chi(unsigned k) const {
    ScopedPrecision guard(digits_ + kGuardDigits);
    const Real ck = mp::pow(c_, Real(k / 2));
    if (k % 2 == 0) return even_->kappa(k / 2) * ck * mp::pow(c_, Real(0.25));
    return odd_->kappa(k / 2) * ck * mp::pow(c_, Real(0.75));
}

Real FullLineKernel::operator()(const Real& x, const Real& y) const {
    ScopedPrecision guard(digits_ + kGuardDigits);
    const Real w = mp::exp(-Real(n_) / 2 * (mp::pow(mp::abs(x), beta_) + mp::pow(mp::abs(y), beta_)));
    const Real ratio = chi(n_ - 1) / chi(n_);
    if (x == y) {
        const Real v = poly_derivative(n_, x) * poly(n_ - 1, x) - poly(n_, x) * poly_derivative(n_ - 1, x);
        return w * ratio * v;
    }
    const Real v = poly(n_, x) * poly(n_ - 1, y) - poly(n_, y) * poly(n_ - 1, x);
    return w * ratio * v / (x - y);
}

Real FullLineKernel::sum_form(const Real& x, const Real& y) const {
    ScopedPrecision guard(digits_ + kGuardDigits);
    const Real w = mp::exp(-Real(n_) / 2 * (mp::pow(mp::abs(x), beta_) + mp::pow(mp::abs(y), beta_)));
    Real s = 0;
    for (unsigned k = 0; k < n_; ++k) s += poly(k, x) * poly(k, y);
    return w * s;
}

Real kernel_eval(unsigned nsize, const Real& beta, const Real& x, const Real& y, const PrecisionContext& ctx) {
    FullLineKernel k(nsize, beta, ctx);
    ScopedPrecision guard(work_digits(ctx));
    return Real(k(x, y));
}

Real log_zn_product(unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("log_zn_product: n must be positive");
    ScopedPrecision guard(work_digits(ctx));
    const Real nn(n);
    Real v = -nn * nn / 2 * mp::log(nn) - nn * nn / 2 * mp::log(Real(2)) + nn / 2 * mp::log(2 * pi_value());
    // sum_{j=1}^n ln j! - ln n! = sum_{j=1}^{n-1} ln j!
    Real lf = 0;
    for (unsigned j = 1; j < n; ++j) {
        lf += mp::log(Real(j));
        v += lf;
    }
    return v;
}

Real log_gap_integral_quadrature(unsigned n, const Real& beta, const Real& lambda,
                                 const PrecisionContext& ctx) {
    if (n < 1 || n > 3) throw DomainError("gap integral quadrature: n must be 1, 2 or 3");
    if (!(beta > 0)) throw DomainError("beta must be positive");
    if (lambda < 0) throw DomainError("gap integral quadrature: lambda must be nonnegative");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real nn(n);
    // Truncate where the weight drops below 10^-(digits+10).
    const Real tail = Real(ctx.digits + 10) * mp::log(Real(10)) / nn;
    const Real L = lambda + mp::pow(tail, 1 / beta);
    const Real width = 2 / mp::pow(nn, 1 / beta);
    const unsigned panels = static_cast<unsigned>(std::ceil(to_double((L - lambda) / width)));
    auto rule = gauss_legendre(panel_nodes(ctx.digits), W);
    // Non-smooth weight at the origin: grade the panels toward it.
    const bool graded = lambda == 0 && mp::floor(beta) != beta;
    std::vector<Real> xs, ws;
    auto add_panel = [&](const Real& lo, const Real& hi) {
        const Real h = (hi - lo) / 2, m = (hi + lo) / 2;
        for (size_t i = 0; i < rule->size(); ++i) {
            const Real x = m + h * rule->x[i];
            const Real w = h * rule->w[i] * mp::exp(-nn * mp::pow(x, beta));
            xs.push_back(x);
            ws.push_back(w);
            xs.push_back(-x);
            ws.push_back(w);
        }
    };
    Real lo = lambda;
    if (graded) {
        Real d = width * pow10(-static_cast<int>(ctx.digits / 2));
        add_panel(Real(0), d);
        for (; d < width; d *= 2) add_panel(d, std::min(Real(2 * d), width));
        lo = width;
    }
    const Real step = (L - lo) / panels;
    for (unsigned p = 0; p < panels; ++p) add_panel(lo + step * p, lo + step * (p + 1));

    const size_t m = xs.size();
    Real total = 0;
    if (n == 1) {
        for (size_t i = 0; i < m; ++i) total += ws[i];
    } else if (n == 2) {
        // Symmetric integrand vanishing on the diagonal: sum over i < j only.
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                const Real d = xs[i] - xs[j];
                total += ws[i] * ws[j] * d * d;
            }
    } else {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                const Real dij = xs[i] - xs[j];
                const Real wij = ws[i] * ws[j] * dij * dij;
                for (size_t k = j + 1; k < m; ++k) {
                    const Real a = xs[i] - xs[k], b = xs[j] - xs[k];
                    total += wij * ws[k] * a * a * b * b;
                }
            }
    }
    return mp::log(total);
}

}  // namespace freud
