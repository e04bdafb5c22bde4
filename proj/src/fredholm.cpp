#include "fredholm.hpp"

#include "equilibrium.hpp"
#include "linalg.hpp"
#include "oracle.hpp"

namespace freud {

namespace mp = boost::multiprecision;

namespace {

unsigned work_digits(const PrecisionContext& ctx) { return ctx.digits + kGuardDigits; }

Real sinc_kernel(const Real& s, const Real& d, const Real& pi) {
    if (d == 0) return s;
    return mp::sin(pi * s * d) / (pi * d);
}

}  // namespace

NystromResult sine_det_fixed(const Real& s, unsigned nodes, const PrecisionContext& ctx) {
    if (!(s > 0)) throw DomainError("sine_det: s must be positive");
    if (nodes < 2) throw DomainError("sine_det: need at least 2 nodes");
    const unsigned W = work_digits(ctx);
    ScopedPrecision guard(W);
    const Real pi = pi_value();
    auto rule = gauss_legendre(nodes, W);
    std::vector<Real> sw(nodes);
    for (unsigned i = 0; i < nodes; ++i) sw[i] = mp::sqrt(rule->w[i]);
    Matrix m(nodes);
    for (unsigned i = 0; i < nodes; ++i)
        for (unsigned j = 0; j <= i; ++j) {
            Real v = sw[i] * sinc_kernel(s, rule->x[i] - rule->x[j], pi) * sw[j];
            m(i, j) = v;
            m(j, i) = v;
        }
    NystromResult r;
    r.s = s;
    r.nodes = nodes;
    const Real floor = pow10(-static_cast<int>(ctx.digits) + 10);
    r.log_det = 0;
    r.truncation_bound = 0;
    for (const Real& lam : symmetric_eigenvalues(m)) {
        if (mp::abs(lam) < floor) {
            r.truncation_bound += mp::abs(lam);
            continue;
        }
        if (!(lam < 1)) throw NumericError("sine_det: eigenvalue of K not below 1");
        r.log_det += mp::log1p(-lam);
    }
    Matrix a = m;
    for (unsigned i = 0; i < nodes; ++i)
        for (unsigned j = 0; j < nodes; ++j) a(i, j) = (i == j ? Real(1) : Real(0)) - m(i, j);
    LogDet ld = lu_log_det(a);
    if (ld.sign < 0) throw NumericError("sine_det: negative determinant");
    r.log_det_lu = ld.log_abs;
    r.residual_estimate = 0;
    return r;
}

NystromResult sine_det(const Real& s, unsigned nodes, const PrecisionContext& ctx, unsigned max_nodes) {
    if (nodes < 20) throw DomainError("sine_det: nodes must be at least 20");
    ScopedPrecision guard(work_digits(ctx));
    const Real tol = pow10(-8);
    for (unsigned n = nodes;; n *= 2) {
        std::string why;
        try {
            NystromResult full = sine_det_fixed(s, n, ctx);
            NystromResult half = sine_det_fixed(s, n / 2, ctx);
            full.residual_estimate = mp::abs(full.log_det - half.log_det);
            if (full.residual_estimate <= tol) return full;
            why = "residual " + to_string(full.residual_estimate, 3);
        } catch (const NumericError& e) {
            // An unresolved discretization can push an eigenvalue past 1.
            why = e.what();
        }
        if (2 * n > max_nodes)
            throw NumericError("sine_det: no convergence at " + std::to_string(n) + " nodes (" + why + ")");
    }
}

KernelReport kernel_convergence_report(const Real& beta, const std::vector<unsigned>& nsizes,
                                       const std::vector<std::pair<Real, Real>>& points,
                                       const PrecisionContext& ctx) {
    if (beta < 1) throw DomainError("kernel report: beta must be at least 1");
    if (nsizes.empty() || points.empty()) throw DomainError("kernel report: empty size or point list");
    for (size_t i = 1; i < nsizes.size(); ++i)
        if (nsizes[i] <= nsizes[i - 1]) throw DomainError("kernel report: sizes must be ascending");
    ScopedPrecision guard(work_digits(ctx));
    const Real pi = pi_value();
    KernelReport rep;
    for (unsigned n : nsizes) {
        FullLineKernel K(n, beta, ctx);
        KernelReportRow row;
        row.n = n;
        row.lambda1 = scaling_lambda_only(beta, n, Real(1), ctx);
        row.max_error = 0;
        for (const auto& [u, v] : points) {
            const Real scaled = row.lambda1 * K(u * row.lambda1, v * row.lambda1);
            const Real limit = u == v ? Real(1) : Real(mp::sin(pi * (u - v)) / (pi * (u - v)));
            const Real err = mp::abs(scaled - limit);
            row.errors.push_back(err);
            if (err > row.max_error) row.max_error = err;
        }
        rep.rows.push_back(std::move(row));
    }
    rep.monotone = true;
    for (size_t i = 1; i < rep.rows.size(); ++i)
        if (rep.rows[i].max_error > rep.rows[i - 1].max_error * Real(1.2)) rep.monotone = false;
    return rep;
}

}  // namespace freud
