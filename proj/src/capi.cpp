#include "freud/freud.h"

#include "asymptotics.hpp"
#include "fredholm.hpp"
#include "oracle.hpp"
#include "verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mp = boost::multiprecision;
using namespace freud;

struct freud_ctx {
    PrecisionContext pc;
};

namespace {

struct Cell {
    freud_cell_kind kind = FREUD_CELL_NULL;
    std::string text;
};

thread_local std::string last_error;

// Builds a table one row at a time; numbers are rounded at the digit budget.
class Rows {
public:
    Rows(std::vector<std::string> columns, unsigned digits) : columns_(std::move(columns)), digits_(digits) {}

    Rows& row() {
        cells_.emplace_back();
        return *this;
    }
    Rows& num(const Real& x) { return put({FREUD_CELL_NUMBER, to_string(x, digits_)}); }
    Rows& num(unsigned long x) { return put({FREUD_CELL_NUMBER, std::to_string(x)}); }
    Rows& num(const std::optional<Real>& x) { return x ? num(*x) : null(); }
    Rows& decimal(std::string s) { return put({FREUD_CELL_NUMBER, std::move(s)}); }
    Rows& text(std::string s) { return put({FREUD_CELL_TEXT, std::move(s)}); }
    Rows& null() { return put({FREUD_CELL_NULL, {}}); }

    freud_table* release();

private:
    Rows& put(Cell c) {
        cells_.back().push_back(std::move(c));
        return *this;
    }

    std::vector<std::string> columns_;
    unsigned digits_;
    std::vector<std::vector<Cell>> cells_;
};

}  // namespace

struct freud_table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

freud_table* Rows::release() {
    auto* t = new freud_table{std::move(columns_), std::move(cells_)};
    for (const auto& r : t->rows)
        if (r.size() != t->columns.size()) {
            delete t;
            throw std::logic_error("table row width mismatch");
        }
    return t;
}

namespace {

freud_status fail(freud_status code, const std::string& message) {
    last_error = message;
    return code;
}

// Runs body under the context's working precision and maps exceptions to status codes.
template <class F>
freud_status guarded(const freud_ctx* ctx, freud_table** out, F&& body) {
    if (ctx == nullptr || out == nullptr) return fail(FREUD_ERR_ARGUMENT, "null context or output pointer");
    *out = nullptr;
    try {
        ScopedPrecision guard(ctx->pc.digits + kGuardDigits);
        *out = body(ctx->pc);
        last_error.clear();
        return FREUD_OK;
    } catch (const DomainError& e) {
        return fail(FREUD_ERR_DOMAIN, e.what());
    } catch (const NumericError& e) {
        return fail(FREUD_ERR_NUMERIC, e.what());
    } catch (const std::exception& e) {
        return fail(FREUD_ERR_INTERNAL, e.what());
    }
}

Real num_arg(const char* text, const char* what) {
    if (text == nullptr) throw DomainError(std::string(what) + ": missing value");
    Real v = parse_real(text);
    if (!mp::isfinite(v)) throw DomainError(std::string(what) + ": not a finite number");
    return v;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

FreudParams params_arg(const char* beta, const char* alpha) {
    FreudParams p{num_arg(beta, "beta"), num_arg(alpha, "alpha")};
    require(p.beta > 0, "beta must be positive");
    require(p.alpha > -1, "alpha must exceed -1");
    return p;
}

// Window guard shared by the Hankel comparison: mu >= (M / (rho n))^2.
Real hankel_window(const SupportData& sd, unsigned n, const Real& guard_m) {
    const Real w = guard_m / (sd.rho * n);
    return w * w;
}

}  // namespace

extern "C" {

const char* freud_version(void) { return "1.0.0"; }

const char* freud_last_error(void) { return last_error.c_str(); }

freud_status freud_ctx_create(unsigned digits, freud_ctx** out) {
    if (out == nullptr) return fail(FREUD_ERR_ARGUMENT, "null output pointer");
    *out = nullptr;
    try {
        *out = new freud_ctx{PrecisionContext(digits)};
        return FREUD_OK;
    } catch (const DomainError& e) {
        return fail(FREUD_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(FREUD_ERR_INTERNAL, e.what());
    }
}

void freud_ctx_destroy(freud_ctx* ctx) { delete ctx; }

unsigned freud_ctx_digits(const freud_ctx* ctx) { return ctx ? ctx->pc.digits : 0; }

size_t freud_table_rows(const freud_table* t) { return t ? t->rows.size() : 0; }

size_t freud_table_cols(const freud_table* t) { return t ? t->columns.size() : 0; }

const char* freud_table_column(const freud_table* t, size_t col) {
    if (t == nullptr || col >= t->columns.size()) return nullptr;
    return t->columns[col].c_str();
}

const char* freud_table_cell(const freud_table* t, size_t row, size_t col) {
    if (t == nullptr || row >= t->rows.size() || col >= t->columns.size()) return nullptr;
    return t->rows[row][col].text.c_str();
}

freud_cell_kind freud_table_cell_kind(const freud_table* t, size_t row, size_t col) {
    if (t == nullptr || row >= t->rows.size() || col >= t->columns.size()) return FREUD_CELL_NULL;
    return t->rows[row][col].kind;
}

freud_status freud_table_append(freud_table* dst, const freud_table* src) {
    if (dst == nullptr || src == nullptr) return fail(FREUD_ERR_ARGUMENT, "null table");
    if (dst->columns != src->columns) return fail(FREUD_ERR_ARGUMENT, "column lists differ");
    dst->rows.insert(dst->rows.end(), src->rows.begin(), src->rows.end());
    return FREUD_OK;
}

void freud_table_destroy(freud_table* t) { delete t; }

freud_status freud_equilibrium(const freud_ctx* ctx, const char* beta, const char* mu, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const Real b = num_arg(beta, "beta"), m = num_arg(mu, "mu");
        require(b > 0, "beta must be positive");
        require(m > 0, "mu must be positive");
        SupportData sd = solve_support(b, m, pc);
        Rows r({"tag", "beta", "mu", "a", "a_prime", "rho", "f_at_a", "ell", "zeta_prime_at_mu", "eta_prime_at_a"},
               pc.digits);
        r.row().text("defa").num(b).num(m).num(sd.a).num(sd.a_prime).num(sd.rho).num(sd.f_at_a).num(sd.ell)
            .num(sd.zeta_prime_at_mu).num(sd.eta_prime_at_a);
        return r.release();
    });
}

freud_status freud_hankel_asymp(const freud_ctx* ctx, const char* beta, const char* alpha, const char* mu,
                                unsigned n, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const FreudParams p = params_arg(beta, alpha);
        const Real m = num_arg(mu, "mu");
        require(m > 0, "mu must be positive");
        require(n >= 1, "n must be positive");
        SupportData sd = solve_support(p.beta, m, pc);
        HankelAsymptotics c = coeffs_C(p, sd, pc);
        Rows r({"tag", "beta", "alpha", "mu", "n", "C2", "C1", "C0", "log_htilde_asymp"}, pc.digits);
        r.row().text("dHs").num(p.beta).num(p.alpha).num(m).num(n).num(c.C2).num(c.C1).num(c.C0).num(c.n_term(n));
        return r.release();
    });
}

freud_status freud_hankel_exact(const freud_ctx* ctx, const char* beta, const char* alpha, const char* mu,
                                unsigned n, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const FreudParams p = params_arg(beta, alpha);
        const Real m = num_arg(mu, "mu");
        require(m >= 0, "mu must be nonnegative");
        require(n >= 1, "n must be positive");
        Real v = hankel_exact(n, p, m, pc);
        Rows r({"tag", "beta", "alpha", "mu", "n", "log_htilde_exact", "working_digits"}, pc.digits);
        r.row().text("Hankel").num(p.beta).num(p.alpha).num(m).num(n).num(v).num(hankel_digits(n, pc));
        return r.release();
    });
}

freud_status freud_diff_identity(const freud_ctx* ctx, const char* beta, const char* alpha, const char* mu,
                                 unsigned n, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const FreudParams p = params_arg(beta, alpha);
        const Real m = num_arg(mu, "mu");
        require(m > 0, "mu must be positive");
        require(n >= 1, "n must be positive");
        DiffIdentity d = diff_identity_rhs(n, p, m, pc);
        DiffCoeffs c = coeffs_D(p, solve_support(p.beta, m, pc), pc);
        const Real nn(n);
        Rows r({"tag", "beta", "alpha", "mu", "n", "cd_form", "sum_form", "D2", "D1", "D0", "D0_full", "expansion",
                "expansion_full"},
               pc.digits);
        r.row().text("DI1").num(p.beta).num(p.alpha).num(m).num(n).num(d.cd).num(d.sum).num(c.D2).num(c.D1)
            .num(c.D0).num(c.D0_full).num(c.D2 * nn * nn + c.D1 * nn + c.D0)
            .num(c.D2 * nn * nn + c.D1 * nn + c.D0_full);
        return r.release();
    });
}

freud_status freud_compare_hankel(const freud_ctx* ctx, const char* beta, const char* alpha, const char* mu,
                                  unsigned n, const char* guard_m, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const FreudParams p = params_arg(beta, alpha);
        const Real m = num_arg(mu, "mu"), gm = num_arg(guard_m, "guard-M");
        require(m > 0, "mu must be positive");
        require(gm > 0, "guard-M must be positive");
        require(n >= 1, "n must be positive");
        SupportData sd = solve_support(p.beta, m, pc);
        const Real asym = coeffs_C(p, sd, pc).n_term(n);
        const Real exact = hankel_exact(n, p, m, pc);
        const Real lower = hankel_window(sd, n, gm);
        Rows r({"tag", "beta", "alpha", "mu", "n", "asymptotic", "exact", "abs_diff", "window_lower", "status"},
               pc.digits);
        r.row().text("dHs").num(p.beta).num(p.alpha).num(m).num(n).num(asym).num(exact).num(mp::abs(asym - exact))
            .num(lower).text(m >= lower ? "ok" : "outside-window");
        return r.release();
    });
}

freud_status freud_compare_gap(const freud_ctx* ctx, const char* beta, unsigned n, const char* s,
                               const char* guard_m, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const Real b = num_arg(beta, "beta"), sv = num_arg(s, "s"), gm = num_arg(guard_m, "guard-M");
        require(b > 0, "beta must be positive");
        require(sv > 0, "s must be positive");
        require(gm > 0, "guard-M must be positive");
        require(n >= 1, "n must be positive");
        GapRatioAsymptotics g = log_gap_ratio_asymp(b, n, sv, pc, gm);
        const Real exact = log_finite_gap(2 * n, b, g.lambda, pc);
        Rows r({"tag", "beta", "n", "s", "lambda", "mu", "asymptotic", "exact", "abs_diff", "window_lower",
                "constant_known", "status"},
               pc.digits);
        r.row().text("logHH").num(b).num(n).num(sv).num(g.lambda).num(g.mu).num(g.value).num(exact)
            .num(mp::abs(g.value - exact)).num(g.window_lower).text(g.constant_known ? "yes" : "no")
            .text(g.in_window ? "ok" : "outside-window");
        return r.release();
    });
}

freud_status freud_fullline_hankel(const freud_ctx* ctx, const char* beta, const char* lambda, unsigned nsize,
                                   freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const Real b = num_arg(beta, "beta"), l = num_arg(lambda, "lambda");
        require(b > 0, "beta must be positive");
        require(l >= 0, "lambda must be nonnegative");
        require(nsize >= 2 && nsize % 2 == 0, "size must be even and at least 2");
        const Real split = fullline_hankel(nsize, b, l, pc);
        const Real direct = fullline_hankel_direct(nsize, b, l, pc);
        Rows r({"tag", "beta", "lambda", "size", "log_h_split", "log_h_direct", "abs_diff"}, pc.digits);
        r.row().text("HH").num(b).num(l).num(nsize).num(split).num(direct).num(mp::abs(split - direct));
        return r.release();
    });
}

freud_status freud_finite_gap(const freud_ctx* ctx, const char* beta, unsigned nsize, const char* s,
                              freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const Real b = num_arg(beta, "beta"), sv = num_arg(s, "s");
        require(b > 0, "beta must be positive");
        require(sv > 0, "s must be positive");
        require(nsize >= 2 && nsize % 2 == 0, "size must be even and at least 2");
        const Real lam = scaling_lambda_only(b, nsize, sv, pc);
        const Real lf = log_finite_gap(nsize, b, lam, pc);
        Rows r({"tag", "beta", "size", "s", "lambda", "log_gap", "gap"}, pc.digits);
        r.row().text("FnHankel").num(b).num(nsize).num(sv).num(lam).num(lf).num(Real(mp::exp(lf)));
        return r.release();
    });
}

freud_status freud_gap_asymp(const freud_ctx* ctx, const char* beta, const char* s, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const Real b = num_arg(beta, "beta"), sv = num_arg(s, "s");
        require(b > 0, "beta must be positive");
        require(sv > 0, "s must be positive");
        GapAsymptotics g = gap_asymp(b, pc);
        Rows r({"tag", "beta", "s", "leading_term", "log_term", "constant", "value", "note"}, pc.digits);
        r.row().text("asF").num(b).num(sv).num(Real(g.leading * mp::pow(sv, g.power)))
            .num(Real(g.log_coeff * mp::log(sv))).num(g.constant);
        if (g.constant)
            r.num(g.value_at(sv)).null();
        else
            r.null().text("C(beta) unknown for beta<1");
        return r.release();
    });
}

freud_status freud_sine_det(const freud_ctx* ctx, const char* s, unsigned nodes, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const Real sv = num_arg(s, "s");
        require(sv > 0, "s must be positive");
        require(nodes >= 20, "nodes must be at least 20");
        NystromResult n = sine_det(sv, nodes, pc, std::max(400u, nodes));
        const Real asym = sine_gap_asymp(sv, pc);
        Rows r({"tag", "s", "nodes", "log_det", "log_det_lu", "residual_estimate", "truncation_bound", "asymptotic",
                "abs_diff"},
               pc.digits);
        r.row().text("beta2exp").num(sv).num(n.nodes).num(n.log_det).num(n.log_det_lu).num(n.residual_estimate)
            .num(n.truncation_bound).num(asym).num(mp::abs(n.log_det - asym));
        return r.release();
    });
}

freud_status freud_zn(const freud_ctx* ctx, const char* beta, unsigned n, freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const Real b = num_arg(beta, "beta");
        require(b > 0, "beta must be positive");
        require(n >= 2, "n must be at least 2");
        ZnAsymptotics z = log_zn_asymp(b, n, pc);
        Rows r({"tag", "beta", "n", "log_zn_asymp", "constant_known", "log_zn_product", "abs_diff"}, pc.digits);
        r.row().text("asZ").num(b).num(n).num(z.value).text(z.partial ? "no" : "yes");
        if (b == 2) {
            const Real prod = log_zn_product(n, pc);
            r.num(prod).num(mp::abs(prod - z.value));
        } else {
            r.null().null();
        }
        return r.release();
    });
}

freud_status freud_kernel_report(const freud_ctx* ctx, const char* beta, const unsigned* nsizes, size_t count,
                                 freud_table** out) {
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        const Real b = num_arg(beta, "beta");
        require(b >= 1, "beta must be at least 1");
        require(nsizes != nullptr && count > 0, "empty size list");
        std::vector<unsigned> sizes(nsizes, nsizes + count);
        const std::vector<std::pair<Real, Real>> points = {
            {Real("0.3"), Real("-0.2")}, {Real("0.5"), Real("0.5")}, {Real("-0.7"), Real("0.1")}};
        KernelReport rep = kernel_convergence_report(b, sizes, points, pc);
        Rows r({"tag", "beta", "n", "lambda1", "max_error", "monotone"}, pc.digits);
        for (const auto& row : rep.rows)
            r.row().text("Kn").num(b).num(row.n).num(row.lambda1).num(row.max_error).text(rep.monotone ? "yes" : "no");
        return r.release();
    });
}

freud_status freud_verify(const freud_ctx* ctx, freud_table** out, size_t* failures) {
    if (failures == nullptr) return fail(FREUD_ERR_ARGUMENT, "null failure counter");
    *failures = 0;
    return guarded(ctx, out, [&](const PrecisionContext& pc) {
        std::vector<CheckResult> checks = run_verification(pc);
        Rows r({"tag", "module", "check", "result", "residual", "tolerance", "detail"}, pc.digits);
        for (const auto& c : checks) {
            r.row().text("verify").text(c.module).text(c.name).text(c.passed ? "PASS" : "FAIL");
            c.residual.empty() ? r.null() : r.decimal(c.residual);
            c.tolerance.empty() ? r.null() : r.decimal(c.tolerance);
            r.text(c.detail);
            if (!c.passed) ++*failures;
        }
        return r.release();
    });
}

}  // extern "C"
