#include "linalg.hpp"

namespace freud {

namespace mp = boost::multiprecision;

Matrix cholesky(const Matrix& a) {
    const size_t n = a.size();
    Matrix l(n);
    for (size_t j = 0; j < n; ++j) {
        Real d = a(j, j);
        for (size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0)) throw NumericError("cholesky: nonpositive pivot at row " + std::to_string(j));
        Real ljj = mp::sqrt(d);
        l(j, j) = ljj;
        for (size_t i = j + 1; i < n; ++i) {
            Real s = a(i, j);
            for (size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

std::vector<Real> forward_substitute(const Matrix& l, const std::vector<Real>& b) {
    const size_t n = l.size();
    std::vector<Real> y(n);
    for (size_t i = 0; i < n; ++i) {
        Real s = b[i];
        for (size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
        y[i] = s / l(i, i);
    }
    return y;
}

std::vector<Real> symmetric_eigenvalues(const Matrix& input) {
    const size_t n = input.size();
    if (n == 0) return {};
    Matrix a = input;
    std::vector<Real> d(n), e(n);
    // Householder tridiagonalization without accumulating transforms.
    for (size_t i = n - 1; i > 0; --i) {
        const size_t l = i - 1;
        Real h = 0;
        if (l > 0) {
            Real scale = 0;
            for (size_t k = 0; k <= l; ++k) scale += mp::abs(a(i, k));
            if (scale == 0) {
                e[i] = a(i, l);
            } else {
                for (size_t k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                Real f = a(i, l);
                Real g = f >= 0 ? Real(-mp::sqrt(h)) : mp::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0;
                for (size_t j = 0; j <= l; ++j) {
                    g = 0;
                    for (size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                Real hh = f / (h + h);
                for (size_t j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (size_t k = 0; k <= j; ++k) a(j, k) -= (f * e[k] + g * a(i, k));
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    e[0] = 0;
    for (size_t i = 0; i < n; ++i) d[i] = a(i, i);

    // Implicit QL on the tridiagonal (d, e).
    for (size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0;
    const Real eps = mp::pow(Real(2), -static_cast<int>(Real::default_precision() * 3.33 + 4));
    for (size_t l = 0; l < n; ++l) {
        int iter = 0;
        size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                Real dd = mp::abs(d[m]) + mp::abs(d[m + 1]);
                if (mp::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (++iter > 200) throw NumericError("symmetric_eigenvalues: QL did not converge");
                Real g = (d[l + 1] - d[l]) / (2 * e[l]);
                Real r = mp::hypot(g, Real(1));
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? r : Real(-r)));
                Real s = 1, c = 1, p = 0;
                size_t i = m;
                bool early = false;
                while (i-- > l) {
                    Real f = s * e[i];
                    Real b = c * e[i];
                    r = mp::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0) {
                        d[i + 1] -= p;
                        e[m] = 0;
                        early = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (early) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0;
            }
        } while (m != l);
    }
    return d;
}

LogDet lu_log_det(Matrix a) {
    const size_t n = a.size();
    LogDet out;
    out.log_abs = 0;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        Real best = mp::abs(a(k, k));
        for (size_t i = k + 1; i < n; ++i) {
            Real v = mp::abs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0) throw NumericError("lu_log_det: singular matrix");
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            out.sign = -out.sign;
        }
        const Real pivot = a(k, k);
        if (pivot < 0) out.sign = -out.sign;
        out.log_abs += mp::log(mp::abs(pivot));
        for (size_t i = k + 1; i < n; ++i) {
            Real factor = a(i, k) / pivot;
            if (factor == 0) continue;
            for (size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return out;
}

}  // namespace freud
