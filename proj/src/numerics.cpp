#include "numerics.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace freud {

namespace mp = boost::multiprecision;

namespace {

std::recursive_mutex& precision_mutex() {
    static std::recursive_mutex m;
    return m;
}

}  // namespace

PrecisionContext::PrecisionContext(unsigned d) : digits(d) {
    if (d < 30) throw DomainError("precision must be at least 30 digits");
}

ScopedPrecision::ScopedPrecision(unsigned digits)
    : lock_(precision_mutex()), saved_(Real::default_precision()) {
    Real::default_precision(digits);
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_); }

Real parse_real(const std::string& text) {
    try {
        return Real(text);
    } catch (const std::exception&) {
        throw DomainError("not a number: " + text);
    }
}

Real real_from(double v) { return Real(v); }

std::string to_string(const Real& x, unsigned digits) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(static_cast<int>(digits)) << x;
    return os.str();
}

double to_double(const Real& x) { return x.convert_to<double>(); }

Real pi_value() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real euler_gamma() {
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

Real pow10(int e) { return mp::pow(Real(10), e); }

Real eps_for(unsigned digits) { return pow10(-static_cast<int>(digits)); }

// ---------------------------------------------------------------- complex

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    // Smith's algorithm.
    if (mp::abs(o.re) >= mp::abs(o.im)) {
        Real t = o.im / o.re;
        Real den = o.re + o.im * t;
        Real r = (re + im * t) / den;
        Real i = (im - re * t) / den;
        re = std::move(r);
        im = std::move(i);
    } else {
        Real t = o.re / o.im;
        Real den = o.re * t + o.im;
        Real r = (re * t + im) / den;
        Real i = (im * t - re) / den;
        re = std::move(r);
        im = std::move(i);
    }
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator*(const Complex& a, const Real& s) { return Complex(a.re * s, a.im * s); }
Complex operator*(const Real& s, const Complex& a) { return Complex(a.re * s, a.im * s); }
Complex operator/(const Complex& a, const Real& s) { return Complex(a.re / s, a.im / s); }

Real abs(const Complex& z) { return mp::hypot(z.re, z.im); }

Real arg(const Complex& z) {
    // Signed zeros are folded to +0 so the negative axis maps to +pi.
    Real y = (z.im == 0) ? Real(0) : z.im;
    return mp::atan2(y, z.re);
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex sqrt(const Complex& z) {
    if (z.im == 0) {
        if (z.re >= 0) return Complex(mp::sqrt(z.re), Real(0));
        return Complex(Real(0), mp::sqrt(-z.re));
    }
    Real r = abs(z);
    Real t = mp::sqrt((r + mp::abs(z.re)) / 2);
    if (z.re >= 0) return Complex(t, z.im / (2 * t));
    Real im = z.im < 0 ? Real(-t) : t;
    return Complex(mp::abs(z.im) / (2 * t), im);
}

Complex log(const Complex& z) {
    if (z.im == 0 && z.re > 0) return Complex(mp::log(z.re), Real(0));
    return Complex(mp::log(abs(z)), arg(z));
}

Complex exp(const Complex& z) {
    Real m = mp::exp(z.re);
    if (z.im == 0) return Complex(m, Real(0));
    return Complex(m * mp::cos(z.im), m * mp::sin(z.im));
}

Complex pow(const Complex& z, const Real& p) {
    if (z.im == 0 && z.re > 0) return Complex(mp::pow(z.re, p), Real(0));
    if (z.re == 0 && z.im == 0) {
        if (p > 0) return Complex(0);
        throw DomainError("complex pow: zero base with nonpositive exponent");
    }
    return exp(log(z) * p);
}

// ---------------------------------------------------------- special functions

Real ln_gamma(const Real& x, const PrecisionContext&) {
    if (!(x > 0)) throw DomainError("ln_gamma: argument must be positive");
    Real r;
    mpfr_lngamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Real upper_incomplete_gamma(const Real& a, const Real& x, const PrecisionContext& ctx) {
    if (!(a > 0)) throw DomainError("upper_incomplete_gamma: a must be positive");
    if (x < 0) throw DomainError("upper_incomplete_gamma: x must be nonnegative");
    const unsigned work = ctx.digits + kGuardDigits;
    ScopedPrecision guard(work);
    const Real stop = pow10(-static_cast<int>(ctx.digits + 5));
    const Real lg = ln_gamma(a, ctx);
    if (x == 0) return mp::exp(lg);

    const Real prefactor_log = -x + a * mp::log(x);
    if (x < a + 1) {
        Real ap = a;
        Real term = 1 / a;
        Real sum = term;
        for (int k = 0; k < 100000; ++k) {
            ap += 1;
            term *= x / ap;
            sum += term;
            if (mp::abs(term) < mp::abs(sum) * stop) break;
        }
        Real lower = sum * mp::exp(prefactor_log);
        return mp::exp(lg) - lower;
    }
    // Modified Lentz evaluation of the continued fraction.
    const Real tiny = pow10(-static_cast<int>(2 * work));
    Real b = x + 1 - a;
    Real c = 1 / tiny;
    Real d = 1 / b;
    Real h = d;
    for (int i = 1; i < 100000; ++i) {
        Real an = -Real(i) * (Real(i) - a);
        b += 2;
        d = an * d + b;
        if (mp::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (mp::abs(c) < tiny) c = tiny;
        d = 1 / d;
        Real del = d * c;
        h *= del;
        if (mp::abs(del - 1) < stop) break;
    }
    return mp::exp(prefactor_log) * h;
}

Real beta_function(const Real& p, const Real& q, const PrecisionContext& ctx) {
    if (!(p > 0) || !(q > 0)) throw DomainError("beta_function: arguments must be positive");
    ScopedPrecision guard(ctx.digits + kGuardDigits);
    return mp::exp(ln_gamma(p, ctx) + ln_gamma(q, ctx) - ln_gamma(p + q, ctx));
}

Real brent_root(const std::function<Real(const Real&)>& f, Real lo, Real hi, const Real& tol,
                const PrecisionContext&, BrentOptions opt) {
    Real a = lo, b = hi;
    Real fa = f(a), fb = f(b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    if ((fa > 0) == (fb > 0)) {
        throw NumericError("brent_root: no sign change on [" + to_string(lo, 12) + ", " +
                           to_string(hi, 12) + "]");
    }
    Real c = b, fc = fb, d = 0, e = 0;
    for (unsigned it = 0; it < opt.max_iter; ++it) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (mp::abs(fc) < mp::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        Real scale = mp::abs(b) > 1 ? mp::abs(b) : Real(1);
        Real tol1 = tol * scale / 2;
        Real xm = (c - b) / 2;
        if (mp::abs(xm) <= tol1 || fb == 0) return b;
        if (mp::abs(e) >= tol1 && mp::abs(fa) > mp::abs(fb)) {
            Real s = fb / fa, p, q;
            if (a == c) {
                p = 2 * xm * s;
                q = 1 - s;
            } else {
                Real qq = fa / fc, r = fb / fc;
                p = s * (2 * xm * qq * (qq - r) - (b - a) * (r - 1));
                q = (qq - 1) * (r - 1) * (s - 1);
            }
            if (p > 0) q = -q;
            p = mp::abs(p);
            Real min1 = 3 * xm * q - mp::abs(tol1 * q);
            Real min2 = mp::abs(e * q);
            if (2 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (mp::abs(d) > tol1)
            b += d;
        else
            b += (xm > 0 ? tol1 : Real(-tol1));
        fb = f(b);
    }
    throw NumericError("brent_root: no convergence after " + std::to_string(opt.max_iter) +
                       " iterations");
}

// ------------------------------------------------------------- zeta and A

namespace {

std::mutex& bernoulli_mutex() {
    static std::mutex m;
    return m;
}

std::vector<mp::mpq_rational>& bernoulli_table() {
    static std::vector<mp::mpq_rational> t{mp::mpq_rational(1)};
    return t;
}

}  // namespace

Real bernoulli(unsigned n) {
    mp::mpq_rational value;
    {
        std::lock_guard<std::mutex> lock(bernoulli_mutex());
        auto& t = bernoulli_table();
        while (t.size() <= n) {
            const unsigned m = static_cast<unsigned>(t.size());
            mp::mpq_rational sum = 0;
            mp::mpz_int binom = 1;  // C(m+1, k)
            for (unsigned k = 0; k < m; ++k) {
                sum += binom * t[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            t.push_back(-sum / (m + 1));
        }
        value = t[n];
    }
    return Real(mp::numerator(value).str()) / Real(mp::denominator(value).str());
}

Real zeta_prime(const Real& s, const PrecisionContext& ctx) {
    if (s == 1) throw DomainError("zeta_prime: pole at s = 1");
    const unsigned work = ctx.digits + kGuardDigits;
    ScopedPrecision guard(work);
    const unsigned N = work + 10;
    const Real stop = pow10(-static_cast<int>(work));
    const Real lnN = mp::log(Real(N));

    Real sum = 0;
    for (unsigned k = 2; k < N; ++k) {
        Real lk = mp::log(Real(k));
        sum -= lk * mp::exp(-s * lk);
    }
    const Real sm1 = s - 1;
    const Real n1ms = mp::exp((1 - s) * lnN);
    sum += n1ms * (-lnN / sm1 - 1 / (sm1 * sm1));
    const Real nms = mp::exp(-s * lnN);
    sum -= lnN * nms / 2;

    // P_j(s) = s (s+1) ... (s+2j-2) with its s-derivative.
    Real P = s, dP = 1;
    Real fact = 2;  // (2j)!
    Real npow = nms / Real(N);  // N^{-s-2j+1} for j = 1
    for (unsigned j = 1; j < 4 * work; ++j) {
        Real term = bernoulli(2 * j) / fact * npow * (dP - lnN * P);
        sum += term;
        if (j > 1 && mp::abs(term) < stop * (mp::abs(sum) + 1)) break;
        for (unsigned i = 2 * j - 1; i <= 2 * j; ++i) {
            Real factor = s + Real(i);
            dP = dP * factor + P;
            P = P * factor;
        }
        fact *= Real(2 * j + 1) * Real(2 * j + 2);
        npow /= Real(N) * Real(N);
    }
    return sum;
}

Real glaisher_log(const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits + kGuardDigits);
    const Real pi = pi_value();
    return (euler_gamma() + mp::log(2 * pi)) / 12 - zeta_prime(Real(2), ctx) / (2 * pi * pi);
}

Real zeta_prime_minus_one(const PrecisionContext& ctx) {
    static std::mutex m;
    static std::map<unsigned, Real> cache;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(ctx.digits);
        if (it != cache.end()) return it->second;
    }
    ScopedPrecision guard(ctx.digits + kGuardDigits);
    Real direct = zeta_prime(Real(-1), ctx);
    Real via_glaisher = Real(1) / 12 - glaisher_log(ctx);
    if (mp::abs(direct - via_glaisher) > pow10(-static_cast<int>(ctx.digits) + 10)) {
        throw NumericError("zeta'(-1): summation routes disagree");
    }
    std::lock_guard<std::mutex> lock(m);
    cache.emplace(ctx.digits, direct);
    return direct;
}

Constants constants(const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits + kGuardDigits);
    Constants c;
    c.pi = pi_value();
    c.zeta_prime_minus_one = zeta_prime_minus_one(ctx);
    c.glaisher_log = Real(1) / 12 - c.zeta_prime_minus_one;
    return c;
}

// ------------------------------------------------------------ quadrature

unsigned panel_nodes(unsigned digits) { return static_cast<unsigned>(std::ceil(0.6 * digits)) + 8; }

namespace {

// Initial abscissas in double precision, descending.
std::vector<double> jacobi_guesses(unsigned n, double alf, double bet) {
    std::vector<double> x(n + 1);
    double z = 0;
    for (unsigned i = 1; i <= n; ++i) {
        if (alf == 0 && bet == 0) {
            z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        } else if (i == 1) {
            double an = alf / n, bn = bet / n;
            double r1 = (1.0 + alf) * (2.78 / (4.0 + n * n) + 0.768 * an / n);
            double r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an + 0.83 * an * bn;
            z = 1.0 - r1 / r2;
        } else if (i == 2) {
            double r1 = (4.1 + alf) / ((1.0 + alf) * (1.0 + 0.156 * alf));
            double r2 = 1.0 + 0.06 * (n - 8.0) * (1.0 + 0.12 * alf) / n;
            double r3 = 1.0 + 0.012 * bet * (1.0 + 0.25 * std::fabs(alf)) / n;
            z -= (1.0 - z) * r1 * r2 * r3;
        } else if (i == 3) {
            double r1 = (1.67 + 0.28 * alf) / (1.0 + 0.37 * alf);
            double r2 = 1.0 + 0.22 * (n - 8.0) / n;
            double r3 = 1.0 + 8.0 * bet / ((6.28 + bet) * n * n);
            z -= (x[1] - z) * r1 * r2 * r3;
        } else if (i == n - 1) {
            double r1 = (1.0 + 0.235 * bet) / (0.766 + 0.119 * bet);
            double r2 = 1.0 / (1.0 + 0.639 * (n - 4.0) / (1.0 + 0.71 * (n - 4.0)));
            double r3 = 1.0 / (1.0 + 20.0 * alf / ((7.5 + alf) * n * n));
            z += (z - x[n - 3]) * r1 * r2 * r3;
        } else if (i == n) {
            double r1 = (1.0 + 0.37 * bet) / (1.67 + 0.28 * bet);
            double r2 = 1.0 / (1.0 + 0.22 * (n - 8.0) / n);
            double r3 = 1.0 / (1.0 + 8.0 * alf / ((6.28 + alf) * n * n));
            z += (z - x[n - 2]) * r1 * r2 * r3;
        } else {
            z = 3.0 * x[i - 1] - 3.0 * x[i - 2] + x[i - 3];
        }
        // Polish in double so later guesses extrapolate from good roots.
        for (int its = 0; its < 100; ++its) {
            double alfbet = alf + bet, temp = 2.0 + alfbet;
            double p1 = (alf - bet + temp * z) / 2.0, p2 = 1.0, p3;
            for (unsigned j = 2; j <= n; ++j) {
                p3 = p2;
                p2 = p1;
                temp = 2 * j + alfbet;
                double a = 2 * j * (j + alfbet) * (temp - 2.0);
                double b = (temp - 1.0) * (alf * alf - bet * bet + temp * (temp - 2.0) * z);
                double c = 2.0 * (j - 1 + alf) * (j - 1 + bet) * temp;
                p1 = (b * p2 - c * p3) / a;
            }
            double pp = (n * (alf - bet - temp * z) * p1 + 2.0 * (n + alf) * (n + bet) * p2) /
                        (temp * (1.0 - z * z));
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-15) break;
        }
        x[i] = z;
    }
    return x;
}

std::shared_ptr<const QuadratureRule> build_jacobi(unsigned n, const Real& alf, const Real& bet,
                                                   unsigned digits) {
    if (n < 2) throw DomainError("quadrature rule needs at least 2 nodes");
    if (!(alf > -1) || !(bet > -1)) throw DomainError("Jacobi exponents must exceed -1");
    ScopedPrecision guard(digits + 10);
    PrecisionContext ctx(std::max(digits, 30u));
    auto guesses = jacobi_guesses(n, to_double(alf), to_double(bet));
    auto rule = std::make_shared<QuadratureRule>();
    rule->kind = (alf == 0 && bet == 0) ? RuleKind::gauss_legendre : RuleKind::gauss_jacobi;
    rule->p = alf;
    rule->q = bet;
    rule->x.resize(n);
    rule->w.resize(n);
    const Real alfbet = alf + bet;
    const Real stop = pow10(-static_cast<int>(digits + 5));
    const Real lnorm = ln_gamma(alf + n, ctx) + ln_gamma(bet + n, ctx) - ln_gamma(Real(n + 1), ctx) -
                       ln_gamma(n + alfbet + 1, ctx);
    const Real norm = mp::exp(lnorm) * mp::pow(Real(2), alfbet);
    for (unsigned i = 1; i <= n; ++i) {
        Real z = guesses[i];
        Real p1, p2, pp, temp;
        for (int its = 0; its < 60; ++its) {
            temp = 2 + alfbet;
            p1 = (alf - bet + temp * z) / 2;
            p2 = 1;
            Real p3;
            for (unsigned j = 2; j <= n; ++j) {
                p3 = p2;
                p2 = p1;
                temp = 2 * Real(j) + alfbet;
                Real a = 2 * Real(j) * (j + alfbet) * (temp - 2);
                Real b = (temp - 1) * (alf * alf - bet * bet + temp * (temp - 2) * z);
                Real c = 2 * (Real(j) - 1 + alf) * (Real(j) - 1 + bet) * temp;
                p1 = (b * p2 - c * p3) / a;
            }
            pp = (n * (alf - bet - temp * z) * p1 + 2 * (n + alf) * (n + bet) * p2) /
                 (temp * (1 - z * z));
            Real dz = p1 / pp;
            z -= dz;
            if (mp::abs(dz) <= stop) break;
        }
        rule->x[n - i] = z;
        rule->w[n - i] = norm * temp / (pp * p2);
    }
    for (unsigned i = 1; i < n; ++i) {
        if (!(rule->x[i] > rule->x[i - 1])) throw NumericError("Gauss-Jacobi: node iteration collapsed");
    }
    for (const auto& w : rule->w) {
        if (!(w > 0)) throw NumericError("Gauss-Jacobi: nonpositive weight");
    }
    return rule;
}

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_jacobi(unsigned n, const Real& p, const Real& q,
                                                   unsigned digits) {
    static std::mutex m;
    static std::map<std::string, std::shared_ptr<const QuadratureRule>> cache;
    std::string key = std::to_string(n) + "|" + p.str(40) + "|" + q.str(40) + "|" + std::to_string(digits);
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto rule = build_jacobi(n, p, q, digits);
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, rule).first->second;
}

std::shared_ptr<const QuadratureRule> gauss_legendre(unsigned n, unsigned digits) {
    return gauss_jacobi(n, Real(0), Real(0), digits);
}

CircleResult trapezoid_circle(const std::function<Complex(const Complex&)>& f, const Complex& c,
                              const Real& r, const Real& tol, unsigned start_nodes,
                              unsigned max_nodes) {
    const Real two_pi = 2 * pi_value();
    auto sample = [&](unsigned k, unsigned n) {
        Real theta = two_pi * Real(k) / Real(n);
        Complex e(mp::cos(theta), mp::sin(theta));
        Complex t = c + e * r;
        return f(t) * (I_unit() * e * r);
    };
    unsigned n = std::max(4u, start_nodes);
    Complex sum;
    for (unsigned k = 0; k < n; ++k) sum += sample(k, n);
    Complex value = sum * (two_pi / Real(n));
    CircleResult out;
    while (2 * n <= max_nodes) {
        for (unsigned k = 1; k < 2 * n; k += 2) sum += sample(k, 2 * n);
        n *= 2;
        Complex next = sum * (two_pi / Real(n));
        Real diff = abs(next - value);
        value = next;
        Real scale = abs(value);
        if (scale < 1) scale = 1;
        if (diff <= tol * scale) {
            out.converged = true;
            break;
        }
    }
    out.value = value;
    out.nodes = n;
    return out;
}

Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi,
               const Real& tol, unsigned max_level) {
    const Real half = (hi - lo) / 2;
    const Real halfpi = pi_value() / 2;
    const unsigned digits = static_cast<unsigned>(Real::default_precision());
    const Real umax = Real(digits + 10) * mp::log(Real(10));
    const Real tmax = mp::asinh(umax / halfpi);

    auto node = [&](const Real& t) {
        Real u = halfpi * mp::sinh(t);
        Real ch = mp::cosh(u);
        Real w = half * halfpi * mp::cosh(t) / (ch * ch);
        Real x;
        if (u >= 0)
            x = hi - 2 * half / (mp::exp(2 * u) + 1);
        else
            x = lo + 2 * half / (mp::exp(-2 * u) + 1);
        if (!(x > lo) || !(x < hi) || w == 0) return Real(0);
        return f(x) * w;
    };

    Real h = 1;
    Real sum = node(Real(0));
    for (Real t = h; t <= tmax; t += h) sum += node(t) + node(-t);
    Real value = sum * h;
    for (unsigned level = 1; level <= max_level; ++level) {
        h /= 2;
        for (Real t = h; t <= tmax; t += 2 * h) sum += node(t) + node(-t);
        Real next = sum * h;
        Real diff = mp::abs(next - value);
        value = next;
        if (level >= 3 && diff <= tol * mp::abs(value)) return value;
    }
    throw NumericError("tanh_sinh: no convergence");
}

}  // namespace freud
