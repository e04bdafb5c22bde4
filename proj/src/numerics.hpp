#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace freud {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Error categories map one-to-one onto the C API status codes.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrecisionContext {
    unsigned digits = 60;

    PrecisionContext() = default;
    explicit PrecisionContext(unsigned d);
    PrecisionContext with_digits(unsigned d) const { return PrecisionContext(d); }
};

// mpfr default precision is process global; the guard serializes numeric work
// and restores the previous setting on exit.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    std::unique_lock<std::recursive_mutex> lock_;
    unsigned saved_;
};

inline constexpr unsigned kGuardDigits = 20;

Real parse_real(const std::string& text);
Real real_from(double v);
std::string to_string(const Real& x, unsigned digits);
double to_double(const Real& x);

Real pi_value();
Real eps_for(unsigned digits);
Real pow10(int e);

// Principal-branch complex arithmetic over Real.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);
Complex operator*(const Real& s, const Complex& a);
Complex operator/(const Complex& a, const Real& s);

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);
Complex log(const Complex& z);
Complex exp(const Complex& z);
Complex pow(const Complex& z, const Real& p);
inline Complex I_unit() { return Complex(Real(0), Real(1)); }

// Special functions.
Real ln_gamma(const Real& x, const PrecisionContext& ctx);
Real upper_incomplete_gamma(const Real& a, const Real& x, const PrecisionContext& ctx);
Real beta_function(const Real& p, const Real& q, const PrecisionContext& ctx);
Real euler_gamma();

struct BrentOptions {
    unsigned max_iter = 200;
};
Real brent_root(const std::function<Real(const Real&)>& f, Real lo, Real hi, const Real& tol,
                const PrecisionContext& ctx, BrentOptions opt = {});

Real bernoulli(unsigned n);
Real zeta_prime(const Real& s, const PrecisionContext& ctx);

struct Constants {
    Real pi;
    Real zeta_prime_minus_one;
    Real glaisher_log;
};
Real zeta_prime_minus_one(const PrecisionContext& ctx);
Real glaisher_log(const PrecisionContext& ctx);
Constants constants(const PrecisionContext& ctx);

// Quadrature rules.
enum class RuleKind { gauss_legendre, gauss_jacobi, trapezoid_circle, semi_infinite_exp };

struct QuadratureRule {
    RuleKind kind = RuleKind::gauss_legendre;
    Real p = 0;  // exponent at +1
    Real q = 0;  // exponent at -1
    std::vector<Real> x;
    std::vector<Real> w;
    size_t size() const { return x.size(); }
};

// Weight (1-x)^p (1+x)^q on [-1, 1]; cached per (n, p, q, digits).
std::shared_ptr<const QuadratureRule> gauss_jacobi(unsigned n, const Real& p, const Real& q,
                                                   unsigned digits);
std::shared_ptr<const QuadratureRule> gauss_legendre(unsigned n, unsigned digits);

unsigned panel_nodes(unsigned digits);

// Integral of F(t) (t-lo)^el (hi-t)^er over [lo, hi]. F may be nearly singular
// at distance d to the left of lo; panels then grow geometrically away from lo.
template <class T, class F>
T integrate_graded(F&& f, const Real& lo, const Real& hi, const Real& el, const Real& er,
                   const Real& d, unsigned digits);

// Closed contour integral over the circle |t-c| = r, counter-clockwise.
struct CircleResult {
    Complex value;
    unsigned nodes = 0;
    bool converged = false;
};
CircleResult trapezoid_circle(const std::function<Complex(const Complex&)>& f, const Complex& c,
                              const Real& r, const Real& tol, unsigned start_nodes,
                              unsigned max_nodes);

// Double-exponential rule on [lo, hi] for endpoint singularities of unknown type.
Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi,
               const Real& tol, unsigned max_level = 12);

}  // namespace freud

#include "numerics_impl.hpp"
