#pragma once

namespace freud {

namespace detail {

inline Real pow_or_one(const Real& base, const Real& e) {
    if (e == 0) return Real(1);
    return boost::multiprecision::pow(base, e);
}

template <class T, class F>
T panel_sum(F& f, const QuadratureRule& rule, const Real& a, const Real& b, const Real& lo,
            const Real& hi, const Real& el, const Real& er, bool left_in_rule, bool right_in_rule) {
    const Real half = (b - a) / 2;
    const Real mid = (a + b) / 2;
    T acc = T(0);
    for (size_t i = 0; i < rule.size(); ++i) {
        const Real t = mid + half * rule.x[i];
        Real wt = rule.w[i];
        if (!left_in_rule && el != 0) wt *= pow_or_one(t - lo, el);
        if (!right_in_rule && er != 0) wt *= pow_or_one(hi - t, er);
        acc += f(t) * wt;
    }
    Real scale = half;
    if (left_in_rule && el != 0) scale *= pow_or_one(half, el);
    if (right_in_rule && er != 0) scale *= pow_or_one(half, er);
    return acc * scale;
}

}  // namespace detail

template <class T, class F>
T integrate_graded(F&& f, const Real& lo, const Real& hi, const Real& el, const Real& er,
                   const Real& d, unsigned digits) {
    const unsigned n = panel_nodes(digits);
    const Real len = hi - lo;
    if (!(len > 0)) throw DomainError("integrate_graded: empty interval");
    if (!(d > 0) || d * 2 >= len) {
        auto rule = gauss_jacobi(n, er, el, digits);
        return detail::panel_sum<T>(f, *rule, lo, hi, lo, hi, el, er, true, true);
    }
    const Real mid = (lo + hi) / 2;
    auto legendre = gauss_legendre(n, digits);
    auto first = gauss_jacobi(n, Real(0), el, digits);
    auto last = gauss_jacobi(n, er, Real(0), digits);

    T total = T(0);
    Real a = lo;
    Real b = lo + d;
    if (b > mid) b = mid;
    total += detail::panel_sum<T>(f, *first, a, b, lo, hi, el, er, true, false);
    Real width = d;
    while (b < mid) {
        a = b;
        width *= 2;
        b = a + width;
        if (b > mid) b = mid;
        total += detail::panel_sum<T>(f, *legendre, a, b, lo, hi, el, er, false, false);
    }
    total += detail::panel_sum<T>(f, *last, mid, hi, lo, hi, el, er, false, true);
    return total;
}

}  // namespace freud
