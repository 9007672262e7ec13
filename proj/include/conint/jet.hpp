#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "conint/vec3.hpp"

namespace conint {

// Truncated power series in one formal variable h around h = 0.
// coeff(k) is the k-th Taylor coefficient; order() is the highest retained power.
// Arithmetic is exact on the retained coefficients: truncation is explicit in the
// order, never silent rounding of a kept term.
class Jet {
  public:
    explicit Jet(int order) : c_(check_order(order) + 1, Complex(0.0)) {}

    static Jet constant(Complex a, int order) {
        Jet j(order);
        j.c_[0] = a;
        return j;
    }

    static Jet variable(int order) {
        Jet j(order);
        if (order < 1) throw std::domain_error("Jet::variable: order must be >= 1");
        j.c_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    Complex coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : Complex(0.0); }
    void set_coeff(int k, Complex v) {
        if (k < 0 || k >= (int)c_.size()) throw std::out_of_range("Jet::set_coeff");
        c_[k] = v;
    }

    // d^k/dh^k at h = 0.  Throws when the jet does not carry the coefficient:
    // truncation must surface as an error, not as a silent zero.
    Complex derivative_at_zero(int k) const {
        if (k < 0 || k > order())
            throw std::domain_error("Jet::derivative_at_zero: requested order exceeds jet order");
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return c_[k] * f;
    }

    Jet operator-() const {
        Jet r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            Complex s = 0.0;
            for (int i = 0; i <= k; ++i) s += a.coeff(i) * b.coeff(k - i);
            r.c_[k] = s;
        }
        return r;
    }
    friend Jet operator+(const Jet& a, Complex s) {
        Jet r = a;
        r.c_[0] += s;
        return r;
    }
    friend Jet operator+(Complex s, const Jet& a) { return a + s; }
    friend Jet operator-(const Jet& a, Complex s) { return a + (-s); }
    friend Jet operator-(Complex s, const Jet& a) { return (-a) + s; }
    friend Jet operator*(const Jet& a, Complex s) {
        Jet r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend Jet operator*(Complex s, const Jet& a) { return a * s; }
    friend Jet operator/(const Jet& a, Complex s) { return a * (1.0 / s); }

  private:
    static int check_order(int order) {
        if (order < 0) throw std::domain_error("Jet: negative order");
        return order;
    }
    std::vector<Complex> c_;
};

// 1/a, requires a(0) != 0
inline Jet reciprocal(const Jet& a) {
    if (a.coeff(0) == Complex(0.0))
        throw std::domain_error("Jet reciprocal: constant term is zero");
    Jet r(a.order());
    const Complex inv0 = 1.0 / a.coeff(0);
    r.set_coeff(0, inv0);
    for (int n = 1; n <= r.order(); ++n) {
        Complex s = 0.0;
        for (int k = 1; k <= n; ++k) s += a.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, -inv0 * s);
    }
    return r;
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

// outer(inner(h)); requires inner(0) == 0 so that the result is again a jet at 0
inline Jet compose(const Jet& outer, const Jet& inner) {
    if (inner.coeff(0) != Complex(0.0))
        throw std::domain_error("Jet compose: inner constant term must vanish");
    const int n = std::min(outer.order(), inner.order());
    Jet r = Jet::constant(outer.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) r = r * inner + outer.coeff(k);
    return r;
}

inline Jet derivative(const Jet& a) {
    if (a.order() == 0) return Jet(0);
    Jet r(a.order() - 1);
    for (int k = 0; k <= r.order(); ++k) r.set_coeff(k, a.coeff(k + 1) * Complex(k + 1));
    return r;
}

// antiderivative vanishing at 0; gains one order
inline Jet integrate(const Jet& a) {
    Jet r(a.order() + 1);
    for (int k = 1; k <= r.order(); ++k) r.set_coeff(k, a.coeff(k - 1) / Complex(k));
    return r;
}

// principal branch at the constant term; requires a(0) != 0
inline Jet sqrt(const Jet& a) {
    if (a.coeff(0) == Complex(0.0))
        throw std::domain_error("Jet sqrt: constant term is zero");
    Jet r(a.order());
    const Complex s0 = std::sqrt(a.coeff(0));
    r.set_coeff(0, s0);
    for (int n = 1; n <= r.order(); ++n) {
        Complex s = a.coeff(n);
        for (int k = 1; k < n; ++k) s -= r.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, s / (2.0 * s0));
    }
    return r;
}

inline Jet exp(const Jet& a) {
    Jet r(a.order());
    r.set_coeff(0, std::exp(a.coeff(0)));
    for (int n = 1; n <= r.order(); ++n) {
        Complex s = 0.0;
        for (int k = 1; k <= n; ++k) s += Complex(k) * a.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, s / Complex(n));
    }
    return r;
}

// principal branch; requires a(0) != 0
inline Jet log(const Jet& a) {
    if (a.coeff(0) == Complex(0.0))
        throw std::domain_error("Jet log: constant term is zero");
    Jet r(a.order());
    r.set_coeff(0, std::log(a.coeff(0)));
    const Complex inv0 = 1.0 / a.coeff(0);
    for (int n = 1; n <= r.order(); ++n) {
        Complex s = a.coeff(n);
        for (int k = 1; k < n; ++k) s -= Complex(k) / Complex(n) * r.coeff(k) * a.coeff(n - k);
        r.set_coeff(n, s * inv0);
    }
    return r;
}

inline Jet sin(const Jet& a);
inline Jet cos(const Jet& a);

namespace detail {
inline void sincos(const Jet& a, Jet& s, Jet& c) {
    s = Jet(a.order());
    c = Jet(a.order());
    s.set_coeff(0, std::sin(a.coeff(0)));
    c.set_coeff(0, std::cos(a.coeff(0)));
    for (int n = 1; n <= a.order(); ++n) {
        Complex ssum = 0.0, csum = 0.0;
        for (int k = 1; k <= n; ++k) {
            ssum += Complex(k) * a.coeff(k) * c.coeff(n - k);
            csum += Complex(k) * a.coeff(k) * s.coeff(n - k);
        }
        s.set_coeff(n, ssum / Complex(n));
        c.set_coeff(n, -csum / Complex(n));
    }
}
}  // namespace detail

inline Jet sin(const Jet& a) {
    Jet s(0), c(0);
    detail::sincos(a, s, c);
    return s;
}

inline Jet cos(const Jet& a) {
    Jet s(0), c(0);
    detail::sincos(a, s, c);
    return c;
}

// arcsin of a jet with vanishing constant term (the only case needed; a nonzero
// constant term would put the expansion point onto an arbitrary branch)
inline Jet asin(const Jet& a) {
    if (a.coeff(0) != Complex(0.0))
        throw std::domain_error("Jet asin: constant term must vanish");
    // d/dh asin(a) = a' / sqrt(1 - a^2), integrated with asin(0) = 0
    Jet one_minus = Complex(1.0) - a * a;
    Jet g = derivative(a) / sqrt(one_minus);
    Jet r = integrate(g);
    // integrate() grew the order by one; cut back to the input order
    Jet out(a.order());
    for (int k = 0; k <= out.order(); ++k) out.set_coeff(k, r.coeff(k));
    return out;
}

}  // namespace conint
