#ifndef GJQ_JET_HPP
#define GJQ_JET_HPP

#include <array>
#include <cmath>

namespace gjq::detail {

// Truncated Taylor series f(t0 + t) = sum c[i] t^i, i < N.
template <int N>
struct Jet {
    std::array<double, N> c{};

    static Jet constant(double v) {
        Jet r;
        r.c[0] = v;
        return r;
    }
    static Jet variable(double t0) {
        Jet r;
        r.c[0] = t0;
        if (N > 1) r.c[1] = 1.0;
        return r;
    }

    Jet& operator+=(const Jet& o) {
        for (int i = 0; i < N; ++i) c[i] += o.c[i];
        return *this;
    }
    Jet& operator*=(double s) {
        for (int i = 0; i < N; ++i) c[i] *= s;
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k < N; ++k) {
            double s = 0.0;
            for (int i = 0; i <= k; ++i) s += a.c[i] * b.c[k - i];
            r.c[k] = s;
        }
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k < N; ++k) {
            double s = a.c[k];
            for (int i = 1; i <= k; ++i) s -= b.c[i] * r.c[k - i];
            r.c[k] = s / b.c[0];
        }
        return r;
    }

    // value and first derivative at t0 + t
    double value(double t) const {
        double r = 0.0;
        for (int i = N - 1; i >= 0; --i) r = r * t + c[i];
        return r;
    }
    double derivative(double t) const {
        double r = 0.0;
        for (int i = N - 1; i >= 1; --i) r = r * t + i * c[i];
        return r;
    }
};

template <int N>
Jet<N> sin_jet(double t0) {
    Jet<N> r;
    const double s = std::sin(t0), c = std::cos(t0);
    double f = 1.0;
    for (int i = 0; i < N; ++i) {
        if (i > 0) f *= i;
        const double d[4] = {s, c, -s, -c};
        r.c[i] = d[i % 4] / f;
    }
    return r;
}

template <int N>
Jet<N> cos_jet(double t0) {
    Jet<N> r;
    const double s = std::sin(t0), c = std::cos(t0);
    double f = 1.0;
    for (int i = 0; i < N; ++i) {
        if (i > 0) f *= i;
        const double d[4] = {c, -s, -c, s};
        r.c[i] = d[i % 4] / f;
    }
    return r;
}

}  // namespace gjq::detail

#endif
