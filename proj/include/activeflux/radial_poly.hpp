#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace af {

/// Polynomial in the spherical-mean radius r, degree capped at 8.
/// Sector means of biquadratic data have degree <= 4 and every manipulation
/// performed by the evolution operator stays within the cap; exceeding it
/// signals an assembly bug, not a data problem.
struct RadialPoly {
    static constexpr int kMaxDeg = 8;
    std::array<double, kMaxDeg + 1> c{};  // c[k] multiplies r^k

    double eval(double r) const {
        double v = 0.0;
        for (int k = kMaxDeg; k >= 0; --k) v = v * r + c[k];
        return v;
    }
    int degree() const {
        for (int k = kMaxDeg; k >= 0; --k)
            if (c[k] != 0.0) return k;
        return 0;
    }
    double max_abs_coeff() const {
        double m = 0.0;
        for (double x : c) m = std::max(m, std::abs(x));
        return m;
    }

    RadialPoly& operator+=(const RadialPoly& o) {
        for (int k = 0; k <= kMaxDeg; ++k) c[k] += o.c[k];
        return *this;
    }
    friend RadialPoly operator+(RadialPoly a, const RadialPoly& b) { return a += b; }
    friend RadialPoly operator-(RadialPoly a, const RadialPoly& b) {
        for (int k = 0; k <= kMaxDeg; ++k) a.c[k] -= b.c[k];
        return a;
    }
    friend RadialPoly operator*(RadialPoly a, double s) {
        for (double& x : a.c) x *= s;
        return a;
    }
};

/// d/dr.
inline RadialPoly ddr(const RadialPoly& p) {
    RadialPoly q;
    for (int k = 1; k <= RadialPoly::kMaxDeg; ++k) q.c[k - 1] = k * p.c[k];
    return q;
}

/// Multiply by r^shift (shift >= 0).
inline RadialPoly r_shift(const RadialPoly& p, int shift) {
    RadialPoly q;
    for (int k = RadialPoly::kMaxDeg; k >= 0; --k) {
        if (p.c[k] == 0.0) continue;
        if (k + shift > RadialPoly::kMaxDeg)
            throw std::logic_error("RadialPoly: degree cap exceeded");
        q.c[k + shift] = p.c[k];
    }
    return q;
}

/// Divide by r. The constant coefficient must vanish up to round-off
/// (relative tolerance 1e-12); a genuine remainder signals an assembly bug.
inline RadialPoly div_r(const RadialPoly& p) {
    double scale = p.max_abs_coeff();
    if (std::abs(p.c[0]) > 1e-12 * (scale > 0.0 ? scale : 1.0))
        throw std::domain_error("RadialPoly: not divisible by r");
    RadialPoly q;
    for (int k = 1; k <= RadialPoly::kMaxDeg; ++k) q.c[k - 1] = p.c[k];
    return q;
}

/// Antiderivative int_0^R p(r) dr as a polynomial in R.
inline RadialPoly integrate_0_to_R(const RadialPoly& p) {
    if (p.c[RadialPoly::kMaxDeg] != 0.0)
        throw std::logic_error("RadialPoly: degree cap exceeded");
    RadialPoly q;
    for (int k = 0; k < RadialPoly::kMaxDeg; ++k) q.c[k + 1] = p.c[k] / (k + 1);
    return q;
}

}  // namespace af
