#include "activeflux/spherical_means.hpp"

#include <map>

namespace af {

namespace {

struct GaussRat {
    Rat re, im;
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
};

// i^m for any integer m.
GaussRat unit_power(long long m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {Rat(1), Rat(0)};
        case 1: return {Rat(0), Rat(1)};
        case 2: return {Rat(-1), Rat(0)};
        default: return {Rat(0), Rat(-1)};
    }
}

}  // namespace

QPi wallis(int m) {
    if (m < 0) throw std::invalid_argument("wallis: negative power");
    QPi w = (m % 2 == 0) ? QPi::pi_times(Rat(1, 2)) : QPi::rational(Rat(1));
    for (int k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2)
        w = w.scaled(Rat(k - 1, k));
    return w;
}

QPi radial_integral_coeff(int m) {
    if (m < 0) throw std::invalid_argument("radial_integral: negative power");
    if (m == 0) return QPi::pi_times(Rat(1, 2));
    if (m % 2 == 0) {
        int mp = m / 2;
        // pi / 4^m' * C(2m'-1, m')
        Rat f = binomial(2 * mp - 1, mp);
        for (int i = 0; i < mp; ++i) f = f * Rat(1, 4);
        return QPi::pi_times(f);
    }
    int mp = (m - 1) / 2;
    Rat f = factorial(mp) * factorial(mp) / factorial(2 * mp + 1);
    for (int i = 0; i < mp; ++i) f = f * Rat(4);
    return QPi::rational(f);
}

RadialPoly radial_integral(int m) {
    if (m > RadialPoly::kMaxDeg)
        throw std::invalid_argument("radial_integral: power beyond degree cap");
    RadialPoly p;
    p.c[m] = radial_integral_coeff(m).to_double();
    return p;
}

QPi angular_integral(int p, int q, const Sector& sec) {
    if (p < 0 || q < 0 || p > 12 || q > 12)
        throw std::invalid_argument("angular_integral: unsupported powers");

    // cos^p sin^q = i^{-q}/2^{p+q} * sum_{a,b} C(p,a) C(q,b) (-1)^{q-b} z^k,
    // z = e^{i phi}, k = (2a-p) + (2b-q). Exact term-by-term integration;
    // bounds at multiples of pi/2 make every z^k primitive a Gaussian rational.
    std::map<int, Rat> coeff;
    for (int a = 0; a <= p; ++a)
        for (int b = 0; b <= q; ++b) {
            Rat c = binomial(p, a) * binomial(q, b);
            if ((q - b) % 2 != 0) c = -c;
            coeff[(2 * a - p) + (2 * b - q)] += c;
        }

    GaussRat sum{Rat(0), Rat(0)};
    Rat pi_part(0);
    for (const auto& [k, c] : coeff) {
        if (c.is_zero()) continue;
        if (k == 0) {
            pi_part += c * Rat(sec.s2 - sec.s1, 2);  // (phi2-phi1) = (s2-s1) pi/2
        } else {
            // int z^k dphi = (z(phi2)^k - z(phi1)^k) / (i k), z(s pi/2)^k = i^{ks}
            GaussRat d = unit_power(static_cast<long long>(k) * sec.s2) -
                         unit_power(static_cast<long long>(k) * sec.s1);
            GaussRat inv_ik = {Rat(0), Rat(-1, k)};  // 1/(ik) = -i/k
            GaussRat term = d * inv_ik;
            sum = sum + GaussRat{term.re * c, term.im * c};
        }
    }

    GaussRat rot = unit_power(-q);  // i^{-q}
    GaussRat tot = sum * rot;
    GaussRat pi_tot = GaussRat{pi_part, Rat(0)} * rot;
    Rat scale(1);
    for (int i = 0; i < p + q; ++i) scale = scale * Rat(1, 2);

    if (!(tot.im * scale).is_zero() || !(pi_tot.im * scale).is_zero())
        throw std::logic_error("angular_integral: nonreal result");

    QPi out = QPi::rational(tot.re * scale);
    out += QPi::pi_times(pi_tot.re * scale);
    return out;
}

double angular_integral_value(int p, int q, const Sector& sec) {
    return angular_integral(p, q, sec).to_double();
}

QPi sector_mean_kernel(int kx, int ky, int wa, int wb, const Sector& sec) {
    int K = kx + ky + wa + wb;
    QPi polar = wallis(K + 1).scaled(Rat(2));  // int_0^pi sin^{K+1}
    QPi ang = angular_integral(kx + wa, ky + wb, sec);
    // 1/(4 pi) normalization
    return (polar * ang).scaled(Rat(1, 4)).pi_shifted(-1);
}

RadialPoly sector_mean(int px, int py, int wa, int wb, double x0, double y0,
                       const Sector& sec) {
    if (px < 0 || px > 2 || py < 0 || py > 2 || wa < 0 || wb < 0 || wa + wb > 2)
        throw std::invalid_argument("sector_mean: unsupported powers");

    RadialPoly out;
    std::array<double, 3> x0pow{1.0, x0, x0 * x0};
    std::array<double, 3> y0pow{1.0, y0, y0 * y0};
    for (int kx = 0; kx <= px; ++kx)
        for (int ky = 0; ky <= py; ++ky) {
            Rat binput = binomial(px, kx) * binomial(py, ky);
            QPi kernel = sector_mean_kernel(kx, ky, wa, wb, sec).scaled(binput);
            out.c[kx + ky] += kernel.to_double() * x0pow[px - kx] * y0pow[py - ky];
        }
    return out;
}

}  // namespace af
