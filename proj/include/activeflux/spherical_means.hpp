#pragma once

#include <array>

#include "activeflux/radial_poly.hpp"
#include "activeflux/rational.hpp"

namespace af {

/// Azimuthal sector [phi1, phi2] with bounds stored as integer multiples of
/// pi/2. Sector means of the piecewise reconstruction only ever need quarter,
/// half and full circles.
struct Sector {
    int s1, s2;  // phi_i = s_i * pi/2

    Sector(int a, int b) : s1(a), s2(b) {
        int w = s2 - s1;
        if (w != 1 && w != 2 && w != 4)
            throw std::invalid_argument("Sector: width must be pi/2, pi or 2*pi");
    }
    static Sector full() { return {0, 4}; }
    int width() const { return s2 - s1; }
};

/// int_0^r s^m / sqrt(r^2 - s^2) ds as a polynomial in r (closed form).
RadialPoly radial_integral(int m);
/// Exact coefficient of r^m in radial_integral(m).
QPi radial_integral_coeff(int m);

/// Wallis integral int_0^{pi/2} sin^m, exact.
QPi wallis(int m);

/// int_{phi1}^{phi2} cos^p(phi) sin^q(phi) dphi, exact (bounds from Sector).
QPi angular_integral(int p, int q, const Sector& sec);
double angular_integral_value(int p, int q, const Sector& sec);

/// Exact kernel of the sector mean: the coefficient that multiplies
/// r^(kx+ky) x0^0 y0^0 for the pure monomial part, i.e.
/// 1/(4 pi) * int_0^pi sin^{K+1} dtheta * int_sec cos^{kx+a} sin^{ky+b} dphi
/// with K = kx+ky+a+b.
QPi sector_mean_kernel(int kx, int ky, int wa, int wb, const Sector& sec);

/// Partial spherical mean of x^px y^py weighted by n_x^wa n_y^wb, evaluated
/// at offset (x0, y0) from the data's local origin, as a polynomial in the
/// radius. Monomial powers up to 2 and total weight power up to 2 cover
/// biquadratic data against every normal weight the solution operator needs.
RadialPoly sector_mean(int px, int py, int wa, int wb, double x0, double y0,
                       const Sector& sec);

}  // namespace af
