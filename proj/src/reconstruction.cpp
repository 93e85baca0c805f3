#include "activeflux/reconstruction.hpp"

#include <stdexcept>

namespace af {

namespace {

// Monomial numerators of b_m over the common denominator 4, indexed
// [m-1][k][l] for xi^k eta^l. Obtained by expanding the product forms; the
// unit tests check the two representations against each other.
constexpr int kBasisNum[9][3][3] = {
    // b1 = -1/4 (xi-1)(eta-1)(eta+xi+1)
    {{-1, 0, 1}, {0, 1, -1}, {1, -1, 0}},
    // b2 = 1/2 (xi^2-1)(eta-1)
    {{2, -2, 0}, {0, 0, 0}, {-2, 2, 0}},
    // b3 = 1/4 (xi+1)(eta-1)(eta-xi+1)
    {{-1, 0, 1}, {0, -1, 1}, {1, -1, 0}},
    // b4 = -1/2 (eta^2-1)(xi+1)
    {{2, 0, -2}, {2, 0, -2}, {0, 0, 0}},
    // b5 = 1/4 (xi+1)(eta+1)(eta+xi-1)
    {{-1, 0, 1}, {0, 1, 1}, {1, 1, 0}},
    // b6 = -1/2 (xi^2-1)(eta+1)
    {{2, 2, 0}, {0, 0, 0}, {-2, -2, 0}},
    // b7 = -1/4 (xi-1)(eta+1)(eta-xi-1)
    {{-1, 0, 1}, {0, -1, -1}, {1, 1, 0}},
    // b8 = 1/2 (eta^2-1)(xi-1)
    {{2, 0, -2}, {-2, 0, 2}, {0, 0, 0}},
    // b9 = (xi^2-1)(eta^2-1)
    {{4, 0, -4}, {0, 0, 0}, {-4, 0, 4}},
};

}  // namespace

double basis_eval(int m, double xi, double eta) {
    switch (m) {
        case 1: return -0.25 * (xi - 1) * (eta - 1) * (eta + xi + 1);
        case 2: return 0.5 * (xi - 1) * (eta - 1) * (xi + 1);
        case 3: return 0.25 * (xi + 1) * (eta - 1) * (eta - xi + 1);
        case 4: return -0.5 * (eta - 1) * (xi + 1) * (eta + 1);
        case 5: return 0.25 * (xi + 1) * (eta + 1) * (eta + xi - 1);
        case 6: return -0.5 * (xi - 1) * (eta + 1) * (xi + 1);
        case 7: return -0.25 * (xi - 1) * (eta + 1) * (eta - xi - 1);
        case 8: return 0.5 * (eta - 1) * (xi - 1) * (eta + 1);
        case 9: return (eta - 1) * (eta + 1) * (xi - 1) * (xi + 1);
        default: throw std::invalid_argument("basis_eval: m must be in 1..9");
    }
}

Rat basis_monomial(int m, int k, int l) {
    if (m < 1 || m > 9 || k < 0 || k > 2 || l < 0 || l > 2)
        throw std::invalid_argument("basis_monomial: index out of range");
    return Rat(kBasisNum[m - 1][k][l], 4);
}

double compute_c9(double mean, const std::array<double, 8>& q) {
    const double alt = q[0] - 4.0 * q[1] + q[2] - 4.0 * q[3] + q[4] - 4.0 * q[5] +
                       q[6] - 4.0 * q[7];
    return (9.0 / 16.0) * (4.0 * mean + alt / 3.0);
}

ReconCoeffs compute_coeffs(double mean, const std::array<double, 8>& q) {
    ReconCoeffs rc;
    for (int m = 0; m < 8; ++m) rc.c[m] = q[m];
    rc.c[8] = compute_c9(mean, q);
    return rc;
}

double recon_eval(const ReconCoeffs& rc, double xi, double eta) {
    double v = 0.0;
    for (int m = 1; m <= 9; ++m) v += rc.c[m - 1] * basis_eval(m, xi, eta);
    return v;
}

std::array<std::array<double, 3>, 3> recon_monomial_coeffs(const ReconCoeffs& rc) {
    std::array<std::array<double, 3>, 3> a{};
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            double s = 0.0;
            for (int m = 0; m < 9; ++m) s += rc.c[m] * (kBasisNum[m][k][l] * 0.25);
            a[k][l] = s;
        }
    return a;
}

}  // namespace af
