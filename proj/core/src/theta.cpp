#include "elliptica/theta.hpp"

#include <cmath>

namespace elliptica {

namespace {

constexpr long kHardCap = 1000000;
constexpr double kPi = 3.14159265358979323846;

// One series term, indexed by the shifted frequency w = m + a + alpha/n.
inline Complex term(double w, int n, Complex eta, Complex z, double b) {
    const Complex i(0.0, 1.0);
    return std::exp(i * kPi * static_cast<double>(n) * eta * w * w +
                    2.0 * kPi * i * w * (static_cast<double>(n) * z + b));
}

} // namespace

Complex theta(const ThetaBasis& basis, long alpha, Complex z) {
    basis.validate();
    const int n = basis.n;
    const Complex eta = basis.params.eta;
    const double tol = basis.params.trunc_tol;
    const double a = basis.chars.a, b = basis.chars.b;

    long ar = alpha % n;
    if (ar < 0) ar += n;
    const double c = a + static_cast<double>(ar) / n;

    // Reduce z mod Z + Z eta before summing.  Without this the largest term
    // exceeds the sum by a factor ~ e^{pi n Im(z)^2 / Im(eta)} and the naive
    // series loses that many digits to cancellation.  The pulled-out factor
    // is exact:  theta(z0 + p + q eta) =
    //   e^{2 pi i n a p} e^{-pi i n eta q^2 - 2 pi i q (n z0 + b)} theta(z0).
    const Complex i(0.0, 1.0);
    const double v = z.imag() / eta.imag();
    const double u = z.real() - v * eta.real();
    const long q = std::lround(v);
    const long p = std::lround(u);
    z -= static_cast<double>(p) + static_cast<double>(q) * eta;
    const Complex lattice_factor =
        std::exp(2.0 * kPi * i * static_cast<double>(n) * a * static_cast<double>(p) -
                 kPi * i * static_cast<double>(n) * eta * static_cast<double>(q) *
                     static_cast<double>(q) -
                 2.0 * kPi * i * static_cast<double>(q) * (static_cast<double>(n) * z + b));

    // |term| = exp(-pi n Im(eta) w^2 - 2 pi w n Im(z)); peak at w = -Im(z)/Im(eta).
    const double peak = -z.imag() / eta.imag();
    const long m0 = std::lround(peak - c);

    Complex sum = term(m0 + c, n, eta, z, b);
    double scale = std::max(1.0, std::abs(sum));
    long terms = 1;
    for (int dir : {+1, -1}) {
        int small_run = 0;
        for (long step = 1;; ++step) {
            const long m = m0 + dir * step;
            const Complex t = term(m + c, n, eta, z, b);
            sum += t;
            scale = std::max(scale, std::abs(sum));
            if (++terms > kHardCap)
                throw NonConvergent("theta series exceeded hard cap of 1e6 terms");
            const double w = m + c;
            const bool past_peak = dir > 0 ? (w > peak) : (w < peak);
            if (past_peak && std::abs(t) < tol * scale) {
                if (++small_run >= 2) break;
            } else {
                small_run = 0;
            }
        }
    }
    return lattice_factor * sum;
}

namespace {

// |lhs - rhs| scaled by the size of the values being compared; the raw
// difference is meaningless when the transformation factor is ~ e^{2 pi n}.
inline double rel_defect(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

} // namespace

std::pair<double, double> quasiperiodicity_residuals(const ThetaBasis& basis, long alpha, Complex z) {
    const Complex i(0.0, 1.0);
    const double n = basis.n;
    const Complex eta = basis.params.eta;
    const Complex t0 = theta(basis, alpha, z);
    const Complex f1 = std::exp(2.0 * kPi * i * n * basis.chars.a);
    const Complex f2 = std::exp(-kPi * i * n * eta - 2.0 * kPi * i * (n * z + basis.chars.b));
    const double r1 = rel_defect(theta(basis, alpha, z + 1.0), f1 * t0);
    const double r2 = rel_defect(theta(basis, alpha, z + eta), f2 * t0);
    return {r1, r2};
}

std::pair<double, double> heisenberg_residuals(const ThetaBasis& basis, long alpha, Complex z) {
    const Complex i(0.0, 1.0);
    const double n = basis.n;
    const Complex eta = basis.params.eta;
    long ar = alpha % basis.n;
    if (ar < 0) ar += basis.n;
    const Complex f1 = std::exp(2.0 * kPi * i * (basis.chars.a + static_cast<double>(ar) / n));
    const Complex f2 = std::exp(-kPi * i * eta / n - 2.0 * kPi * i * z - 2.0 * kPi * i * basis.chars.b / n);
    const double h1 = rel_defect(theta(basis, alpha, z + 1.0 / n), f1 * theta(basis, alpha, z));
    const double h2 = rel_defect(theta(basis, alpha, z + eta / n), f2 * theta(basis, alpha + 1, z));
    return {h1, h2};
}

} // namespace elliptica
