#include "elliptica/relations.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numeric>
#include <random>

namespace elliptica {

namespace {

int modn(long x, int n) {
    long r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

void check_pair(int n, int k) {
    if (!(n > k && k >= 1))
        throw InvalidParams("require n > k >= 1");
    if (std::gcd(n, k) != 1)
        throw InvalidParams("require gcd(n,k) = 1");
}

// theta_0(0),...,theta_{n-1}(0) etc., guarded when used as denominators.
std::vector<Complex> theta_row(const ThetaBasis& basis, Complex z) {
    std::vector<Complex> out(basis.n);
    for (int al = 0; al < basis.n; ++al) out[al] = theta(basis, al, z);
    return out;
}

Complex guarded(const std::vector<Complex>& row, int index, double guard) {
    const Complex v = row[index];
    if (std::abs(v) < guard) throw DenominatorNearZero(index, std::abs(v));
    return v;
}

// Shared kernel for relations and R(z): numerator thetas evaluated at znum,
// denominator thetas at zden; for the relations znum = 0, zden = -tau.
MatrixC structure_matrix(int n, int k, const ThetaBasis& basis, Complex tau, Complex znum,
                         Complex zden, bool rows_are_relations) {
    const double guard = basis.params.denom_guard;
    const auto num = theta_row(basis, znum);
    const auto den1 = theta_row(basis, zden); // theta_{j-i-r}(zden)
    const auto den2 = theta_row(basis, tau);  // theta_{kr}(tau)

    MatrixC M = MatrixC::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int r = 0; r < n; ++r) {
                const Complex c =
                    num[modn(j - i + static_cast<long>(r) * (k - 1), n)] /
                    (guarded(den1, modn(j - i - r, n), guard) *
                     guarded(den2, modn(static_cast<long>(k) * r, n), guard));
                const int mono = modn(j - r, n) * n + modn(i + static_cast<long>(r), n);
                if (rows_are_relations)
                    M(i * n + j, mono) += c;
                else
                    M(mono, i * n + j) += c;
            }
        }
    }
    return M;
}

MatrixC kron(const MatrixC& A, const MatrixC& B) {
    MatrixC out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

} // namespace

RelationSystem build_relations(int n, int k, const ThetaBasis& basis, Complex tau) {
    check_pair(n, k);
    basis.validate();
    RelationSystem sys;
    sys.n = n;
    sys.k = k;
    sys.tau = tau;
    sys.basis = basis;
    sys.coeffs = structure_matrix(n, k, basis, tau, Complex{0.0, 0.0}, -tau, true);
    Eigen::JacobiSVD<MatrixC> svd(sys.coeffs);
    sys.singular_values = svd.singularValues();
    return sys;
}

RankResult relation_rank(const RelationSystem& sys, double rel_tol) {
    const auto& s = sys.singular_values;
    if (s.size() == 0) throw InvalidParams("singular values not computed");
    const double cutoff = rel_tol * s(0);
    int rank = 0;
    while (rank < s.size() && s(rank) > cutoff) ++rank;
    double gap = std::numeric_limits<double>::infinity();
    if (rank < s.size() && s(rank) > 0.0 && rank > 0) gap = s(rank - 1) / s(rank);
    if (gap < 10.0) throw RankAmbiguous(gap);
    RankResult res;
    res.rank = rank;
    res.gap = gap;
    return res;
}

RMatrix build_rmatrix(int n, int k, const ThetaBasis& basis, Complex tau, Complex z) {
    check_pair(n, k);
    basis.validate();
    RMatrix R;
    R.n = n;
    R.k = k;
    R.z = z;
    R.op = structure_matrix(n, k, basis, tau, -z + tau, -z, false);
    return R;
}

double ybe_residual(int n, int k, const ThetaBasis& basis, Complex tau, Complex u, Complex v) {
    const MatrixC Ru = build_rmatrix(n, k, basis, tau, u).op;
    const MatrixC Ruv = build_rmatrix(n, k, basis, tau, u + v).op;
    const MatrixC Rv = build_rmatrix(n, k, basis, tau, v).op;
    const MatrixC I = MatrixC::Identity(n, n);
    const MatrixC lhs = kron(Ru, I) * kron(I, Ruv) * kron(Rv, I);
    const MatrixC rhs = kron(I, Rv) * kron(Ruv, I) * kron(I, Ru);
    return (lhs - rhs).norm() / lhs.norm();
}

double graph_vanishing_residual_shifted(int n, const ThetaBasis& basis, Complex tau, int samples,
                                        std::uint64_t seed, long shift_coeff) {
    if (basis.n != n) throw InvalidParams("basis order does not match n");
    const RelationSystem sys = build_relations(n, 1, basis, tau);
    const Complex shift = static_cast<double>(shift_coeff) * tau;

    // Rows whose coefficients vanish identically (theta_0(0) = 0 numerators)
    // carry no information; skip them in the per-row normalization.
    const double global_max = sys.coeffs.cwiseAbs().maxCoeff();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Complex z = Complex(unif(rng), 0.0) + unif(rng) * basis.params.eta;
        Eigen::VectorXcd th_z(n), th_s(n);
        for (int al = 0; al < n; ++al) {
            th_z(al) = theta(basis, al, z);
            th_s(al) = theta(basis, al, z + shift);
        }
        const double theta_scale =
            std::max(th_z.cwiseAbs().maxCoeff(), th_s.cwiseAbs().maxCoeff());
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const auto row = sys.coeffs.row(i * n + j);
                const double row_max = row.cwiseAbs().maxCoeff();
                if (row_max <= 1e-12 * global_max) continue;
                Complex val = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        val += row(a * n + b) * th_z(a) * th_s(b);
                worst = std::max(worst, std::abs(val) / (row_max * theta_scale * theta_scale));
            }
        }
    }
    return worst;
}

double graph_vanishing_residual(int n, const ThetaBasis& basis, Complex tau, int samples,
                                std::uint64_t seed) {
    return graph_vanishing_residual_shifted(n, basis, tau, samples, seed, 2L - n);
}

Chars calibrate_characteristics(int n, const TorusParams& params, Complex tau, int samples,
                                std::uint64_t seed) {
    double best = std::numeric_limits<double>::infinity();
    Chars best_chars{};
    for (double a : {0.0, 0.5}) {
        for (double b : {0.0, 0.5}) {
            ThetaBasis basis{n, Chars{a, b}, params};
            double resid;
            try {
                resid = graph_vanishing_residual(n, basis, tau, samples, seed);
            } catch (const DenominatorNearZero&) {
                continue; // this characteristic choice puts tau on a theta zero
            }
            if (resid < best) {
                best = resid;
                best_chars = Chars{a, b};
            }
        }
    }
    if (!(best < 1e-6)) throw CalibrationFailed(best);
    return best_chars;
}

std::vector<OrbitEntry> point_module_orbit(int n, const ThetaBasis& basis, Complex tau,
                                           const TorusPoint& p, int N) {
    if (basis.n != n) throw InvalidParams("basis order does not match n");
    if (n < 1) throw InvalidParams("n must be >= 1");
    // sigma is translation by (2-n)tau, so sigma^{-1} adds (n-2)tau.
    const TorusPoint tau_pt = complex_to_torus(tau, basis.params);
    const TorusPoint step = tau_pt.scaled(n - 2L);
    std::vector<OrbitEntry> orbit;
    orbit.reserve(N + 1);
    TorusPoint cur = p.normalized();
    for (int j = 0; j <= N; ++j) {
        OrbitEntry e;
        e.point = cur;
        e.eval.resize(n);
        const Complex z = torus_to_complex(cur, basis.params);
        for (int al = 0; al < n; ++al) e.eval(al) = theta(basis, al, z);
        orbit.push_back(std::move(e));
        cur = cur + step;
    }
    return orbit;
}

} // namespace elliptica
