#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <random>

#include "elliptica/relations.hpp"

using namespace elliptica;

namespace {

const TorusParams kDefault{Complex(0.0, 1.0), 1e-14, 1e-10};
const Complex kTau{0.1234, 0.0567};

ThetaBasis fo_basis(int n) { return ThetaBasis{n, Chars{0.5, 0.5}, kDefault}; }

// orthonormal basis of the row space (right singular vectors above threshold)
Eigen::MatrixXcd row_space(const RelationSystem& sys, int rank) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys.coeffs, Eigen::ComputeThinV);
    return svd.matrixV().leftCols(rank);
}

} // namespace

TEST_CASE("n = 3, k = 1: each relation has three monomials and respects the grading") {
    const auto sys = build_relations(3, 1, fo_basis(3), kTau);
    REQUIRE(sys.coeffs.rows() == 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const auto row = sys.coeffs.row(i * 3 + j);
            int support = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    const Complex c = row(a * 3 + b);
                    if ((a + b) % 3 != (i + j) % 3) {
                        CHECK(c == Complex(0.0, 0.0)); // exact: never written
                    } else if (std::abs(c) > 0) {
                        ++support;
                    }
                }
            CHECK(support == 3);
        }
}

TEST_CASE("ranks and gaps for small (n, k)") {
    for (auto [n, k, want] : std::vector<std::tuple<int, int, int>>{
             {3, 1, 3}, {4, 1, 6}, {5, 2, 10}, {4, 3, 6}}) {
        const auto sys = build_relations(n, k, fo_basis(n), kTau);
        const RankResult r = relation_rank(sys);
        CHECK(r.rank == want);
        CHECK(r.gap > 1e3);
    }
}

TEST_CASE("n = 2 relations pin down the four-dimensional quadric family") {
    const auto sys = build_relations(2, 1, fo_basis(2), kTau);
    const RankResult r = relation_rank(sys);
    CHECK(r.rank == 1);
    // weight grading: the single relation lives in weight 0+1 and 1+0 rows;
    // rows (0,0) and (1,1) only touch x0x0, x1x1 columns
    for (int idx : {0, 3})
        for (int col : {1, 2})
            CHECK(sys.coeffs(idx, col) == Complex(0.0, 0.0));
}

TEST_CASE("(4,3): the relations contain all commutators") {
    // Q_{n,n-1} is a twist of the polynomial ring: [x_a, x_b] must lie in
    // the span of the relation rows.
    const auto sys = build_relations(4, 3, fo_basis(4), kTau);
    const RankResult r = relation_rank(sys);
    REQUIRE(r.rank == 6);
    const Eigen::MatrixXcd V = row_space(sys, r.rank);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            Eigen::VectorXcd c = Eigen::VectorXcd::Zero(16);
            c(a * 4 + b) = 1.0;
            c(b * 4 + a) = -1.0;
            const double resid = (c - V * (V.adjoint() * c)).norm() / c.norm();
            CHECK(resid < 1e-9);
        }
}

TEST_CASE("degenerate tau hits the denominator guard") {
    // tau = 0: theta_0(0) = 0 at half characteristics, so c_r blows up
    CHECK_THROWS_AS(build_relations(3, 1, fo_basis(3), Complex(0.0, 0.0)),
                    DenominatorNearZero);
}

TEST_CASE("rank is refused when the spectral gap is weak") {
    RelationSystem sys;
    sys.n = 2;
    sys.singular_values = Eigen::VectorXd(4);
    sys.singular_values << 1.0, 0.5, 4e-8, 0.9e-8; // threshold 1e-8, gap ~4.4
    CHECK_THROWS_AS(relation_rank(sys), RankAmbiguous);
    sys.singular_values << 1.0, 0.5, 4e-8, 1e-16; // clean gap
    const RankResult r = relation_rank(sys);
    CHECK(r.rank == 3);
    CHECK(r.gap > 1e3);
}

TEST_CASE("the relation matrix is the transpose of R(tau)") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 2}}) {
        const auto basis = fo_basis(n);
        const auto sys = build_relations(n, k, basis, kTau);
        const auto R = build_rmatrix(n, k, basis, kTau, kTau);
        const double diff = (sys.coeffs - R.op.transpose()).norm();
        CHECK(diff == 0.0); // same arithmetic path, entry for entry
    }
}

TEST_CASE("Yang-Baxter holds for k = 1") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> unif(0.05, 0.4);
    for (int n = 2; n <= 5; ++n) {
        const auto basis = fo_basis(n);
        for (int trial = 0; trial < 3; ++trial) {
            const Complex u(unif(rng), unif(rng));
            const Complex v(unif(rng), unif(rng));
            CHECK(ybe_residual(n, 1, basis, kTau, u, v) < 1e-9);
        }
    }
}

TEST_CASE("relations vanish on the graph of sigma, and only there") {
    for (int n : {3, 4, 5}) {
        const auto basis = fo_basis(n);
        const double on = graph_vanishing_residual(n, basis, kTau, 20, 7);
        CHECK(on < 1e-8);
        // wrong translation multiplier: nothing cancels
        const double off = graph_vanishing_residual_shifted(n, basis, kTau, 20, 7, 3 - n);
        CHECK(off > 1e-2);
    }
}

TEST_CASE("characteristic calibration lands on (1/2, 1/2) for many tau") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> unif(0.03, 0.3);
    for (int trial = 0; trial < 10; ++trial) {
        const Complex tau(unif(rng), unif(rng));
        const Chars c = calibrate_characteristics(3, kDefault, tau, 10, trial);
        CHECK(c.a == doctest::Approx(0.5));
        CHECK(c.b == doctest::Approx(0.5));
    }
}

TEST_CASE("point module orbits") {
    const int n = 5;
    const auto basis = fo_basis(n);
    const TorusPoint p{0.31, 0.17};
    const auto orbit = point_module_orbit(n, basis, kTau, p, 6);
    REQUIRE(orbit.size() == 7);
    // consecutive points differ by the fixed translation (n-2)*tau
    const TorusPoint tau_pt = complex_to_torus(kTau, kDefault);
    const TorusPoint step = tau_pt.scaled(n - 2);
    for (size_t j = 0; j + 1 < orbit.size(); ++j) {
        const TorusPoint expect = orbit[j].point + step;
        CHECK(torus_distance(orbit[j + 1].point, expect) < 1e-12);
        CHECK(orbit[j].eval.size() == n);
        CHECK(orbit[j].eval.norm() > 1e-8); // theta embedding has no base points
    }
    // the shifted orbit is the tail of the original
    const auto tail = point_module_orbit(n, basis, kTau, orbit[1].point, 5);
    for (size_t j = 0; j < tail.size(); ++j) {
        CHECK(torus_distance(tail[j].point, orbit[j + 1].point) < 1e-12);
        CHECK((tail[j].eval - orbit[j + 1].eval).norm() < 1e-10 * orbit[j + 1].eval.norm());
    }
}

TEST_CASE("torsion translation gives a constant orbit") {
    // n = 4: (n-2)*tau = 2*tau, so tau = (1/2, 0) translates by a full period
    const int n = 4;
    const auto basis = fo_basis(n);
    const Complex tau = torus_to_complex(TorusPoint{0.5, 0.0}, kDefault);
    const auto orbit = point_module_orbit(n, basis, tau, TorusPoint{0.2, 0.4}, 4);
    for (const auto& e : orbit)
        CHECK(torus_distance(e.point, orbit[0].point) < 1e-12);
}
