#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "elliptica/fractions.hpp"

using namespace elliptica;

namespace {

// Independent determinant oracle: full Laplace expansion along the first row
// of the tridiagonal matrix with diagonal seq and -1 off the diagonal.
long det_laplace(const std::vector<std::vector<long>>& m) {
    const size_t sz = m.size();
    if (sz == 0) return 1;
    if (sz == 1) return m[0][0];
    long det = 0;
    long sign = 1;
    for (size_t c = 0; c < sz; ++c) {
        if (m[0][c] != 0) {
            std::vector<std::vector<long>> minor;
            for (size_t r = 1; r < sz; ++r) {
                std::vector<long> row;
                for (size_t cc = 0; cc < sz; ++cc)
                    if (cc != c) row.push_back(m[r][cc]);
                minor.push_back(row);
            }
            det += sign * m[0][c] * det_laplace(minor);
        }
        sign = -sign;
    }
    return det;
}

long det_oracle(const std::vector<long>& seq) {
    const size_t sz = seq.size();
    std::vector<std::vector<long>> m(sz, std::vector<long>(sz, 0));
    for (size_t i = 0; i < sz; ++i) {
        m[i][i] = seq[i];
        if (i + 1 < sz) m[i][i + 1] = m[i + 1][i] = -1;
    }
    return det_laplace(m);
}

// Independent fold oracle: n_1 - 1/(n_2 - 1/(... )) over exact fractions.
std::pair<long, long> fold_oracle(const std::vector<long>& cf) {
    long num = cf.back(), den = 1;
    for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
        // x -> n_i - 1/x, with x = num/den
        const long nnum = *it * num - den;
        den = num;
        num = nnum;
        const long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return {num, den};
}

TorusVector random_vec(long g, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    TorusVector z(g);
    for (auto& p : z) p = TorusPoint{unif(rng), unif(rng)};
    return z;
}

} // namespace

TEST_CASE("worked examples") {
    CHECK(negcf(5, 2) == std::vector<long>{3, 2});
    CHECK(negcf(7, 3) == std::vector<long>{3, 2, 2});
    CHECK(negcf(4, 1) == std::vector<long>{4});
    CHECK(negcf(12, 5) == std::vector<long>{3, 2, 3});
    CHECK(negcf(5, 4) == std::vector<long>{2, 2, 2, 2});

    const FractionData fd = fraction_data(5, 2);
    CHECK(fd.kseq == std::vector<long>{5, 2, 1, 0});
    CHECK(fd.lseq == std::vector<long>{0, 1, 3, 5});
    CHECK(fd.kprime == 3);
    CHECK(fd.sigma_coeffs == std::vector<long>{-2, -1});
}

TEST_CASE("exhaustive invariants for n <= 50") {
    for (long n = 2; n <= 50; ++n) {
        for (long k = 1; k < n; ++k) {
            if (std::gcd(n, k) != 1) continue;
            const FractionData fd = fraction_data(n, k);
            const long g = fd.g();
            REQUIRE(g >= 1);
            for (long e : fd.cf) CHECK(e >= 2);

            // exact round trip
            const auto [num, den] = fold_oracle(fd.cf);
            CHECK(num == n);
            CHECK(den == k);

            // determinant identities, against the Laplace oracle where cheap
            CHECK(tridiag_det(fd.cf) == n);
            if (g <= 7) CHECK(det_oracle(fd.cf) == n);
            CHECK(fd.kseq.front() == n);
            CHECK(fd.kseq[1] == k);
            CHECK(fd.kseq[g] == 1);
            CHECK(fd.kseq[g + 1] == 0);
            CHECK(fd.lseq.front() == 0);
            CHECK(fd.lseq[1] == 1);
            CHECK(fd.lseq[g + 1] == n);
            CHECK(fd.kprime == fd.lseq[g]);
            CHECK((k * fd.kprime) % n == 1 % n);

            // truncated determinant gives the inverse of k mod n
            std::vector<long> head(fd.cf.begin(), fd.cf.end() - 1);
            CHECK(tridiag_det(head) == fd.kprime);

            // the 2x2 minors k_i l_{i+1} - k_{i+1} l_i are constant = n
            for (long i = 0; i <= g; ++i)
                CHECK(fd.kseq[i] * fd.lseq[i + 1] - fd.kseq[i + 1] * fd.lseq[i] == n);

            // three-term recurrences
            for (long i = 1; i <= g; ++i) {
                CHECK(fd.kseq[i - 1] + fd.kseq[i + 1] == fd.cf[i - 1] * fd.kseq[i]);
                CHECK(fd.lseq[i - 1] + fd.lseq[i + 1] == fd.cf[i - 1] * fd.lseq[i]);
            }
        }
    }
}

TEST_CASE("all-2 and Fibonacci families") {
    // n/(n-1) = [2,...,2] (n-1 twos)
    for (long n = 2; n <= 50; ++n)
        CHECK(negcf(n, n - 1) == std::vector<long>(n - 1, 2));

    // [3,...,3] (g threes) folds to F_{2g+2} / F_{2g}
    std::vector<long long> fib{1, 1};
    while (fib.size() < 22) fib.push_back(fib.end()[-1] + fib.end()[-2]);
    for (long g = 1; g <= 9; ++g) {
        const std::vector<long> cf(g, 3);
        const auto [num, den] = fold_oracle(cf);
        CHECK(num == fib[2 * g + 1]);
        CHECK(den == fib[2 * g - 1]);
        CHECK(negcf(num, den) == cf);
    }
}

TEST_CASE("n^2/(n-1) = [n+2, 2, ..., 2]") {
    for (long n = 2; n <= 7; ++n) {
        std::vector<long> expect{n + 2};
        expect.insert(expect.end(), n - 2, 2);
        CHECK(negcf(n * n, n - 1) == expect);
    }
}

TEST_CASE("variety classification") {
    CHECK(classify_variety(5, 1).tag == VarietyKind::Tag::PowerOfE); // [5]
    CHECK(classify_variety(5, 1).label() == "E");
    CHECK(classify_variety(7, 3).tag == VarietyKind::Tag::SymmetricPower); // [3,2,2]
    CHECK(classify_variety(7, 3).m == 3);
    CHECK(classify_variety(7, 3).g == 3);
    CHECK(classify_variety(7, 3).label() == "S^3(E)");
    CHECK(classify_variety(5, 2).tag == VarietyKind::Tag::SymmetricPower); // [3,2]
    CHECK(classify_variety(4, 3).tag == VarietyKind::Tag::ProjectiveSpace); // [2,2,2]
    CHECK(classify_variety(4, 3).proj_dim == 3);
    CHECK(classify_variety(4, 3).label() == "P^3");
    CHECK(classify_variety(12, 5).tag == VarietyKind::Tag::GeneralQuotient); // [3,2,3]
    // [2,...,2,m] is the mirrored symmetric-power shape
    CHECK(classify_variety(7, 5).tag == VarietyKind::Tag::SymmetricPower); // [2,2,3]
    CHECK(classify_variety(7, 5).side == VarietyKind::Side::last);

    // n = (m-1)g + 1 whenever the shape is [m,2^{g-1}]
    for (long m = 3; m <= 9; ++m)
        for (long g = 2; g <= 6; ++g) {
            const long n = (m - 1) * g + 1;
            long k = 0;
            for (long c = 1; c < n; ++c)
                if (std::gcd(n, c) == 1) {
                    std::vector<long> want{m};
                    want.insert(want.end(), g - 1, 2);
                    if (negcf(n, c) == want) { k = c; break; }
                }
            REQUIRE(k != 0);
            const VarietyKind kind = classify_variety(n, k);
            CHECK(kind.tag == VarietyKind::Tag::SymmetricPower);
            CHECK(kind.m == m);
            CHECK(kind.g == g);
        }
}

TEST_CASE("sigma group generators and the involutions s_i") {
    CHECK(sigma_group_generators(7, 3) == std::vector<long>{2, 3});
    CHECK(sigma_group_generators(5, 1).empty());

    std::mt19937_64 rng(5);
    for (auto [n, k] : std::vector<std::pair<long, long>>{{7, 3}, {5, 2}, {13, 9}}) {
        const FractionData fd = fraction_data(n, k);
        for (long i : sigma_group_generators(n, k)) {
            for (int trial = 0; trial < 20; ++trial) {
                const TorusVector z = random_vec(fd.g(), rng);
                // involution
                const TorusVector back = apply_s(i, apply_s(i, z));
                for (long j = 0; j < fd.g(); ++j)
                    CHECK(torus_distance(back[j], z[j]) < 1e-12);
                // only coordinate i moves
                const TorusVector w = apply_s(i, z);
                for (long j = 0; j < fd.g(); ++j)
                    if (j != i - 1) CHECK(torus_distance(w[j], z[j]) < 1e-15);
            }
        }
    }
}

TEST_CASE("sigma commutes with every s_i") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (auto [n, k] : std::vector<std::pair<long, long>>{{7, 3}, {5, 2}, {11, 4}}) {
        const FractionData fd = fraction_data(n, k);
        const TorusPoint tau{unif(rng), unif(rng)};
        for (long i : sigma_group_generators(n, k)) {
            for (int trial = 0; trial < 20; ++trial) {
                const TorusVector z = random_vec(fd.g(), rng);
                const TorusVector a = apply_sigma(fd, tau, apply_s(i, z));
                const TorusVector b = apply_s(i, apply_sigma(fd, tau, z));
                for (long j = 0; j < fd.g(); ++j)
                    CHECK(torus_distance(a[j], b[j]) < 1e-12);
            }
        }
    }
}

TEST_CASE("rho is Sigma-invariant and sorted") {
    std::mt19937_64 rng(23);
    for (auto [n, k] : std::vector<std::pair<long, long>>{{7, 3}, {5, 2}}) {
        const FractionData fd = fraction_data(n, k);
        const VarietyKind kind = classify_variety(n, k);
        REQUIRE(kind.tag == VarietyKind::Tag::SymmetricPower);
        for (int trial = 0; trial < 30; ++trial) {
            const TorusVector z = random_vec(fd.g(), rng);
            const TorusVector im = rho_map(kind, z);
            CHECK(static_cast<long>(im.size()) == fd.g());
            for (long i : sigma_group_generators(n, k))
                CHECK(multiset_equal(rho_map(kind, apply_s(i, z)), im));
        }
    }
}

TEST_CASE("multiset_equal is tolerant but not sloppy") {
    TorusVector a{{0.1, 0.2}, {0.3, 0.4}};
    TorusVector b{{0.3, 0.4}, {0.1, 0.2}};
    CHECK(multiset_equal(a, b));
    TorusVector c{{0.3, 0.4}, {0.1, 0.21}};
    CHECK_FALSE(multiset_equal(a, c));
    CHECK_FALSE(multiset_equal(a, TorusVector{{0.1, 0.2}}));
    // wrap-around matches
    TorusVector e{{0.0, 0.2}, {0.3, 0.4}};
    TorusVector f{{1.0 - 1e-14, 0.2}, {0.3, 0.4}};
    CHECK(multiset_equal(e, f, 1e-12));
}

TEST_CASE("standard divisor point degrees") {
    const StandardDivisorType sd = standard_divisor(12, 5); // [3,2,3]
    CHECK(sd.entries == std::vector<long>{3, 2, 3});
    CHECK(sd.point_degrees == std::vector<long>{2, 0, 2});
    const StandardDivisorType one = standard_divisor(5, 1); // [5], g = 1
    CHECK(one.point_degrees == std::vector<long>{5 - 2 + 1 + 1});
}

TEST_CASE("bad input is rejected") {
    CHECK_THROWS_AS(negcf(4, 2), InvalidParams);
    CHECK_THROWS_AS(negcf(3, 0), InvalidParams);
    CHECK_THROWS_AS(negcf(3, 3), InvalidParams);
    CHECK_THROWS_AS(fraction_data(6, 3), InvalidParams);
}
