#include "elliptica/fractions.hpp"

#include <algorithm>
#include <numeric>

namespace elliptica {

namespace {

void check_pair(long n, long k) {
    if (!(n > k && k >= 1))
        throw InvalidParams("require n > k >= 1");
    if (std::gcd(n, k) != 1)
        throw InvalidParams("require gcd(n,k) = 1");
}

} // namespace

std::string VarietyKind::label() const {
    switch (tag) {
    case Tag::PowerOfE:
        return g == 1 ? "E" : "E^" + std::to_string(g);
    case Tag::SymmetricPower:
        return "S^" + std::to_string(g) + "(E)";
    case Tag::ProjectiveSpace:
        return "P^" + std::to_string(proj_dim);
    case Tag::GeneralQuotient:
        return "E^" + std::to_string(g) + "/Sigma";
    }
    return "?";
}

std::vector<long> negcf(long n, long k) {
    check_pair(n, k);
    std::vector<long> cf;
    // n/k = a - r/k with a = ceil(n/k), r = a*k - n; recurse on k/r.
    while (k > 0) {
        long a = (n + k - 1) / k;
        cf.push_back(a);
        long r = a * k - n;
        n = k;
        k = r;
    }
    return cf;
}

long tridiag_det(std::span<const long> seq) {
    long prev2 = 1; // d() = 1
    long prev1 = seq.empty() ? 1 : seq[0];
    if (seq.size() <= 1) return prev1;
    for (size_t i = 1; i < seq.size(); ++i) {
        long cur = seq[i] * prev1 - prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

FractionData fraction_data(long n, long k) {
    FractionData fd;
    fd.n = n;
    fd.k = k;
    fd.cf = negcf(n, k);
    const long g = fd.g();

    fd.kseq.resize(g + 2);
    fd.lseq.resize(g + 2);
    for (long i = 0; i <= g + 1; ++i) {
        // k_i = d(n_{i+1},...,n_g), l_i = d(n_{i-1},...,n_1)
        fd.kseq[i] = i == g + 1 ? 0 : tridiag_det(std::span<const long>(fd.cf).subspan(i));
        std::vector<long> rev(fd.cf.begin(), fd.cf.begin() + std::max(0L, i - 1));
        std::reverse(rev.begin(), rev.end());
        fd.lseq[i] = i == 0 ? 0 : tridiag_det(rev);
    }
    // Cross-check the determinants against the three-term recurrence.
    for (long i = 1; i <= g; ++i) {
        if (fd.kseq[i] * fd.cf[i - 1] != fd.kseq[i - 1] + fd.kseq[i + 1] ||
            fd.lseq[i] * fd.cf[i - 1] != fd.lseq[i - 1] + fd.lseq[i + 1])
            throw Error("internal: k/l recurrence mismatch");
    }
    if (fd.kseq[0] != n || fd.kseq[1] != k || fd.lseq[g + 1] != n)
        throw Error("internal: determinant conventions violated");

    fd.kprime = fd.lseq[g];
    if ((fd.k * fd.kprime) % n != 1 % n)
        throw Error("internal: k * k' != 1 (mod n)");

    fd.sigma_coeffs.resize(g);
    for (long i = 1; i <= g; ++i)
        fd.sigma_coeffs[i - 1] = fd.kseq[i] + fd.lseq[i] - n;
    return fd;
}

VarietyKind classify_variety(long n, long k) {
    const auto cf = negcf(n, k);
    const long g = static_cast<long>(cf.size());
    VarietyKind kind;
    kind.g = g;

    const bool all3 = std::all_of(cf.begin(), cf.end(), [](long x) { return x >= 3; });
    const bool all2 = std::all_of(cf.begin(), cf.end(), [](long x) { return x == 2; });
    if (all3) {
        kind.tag = VarietyKind::Tag::PowerOfE;
        return kind;
    }
    if (all2) {
        kind.tag = VarietyKind::Tag::ProjectiveSpace;
        kind.proj_dim = n - 1;
        return kind;
    }
    if (g >= 2) {
        const bool first = cf[0] >= 3 &&
                           std::all_of(cf.begin() + 1, cf.end(), [](long x) { return x == 2; });
        const bool last = cf[g - 1] >= 3 &&
                          std::all_of(cf.begin(), cf.end() - 1, [](long x) { return x == 2; });
        if (first || last) {
            kind.tag = VarietyKind::Tag::SymmetricPower;
            kind.m = first ? cf[0] : cf[g - 1];
            kind.side = first ? VarietyKind::Side::first : VarietyKind::Side::last;
            // n = (m-1)g + 1; k = g (first) or (m-1)(g-1)+1 (last)
            if (n != (kind.m - 1) * g + 1)
                throw Error("internal: symmetric power parameters inconsistent");
            return kind;
        }
    }
    kind.tag = VarietyKind::Tag::GeneralQuotient;
    return kind;
}

std::vector<long> sigma_group_generators(long n, long k) {
    const auto cf = negcf(n, k);
    std::vector<long> out;
    for (size_t i = 0; i < cf.size(); ++i)
        if (cf[i] == 2) out.push_back(static_cast<long>(i) + 1);
    return out;
}

TorusVector apply_s(long i, const TorusVector& z) {
    const long g = static_cast<long>(z.size());
    if (i < 1 || i > g)
        throw IndexOutOfRange("s_i index out of range");
    TorusVector out = z;
    TorusPoint left = i >= 2 ? z[i - 2] : TorusPoint{};
    TorusPoint right = i <= g - 1 ? z[i] : TorusPoint{};
    out[i - 1] = left - z[i - 1] + right;
    return out;
}

TorusVector apply_sigma(const FractionData& fd, const TorusPoint& tau, const TorusVector& z) {
    if (static_cast<long>(z.size()) != fd.g())
        throw InvalidParams("point dimension does not match g");
    TorusVector out = z;
    for (size_t i = 0; i < z.size(); ++i)
        out[i] = out[i] + tau.scaled(fd.sigma_coeffs[i]);
    return out;
}

TorusVector rho_map(const VarietyKind& kind, const TorusVector& z) {
    if (kind.tag != VarietyKind::Tag::SymmetricPower)
        throw NotApplicable("rho is defined only for the symmetric-power cases");
    const long g = kind.g;
    if (static_cast<long>(z.size()) != g)
        throw InvalidParams("point dimension does not match g");
    TorusVector out(g);
    if (kind.side == VarietyKind::Side::first) {
        // (z_2 - z_1, ..., z_g - z_{g-1}, -z_g)
        for (long i = 0; i < g - 1; ++i) out[i] = z[i + 1] - z[i];
        out[g - 1] = -z[g - 1];
    } else {
        // (-z_1, z_1 - z_2, ..., z_{g-1} - z_g)
        out[0] = -z[0];
        for (long i = 1; i < g; ++i) out[i] = z[i - 1] - z[i];
    }
    std::sort(out.begin(), out.end(), [](const TorusPoint& a, const TorusPoint& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    return out;
}

bool multiset_equal(const TorusVector& a, const TorusVector& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& p : a) {
        double best = 2.0;
        size_t best_j = b.size();
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double d = torus_distance(p, b[j]);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        if (best_j == b.size() || best > tol) return false;
        used[best_j] = true;
    }
    return true;
}

StandardDivisorType standard_divisor(long n, long k) {
    StandardDivisorType d;
    d.entries = negcf(n, k);
    const long g = static_cast<long>(d.entries.size());
    d.point_degrees.resize(g);
    for (long i = 0; i < g; ++i)
        d.point_degrees[i] = d.entries[i] - 2 + (i == 0 ? 1 : 0) + (i == g - 1 ? 1 : 0);
    return d;
}

} // namespace elliptica
