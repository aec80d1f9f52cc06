#include "elliptica/hilbert.hpp"

namespace elliptica {

long long hilbert_Q(long n, long j) {
    if (n < 1 || j < 0) throw InvalidParams("hilbert_Q requires n >= 1, j >= 0");
    // C(n-1+j, j) built incrementally to stay in integers.
    long long out = 1;
    for (long i = 1; i <= j; ++i) out = out * (n - 1 + i) / i;
    return out;
}

long long caci_h0(long g, long a, long b) {
    if (g < 1) throw InvalidParams("caci_h0 requires g >= 1");
    if (a < 0 || a + g * b <= 0) throw InvalidParams("caci_h0 requires a >= 0 and a + g*b > 0");
    long long num = a + g * b;
    long long fact = 1;
    for (long i = 1; i < g; ++i) {
        num *= a + i;
        fact *= i + 1;
    }
    if (num % fact != 0) throw Error("internal: caci_h0 value is not an integer");
    return num / fact;
}

long long hilbert_B(long n, long k, long j) {
    if (j < 0) throw InvalidParams("degree must be >= 0");
    const auto kind = classify_variety(n, k);
    if (j == 0) return 1;
    switch (kind.tag) {
    case VarietyKind::Tag::PowerOfE: {
        // dim B_j = h^0(E^g, (jD)) = j^g * n by Riemann-Roch.
        long long out = n;
        for (long i = 0; i < kind.g; ++i) out *= j;
        return out;
    }
    case VarietyKind::Tag::SymmetricPower:
        // [L'_j] = jD + j(m-1)F; side=last has the same dimensions.
        return caci_h0(kind.g, j, j * (kind.m - 1));
    default:
        throw NotApplicable("no closed Hilbert formula for this variety kind");
    }
}

std::vector<long long> kernel_profile(long n, long k, long maxdeg) {
    const auto kind = classify_variety(n, k);
    std::vector<long long> out;
    out.reserve(maxdeg);
    for (long j = 1; j <= maxdeg; ++j) {
        long long ker;
        if (kind.tag == VarietyKind::Tag::ProjectiveSpace) {
            ker = 0; // polynomial ring: Psi is injective
        } else {
            ker = hilbert_Q(n, j) - hilbert_B(n, k, j);
        }
        if (ker < 0) throw Error("internal: negative kernel dimension");
        out.push_back(ker);
    }
    return out;
}

long long ns_selfintersection(const NSClass& c, long g) {
    if (g < 1) throw InvalidParams("g must be >= 1");
    long long ag = 1;      // a^g
    long long ag1 = 1;     // a^{g-1}
    for (long i = 0; i < g - 1; ++i) ag1 *= c.a;
    ag = ag1 * c.a;
    return ag + g * ag1 * c.b;
}

NSClass ns_class_of_Lprime(long n, long k) {
    const auto kind = classify_variety(n, k);
    if (kind.tag != VarietyKind::Tag::SymmetricPower || kind.side != VarietyKind::Side::first)
        throw NotApplicable("L' class is defined for [m,2^{g-1}] pairs only");
    return NSClass{1, kind.m - 1};
}

GushelFlags gushel_flags(const NSClass& c) {
    GushelFlags f;
    f.globally_generated = c.a >= 0 && c.b >= 2;
    f.ample = c.a >= 1 && c.b >= 1;
    f.very_ample = c.a >= 1 && c.b >= 3;
    return f;
}

} // namespace elliptica
