#include "elliptica/slopes.hpp"

#include <algorithm>

namespace elliptica {

Rational fold_negcf(std::span<const long> cf) {
    if (cf.empty()) throw InvalidParams("cannot fold an empty expansion");
    Rational acc(cf.back());
    for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it)
        acc = Rational(*it) - Rational(1) / acc;
    return acc;
}

SheafClass tensor(const SheafClass& c1, const SheafClass& c2) {
    c1.validate();
    c2.validate();
    return SheafClass{c1.rank * c2.rank, c1.deg * c2.rank + c2.deg * c1.rank};
}

bool surjectivity_criterion(const SheafClass& c1, const SheafClass& c2) {
    c1.validate();
    c2.validate();
    if (c1.deg <= 0 || c2.deg <= 0)
        throw InvalidParams("surjectivity criterion requires positive slopes");
    // 1/mu1 + 1/mu2 < 1, strictly; equality fails.
    return Rational(1) / c1.slope() + Rational(1) / c2.slope() < Rational(1);
}

SheafClass pushforward_class(long n, long k) {
    const auto kind = classify_variety(n, k);
    if (kind.tag != VarietyKind::Tag::PowerOfE)
        throw NotApplicable("pushforward class requires all n_i >= 3");
    const auto fd = fraction_data(n, k);
    SheafClass out{fd.kprime, n};
    std::vector<long> rev = fd.cf;
    std::reverse(rev.begin(), rev.end());
    if (out.slope() != fold_negcf(rev) || !(out.slope() > Rational(2)))
        throw Error("internal: pushforward slope identity violated");
    return out;
}

SheafClass evaluation_kernel_class(const SheafClass& c) {
    c.validate();
    if (c.deg <= c.rank)
        throw InvalidParams("evaluation kernel requires deg > rank");
    return SheafClass{c.deg - c.rank, -c.deg};
}

std::pair<long long, long long> h0_h1(const SheafClass& c) {
    c.validate();
    if (c.deg == 0) throw DegreeZero("h^0/h^1 undetermined at degree 0");
    if (c.deg > 0) return {c.deg, 0};
    return {0, -c.deg};
}

namespace {

void check_pqst(long p, long q, long s, long t) {
    if (p < 2 || q < 4 || s < 1 || t < 2)
        throw InvalidParams("require p >= 2, q >= 4, s >= 1, t >= 2");
}

} // namespace

Rational ker_alpha_slope(const Rational& muE, long p, long q, long s, long t) {
    check_pqst(p, q, s, t);
    const Rational st = Rational(s) * muE + Rational(t);
    if (!(st > Rational(1)))
        throw InvalidParams("require s*muE + t > 1");
    const Rational result = st / (Rational(1) - st) + Rational(p) * muE + Rational(q);
    if (Rational(p) * muE + Rational(q) > Rational(4) && st > Rational(3) &&
        !(result > Rational(2)))
        throw Error("internal: ker(alpha) slope bound violated");
    return result;
}

Rational ker_beta_slope(const Rational& muE, long p, long q, long s, long t) {
    check_pqst(p, q, s, t);
    const Rational result = Rational(p + s) * muE + Rational(q + t);
    if (result < ker_alpha_slope(muE, p, q, s, t))
        throw Error("internal: ker(beta) slope below ker(alpha) slope");
    return result;
}

SeesawResult exact_sequence_bounds(const SheafClass& cA, const SheafClass& cB) {
    cA.validate();
    cB.validate();
    SeesawResult r;
    r.total = SheafClass{cA.rank + cB.rank, cA.deg + cB.deg};
    r.lo = std::min(cA.slope(), cB.slope());
    r.hi = std::max(cA.slope(), cB.slope());
    const Rational mid = r.total.slope();
    if (!(r.lo <= mid && mid <= r.hi))
        throw Error("internal: seesaw sandwich violated");
    return r;
}

} // namespace elliptica
