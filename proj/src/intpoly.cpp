#include "intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace bernpoly::detail {

IntPoly derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    return d;
}

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntPoly& p) {
    Integer g = content(p);
    if (g <= 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly pseudo_remainder(IntPoly u, const IntPoly& v) {
    const int du = deg(u), dv = deg(v);
    assert(du >= dv && dv >= 0);
    const Integer& lv = v.back();
    Integer t;
    for (int k = du; k >= dv; --k) {
        t = u[k];
        // u <- lv*u - u_k x^(k-dv) v ; the x^k term cancels exactly.
        for (int i = 0; i < k; ++i) u[i] *= lv;
        u[k] = 0;
        for (int i = 0; i < dv; ++i) u[k - dv + i] -= t * v[i];
    }
    u.resize(dv >= 0 ? dv : 0);
    trim(u);
    return u;
}

int sign_at(const IntPoly& p, const Integer& num, const Integer& den) {
    if (p.empty()) return 0;
    // Horner over homogenized coefficients: acc = sum p_i num^i den^(d-i).
    const int d = deg(p);
    if (den == 1) {
        Integer acc = p[d];
        for (int i = d - 1; i >= 0; --i) {
            acc *= num;
            acc += p[i];
        }
        return sgn(acc);
    }
    Integer acc = p[d];
    Integer den_pow = 1;
    for (int i = d - 1; i >= 0; --i) {
        acc *= num;
        den_pow *= den;
        acc += p[i] * den_pow;
    }
    return sgn(acc);
}

std::vector<IntPoly> sturm_prs(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.reserve(p.size());
    IntPoly first = p;
    make_primitive(first);
    chain.push_back(std::move(first));
    if (deg(chain[0]) <= 0) return chain;

    IntPoly d = derivative(chain[0]);
    make_primitive(d);
    chain.push_back(std::move(d));

    while (deg(chain.back()) >= 0) {
        const IntPoly& u = chain[chain.size() - 2];
        const IntPoly& v = chain.back();
        if (deg(v) <= 0) break;
        const int delta = deg(u) - deg(v);
        IntPoly r = pseudo_remainder(u, v);
        if (r.empty()) break;
        // prem multiplies u by lc(v)^(delta+1); the exact Sturm member is
        // -rem(u, v), so r must be negated unless that multiplier was
        // negative (odd power of a negative leading coefficient).
        const bool multiplier_negative = sgn(v.back()) < 0 && (delta + 1) % 2 == 1;
        make_primitive(r);
        if (!multiplier_negative)
            for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

IntPoly gcd_prs(IntPoly p, IntPoly q) {
    assert(!p.empty() && !q.empty());
    make_primitive(p);
    make_primitive(q);
    if (deg(p) < deg(q)) std::swap(p, q);
    while (deg(q) >= 1) {
        IntPoly r = pseudo_remainder(p, q);
        if (r.empty()) return q;
        make_primitive(r);
        p = std::move(q);
        q = std::move(r);
    }
    return q;  // constant: coprime
}

}  // namespace bernpoly::detail
