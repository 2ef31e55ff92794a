#include "bernpoly/ratpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "intpoly.hpp"

namespace bernpoly {

RatPoly RatPoly::constant(Rational a) {
    RatPoly p;
    if (a != 0) p.c_.push_back(std::move(a));
    return p;
}

RatPoly RatPoly::monomial(int k, Rational a) {
    if (k < 0) throw std::invalid_argument("RatPoly::monomial: negative degree");
    RatPoly p;
    if (a != 0) {
        p.c_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.c_.back() = std::move(a);
    }
    return p;
}

const Rational& RatPoly::coeff(int i) const {
    static const Rational zero_coeff(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero_coeff;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("RatPoly::leading: zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    RatPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

RatPoly RatPoly::operator*(const Rational& s) const {
    if (s == 0) return {};
    RatPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

RatPoly RatPoly::operator/(const Rational& s) const {
    if (s == 0) throw std::invalid_argument("RatPoly: division by zero scalar");
    RatPoly r = *this;
    for (auto& c : r.c_) c /= s;
    return r;
}

RatPoly operator*(const Rational& s, const RatPoly& p) { return p * s; }

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    RatPoly d;
    if (c_.size() <= 1) return d;
    d.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return d;
}

RatPoly RatPoly::antiderivative() const {
    RatPoly a;
    if (is_zero()) return a;
    a.c_.resize(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        a.c_[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
    return a;
}

Rational RatPoly::integral(const Rational& lo, const Rational& hi) const {
    RatPoly a = antiderivative();
    return a.eval(hi) - a.eval(lo);
}

RatPoly RatPoly::compose_affine(const Rational& a, const Rational& b) const {
    if (a == 0) throw std::invalid_argument("compose_affine: a must be nonzero");
    if (is_zero()) return {};
    // p(a x + b) = t(a x) with t(x) = p(x + b): Taylor shift by b first,
    // then scale. The shift runs by repeated synthetic division (Horner).
    std::vector<Rational> s = c_;
    if (b != 0) {
        const std::size_t n = s.size();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            for (std::size_t i = n - 1; i-- > k;) s[i] += b * s[i + 1];
        }
    }
    if (a != 1) {
        Rational pw(1);
        for (std::size_t i = 1; i < s.size(); ++i) {
            pw *= a;
            s[i] *= pw;
        }
    }
    return RatPoly(std::move(s));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("RatPoly::divmod: zero divisor");
    RatPoly r = *this;
    if (degree() < d.degree()) return {RatPoly(), std::move(r)};
    RatPoly q;
    q.c_.assign(static_cast<std::size_t>(degree() - d.degree()) + 1, Rational(0));
    const Rational& lead = d.leading();
    for (int k = degree(); k >= d.degree(); --k) {
        Rational t = r.coeff(k) / lead;
        if (t == 0) continue;
        q.c_[static_cast<std::size_t>(k - d.degree())] = t;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[static_cast<std::size_t>(k - d.degree() + i)] -= t * d.c_[static_cast<std::size_t>(i)];
    }
    r.trim();
    q.trim();
    return {std::move(q), std::move(r)};
}

RatPoly RatPoly::divexact(const RatPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("RatPoly::divexact: nonzero remainder");
    return std::move(q);
}

std::pair<std::vector<Integer>, Integer> RatPoly::integer_cleared() const {
    Integer den = 1;
    for (const auto& c : c_) den = lcm(den, c.get_den());
    std::vector<Integer> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Rational scaled = c_[i] * Rational(den);
        out[i] = scaled.get_num();  // denominator is 1 by construction
    }
    return {std::move(out), std::move(den)};
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw std::domain_error("RatPoly::monic: zero polynomial");
    return *this / leading();
}

RatPoly RatPoly::gcd(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("RatPoly::gcd: both arguments zero");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.degree() == 0 || q.degree() == 0) return RatPoly::constant(Rational(1));

    auto [pi, pd] = p.integer_cleared();
    auto [qi, qd] = q.integer_cleared();
    detail::IntPoly g = detail::gcd_prs(std::move(pi), std::move(qi));
    detail::make_primitive(g);
    std::vector<Rational> coeffs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) coeffs[i] = Rational(g[i]);
    return RatPoly(std::move(coeffs)).monic();
}

RatPoly RatPoly::squarefree_part() const {
    if (is_zero()) throw std::invalid_argument("RatPoly::squarefree_part: zero polynomial");
    if (degree() == 0) return RatPoly::constant(Rational(1));
    RatPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return monic();
    return divexact(g).monic();
}

Rational RatPoly::cauchy_root_bound() const {
    if (degree() < 1)
        throw std::invalid_argument("cauchy_root_bound: degree must be >= 1");
    Rational mx(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        Rational a = abs(c_[i]);
        if (a > mx) mx = a;
    }
    return 1 + mx / abs(leading());
}

std::string RatPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

}  // namespace bernpoly
