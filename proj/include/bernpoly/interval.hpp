#ifndef BERNPOLY_INTERVAL_HPP
#define BERNPOLY_INTERVAL_HPP

#include <stdexcept>
#include <string>

#include "bernpoly/rational.hpp"

namespace bernpoly {

/* Rational interval with per-endpoint open/closed flags. The library's
 * default counting convention is half-open (lo, hi]; point enclosures of
 * exactly-known roots are stored as closed [r, r].
 */
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_open = true;
    bool hi_open = false;

    Interval() = default;
    Interval(Rational l, Rational h, bool lopen = true, bool hopen = false)
        : lo(std::move(l)), hi(std::move(h)), lo_open(lopen), hi_open(hopen) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
        if (lo == hi && (lo_open || hi_open))
            throw std::invalid_argument("Interval: degenerate interval must be closed");
    }

    static Interval half_open(Rational l, Rational h) { return {std::move(l), std::move(h), true, false}; }
    static Interval closed(Rational l, Rational h) { return {std::move(l), std::move(h), false, false}; }
    static Interval open(Rational l, Rational h) { return {std::move(l), std::move(h), true, true}; }
    static Interval point(Rational r) {
        Rational copy = r;
        return {std::move(copy), std::move(r), false, false};
    }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rational& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && lo_open) return false;
        if (x == hi && hi_open) return false;
        return true;
    }

    std::string to_string() const {
        return std::string(lo_open ? "(" : "[") + to_fraction_string(lo) + ", " +
               to_fraction_string(hi) + (hi_open ? ")" : "]");
    }
};

}  // namespace bernpoly

#endif
