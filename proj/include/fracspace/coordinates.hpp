#pragma once

#include "fracspace/fraction.hpp"

namespace fracspace {

/// Position of a fraction f inside [lo, hi]: m = |lo, f| and n = |f, hi|.
/// With d = |lo, hi| they satisfy d*f = (n*lo + m*hi) componentwise, so
/// (m, n) play the role of numerator and denominator relative to the
/// interval. Coprime whenever the interval ends are adjacent.
struct Coordinates {
    Integer m;
    Integer n;

    friend bool operator==(const Coordinates&, const Coordinates&) = default;
};

/// Throws std::invalid_argument if f lies outside the interval.
Coordinates coordinates_of(const Fraction& f, const Interval& interval);

/// (n*lo.num + m*hi.num) / (n*lo.den + m*hi.den), which is in lowest terms.
/// Throws std::invalid_argument unless the interval is adjacent-bound and
/// gcd(m, n) = 1 with m, n >= 0 not both zero.
Fraction fraction_at(const Coordinates& coords, const Interval& interval);

/// distance(f1, f2) for f1 < f2 inside the interval, cross-checked against
/// the coordinate identity d * |f1, f2| = n1*m2 - m1*n2. Throws
/// std::invalid_argument for fractions outside the interval or out of order.
Distance coordinate_distance(const Fraction& f1, const Fraction& f2, const Interval& interval);

}  // namespace fracspace
