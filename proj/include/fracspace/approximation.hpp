#pragma once

#include <utility>
#include <vector>

#include "fracspace/fraction.hpp"

namespace fracspace {

/// How candidates are ranked against the target.
enum class ErrorMeasure {
    absolute,    ///< |target - f|
    normalized,  ///< f.den * |target - f|
};

struct ApproximationResult {
    Fraction below;
    Fraction above;
    Fraction best;
    /// [below, above]; its ends are adjacent.
    Interval interval_certificate;
};

/// Best approximation of target by fractions with denominator <= max_den.
///
/// Descends from [0/1, 1/0] by mediants while the mediant's denominator
/// stays within max_den. Every fraction strictly inside the final adjacent
/// pair has a denominator larger than max_den, so the best admissible
/// approximation is one of its ends. When the target itself is admissible it
/// becomes the lower end. Ties prefer the smaller denominator, then the
/// smaller fraction.
///
/// Throws std::invalid_argument for 0/1, 1/0 or max_den < 1.
ApproximationResult best_bounded(const Fraction& target, const Integer& max_den,
                                 ErrorMeasure measure = ErrorMeasure::absolute);

/// Mediants visited by best_bounded, in order, including the final one that
/// exceeded the bound.
std::vector<Fraction> descent_mediants(const Fraction& target, const Integer& max_den);

/// Fractions a/b < f < c/d, both adjacent to f and within epsilon of it,
/// reached from f's parents by the fewest mediant steps toward f. Throws
/// std::invalid_argument for 0/1, 1/0 or epsilon <= 0.
std::pair<Fraction, Fraction> adjacent_neighbors_within(const Fraction& f, const Rational& epsilon);

/// Scans every fraction with denominator <= max(lo.den, hi.den) for one
/// strictly inside the interval. Returns true iff there is none, which holds
/// exactly when the ends are adjacent (checked, std::logic_error otherwise).
/// Throws std::invalid_argument when hi = 1/0 or when scan_bound is below
/// the required denominator range.
bool verify_adjacency_by_denominators(const Interval& interval, const Integer& scan_bound);

}  // namespace fracspace
