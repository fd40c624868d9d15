#include "fracspace/approximation.hpp"

#include <algorithm>
#include <stdexcept>

#include "fracspace/genealogy.hpp"

namespace fracspace {

namespace {

void require_target(const Fraction& target, const Integer& max_den) {
    if (!target.is_finite_positive())
        throw std::invalid_argument("approximation target must be positive finite, got " +
                                    to_string(target));
    if (max_den < 1)
        throw std::invalid_argument("max_den must be at least 1, got " + max_den.str());
}

// lo + k*hi componentwise; stays in lowest terms because lo and hi are adjacent.
Fraction combine(const Fraction& lo, const Integer& k, const Fraction& hi) {
    return Fraction::from_lowest_terms(lo.num() + k * hi.num(), lo.den() + k * hi.den());
}

// Same walk as descent_mediants, but each run of equal steps is taken at once.
Interval bounded_descent(const Fraction& t, const Integer& max_den) {
    Fraction lo = Fraction::zero();
    Fraction hi = Fraction::infinity();
    for (;;) {
        if (lo.den() + hi.den() > max_den)
            break;
        // below = cross(lo, t) >= 0 and above = cross(t, hi) > 0 throughout:
        // t never reaches hi, it can only become lo.
        Integer below = cross(lo, t);
        Integer above = cross(t, hi);
        if (t >= mediant(lo, hi)) {
            // Step j moves lo to lo + j*hi, allowed while j*above <= below.
            Integer k = below / above;
            if (hi.den() > 0)
                k = std::min(k, Integer((max_den - lo.den()) / hi.den()));
            lo = combine(lo, k, hi);
        } else {
            // Step j moves hi to hi + j*lo, allowed while j*below < above.
            Integer k = (max_den - hi.den()) / lo.den();
            if (below > 0)
                k = std::min(k, Integer((above - 1) / below));
            hi = combine(hi, k, lo);
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

Rational error_of(const Fraction& candidate, const Fraction& target, ErrorMeasure measure) {
    if (measure == ErrorMeasure::normalized)
        return normalized_error(target.value(), candidate);
    Rational e = target.value() - candidate.value();
    return e < 0 ? Rational(-e) : e;
}

// True when a ranks ahead of b.
bool better(const Fraction& a, const Fraction& b, const Fraction& target, ErrorMeasure measure) {
    Rational ea = error_of(a, target, measure);
    Rational eb = error_of(b, target, measure);
    if (ea != eb)
        return ea < eb;
    if (a.den() != b.den())
        return a.den() < b.den();
    return a < b;
}

}  // namespace

ApproximationResult best_bounded(const Fraction& target, const Integer& max_den, ErrorMeasure measure) {
    require_target(target, max_den);
    Interval bracket = bounded_descent(target, max_den);
    const Fraction& below = bracket.lo();
    const Fraction& above = bracket.hi();
    Fraction best = better(below, above, target, measure) ? below : above;
    return ApproximationResult{below, above, std::move(best), bracket};
}

std::vector<Fraction> descent_mediants(const Fraction& target, const Integer& max_den) {
    require_target(target, max_den);
    std::vector<Fraction> out;
    Fraction lo = Fraction::zero();
    Fraction hi = Fraction::infinity();
    for (;;) {
        Fraction m = mediant(lo, hi);
        out.push_back(m);
        if (m.den() > max_den)
            return out;
        if (target < m)
            hi = std::move(m);
        else
            lo = std::move(m);
    }
}

std::pair<Fraction, Fraction> adjacent_neighbors_within(const Fraction& f, const Rational& epsilon) {
    if (!f.is_finite_positive())
        throw std::invalid_argument("adjacent_neighbors_within requires a fraction inside (0/1, 1/0), got " +
                                    to_string(f));
    if (epsilon <= 0)
        throw std::invalid_argument("epsilon must be positive");

    // A neighbour g adjacent to f is 1/(g.den * f.den) away from it, so it
    // is within epsilon iff g.den > 1/(epsilon * f.den). Each mediant step
    // toward f adds f.den to the neighbour's denominator.
    const Integer& q = f.den();
    Integer threshold = boost::multiprecision::denominator(epsilon) /
                            (boost::multiprecision::numerator(epsilon) * q) +
                        1;
    auto approach = [&](const Fraction& start) {
        Integer k = 0;
        if (start.den() < threshold)
            k = (threshold - start.den() + q - 1) / q;
        return combine(start, k, f);
    };
    ParentPair pp = parents(f);
    return {approach(pp.left), approach(pp.right)};
}

bool verify_adjacency_by_denominators(const Interval& interval, const Integer& scan_bound) {
    const Fraction& lo = interval.lo();
    const Fraction& hi = interval.hi();
    if (hi.is_infinity())
        throw std::invalid_argument("denominator scan is undefined when the interval ends at 1/0");
    Integer limit = std::max(lo.den(), hi.den());
    if (scan_bound < limit)
        throw std::invalid_argument("scan_bound " + scan_bound.str() + " is below " + limit.str());

    bool interior_found = false;
    for (Integer b = 1; b <= limit && !interior_found; ++b) {
        // Numerators a with lo < a/b < hi.
        Integer first = lo.num() * b / lo.den() + 1;
        Integer last = (hi.num() * b + hi.den() - 1) / hi.den() - 1;
        interior_found = first <= last;
    }
    bool adjacent = is_adjacent(interval);
    if (adjacent == interior_found)
        throw std::logic_error("denominator scan disagrees with adjacency on " + to_string(interval));
    return !interior_found;
}

}  // namespace fracspace
