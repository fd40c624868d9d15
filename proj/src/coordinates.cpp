#include "fracspace/coordinates.hpp"

#include <stdexcept>

namespace fracspace {

Coordinates coordinates_of(const Fraction& f, const Interval& interval) {
    if (!interval.contains(f))
        throw std::invalid_argument(to_string(f) + " lies outside " + to_string(interval));
    return Coordinates{cross(interval.lo(), f), cross(f, interval.hi())};
}

Fraction fraction_at(const Coordinates& coords, const Interval& interval) {
    if (!is_adjacent(interval))
        throw std::invalid_argument("fraction_at requires adjacent ends, got " + to_string(interval));
    if (coords.m < 0 || coords.n < 0 || boost::multiprecision::gcd(coords.m, coords.n) != 1)
        throw std::invalid_argument("coordinates must be nonnegative and coprime, got (" +
                                    coords.m.str() + ", " + coords.n.str() + ")");
    const Fraction& lo = interval.lo();
    const Fraction& hi = interval.hi();
    return Fraction::from_lowest_terms(coords.n * lo.num() + coords.m * hi.num(),
                                       coords.n * lo.den() + coords.m * hi.den());
}

Distance coordinate_distance(const Fraction& f1, const Fraction& f2, const Interval& interval) {
    Distance direct = distance(f1, f2);
    Coordinates c1 = coordinates_of(f1, interval);
    Coordinates c2 = coordinates_of(f2, interval);
    Integer d = distance(interval.lo(), interval.hi()).value;
    if (d * direct.value != c1.n * c2.m - c1.m * c2.n)
        throw std::logic_error("coordinate distance disagrees with direct distance");
    return direct;
}

}  // namespace fracspace
