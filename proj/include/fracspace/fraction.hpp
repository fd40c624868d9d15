#pragma once

/**
 * @file fraction.hpp
 * @brief Nonnegative fractions in lowest terms and their distance calculus.
 *
 * A Fraction is p/q with p, q >= 0, gcd(p, q) = 1 and not both zero. The
 * two boundary elements 0/1 (zero) and 1/0 (infinity) are ordinary values,
 * which makes every adjacent pair, including [0/1, 1/0], representable.
 *
 * The distance |p/q, r/s| = qr - ps of an ordered pair is the difference
 * scaled by both denominators; two fractions are adjacent when it equals 1.
 */

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fracspace {

/// Arbitrary-precision integer. Fraction components are never negative.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Exact rational number of either sign, used for errors and tolerances.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::strong_ordering three_way(const Integer& a, const Integer& b) {
    int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

class Fraction {
public:
    /// 0/1.
    Fraction() : num_(0), den_(1) {}

    /// Reduces to lowest terms. 0/k becomes 0/1 and k/0 becomes 1/0.
    /// Throws std::invalid_argument for 0/0 or a negative component.
    Fraction(Integer num, Integer den);

    /// Skips reduction. The caller guarantees gcd(num, den) = 1.
    static Fraction from_lowest_terms(Integer num, Integer den);

    static Fraction zero() { return from_lowest_terms(0, 1); }
    static Fraction infinity() { return from_lowest_terms(1, 0); }
    static Fraction integer(Integer n) { return from_lowest_terms(std::move(n), 1); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_infinity() const { return den_ == 0; }
    bool is_finite_positive() const { return num_ != 0 && den_ != 0; }
    bool is_integer() const { return den_ == 1; }

    /// Swaps numerator and denominator; 0/1 and 1/0 map to each other.
    Fraction reciprocal() const { return from_lowest_terms(den_, num_); }

    /// Exact value. Throws std::domain_error for 1/0.
    Rational value() const;

    /// Structural equality; sound because the representation is canonical.
    friend bool operator==(const Fraction&, const Fraction&) = default;

    /// Order by the sign of the cross product; 0/1 is least, 1/0 greatest.
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

private:
    struct trusted_tag {};
    Fraction(Integer num, Integer den, trusted_tag) : num_(std::move(num)), den_(std::move(den)) {}

    Integer num_;
    Integer den_;
};

/// "num/den" in base 10.
std::string to_string(const Fraction& f);

/// Parses the "num/den" grammar: decimal digits, one slash, decimal digits,
/// no whitespace or sign. The result is canonicalized. Throws
/// std::invalid_argument on malformed text or 0/0.
Fraction parse_fraction(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// Distance between two distinct fractions; always at least 1.
struct Distance {
    Integer value;

    friend bool operator==(const Distance&, const Distance&) = default;
    friend std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
        return three_way(a.value, b.value);
    }
};

/// Closed interval with lo < hi.
class Interval {
public:
    /// Throws std::invalid_argument unless lo < hi.
    Interval(Fraction lo, Fraction hi);

    /// [0/1, 1/0], the interval containing every fraction.
    static Interval whole() { return Interval(Fraction::zero(), Fraction::infinity()); }

    const Fraction& lo() const { return lo_; }
    const Fraction& hi() const { return hi_; }

    bool contains(const Fraction& f) const { return lo_ <= f && f <= hi_; }
    bool contains_strictly(const Fraction& f) const { return lo_ < f && f < hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Fraction lo_;
    Fraction hi_;
};

/// "[lo, hi]".
std::string to_string(const Interval& interval);
std::ostream& operator<<(std::ostream& os, const Interval& interval);

Fraction make_fraction(Integer num, Integer den);

/// Same ordering as operator<=>.
std::strong_ordering compare(const Fraction& a, const Fraction& b);

/// Signed cross product b.num * a.den - a.num * b.den. Positive iff a < b;
/// equal to the distance when it is.
Integer cross(const Fraction& a, const Fraction& b);

/// |f.den * x - f.num|, the error of approximating x by f scaled by f's
/// denominator. Throws std::invalid_argument for f = 1/0.
Rational normalized_error(const Rational& x, const Fraction& f);

/// a.den * b.num - a.num * b.den. Throws std::invalid_argument unless a < b.
Distance distance(const Fraction& a, const Fraction& b);

/// True iff the two fractions, in either order, are at distance 1.
bool is_adjacent(const Fraction& a, const Fraction& b);
bool is_adjacent(const Interval& interval);

/// The mutually exclusive shapes an adjacent pair p/q < r/s can take.
enum class AdjacencyCase {
    boundary,          ///< 0/1 and 1/0
    unit_fractions,    ///< 1/(n+1) and 1/n, n >= 0
    integers,          ///< n/1 and (n+1)/1, n >= 0
    strictly_ordered,  ///< p < r and q < s, or p > r and q > s
};

std::string_view to_string(AdjacencyCase c);

/// Which case an adjacent pair a < b falls into. Throws
/// std::invalid_argument unless a < b and the pair is adjacent.
AdjacencyCase classify_adjacent_pair(const Fraction& a, const Fraction& b);

/// True when p <= r and q <= s for the adjacent pair p/q < r/s, so that r/s
/// is the mediant of p/q and the medidifference. Otherwise p/q is the
/// mediant of the medidifference and r/s.
bool is_ascending_pair(const Fraction& a, const Fraction& b);

/// (a.num + b.num) / (a.den + b.den), reduced. Already in lowest terms and
/// strictly between a and b when the pair is adjacent.
Fraction mediant(const Fraction& a, const Fraction& b);
inline Fraction mediant(const Interval& interval) { return mediant(interval.lo(), interval.hi()); }

/// |a.num - b.num| / |a.den - b.den| for an adjacent pair a < b, adjacent to
/// both. Unit-fraction pairs give 0/1 and integer pairs give 1/0. Throws
/// std::invalid_argument for [0/1, 1/0] and non-adjacent or unordered pairs.
Fraction medidifference(const Fraction& a, const Fraction& b);

/// distance(lo, hi) / (lo.den + hi.den): the common error with which both
/// ends approximate the mediant. Throws std::invalid_argument for hi = 1/0.
Rational mediant_error(const Interval& interval);

}  // namespace fracspace
