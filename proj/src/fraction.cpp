#include "fracspace/fraction.hpp"

#include <ostream>
#include <stdexcept>

namespace fracspace {

Fraction::Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ < 0 || den_ < 0)
        throw std::invalid_argument("fraction components must be nonnegative");
    if (num_ == 0 && den_ == 0)
        throw std::invalid_argument("0/0 is not a fraction");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ == 0) {
        num_ = 1;
        return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::from_lowest_terms(Integer num, Integer den) {
    return Fraction(std::move(num), std::move(den), trusted_tag{});
}

Rational Fraction::value() const {
    if (is_infinity())
        throw std::domain_error("1/0 has no finite value");
    return Rational(num_, den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return three_way(a.num_ * b.den_, b.num_ * a.den_);
}

std::string to_string(const Fraction& f) {
    return f.num().str() + "/" + f.den().str();
}

Fraction parse_fraction(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw std::invalid_argument("expected num/den, got '" + std::string(text) + "'");
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    if (!digits(num) || !digits(den))
        throw std::invalid_argument("expected num/den, got '" + std::string(text) + "'");
    return Fraction(Integer(std::string(num)), Integer(std::string(den)));
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.num() << '/' << f.den();
}

Interval::Interval(Fraction lo, Fraction hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_))
        throw std::invalid_argument("interval ends out of order: " + to_string(lo_) + ", " +
                                    to_string(hi_));
}

std::string to_string(const Interval& interval) {
    return "[" + to_string(interval.lo()) + ", " + to_string(interval.hi()) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& interval) {
    return os << to_string(interval);
}

Fraction make_fraction(Integer num, Integer den) {
    return Fraction(std::move(num), std::move(den));
}

std::strong_ordering compare(const Fraction& a, const Fraction& b) {
    return a <=> b;
}

Integer cross(const Fraction& a, const Fraction& b) {
    return a.den() * b.num() - a.num() * b.den();
}

Rational normalized_error(const Rational& x, const Fraction& f) {
    if (f.is_infinity())
        throw std::invalid_argument("normalized error is undefined for 1/0");
    Rational e = Rational(f.den()) * x - Rational(f.num());
    return e < 0 ? Rational(-e) : e;
}

Distance distance(const Fraction& a, const Fraction& b) {
    Integer d = cross(a, b);
    if (d <= 0)
        throw std::invalid_argument("distance requires " + to_string(a) + " < " + to_string(b));
    return Distance{std::move(d)};
}

bool is_adjacent(const Fraction& a, const Fraction& b) {
    Integer d = cross(a, b);
    return d == 1 || d == -1;
}

bool is_adjacent(const Interval& interval) {
    return cross(interval.lo(), interval.hi()) == 1;
}

std::string_view to_string(AdjacencyCase c) {
    switch (c) {
    case AdjacencyCase::boundary: return "boundary";
    case AdjacencyCase::unit_fractions: return "unit-fractions";
    case AdjacencyCase::integers: return "integers";
    case AdjacencyCase::strictly_ordered: return "strictly-ordered";
    }
    return "?";
}

namespace {

void require_adjacent_ordered(const Fraction& a, const Fraction& b, const char* what) {
    if (cross(a, b) != 1)
        throw std::invalid_argument(std::string(what) + " requires an adjacent pair in order, got " +
                                    to_string(a) + ", " + to_string(b));
}

}  // namespace

AdjacencyCase classify_adjacent_pair(const Fraction& a, const Fraction& b) {
    require_adjacent_ordered(a, b, "classify_adjacent_pair");
    const Integer &p = a.num(), &q = a.den(), &r = b.num(), &s = b.den();
    if (p == 0 && s == 0 && q == 1 && r == 1)
        return AdjacencyCase::boundary;
    if (p == 1 && r == 1 && q == s + 1)
        return AdjacencyCase::unit_fractions;
    if (q == 1 && s == 1 && r == p + 1)
        return AdjacencyCase::integers;
    if ((p < r && q < s) || (p > r && q > s))
        return AdjacencyCase::strictly_ordered;
    // qr - ps = 1 with nonnegative entries leaves no other shape.
    throw std::logic_error("adjacent pair fits no case: " + to_string(a) + ", " + to_string(b));
}

bool is_ascending_pair(const Fraction& a, const Fraction& b) {
    return a.num() <= b.num() && a.den() <= b.den();
}

Fraction mediant(const Fraction& a, const Fraction& b) {
    Integer num = a.num() + b.num();
    Integer den = a.den() + b.den();
    if (is_adjacent(a, b))
        return Fraction::from_lowest_terms(std::move(num), std::move(den));
    return Fraction(std::move(num), std::move(den));
}

Fraction medidifference(const Fraction& a, const Fraction& b) {
    require_adjacent_ordered(a, b, "medidifference");
    if (a.is_zero() && b.is_infinity())
        throw std::invalid_argument("medidifference of 0/1 and 1/0 is 0/0");
    // Adjacent pairs other than [0/1, 1/0] are componentwise ordered, so the
    // differences are taken larger minus smaller and never both vanish.
    if (is_ascending_pair(a, b))
        return Fraction::from_lowest_terms(b.num() - a.num(), b.den() - a.den());
    return Fraction::from_lowest_terms(a.num() - b.num(), a.den() - b.den());
}

Rational mediant_error(const Interval& interval) {
    if (interval.hi().is_infinity())
        throw std::invalid_argument("mediant error is undefined when the interval ends at 1/0");
    return Rational(distance(interval.lo(), interval.hi()).value,
                    interval.lo().den() + interval.hi().den());
}

}  // namespace fracspace
