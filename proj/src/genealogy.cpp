#include "fracspace/genealogy.hpp"

#include <stdexcept>

namespace fracspace {

Path Path::mirrored() const {
    std::vector<Step> out;
    out.reserve(steps_.size());
    for (Step s : steps_)
        out.push_back(s == Step::L ? Step::R : Step::L);
    return Path(std::move(out));
}

std::string to_string(const Path& p) {
    std::string out;
    out.reserve(p.size());
    for (Step s : p.steps())
        out.push_back(static_cast<char>(s));
    return out;
}

Path parse_path(std::string_view text) {
    Path p;
    for (char c : text) {
        if (c == 'L')
            p.push_back(Step::L);
        else if (c == 'R')
            p.push_back(Step::R);
        else
            throw std::invalid_argument("path may only contain L and R, got '" + std::string(text) + "'");
    }
    return p;
}

std::string_view to_string(Handedness h) {
    switch (h) {
    case Handedness::root: return "root";
    case Handedness::left: return "left";
    case Handedness::right: return "right";
    }
    return "?";
}

std::pair<Interval, Interval> subdivide(const Interval& interval) {
    if (!is_adjacent(interval))
        throw std::invalid_argument("subdivide requires adjacent ends, got " + to_string(interval));
    Fraction m = mediant(interval.lo(), interval.hi());
    return {Interval(interval.lo(), m), Interval(m, interval.hi())};
}

Interval extend(const Interval& interval) {
    if (interval.lo().is_zero() && interval.hi().is_infinity())
        throw std::invalid_argument("[0/1, 1/0] has no enclosing interval");
    Fraction md = medidifference(interval.lo(), interval.hi());
    // Ascending pair: hi is the mediant of lo and md, which lies above hi.
    if (is_ascending_pair(interval.lo(), interval.hi()))
        return Interval(interval.lo(), std::move(md));
    return Interval(std::move(md), interval.hi());
}

namespace {

void require_finite_positive(const Fraction& f, const char* what) {
    if (!f.is_finite_positive())
        throw std::invalid_argument(std::string(what) + " requires a positive finite fraction, got " +
                                    to_string(f));
}

// x in [1, mod] with a * x = 1 (mod mod), for coprime a and mod >= 1.
Integer inverse_mod(const Integer& a, const Integer& mod) {
    Integer r0 = mod, r1 = a % mod;
    Integer x0 = 0, x1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        Integer x2 = x0 - q * x1;
        x0 = std::move(x1);
        x1 = std::move(x2);
    }
    // r0 = gcd = 1 here and x0 is the inverse up to a multiple of mod.
    x0 %= mod;
    if (x0 <= 0)
        x0 += mod;
    return x0;
}

}  // namespace

ParentPair parents(const Fraction& f) {
    require_finite_positive(f, "parents");
    // The left parent p/q satisfies q*N - p*D = 1 with 0 < q <= D; the
    // right parent is f minus it componentwise.
    const Integer& N = f.num();
    const Integer& D = f.den();
    Integer q = inverse_mod(N, D);
    Integer p = (q * N - 1) / D;
    Fraction left = Fraction::from_lowest_terms(p, q);
    Fraction right = Fraction::from_lowest_terms(N - p, D - q);
    return {std::move(left), std::move(right)};
}

Handedness handedness(const Fraction& f) {
    require_finite_positive(f, "handedness");
    if (f.num() == 1 && f.den() == 1)
        return Handedness::root;
    ParentPair pp = parents(f);
    // For an ascending pair the right parent is the mediant of the left
    // parent and the medidifference, so the left parent is its parent.
    return is_ascending_pair(pp.left, pp.right) ? Handedness::right : Handedness::left;
}

Path path_to(const Fraction& f) {
    require_finite_positive(f, "path_to");
    Path p;
    Fraction lo = Fraction::zero();
    Fraction hi = Fraction::infinity();
    for (;;) {
        Fraction m = mediant(lo, hi);
        auto ord = f <=> m;
        if (ord == 0)
            return p;
        if (ord < 0) {
            p.push_back(Step::L);
            hi = std::move(m);
        } else {
            p.push_back(Step::R);
            lo = std::move(m);
        }
    }
}

Interval interval_of_path(const Path& p) {
    Fraction lo = Fraction::zero();
    Fraction hi = Fraction::infinity();
    for (Step s : p.steps()) {
        Fraction m = mediant(lo, hi);
        if (s == Step::L)
            hi = std::move(m);
        else
            lo = std::move(m);
    }
    return Interval(std::move(lo), std::move(hi));
}

Fraction fraction_of_path(const Path& p) {
    return mediant(interval_of_path(p));
}

Integer confining_unit_interval(const Fraction& a, const Fraction& b) {
    if (!is_adjacent(a, b))
        throw std::invalid_argument("confining_unit_interval requires adjacent fractions, got " +
                                    to_string(a) + ", " + to_string(b));
    const Fraction& lo = a < b ? a : b;
    const Fraction& hi = a < b ? b : a;
    if (hi.is_infinity())
        throw std::invalid_argument("no unit interval contains 1/0");
    Integer n = lo.num() / lo.den();
    if (hi > Fraction::integer(n + 1))
        throw std::logic_error("adjacent pair straddles an integer: " + to_string(lo) + ", " +
                               to_string(hi));
    return n;
}

}  // namespace fracspace
