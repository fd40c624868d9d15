#pragma once

/**
 * @file genealogy.hpp
 * @brief Mediant subdivision, interval extension and the parent structure.
 *
 * Starting from [0/1, 1/0] and repeatedly replacing an adjacent-bound
 * interval by one of its two mediant halves reaches every positive fraction
 * exactly once. A Path records the sequence of halves taken; extend() walks
 * the same structure upwards.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracspace/fraction.hpp"

namespace fracspace {

enum class Step : char { L = 'L', R = 'R' };

/// Sequence of left/right subdivision choices from [0/1, 1/0]. Empty for 1/1.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    void push_back(Step s) { steps_.push_back(s); }

    /// Swaps every L with R.
    Path mirrored() const;

    friend bool operator==(const Path&, const Path&) = default;

private:
    std::vector<Step> steps_;
};

/// "LRRL"; empty string for the root.
std::string to_string(const Path& p);

/// Inverse of to_string. Throws std::invalid_argument on characters other
/// than 'L' and 'R'.
Path parse_path(std::string_view text);

/// The adjacent pair whose mediant is a given fraction.
struct ParentPair {
    Fraction left;
    Fraction right;

    friend bool operator==(const ParentPair&, const ParentPair&) = default;
};

enum class Handedness { root, left, right };

std::string_view to_string(Handedness h);

/// ([lo, m], [m, hi]) with m the mediant. Throws std::invalid_argument
/// unless the ends are adjacent.
std::pair<Interval, Interval> subdivide(const Interval& interval);

/// The unique adjacent-bound interval having `interval` as one of its two
/// halves. The end that moves is fixed by the shape of the pair. Throws
/// std::invalid_argument for [0/1, 1/0] and for non-adjacent ends.
Interval extend(const Interval& interval);

/// The unique adjacent pair whose mediant is f. Throws std::invalid_argument
/// for 0/1 and 1/0.
ParentPair parents(const Fraction& f);

/// root for 1/1. Otherwise right iff the left parent is also the parent of
/// the right parent (it is then the grandparent), and left iff the right
/// parent is the grandparent.
Handedness handedness(const Fraction& f);

/// Subdivision choices leading from [0/1, 1/0] to the interval whose mediant
/// is f. The path length grows with the sum of the partial quotients of f.
/// Throws std::invalid_argument for 0/1 and 1/0.
Path path_to(const Fraction& f);

/// Replays the path from [0/1, 1/0] and returns the final interval.
Interval interval_of_path(const Path& p);

/// Mediant of interval_of_path(p).
Fraction fraction_of_path(const Path& p);

/// The integer n with n <= a < b <= n + 1 for an adjacent pair (either
/// order). Throws std::invalid_argument for non-adjacent pairs or when 1/0
/// is involved.
Integer confining_unit_interval(const Fraction& a, const Fraction& b);

}  // namespace fracspace
