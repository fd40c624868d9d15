#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fracspace/fraction.hpp"
#include "fracspace/trees.hpp"

namespace fracspace {

/// Stern's diatomic function: f(1) = 1, f(2n) = f(n), f(2n+1) = f(n) + f(n+1).
/// Evaluated along the binary digits of n. Throws std::invalid_argument for
/// n < 1.
Integer stern(const Integer& n);

/// Ratios f(n)/f(n+1) for n = 1, 2, ...: the Calkin-Wilf tree in
/// breadth-first order.
class SternRatios {
public:
    SternRatios();

    /// 1-based position of current().
    const Integer& index() const { return n_; }
    Fraction current() const;
    void advance();

private:
    Integer n_;
    Integer f_n_;
    Integer f_next_;
};

/// First `count` terms of SternRatios.
std::vector<Fraction> cw_sequence(std::size_t count);

/// 1 / (2*floor(x) + 1 - x). Throws std::invalid_argument for 0/1 and 1/0.
Fraction newman_successor(const Fraction& x);

/// Steps through the same order as SternRatios holding a single fraction.
class NewmanIterator {
public:
    NewmanIterator() : x_(Fraction::integer(1)) {}
    explicit NewmanIterator(Fraction start);

    const Fraction& current() const { return x_; }
    void advance() { x_ = newman_successor(x_); }

private:
    Fraction x_;
};

/// Left/right child choices from the root of the tree down to f. Throws
/// std::invalid_argument if f is not a node of the tree.
std::vector<bool> tree_descent(TreeKind kind, const Fraction& f);

/// 1-based breadth-first position of f: 2^row + index within the row.
/// Throws std::invalid_argument for reduced kinds and for 0/1, 1/0.
Integer index_of(const Fraction& f, TreeKind kind);

/// Inverse of index_of; also accepts the reduced kinds. Throws
/// std::invalid_argument for i < 1.
Fraction fraction_at_index(const Integer& i, TreeKind kind);

/// A triple (a^2, ab, b^2) with gcd(a, b) = 1.
struct Triple {
    Integer x;
    Integer y;
    Integer z;

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// (x, x+y, x+2y+z) and (x+2y+z, y+z, z).
std::pair<Triple, Triple> triple_children(const Triple& t);

/// a/b for t = (a^2, ab, b^2). Throws std::invalid_argument when the triple
/// has another shape, in particular when y^2 != xz.
Fraction triple_to_ratio(const Triple& t);

}  // namespace fracspace
