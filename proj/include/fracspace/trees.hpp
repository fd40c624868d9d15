#pragma once

/**
 * @file trees.hpp
 * @brief Binary trees of positive fractions, generated row by row.
 *
 * Child rules for a node p/q:
 *   Stern-Brocot   mediants of p/q with its nearest left and right ancestors
 *   Calkin-Wilf    p/(p+q),   (p+q)/q
 *   Shen-Andreev   (p+q)/q,   q/(p+q)
 *   Kepler         p/(p+q),   q/(p+q)     (root 1/2, fractions below 1)
 *
 * The reduced variants drop every fraction >= 1 from the unreduced tree and
 * close up the gaps; they are rooted at 1/2. Kepler is the reduced
 * Shen-Andreev tree.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fracspace/fraction.hpp"

namespace fracspace {

enum class TreeKind {
    stern_brocot,
    calkin_wilf,
    shen_andreev,
    kepler,
    stern_brocot_reduced,
    calkin_wilf_reduced,
};

/// "sb", "cw", "sa", "kepler", "sb-reduced", "cw-reduced".
std::string_view to_string(TreeKind kind);
std::optional<TreeKind> parse_tree_kind(std::string_view name);

/// True for the trees that hold only fractions in (0, 1).
bool is_reduced(TreeKind kind);

/// 1/1 for the unreduced trees, 1/2 for the reduced ones.
Fraction tree_root(TreeKind kind);

struct TreeNode {
    Fraction value;
    std::uint32_t row = 0;
    Integer index;  ///< 0-based position within the row, < 2^row.
};

/// (left, right) children. Throws std::invalid_argument if f cannot be a
/// node of the tree: not positive finite, or >= 1 for a reduced tree.
std::pair<Fraction, Fraction> children(TreeKind kind, const Fraction& f);

/// Row r left to right, 2^r fractions.
std::vector<Fraction> row(TreeKind kind, std::uint32_t r);

/// The node at (r, index), found by descending along the binary digits of
/// index. Throws std::invalid_argument if index >= 2^r.
TreeNode node_at(TreeKind kind, std::uint32_t r, const Integer& index);

/// Rows r of two unreduced trees are equal as multisets. Throws
/// std::invalid_argument for reduced kinds.
bool rows_equivalent(TreeKind a, TreeKind b, std::uint32_t r);

/// sb -> sb-reduced, cw -> cw-reduced, sa -> kepler. Throws
/// std::invalid_argument for kinds that are already reduced.
TreeKind reduce_tree(TreeKind kind);

/// Produces successive rows of a tree, keeping only the current one.
class RowGenerator {
public:
    explicit RowGenerator(TreeKind kind);

    TreeKind kind() const { return kind_; }
    std::uint32_t row_number() const { return row_number_; }
    const std::vector<Fraction>& current() const { return current_; }

    /// Replaces the current row by the next one.
    void advance();

private:
    TreeKind kind_;
    std::uint32_t row_number_ = 0;
    std::vector<Fraction> current_;
    // Stern-Brocot rows also carry each node's defining interval.
    std::vector<Interval> intervals_;
};

}  // namespace fracspace
