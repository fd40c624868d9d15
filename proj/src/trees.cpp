#include "fracspace/trees.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fracspace/genealogy.hpp"

namespace fracspace {

std::string_view to_string(TreeKind kind) {
    switch (kind) {
    case TreeKind::stern_brocot: return "sb";
    case TreeKind::calkin_wilf: return "cw";
    case TreeKind::shen_andreev: return "sa";
    case TreeKind::kepler: return "kepler";
    case TreeKind::stern_brocot_reduced: return "sb-reduced";
    case TreeKind::calkin_wilf_reduced: return "cw-reduced";
    }
    return "?";
}

std::optional<TreeKind> parse_tree_kind(std::string_view name) {
    for (TreeKind k : {TreeKind::stern_brocot, TreeKind::calkin_wilf, TreeKind::shen_andreev,
                       TreeKind::kepler, TreeKind::stern_brocot_reduced,
                       TreeKind::calkin_wilf_reduced})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

bool is_reduced(TreeKind kind) {
    return kind == TreeKind::kepler || kind == TreeKind::stern_brocot_reduced ||
           kind == TreeKind::calkin_wilf_reduced;
}

Fraction tree_root(TreeKind kind) {
    return is_reduced(kind) ? Fraction::from_lowest_terms(1, 2) : Fraction::from_lowest_terms(1, 1);
}

namespace {

void require_node(TreeKind kind, const Fraction& f) {
    if (!f.is_finite_positive())
        throw std::invalid_argument("tree nodes are positive finite fractions, got " + to_string(f));
    if (is_reduced(kind) && f.num() >= f.den())
        throw std::invalid_argument(std::string(to_string(kind)) + " holds only fractions below 1, got " +
                                    to_string(f));
}

// Child rules for every kind except the Stern-Brocot ones, which need the
// node's defining interval.
std::pair<Fraction, Fraction> formula_children(TreeKind kind, const Fraction& f) {
    const Integer& p = f.num();
    const Integer& q = f.den();
    Integer sum = p + q;
    switch (kind) {
    case TreeKind::calkin_wilf:
        return {Fraction::from_lowest_terms(p, sum), Fraction::from_lowest_terms(sum, q)};
    case TreeKind::shen_andreev:
        return {Fraction::from_lowest_terms(sum, q), Fraction::from_lowest_terms(q, sum)};
    case TreeKind::kepler:
        return {Fraction::from_lowest_terms(p, sum), Fraction::from_lowest_terms(q, sum)};
    case TreeKind::calkin_wilf_reduced:
        // A node a/b stands for the left child of a/(b-a) in the Calkin-Wilf
        // tree. Its children are the left children of that node's two
        // grandchildren: a/(a+b) and b/(2b-a).
        return {Fraction::from_lowest_terms(p, sum), Fraction::from_lowest_terms(q, 2 * q - p)};
    default:
        throw std::logic_error("formula_children called for a Stern-Brocot kind");
    }
}

bool is_stern_brocot(TreeKind kind) {
    return kind == TreeKind::stern_brocot || kind == TreeKind::stern_brocot_reduced;
}

Interval root_interval(TreeKind kind) {
    return kind == TreeKind::stern_brocot_reduced
               ? Interval(Fraction::zero(), Fraction::integer(1))
               : Interval::whole();
}

}  // namespace

std::pair<Fraction, Fraction> children(TreeKind kind, const Fraction& f) {
    require_node(kind, f);
    if (is_stern_brocot(kind)) {
        ParentPair pp = parents(f);
        return {mediant(pp.left, f), mediant(f, pp.right)};
    }
    return formula_children(kind, f);
}

RowGenerator::RowGenerator(TreeKind kind) : kind_(kind) {
    current_.push_back(tree_root(kind));
    if (is_stern_brocot(kind))
        intervals_.push_back(root_interval(kind));
}

void RowGenerator::advance() {
    std::vector<Fraction> next;
    next.reserve(current_.size() * 2);
    if (is_stern_brocot(kind_)) {
        std::vector<Interval> next_intervals;
        next_intervals.reserve(intervals_.size() * 2);
        for (const Interval& iv : intervals_) {
            auto [left, right] = subdivide(iv);
            next.push_back(mediant(left));
            next.push_back(mediant(right));
            next_intervals.push_back(std::move(left));
            next_intervals.push_back(std::move(right));
        }
        intervals_ = std::move(next_intervals);
    } else {
        for (const Fraction& f : current_) {
            auto [left, right] = formula_children(kind_, f);
            next.push_back(std::move(left));
            next.push_back(std::move(right));
        }
    }
    current_ = std::move(next);
    ++row_number_;
}

std::vector<Fraction> row(TreeKind kind, std::uint32_t r) {
    RowGenerator gen(kind);
    for (std::uint32_t i = 0; i < r; ++i)
        gen.advance();
    return gen.current();
}

TreeNode node_at(TreeKind kind, std::uint32_t r, const Integer& index) {
    if (index < 0 || index >= (Integer(1) << r))
        throw std::invalid_argument("index " + index.str() + " is outside row " + std::to_string(r));
    Fraction f = tree_root(kind);
    for (std::uint32_t i = r; i-- > 0;) {
        auto [left, right] = children(kind, f);
        f = boost::multiprecision::bit_test(index, i) ? std::move(right) : std::move(left);
    }
    return TreeNode{std::move(f), r, index};
}

bool rows_equivalent(TreeKind a, TreeKind b, std::uint32_t r) {
    if (is_reduced(a) || is_reduced(b))
        throw std::invalid_argument("row-wise equivalence is defined for the unreduced trees only");
    auto ra = row(a, r);
    auto rb = row(b, r);
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
}

TreeKind reduce_tree(TreeKind kind) {
    switch (kind) {
    case TreeKind::stern_brocot: return TreeKind::stern_brocot_reduced;
    case TreeKind::calkin_wilf: return TreeKind::calkin_wilf_reduced;
    case TreeKind::shen_andreev: return TreeKind::kepler;
    default:
        throw std::invalid_argument(std::string(to_string(kind)) + " is already reduced");
    }
}

}  // namespace fracspace
