#include "fracspace/enumerations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fracspace/genealogy.hpp"

namespace fracspace {

Integer stern(const Integer& n) {
    if (n < 1)
        throw std::invalid_argument("stern(n) requires n >= 1, got " + n.str());
    // Invariant: (a, b) = (f(k), f(k+1)) for k = the bits of n read so far.
    Integer a = 1, b = 1;
    for (auto i = static_cast<long>(boost::multiprecision::msb(n)); i-- > 0;) {
        if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i)))
            a += b;
        else
            b += a;
    }
    return a;
}

SternRatios::SternRatios() : n_(1), f_n_(1), f_next_(1) {}

Fraction SternRatios::current() const {
    return Fraction::from_lowest_terms(f_n_, f_next_);
}

void SternRatios::advance() {
    ++n_;
    f_n_ = std::move(f_next_);
    f_next_ = stern(n_ + 1);
}

std::vector<Fraction> cw_sequence(std::size_t count) {
    std::vector<Fraction> out;
    out.reserve(count);
    SternRatios it;
    for (std::size_t i = 0; i < count; ++i) {
        if (i)
            it.advance();
        out.push_back(it.current());
    }
    return out;
}

Fraction newman_successor(const Fraction& x) {
    if (!x.is_finite_positive())
        throw std::invalid_argument("newman_successor requires a positive finite fraction, got " +
                                    to_string(x));
    Integer floor = x.num() / x.den();
    // 2*floor + 1 - p/q = ((2*floor + 1)*q - p)/q, coprime to q.
    return Fraction::from_lowest_terms(x.den(), (2 * floor + 1) * x.den() - x.num());
}

NewmanIterator::NewmanIterator(Fraction start) : x_(std::move(start)) {
    if (!x_.is_finite_positive())
        throw std::invalid_argument("NewmanIterator requires a positive finite start");
}

std::vector<bool> tree_descent(TreeKind kind, const Fraction& f) {
    if (!f.is_finite_positive())
        throw std::invalid_argument("tree nodes are positive finite fractions, got " + to_string(f));
    if (is_reduced(kind) && f.num() >= f.den())
        throw std::invalid_argument(std::string(to_string(kind)) + " holds only fractions below 1, got " +
                                    to_string(f));

    if (kind == TreeKind::stern_brocot || kind == TreeKind::stern_brocot_reduced) {
        Path p = path_to(f);
        std::vector<bool> bits;
        bits.reserve(p.size());
        for (Step s : p.steps())
            bits.push_back(s == Step::R);
        // The reduced tree is the subtree below the first left step.
        if (kind == TreeKind::stern_brocot_reduced)
            bits.erase(bits.begin());
        return bits;
    }

    // Climb to the root, recording which child each node is.
    std::vector<bool> bits;
    Integer a = f.num(), b = f.den();
    auto at_root = [&] {
        return is_reduced(kind) ? (a == 1 && b == 2) : (a == 1 && b == 1);
    };
    while (!at_root()) {
        switch (kind) {
        case TreeKind::calkin_wilf:
            if (a < b) {
                bits.push_back(false);
                b -= a;
            } else {
                bits.push_back(true);
                a -= b;
            }
            break;
        case TreeKind::shen_andreev:
            if (a > b) {
                bits.push_back(false);
                a -= b;
            } else {
                bits.push_back(true);
                Integer parent_num = b - a;
                b = std::move(a);
                a = std::move(parent_num);
            }
            break;
        case TreeKind::kepler:
            if (2 * a < b) {
                bits.push_back(false);
                b -= a;
            } else {
                bits.push_back(true);
                Integer parent_num = b - a;
                b = std::move(a);
                a = std::move(parent_num);
            }
            break;
        case TreeKind::calkin_wilf_reduced:
            if (2 * a < b) {
                bits.push_back(false);
                b -= a;
            } else {
                bits.push_back(true);
                Integer parent_num = 2 * a - b;
                b = std::move(a);
                a = std::move(parent_num);
            }
            break;
        default:
            throw std::logic_error("unhandled tree kind");
        }
    }
    std::reverse(bits.begin(), bits.end());
    return bits;
}

Integer index_of(const Fraction& f, TreeKind kind) {
    if (is_reduced(kind))
        throw std::invalid_argument("index_of is defined for the unreduced trees only");
    Integer index = 1;
    for (bool bit : tree_descent(kind, f)) {
        index <<= 1;
        if (bit)
            index += 1;
    }
    return index;
}

Fraction fraction_at_index(const Integer& i, TreeKind kind) {
    if (i < 1)
        throw std::invalid_argument("breadth-first indices start at 1, got " + i.str());
    auto r = static_cast<std::uint32_t>(boost::multiprecision::msb(i));
    return node_at(kind, r, i - (Integer(1) << r)).value;
}

std::pair<Triple, Triple> triple_children(const Triple& t) {
    Integer outer = t.x + 2 * t.y + t.z;
    return {Triple{t.x, t.x + t.y, outer}, Triple{outer, t.y + t.z, t.z}};
}

Fraction triple_to_ratio(const Triple& t) {
    if (t.x <= 0 || t.y <= 0 || t.z <= 0 || t.y * t.y != t.x * t.z)
        throw std::invalid_argument("not a proportion triple: (" + t.x.str() + ", " + t.y.str() + ", " +
                                    t.z.str() + ")");
    Fraction f(t.x, t.y);
    if (t.x != f.num() * f.num() || t.y != f.num() * f.den() || t.z != f.den() * f.den())
        throw std::invalid_argument("triple is not of the form (a^2, ab, b^2) with coprime a, b");
    return f;
}

}  // namespace fracspace
