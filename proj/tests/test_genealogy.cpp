#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>
#include <string>

#include "fracspace/genealogy.hpp"
#include "oracles.hpp"

using namespace fracspace;

namespace {

Fraction F(long long p, long long q) { return Fraction(p, q); }
Interval I(Fraction lo, Fraction hi) { return Interval(std::move(lo), std::move(hi)); }
const Fraction inf = Fraction::infinity();

// Every path of the given length, in lexicographic order with L < R.
std::vector<Path> paths_of_length(int len) {
    std::vector<Path> out;
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
        Path p;
        for (int i = len - 1; i >= 0; --i)
            p.push_back((bits >> i) & 1 ? Step::R : Step::L);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

TEST(GenealogyTest, PathText) {
    EXPECT_EQ(to_string(parse_path("LRRL")), "LRRL");
    EXPECT_TRUE(parse_path("").empty());
    EXPECT_EQ(parse_path("LLR").mirrored(), parse_path("RRL"));
    EXPECT_THROW(parse_path("LX"), std::invalid_argument);
    EXPECT_EQ(to_string(Handedness::right), "right");
}

TEST(GenealogyTest, Subdivide) {
    EXPECT_EQ(subdivide(Interval::whole()), std::make_pair(I(F(0, 1), F(1, 1)), I(F(1, 1), inf)));
    EXPECT_EQ(subdivide(I(F(1, 2), F(3, 5))), std::make_pair(I(F(1, 2), F(4, 7)), I(F(4, 7), F(3, 5))));
    EXPECT_EQ(subdivide(I(F(1, 1), F(2, 1))), std::make_pair(I(F(1, 1), F(3, 2)), I(F(3, 2), F(2, 1))));
    EXPECT_THROW(subdivide(I(F(1, 3), F(3, 4))), std::invalid_argument);
}

TEST(GenealogyTest, ExtendChain) {
    // [4/3, 7/5] -> [4/3, 3/2] -> [1/1, 3/2] -> [1/1, 2/1] -> [1/1, 1/0] -> [0/1, 1/0]
    Interval cur = I(F(4, 3), F(7, 5));
    std::vector<Interval> chain{cur};
    while (cur != Interval::whole()) {
        cur = extend(cur);
        chain.push_back(cur);
    }
    std::vector<Interval> expected{I(F(4, 3), F(7, 5)), I(F(4, 3), F(3, 2)), I(F(1, 1), F(3, 2)),
                                   I(F(1, 1), F(2, 1)),  I(F(1, 1), inf),     Interval::whole()};
    EXPECT_EQ(chain, expected);
    EXPECT_THROW(extend(Interval::whole()), std::invalid_argument);
    EXPECT_THROW(extend(I(F(1, 3), F(3, 4))), std::invalid_argument);
}

TEST(GenealogyTest, ExtendAtBoundaries) {
    EXPECT_EQ(extend(I(F(0, 1), F(1, 1))), Interval::whole());
    EXPECT_EQ(extend(I(F(2, 1), F(3, 1))), I(F(2, 1), inf));
    EXPECT_EQ(extend(I(F(1, 3), F(1, 2))), I(F(0, 1), F(1, 2)));
}

TEST(GenealogyTest, Parents) {
    EXPECT_EQ(parents(F(4, 7)), (ParentPair{F(1, 2), F(3, 5)}));
    EXPECT_EQ(parents(F(1, 1)), (ParentPair{Fraction::zero(), inf}));
    EXPECT_EQ(parents(F(3, 1)), (ParentPair{F(2, 1), inf}));
    EXPECT_EQ(parents(F(1, 3)), (ParentPair{Fraction::zero(), F(1, 2)}));
    EXPECT_THROW(parents(Fraction::zero()), std::invalid_argument);
    EXPECT_THROW(parents(inf), std::invalid_argument);
}

TEST(GenealogyTest, Handedness) {
    EXPECT_EQ(handedness(F(3, 2)), Handedness::right);
    EXPECT_EQ(handedness(F(2, 3)), Handedness::left);
    EXPECT_EQ(handedness(F(1, 1)), Handedness::root);
    EXPECT_EQ(handedness(F(4, 7)), Handedness::right);  // parents 1/2, 3/5; 3/5 has parent 1/2
    EXPECT_EQ(handedness(F(1, 2)), Handedness::right);
    EXPECT_EQ(handedness(F(3, 1)), Handedness::left);
}

TEST(GenealogyTest, PathTo) {
    EXPECT_TRUE(path_to(F(1, 1)).empty());
    // 4/7 < 1/1, > 1/2, < 2/3, < 3/5, then it is the mediant of [1/2, 3/5].
    EXPECT_EQ(to_string(path_to(F(4, 7))), "LRLL");
    EXPECT_EQ(to_string(path_to(F(3, 1))), "RR");
    EXPECT_THROW(path_to(Fraction::zero()), std::invalid_argument);
    EXPECT_THROW(path_to(inf), std::invalid_argument);
}

TEST(GenealogyTest, PathToLargeFraction) {
    // Consecutive Fibonacci numbers: the path alternates and has length k - 2.
    Integer a = 1, b = 1;
    for (int k = 0; k < 300; ++k) {
        Integer c = a + b;
        a = b;
        b = c;
    }
    Fraction f(a, b);
    Path p = path_to(f);
    EXPECT_EQ(p.size(), 300u);
    EXPECT_EQ(fraction_of_path(p), f);
}

TEST(GenealogyTest, FractionOfPath) {
    EXPECT_EQ(fraction_of_path(Path{}), F(1, 1));
    EXPECT_EQ(fraction_of_path(parse_path("L")), F(1, 2));
    EXPECT_EQ(fraction_of_path(parse_path("LRLL")), F(4, 7));
    EXPECT_EQ(interval_of_path(parse_path("LRLL")), I(F(1, 2), F(3, 5)));
    EXPECT_EQ(fraction_of_path(parse_path("LRRL")), F(5, 7));
}

TEST(GenealogyTest, ConfiningUnitInterval) {
    EXPECT_EQ(confining_unit_interval(F(1, 2), F(3, 5)), 0);
    EXPECT_EQ(confining_unit_interval(F(4, 3), F(7, 5)), 1);
    EXPECT_EQ(confining_unit_interval(F(7, 5), F(4, 3)), 1);
    EXPECT_EQ(confining_unit_interval(F(2, 1), F(3, 1)), 2);
    EXPECT_THROW(confining_unit_interval(F(1, 3), F(3, 4)), std::invalid_argument);
    EXPECT_THROW(confining_unit_interval(F(1, 1), inf), std::invalid_argument);
}

// =============================================================================
// Properties
// =============================================================================

TEST(GenealogyProperty, PathAgreesWithEuclidAndRoundTrips) {
    for (long long p = 1; p < 200; ++p)
        for (long long q = 1; p + q <= 200; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            Fraction f(p, q);
            Path path = path_to(f);
            ASSERT_EQ(to_string(path), oracle::euclid_path(p, q)) << f;
            ASSERT_EQ(fraction_of_path(path), f);
        }
}

TEST(GenealogyProperty, ParentsAreUnique) {
    std::map<std::pair<long long, long long>, int> count;
    for (auto [a, b] : oracle::adjacent_pairs(60))
        ++count[{a.num + b.num, a.den + b.den}];
    for (const auto& [m, c] : count)
        ASSERT_EQ(c, 1) << m.first << "/" << m.second;
}

TEST(GenealogyProperty, ParentsMatchBruteForce) {
    for (long long p = 1; p <= 60; ++p)
        for (long long q = 1; q <= 60; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            auto [a, b] = oracle::brute_parents({p, q});
            ParentPair pp = parents(F(p, q));
            ASSERT_EQ(pp.left, F(a.num, a.den));
            ASSERT_EQ(pp.right, F(b.num, b.den));
            ASSERT_EQ(mediant(pp.left, pp.right), F(p, q));
        }
}

TEST(GenealogyProperty, PathsGiveDistinctFractions) {
    std::set<std::pair<Integer, Integer>> seen;
    std::size_t total = 0;
    for (int len = 0; len <= 12; ++len)
        for (const Path& p : paths_of_length(len)) {
            Fraction f = fraction_of_path(p);
            seen.insert({f.num(), f.den()});
            ++total;
        }
    EXPECT_EQ(total, (1u << 13) - 1);
    EXPECT_EQ(seen.size(), total);
}

TEST(GenealogyProperty, ExtendUndoesSubdivide) {
    for (int len = 0; len <= 12; ++len)
        for (const Path& p : paths_of_length(len)) {
            Interval iv = interval_of_path(p);
            auto [left, right] = subdivide(iv);
            ASSERT_EQ(extend(left), iv);
            ASSERT_EQ(extend(right), iv);
        }
}

TEST(GenealogyProperty, ParentsShareTheUnitInterval) {
    for (long long p = 1; p <= 60; ++p)
        for (long long q = 2; q <= 60; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            ParentPair pp = parents(F(p, q));
            Integer n = p / q;
            ASSERT_EQ(confining_unit_interval(pp.left, pp.right), n) << p << "/" << q;
            ASSERT_LE(Fraction::integer(n), pp.left);
            ASSERT_LE(pp.right, Fraction::integer(n + 1));
        }
}

TEST(GenealogyProperty, HandednessMatchesGrandparent) {
    for (long long p = 1; p <= 40; ++p)
        for (long long q = 1; q <= 40; ++q) {
            if (std::gcd(p, q) != 1 || (p == 1 && q == 1))
                continue;
            ParentPair pp = parents(F(p, q));
            // The parent that is itself a parent of the other one.
            auto parent_of = [](const Fraction& child, const Fraction& candidate) {
                if (!child.is_finite_positive())
                    return false;
                ParentPair cp = parents(child);
                return cp.left == candidate || cp.right == candidate;
            };
            bool left_is_grand = parent_of(pp.right, pp.left);
            bool right_is_grand = parent_of(pp.left, pp.right);
            ASSERT_NE(left_is_grand, right_is_grand) << p << "/" << q;
            ASSERT_EQ(handedness(F(p, q)), left_is_grand ? Handedness::right : Handedness::left);
        }
}

TEST(GenealogyProperty, TranslationByIntegers) {
    for (long long p = 1; p <= 40; ++p)
        for (long long q = p; q <= 40; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            Path base = path_to(F(p, q));
            for (long long n = 0; n <= 5; ++n) {
                Path shifted;
                for (long long i = 0; i < n; ++i)
                    shifted.push_back(Step::R);
                for (Step s : base.steps())
                    shifted.push_back(s);
                ASSERT_EQ(fraction_of_path(shifted), F(p + n * q, q));
            }
        }
}

TEST(GenealogyProperty, MirrorIsReciprocal) {
    for (int len = 0; len <= 10; ++len)
        for (const Path& p : paths_of_length(len))
            ASSERT_EQ(fraction_of_path(p.mirrored()), fraction_of_path(p).reciprocal());
}
