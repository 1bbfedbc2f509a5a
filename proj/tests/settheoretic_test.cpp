#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace pgon;
using namespace pgon::testing;

namespace {

FiniteMap group_pentagon(const CayleyTable& g) {
    return FiniteMap::from_function(g.order, 2, 2, [&](const Digits& x) { return Digits{x[0], g.mul(x[0], x[1])}; });
}

// u-variant outcome over every source solution and every u: a construction
// is a solution exactly when the fixed-point condition holds.
template <class Lift>
void expect_iff(const EnumerationResult& src, Lift lift) {
    int fixed = 0, unfixed = 0;
    for (const auto& f : src.solutions) {
        for (int u = 0; u < f.base(); ++u) {
            auto r = lift(f, u);
            ASSERT_TRUE(r.fixed_point.has_value());
            EXPECT_EQ(r.is_solution, *r.fixed_point) << r.name << " u=" << u;
            (*r.fixed_point ? fixed : unfixed)++;
        }
    }
    EXPECT_GT(fixed, 0);
    EXPECT_GT(unfixed, 0);
}

template <class Lift>
void expect_all_solutions(const EnumerationResult& src, Lift lift, int order) {
    ASSERT_FALSE(src.solutions.empty());
    for (const auto& f : src.solutions) {
        auto r = lift(f);
        EXPECT_EQ(r.order, order);
        EXPECT_TRUE(r.is_solution) << r.name;
        EXPECT_EQ(r.is_solution, check_polygon(settheoretic_lift<Q>(r.map), order, false).holds);
    }
}

}  // namespace

TEST(SetPolygon, IdentityAndGroupPentagon) {
    EXPECT_TRUE(check_polygon_set(FiniteMap::identity(2, 1), 3, false).holds);
    for (int n : {2, 3, 4}) EXPECT_TRUE(check_polygon_set(group_pentagon(CayleyTable::cyclic(n)), 5, false).holds);
    EXPECT_TRUE(check_polygon_set(group_pentagon(CayleyTable::symmetric3()), 5, false).holds);
}

TEST(SetPolygon, WitnessIsATuple) {
    auto swap = FiniteMap::from_function(2, 2, 2, [](const Digits& x) { return Digits{x[1], x[0]}; });
    auto r = check_polygon_set(swap, 5, false);
    ASSERT_FALSE(r.holds);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->in.size(), 3u);
    EXPECT_NE(r.witness->lhs, r.witness->rhs);
    EXPECT_EQ(r.witness->lhs.front(), '(');
}

TEST(SetPolygon, SignatureMismatch) {
    EXPECT_THROW(check_polygon_set(FiniteMap::identity(2, 2), 6, false), ShapeError);
    EXPECT_THROW(check_polygon_set(FiniteMap::identity(2, 1), 5, false), ShapeError);
}

TEST(SetPolygon, AgreesWithLinearEngine) {
    std::mt19937 rng(2024);
    struct Sig {
        int n;
        bool dual;
    };
    for (auto [n, dual] : std::vector<Sig>{{3, false}, {4, false}, {4, true}, {5, false}, {5, true}, {6, false}}) {
        auto ms = polygon_map_shape(n, dual);
        int agree = 0;
        for (int trial = 0; trial < 40; ++trial) {
            auto f = random_map(rng, 2, ms.in_legs, ms.out_legs);
            bool set = check_polygon_set(f, n, dual).holds;
            bool lin = check_polygon(settheoretic_lift<Q>(f), n, dual).holds;
            EXPECT_EQ(set, lin) << polygon_name(n, dual);
            agree += set == lin;
        }
        EXPECT_EQ(agree, 40);
    }
}

TEST(SetEquation, PermutationFactorsAndMixedRelation) {
    auto g = CayleyTable::cyclic(3);
    auto t = group_pentagon(g);
    auto s = FiniteMap::from_function(3, 2, 2, [&](const Digits& x) { return Digits{x[0], g.mul(x[1], g.inverse(x[0]))}; });
    SetResolver res = [&](const Placement& p) -> const FiniteMap& { return p.tag == MapTag::T ? t : s; };
    EXPECT_TRUE(check_equation_set(mixed_equation(5), 3, res).holds);
    auto perm = Placement::permutation(LegPermutation({2, 3, 1}));
    EXPECT_EQ(apply_placement_set(perm, {0, 1, 2}, nullptr), (Digits{2, 0, 1}));
    EXPECT_EQ(tuple_string({0, 1, 2}), "(0,1,2)");
}

TEST(Conjecture, ProjectionDualFourGon) {
    auto s = FiniteMap::from_function(2, 2, 1, [](const Digits& x) { return Digits{x[0]}; });
    ASSERT_TRUE(check_polygon_set(s, 4, true).holds);
    auto r = conjecture_7_32(s);
    EXPECT_EQ(r.order, 5);
    EXPECT_TRUE(r.is_solution);
    EXPECT_EQ(r.map({1, 0}), (Digits{1, 1}));
}

TEST(Conjecture, FixedPointViolationIsFlagged) {
    // The constant map to 1 solves the dual 4-gon but does not fix 0.
    auto s = FiniteMap::from_function(2, 2, 1, [](const Digits&) { return Digits{1}; });
    ASSERT_TRUE(check_polygon_set(s, 4, true).holds);
    auto r = conjecture_7_33(s, 0);
    EXPECT_FALSE(*r.fixed_point);
    EXPECT_FALSE(r.is_solution);
    EXPECT_FALSE(r.report.holds);
    auto ok = conjecture_7_33(s, 1);
    EXPECT_TRUE(*ok.fixed_point);
    EXPECT_TRUE(ok.is_solution);
}

TEST(Conjecture, IdentityThreeGonDoubles) {
    auto r = conjecture_7_34(FiniteMap::identity(3, 1));
    EXPECT_EQ(r.order, 4);
    EXPECT_TRUE(r.is_solution);
    for (int a = 0; a < 3; ++a) EXPECT_EQ(r.map({a}), (Digits{a, a}));
}

TEST(Conjecture, SourceIsVerified) {
    auto swap = FiniteMap::from_function(2, 2, 2, [](const Digits& x) { return Digits{x[1], x[0]}; });
    EXPECT_THROW(conjecture_7_34(swap), VerificationError);
    EXPECT_NO_THROW(conjecture_7_34(swap, false));
    EXPECT_THROW(conjecture_7_36(swap), VerificationError);
    EXPECT_THROW(conjecture_7_32(FiniteMap::identity(2, 1)), DomainError);
    EXPECT_THROW(conjecture_7_35(FiniteMap::identity(2, 1), 2), DomainError);
    EXPECT_THROW(conjecture_7_33(FiniteMap::identity(2, 2), 0), ShapeError);
}

TEST(Conjecture, ExhaustiveOverTwoPoints) {
    auto d4 = enumerate_solutions(4, true, 2), d6 = enumerate_solutions(6, true, 2);
    auto p3 = enumerate_solutions(3, false, 2), p5 = enumerate_solutions(5, false, 2);
    auto d3 = enumerate_solutions(3, true, 2), d5 = enumerate_solutions(5, true, 2);
    for (const auto* src : {&d4, &d6}) {
        int k = src->solutions.front().in_arity();
        expect_all_solutions(*src, [](const FiniteMap& f) { return conjecture_7_32(f); }, 2 * k + 1);
        expect_iff(*src, [](const FiniteMap& f, int u) { return conjecture_7_33(f, u); });
    }
    for (const auto* src : {&p3, &p5}) {
        int k = src->solutions.front().in_arity();
        expect_all_solutions(*src, [](const FiniteMap& f) { return conjecture_7_34(f); }, 2 * k + 2);
        expect_iff(*src, [](const FiniteMap& f, int u) { return conjecture_7_35(f, u); });
    }
    for (const auto* src : {&d3, &d5}) {
        int k = src->solutions.front().in_arity();
        expect_all_solutions(*src, [](const FiniteMap& f) { return conjecture_7_36(f); }, 2 * k + 2);
        expect_iff(*src, [](const FiniteMap& f, int u) { return conjecture_7_37(f, u); });
    }
}

TEST(Conjecture, ExhaustiveOverThreePointsSmallArity) {
    auto d4 = enumerate_solutions(4, true, 3);
    expect_all_solutions(d4, [](const FiniteMap& f) { return conjecture_7_32(f); }, 5);
    expect_iff(d4, [](const FiniteMap& f, int u) { return conjecture_7_33(f, u); });
    auto p3 = enumerate_solutions(3, false, 3);
    expect_all_solutions(p3, [](const FiniteMap& f) { return conjecture_7_34(f); }, 4);
    expect_iff(p3, [](const FiniteMap& f, int u) { return conjecture_7_35(f, u); });
    auto d3 = enumerate_solutions(3, true, 3);
    expect_all_solutions(d3, [](const FiniteMap& f) { return conjecture_7_36(f); }, 4);
    expect_iff(d3, [](const FiniteMap& f, int u) { return conjecture_7_37(f, u); });
}

TEST(Enumeration, CountsAndOrder) {
    auto d4 = enumerate_solutions(4, true, 2);
    EXPECT_EQ(d4.candidates, 16u);
    EXPECT_EQ(d4.solutions.size(), 8u);
    // Idempotents of a two-point set: two constants and the identity.
    auto p3 = enumerate_solutions(3, false, 2);
    EXPECT_EQ(p3.solutions.size(), 3u);
    auto p5 = enumerate_solutions(5, false, 2);
    EXPECT_EQ(p5.candidates, 256u);
    EXPECT_TRUE(std::find(p5.solutions.begin(), p5.solutions.end(), group_pentagon(CayleyTable::cyclic(2))) !=
                p5.solutions.end());
    EXPECT_TRUE(std::is_sorted(p5.solutions.begin(), p5.solutions.end(),
                               [](const FiniteMap& a, const FiniteMap& b) { return a.table() < b.table(); }));
    for (const auto& f : p5.solutions) EXPECT_TRUE(check_polygon_set(f, 5, false).holds);
}

TEST(Enumeration, DeterministicAcrossThreadCounts) {
    auto a = enumerate_solutions(6, true, 2, 1), b = enumerate_solutions(6, true, 2, 8);
    EXPECT_EQ(a.solutions, b.solutions);
    EXPECT_EQ(a.candidates, 65536u);
}

TEST(Enumeration, MatchesBruteForceThroughLift) {
    auto e = enumerate_solutions(4, false, 2);
    int count = 0;
    Basis b{2, 2};
    for (std::uint64_t c = 0; c < 16; ++c) {
        auto f = FiniteMap::from_function(2, 1, 2, [&](const Digits& x) {
            return b.decode((c >> (2 * x[0])) & 3);
        });
        count += check_polygon(settheoretic_lift<Q>(f), 4, false).holds;
    }
    EXPECT_EQ(static_cast<int>(e.solutions.size()), count);
}

TEST(Enumeration, CapIsEnforced) {
    EXPECT_THROW(enumerate_solutions(5, false, 4), ConfigError);
    EXPECT_THROW(enumerate_solutions(8, true, 2), ConfigError);
    EXPECT_THROW(enumerate_solutions(5, false, 0), ConfigError);
}
