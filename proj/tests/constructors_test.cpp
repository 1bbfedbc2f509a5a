#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace pgon;
using namespace pgon::testing;

namespace {

ConstructOptions unchecked() {
    ConstructOptions o;
    o.verify = false;
    o.check_preconditions = false;
    return o;
}

Tensor<Q> lift(int base, int k, int l, const std::function<Digits(const Digits&)>& f) {
    return settheoretic_lift<Q>(FiniteMap::from_function(base, k, l, f));
}

SolutionDescriptor<Q> tower(int n, bool dual = false) { return bialgebra_tower(n, kz(2), dual); }

const MixedPair<Q>& seven_gon_pair() {
    static const MixedPair<Q> p = higher_mixed_pair(2, z2_pair().t.tensor, z2_pair().s.tensor);
    return p;
}

}  // namespace

// ---- single-solution transforms ----

TEST(InvertToDual, IdentityThreeGon) {
    auto id = make_descriptor(Family::polygon, 3, Tensor<Q>::identity(2, 1), {"id"});
    auto d = invert_to_dual(id);
    EXPECT_EQ(d.family, Family::dual_polygon);
    EXPECT_EQ(d.tensor, Tensor<Q>::identity(2, 1));
    EXPECT_EQ(d.provenance.back(), "inverse");
}

TEST(InvertToDual, PentagonInverse) {
    const auto& t = z2_pair().t;
    auto d = invert_to_dual(t);
    auto g = CayleyTable::cyclic(2);
    EXPECT_EQ(d.tensor, lift(2, 2, 2, [&](const Digits& x) { return Digits{x[0], g.mul(g.inverse(x[0]), x[1])}; }));
    EXPECT_TRUE(check_polygon(d.tensor, 5, true).holds);
    EXPECT_EQ(invert_to_dual(d).tensor, t.tensor);
    EXPECT_EQ(invert_to_dual(d).family, Family::polygon);
}

TEST(InvertToDual, TypedErrors) {
    auto h = kz(2);
    auto singular = make_descriptor(Family::polygon, 5, compose(h.coproduct, h.product), {});
    EXPECT_THROW(invert_to_dual(singular), SingularError);
    EXPECT_THROW(invert_to_dual(tower(6)), DomainError);
}

TEST(Conjugate, IdentityAndDiagonal) {
    const auto& t = z2_pair().t;
    EXPECT_EQ(conjugate(t, Tensor<Q>::identity(2, 1)).tensor, t.tensor);
    auto phi = single_leg<Q>(2, {{Q(1), Q(0)}, {Q(0), Q(2)}});
    auto c = conjugate(t, phi);
    EXPECT_NE(c.tensor, t.tensor);
    EXPECT_TRUE(check_polygon(c.tensor, 5, false).holds);
}

TEST(Conjugate, EvenOrderUsesLegCounts) {
    auto t6 = tower(6);
    auto phi = single_leg<Q>(2, {{Q(2), Q(1)}, {Q(1), Q(1)}});
    auto c = conjugate(t6, phi);
    EXPECT_EQ(c.tensor.in_legs(), 2);
    EXPECT_EQ(c.tensor.out_legs(), 3);
    EXPECT_TRUE(check_polygon(c.tensor, 6, false).holds);
}

TEST(Conjugate, TypedErrors) {
    const auto& t = z2_pair().t;
    EXPECT_THROW(conjugate(t, single_leg<Q>(2, {{Q(1), Q(1)}, {Q(1), Q(1)}})), SingularError);
    EXPECT_THROW(conjugate(t, Tensor<Q>::identity(2, 2)), ShapeError);
    EXPECT_THROW(conjugate(t, Tensor<Q>::identity(3, 1)), ShapeError);
}

TEST(BarSigma, OddOrdersSwitchFamilyAndInvolute) {
    auto id = make_descriptor(Family::polygon, 3, Tensor<Q>::identity(2, 1), {});
    auto b1 = bar_sigma_conjugate(id);
    EXPECT_EQ(b1.tensor, id.tensor);
    EXPECT_EQ(b1.family, Family::dual_polygon);

    const auto& t = z2_pair().t;
    auto b = bar_sigma_conjugate(t);
    EXPECT_EQ(b.family, Family::dual_polygon);
    EXPECT_TRUE(check_polygon(b.tensor, 5, true).holds);
    auto bb = bar_sigma_conjugate(b);
    EXPECT_EQ(bb.tensor, t.tensor);
    EXPECT_EQ(bb.family, Family::polygon);

    auto b7 = bar_sigma_conjugate(tower(7));
    EXPECT_TRUE(check_polygon(b7.tensor, 7, true).holds);
}

TEST(BarSigma, EvenOrdersKeepFamily) {
    auto b6 = bar_sigma_conjugate(tower(6));
    EXPECT_EQ(b6.family, Family::polygon);
    EXPECT_EQ(b6.tensor.in_legs(), 2);
    EXPECT_EQ(b6.tensor.out_legs(), 3);
    auto d6 = bar_sigma_conjugate(tower(6, true));
    EXPECT_EQ(d6.family, Family::dual_polygon);
    EXPECT_THROW(bar_sigma_conjugate(simplex_from_mixed(z2_pair(), Drop::two)), DomainError);
}

TEST(TraceDescend, IdentityNormalizesToIdentity) {
    auto id5 = make_descriptor(Family::polygon, 5, Tensor<Q>::identity(3, 2), {});
    auto id3 = trace_descend(id5, Side::left);
    EXPECT_EQ(id3.order, 3);
    EXPECT_EQ(id3.tensor, Tensor<Q>::identity(3, 1));
    EXPECT_EQ(trace_descend(id5, Side::right).tensor, Tensor<Q>::identity(3, 1));
}

TEST(TraceDescend, SevenGonTowerToPentagon) {
    auto t7 = tower(7);
    for (Side side : {Side::left, Side::right}) {
        auto t5 = trace_descend(t7, side);
        EXPECT_EQ(t5.order, 5);
        EXPECT_TRUE(check_polygon(t5.tensor, 5, false).holds);
    }
    // Without the 1/d factor the traced map is not a solution.
    EXPECT_FALSE(check_polygon(trace_left(t7.tensor), 5, false).holds);
}

TEST(TraceDescend, SimplexTraceIsUnnormalized) {
    auto r4 = simplex_from_mixed(z2_pair(), Drop::one);
    auto r3 = trace_descend(r4, Side::left);
    EXPECT_EQ(r3.order, 3);
    EXPECT_EQ(r3.tensor, simplex_from_mixed(z2_pair(), Drop::two).tensor);
    EXPECT_EQ(trace_descend(r4, Side::right).tensor, simplex_from_mixed(z2_pair(), Drop::two_right).tensor);
}

TEST(TraceDescend, TypedErrors) {
    auto h = kz(2);
    auto singular = make_descriptor(Family::polygon, 5, compose(h.coproduct, h.product), {});
    EXPECT_THROW(trace_descend(singular, Side::left), DomainError);
    EXPECT_THROW(trace_descend(tower(6), Side::left), DomainError);
    EXPECT_THROW(trace_descend(tower(3), Side::left), DomainError);
}

TEST(TraceDescendMixed, IdentityPair) {
    MixedPair<Q> p{make_descriptor(Family::polygon, 5, Tensor<Q>::identity(2, 2), {}),
                   make_descriptor(Family::dual_polygon, 5, Tensor<Q>::identity(2, 2), {})};
    auto r = trace_descend_mixed(p, Side::left);
    EXPECT_EQ(r.t.tensor, Tensor<Q>::identity(2, 1));
    EXPECT_EQ(r.s.tensor, Tensor<Q>::identity(2, 1));
    EXPECT_EQ(r.t.order, 3);
}

TEST(TraceDescendMixed, SevenGonPairBothSides) {
    for (Side side : {Side::left, Side::right}) {
        auto r = trace_descend_mixed(seven_gon_pair(), side);
        EXPECT_EQ(r.t.order, 5);
        EXPECT_TRUE(check_mixed(r.t.tensor, r.s.tensor, 5).holds);
        EXPECT_TRUE(check_polygon(r.s.tensor, 5, true).holds);
    }
}

TEST(TraceDescendMixed, RejectsBrokenPairs) {
    MixedPair<Q> p{z2_pair().t, make_descriptor(Family::dual_polygon, 5, Tensor<Q>::identity(2, 2), {})};
    auto bad = p;
    bad.s.tensor = permutation_tensor<Q>(LegPermutation({2, 1}), 2);
    EXPECT_THROW(trace_descend_mixed(bad, Side::left), VerificationError);
    MixedPair<Q> wrong{z2_pair().s, z2_pair().t};
    EXPECT_THROW(trace_descend_mixed(wrong, Side::left), DomainError);
}

// ---- stacking ----

TEST(Stack, SignatureTable) {
    auto P = Family::polygon, D = Family::dual_polygon;
    for (int k = 1; k <= 4; ++k) {
        for (int n = 3; n <= 8; ++n) {
            int xo = 2 * k + 1, xe = 2 * k + 2;
            auto a = stack_signature(P, xo, P, n, StackMode::compose_left);
            EXPECT_EQ(a.family, P);
            EXPECT_EQ(a.order, n + 2 * k - 2);
            EXPECT_EQ(stack_signature(P, xo, P, n, StackMode::tensor).order, n + 2 * k);
            auto b = stack_signature(D, xo, D, n, StackMode::compose_right);
            EXPECT_EQ(b.family, D);
            EXPECT_EQ(b.order, n + 2 * k - 2);
            EXPECT_EQ(stack_signature(D, xo, D, n, StackMode::tensor).order, n + 2 * k);
            auto c = stack_signature(D, xe, P, n, StackMode::compose_left);
            EXPECT_EQ(c.family, D);
            EXPECT_EQ(c.order, n + 2 * k - 1);
            EXPECT_EQ(stack_signature(D, xe, P, n, StackMode::tensor).order, n + 2 * k + 1);
            auto e = stack_signature(P, xe, D, n, StackMode::compose_right);
            EXPECT_EQ(e.family, P);
            EXPECT_EQ(e.order, n + 2 * k - 1);
            EXPECT_EQ(stack_signature(P, xe, D, n, StackMode::tensor).order, n + 2 * k + 1);
        }
    }
}

TEST(Stack, SignatureRejectsInadmissiblePairs) {
    auto P = Family::polygon, D = Family::dual_polygon;
    EXPECT_THROW(stack_signature(P, 5, P, 5, StackMode::compose_right), DomainError);
    EXPECT_THROW(stack_signature(P, 5, D, 5, StackMode::tensor), DomainError);
    EXPECT_THROW(stack_signature(D, 6, D, 5, StackMode::compose_left), DomainError);
    EXPECT_THROW(stack_signature(Family::simplex, 3, P, 5, StackMode::tensor), DomainError);
}

TEST(Stack, ShapesMatchSignatureOnSyntheticInputs) {
    // Shape-only zero maps of the right leg counts for every admissible case.
    auto zero = [](Family f, int n) {
        auto ms = family_shape(f, n);
        return make_descriptor(f, n, Tensor<Q>(2, ms.in_legs, ms.out_legs), {});
    };
    auto P = Family::polygon, D = Family::dual_polygon;
    struct Case {
        Family xf;
        int xo;
        Family yf;
        int yo;
        StackMode mode;
    };
    std::vector<Case> cases{{P, 5, P, 5, StackMode::compose_left}, {P, 5, P, 6, StackMode::tensor},
                            {D, 5, D, 7, StackMode::compose_right}, {D, 7, D, 4, StackMode::tensor},
                            {D, 4, P, 4, StackMode::compose_left},   {D, 6, P, 5, StackMode::tensor},
                            {P, 4, D, 4, StackMode::compose_right},  {P, 6, D, 5, StackMode::compose_right}};
    for (const auto& c : cases) {
        auto sig = stack_signature(c.xf, c.xo, c.yf, c.yo, c.mode);
        auto out = stack(zero(c.xf, c.xo), zero(c.yf, c.yo), c.mode, unchecked());
        auto ms = family_shape(sig.family, sig.order);
        EXPECT_EQ(out.tensor.in_legs(), ms.in_legs) << out.label();
        EXPECT_EQ(out.tensor.out_legs(), ms.out_legs) << out.label();
    }
}

TEST(Stack, PentagonComposedWithItself) {
    const auto& t = z2_pair().t;
    auto t7 = stack(t, t, StackMode::compose_left);
    EXPECT_EQ(t7.order, 7);
    EXPECT_TRUE(check_polygon(t7.tensor, 7, false).holds);
    EXPECT_EQ(t7.tensor, tower(7).tensor);
}

TEST(Stack, EightGonThroughCoproduct) {
    const auto& t = z2_pair().t;
    auto t7 = stack(t, t, StackMode::compose_left);
    auto delta = make_descriptor(Family::polygon, 4, kz(2).coproduct, {"D"});
    auto t8 = stack(t7, delta, StackMode::compose_left);
    EXPECT_EQ(t8.order, 8);
    EXPECT_TRUE(check_polygon(t8.tensor, 8, false).holds);
}

TEST(Stack, EvenFactors) {
    auto h = kz(2);
    auto delta = make_descriptor(Family::polygon, 4, h.coproduct, {"D"});
    auto mu = make_descriptor(Family::dual_polygon, 4, h.product, {"M"});
    auto t5 = stack(delta, mu, StackMode::compose_right);
    EXPECT_EQ(t5.order, 5);
    EXPECT_EQ(t5.tensor, z2_pair().t.tensor);
    auto s5 = stack(mu, delta, StackMode::compose_left);
    EXPECT_EQ(s5.family, Family::dual_polygon);
    EXPECT_EQ(s5.order, 5);
    auto t7 = stack(delta, mu, StackMode::tensor);
    EXPECT_EQ(t7.order, 7);
    EXPECT_TRUE(check_polygon(t7.tensor, 7, false).holds);
}

TEST(Stack, TensorOfPentagons) {
    const auto& t = z2_pair().t;
    auto t9 = stack(t, t, StackMode::tensor);
    EXPECT_EQ(t9.order, 9);
    EXPECT_EQ(t9.tensor.in_legs(), 4);
    EXPECT_TRUE(check_polygon(t9.tensor, 9, false).holds);
}

TEST(Stack, CommutingPreconditionIsEnforced) {
    const auto& t = z2_pair().t;
    auto c = conjugate(t, single_leg<Q>(2, {{Q(1), Q(1)}, {Q(0), Q(1)}}));
    ASSERT_TRUE(check_polygon(c.tensor, 5, false).holds);
    EXPECT_THROW(stack(c, t, StackMode::compose_left), VerificationError);
    EXPECT_THROW(stack(t, t, StackMode::compose_right), DomainError);
}

// ---- towers ----

TEST(Tower, LowOrders) {
    EXPECT_EQ(tower(3).tensor, Tensor<Q>::identity(2, 1));
    EXPECT_EQ(tower(4).tensor, kz(2).coproduct);
    EXPECT_EQ(tower(4, true).tensor, kz(2).product);
    auto g = CayleyTable::cyclic(2);
    EXPECT_EQ(tower(5).tensor, lift(2, 2, 2, [&](const Digits& x) { return Digits{x[0], g.mul(x[0], x[1])}; }));
    auto t6 = tower(6);
    EXPECT_EQ(t6.tensor.in_legs(), 2);
    EXPECT_EQ(t6.tensor.out_legs(), 3);
}

TEST(Tower, VerifiedUpToEight) {
    for (int n = 3; n <= 8; ++n) {
        for (bool dual : {false, true}) {
            auto t = tower(n, dual);
            EXPECT_TRUE(check_polygon(t.tensor, n, dual).holds) << t.label();
        }
    }
}

TEST(Tower, OverZ3) {
    auto t = bialgebra_tower(6, kz(3), false);
    EXPECT_TRUE(check_polygon(t.tensor, 6, false).holds);
}

TEST(Tower, RejectsNonCommutative) {
    auto s3 = group_algebra<Q>(CayleyTable::symmetric3());
    EXPECT_THROW(bialgebra_tower(5, s3, false), DomainError);
    EXPECT_THROW(bialgebra_tower(2, kz(2), false), DomainError);
}

TEST(MultiTower, SingleFactorIsPlainTower) {
    auto h = kz(2);
    EXPECT_EQ(multi_bialgebra_tower<Q>(2, {h}, false).tensor, tower(5).tensor);
    EXPECT_EQ(multi_bialgebra_tower<Q>(1, {h}, true).tensor, h.coproduct);
}

TEST(MultiTower, HatCoproductSplitsFactors) {
    std::vector<HopfInstance<Q>> hs{kz(2), kz(2)};
    auto d1 = hat_coproduct(hs, 1);
    ASSERT_EQ(d1.dim(), 4);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            Basis one{4, 1}, two{4, 2};
            EXPECT_EQ(d1.at(two.encode(Digits{2 * x, y}), one.encode(Digits{2 * x + y})), Q(1));
        }
    }
    EXPECT_EQ(d1.nnz(), 4u);
    EXPECT_EQ(hat_coproduct(hs, 0), detail::factorwise<Q>({hs[0].coproduct, hs[1].coproduct}));
}

TEST(MultiTower, TwoFactorsVerified) {
    std::vector<HopfInstance<Q>> hs{kz(2), kz(2)};
    for (int offset : {0, 1}) {
        auto t = multi_bialgebra_tower(2, hs, false, offset);
        EXPECT_EQ(t.tensor.dim(), 4);
        EXPECT_TRUE(check_polygon(t.tensor, 5, false).holds) << offset;
    }
    auto e = multi_bialgebra_tower(2, hs, true, 0);
    EXPECT_EQ(e.order, 6);
    EXPECT_TRUE(check_polygon(e.tensor, 6, false).holds);
    EXPECT_THROW(multi_bialgebra_tower(2, hs, true, 1), DomainError);
    EXPECT_THROW(multi_bialgebra_tower<Q>(2, {}, false), DomainError);
}

// ---- mixed pairs ----

TEST(PentagonPair, GroupLikeFormulas) {
    for (int n : {2, 3}) {
        auto g = CayleyTable::cyclic(n);
        auto p = hopf_pentagon_pair(kz(n));
        EXPECT_EQ(p.t.tensor, lift(n, 2, 2, [&](const Digits& x) { return Digits{x[0], g.mul(x[0], x[1])}; }));
        EXPECT_EQ(p.s.tensor,
                  lift(n, 2, 2, [&](const Digits& x) { return Digits{x[0], g.mul(x[1], g.inverse(x[0]))}; }));
        EXPECT_TRUE(check_polygon(p.t.tensor, 5, false).holds);
        EXPECT_TRUE(check_polygon(p.s.tensor, 5, true).holds);
        EXPECT_TRUE(check_mixed(p.t.tensor, p.s.tensor, 5).holds);
    }
}

TEST(PentagonPair, TrivialGroupAndErrors) {
    auto p = hopf_pentagon_pair(kz(1));
    EXPECT_EQ(p.t.tensor, Tensor<Q>::identity(1, 2));
    EXPECT_EQ(p.s.tensor, Tensor<Q>::identity(1, 2));
    auto h = kz(2);
    h.antipode.reset();
    EXPECT_THROW(hopf_pentagon_pair(h), DomainError);
    auto z = kz(2);
    z.antipode = Tensor<Q>(2, 1, 1);
    EXPECT_THROW(hopf_pentagon_pair(z), DomainError);
}

TEST(PentagonPair, NonAbelianGroup) {
    auto s3 = group_algebra<Q>(CayleyTable::symmetric3());
    auto p = hopf_pentagon_pair(s3);
    EXPECT_TRUE(check_polygon(p.t.tensor, 5, false).holds);
    EXPECT_TRUE(check_polygon(p.s.tensor, 5, true).holds);
}

TEST(HigherMixedPair, OneCopyIsInput) {
    const auto& p = z2_pair();
    auto r = higher_mixed_pair(1, p.t.tensor, p.s.tensor);
    EXPECT_EQ(r.t.order, 5);
    EXPECT_EQ(r.t.tensor, p.t.tensor);
    EXPECT_EQ(r.s.tensor, p.s.tensor);
}

TEST(HigherMixedPair, TwoCopiesGiveSevenGon) {
    const auto& r = seven_gon_pair();
    EXPECT_EQ(r.t.order, 7);
    EXPECT_TRUE(check_polygon(r.t.tensor, 7, false).holds);
    EXPECT_TRUE(check_polygon(r.s.tensor, 7, true).holds);
    EXPECT_TRUE(check_mixed(r.t.tensor, r.s.tensor, 7).holds);
}

TEST(HigherMixedPair, ThreeCopiesShapeOnly) {
    const auto& p = z2_pair();
    auto r = higher_mixed_pair(3, p.t.tensor, p.s.tensor, unchecked());
    EXPECT_EQ(r.t.order, 9);
    EXPECT_EQ(r.t.tensor.in_legs(), 4);
    EXPECT_EQ(r.s.tensor.out_legs(), 4);
    EXPECT_EQ(polygon_space(9, false).in_legs, 10);
}

TEST(HigherMixedPair, RelationFailureIsTyped) {
    auto flip = permutation_tensor<Q>(LegPermutation({2, 1}), 2);
    EXPECT_THROW(higher_mixed_pair(2, z2_pair().t.tensor, flip), VerificationError);
    EXPECT_THROW(higher_mixed_pair(0, flip, flip), DomainError);
}

TEST(MixedPairMS, IdentityAndVerified) {
    auto p1 = hopf_mixed_pair_MS(1, kz(2));
    EXPECT_EQ(p1.t.tensor, Tensor<Q>::identity(2, 1));
    EXPECT_EQ(p1.s.tensor, Tensor<Q>::identity(2, 1));
    for (int n : {2, 3}) {
        auto p = hopf_mixed_pair_MS(2, kz(n));
        EXPECT_EQ(p.t.order, 5);
        EXPECT_TRUE(check_relations_1_6(p.t.tensor, p.s.tensor).holds) << n;
        EXPECT_TRUE(check_mixed(p.t.tensor, p.s.tensor, 5).holds) << n;
    }
    auto p3 = hopf_mixed_pair_MS(3, kz(2));
    EXPECT_EQ(p3.t.order, 7);
    EXPECT_TRUE(check_mixed(p3.t.tensor, p3.s.tensor, 7).holds);
}

TEST(MixedPairMS, RejectsNonHopfOrNonCommutative) {
    auto h = kz(2);
    h.antipode.reset();
    EXPECT_THROW(hopf_mixed_pair_MS(2, h), DomainError);
    EXPECT_THROW(hopf_mixed_pair_MS(2, group_algebra<Q>(CayleyTable::symmetric3())), DomainError);
}

// ---- simplex solutions ----

TEST(SimplexFromMixed, FourSimplexEntrywise) {
    auto g = CayleyTable::cyclic(2);
    auto r4 = simplex_from_mixed(z2_pair(), Drop::one);
    EXPECT_EQ(r4.order, 4);
    EXPECT_EQ(r4.tensor, lift(2, 4, 4, [&](const Digits& x) {
                  return Digits{x[1], x[0], g.mul(x[1], x[3]), g.mul(x[2], g.inverse(x[0]))};
              }));
}

TEST(SimplexFromMixed, ThreeSimplexBothTraces) {
    auto g = CayleyTable::cyclic(2);
    auto r3 = simplex_from_mixed(z2_pair(), Drop::two);
    EXPECT_EQ(r3.tensor, lift(2, 3, 3, [&](const Digits& x) {
                  return Digits{x[0], g.mul(x[2], g.inverse(x[0])), g.mul(x[0], x[1])};
              }));
    auto rr = simplex_from_mixed(z2_pair(), Drop::two_right);
    EXPECT_EQ(rr.order, 3);
    EXPECT_TRUE(check_simplex(rr.tensor, 3).holds);
    EXPECT_EQ(r3.tensor, trace_left(simplex_from_mixed(z2_pair(), Drop::one).tensor));
}

TEST(SimplexFromMixed, TraceIdentityOverZ3) {
    auto p = hopf_pentagon_pair(kz(3));
    auto r4 = simplex_from_mixed(p, Drop::one, unchecked());
    auto r3 = simplex_from_mixed(p, Drop::two);
    EXPECT_EQ(r3.tensor, trace_left(r4.tensor));
}

TEST(SimplexFromMixed, EvenPairsFromSetMaps) {
    // Every mixed 4-gon pair of set maps on two points gives 3- and 2-simplex solutions.
    int pairs = 0, singular = 0;
    for (int tc = 0; tc < 16; ++tc) {
        for (int sc = 0; sc < 16; ++sc) {
            auto t = lift(2, 1, 2, [&](const Digits& x) {
                int v = (tc >> (2 * x[0])) & 3;
                return Digits{v >> 1, v & 1};
            });
            auto s = lift(2, 2, 1, [&](const Digits& x) { return Digits{(sc >> (2 * x[0] + x[1])) & 1}; });
            if (!check_mixed(t, s, 4).holds || !check_polygon(t, 4, false).holds || !check_polygon(s, 4, true).holds) {
                continue;
            }
            ++pairs;
            MixedPair<Q> p{make_descriptor(Family::polygon, 4, t, {}), make_descriptor(Family::dual_polygon, 4, s, {})};
            auto r3 = simplex_from_mixed(p, Drop::one);
            auto r2 = simplex_from_mixed(p, Drop::two);
            EXPECT_EQ(r2.tensor, trace_left(r3.tensor));
            singular += !is_invertible(r3.tensor, 0.0);
        }
    }
    EXPECT_EQ(pairs, 38);
    // The descent also goes through when R3 is singular.
    EXPECT_GT(singular, 0);
}

TEST(SimplexFromMixed, TypedErrors) {
    MixedPair<Q> bad{z2_pair().t, make_descriptor(Family::dual_polygon, 5,
                                                  permutation_tensor<Q>(LegPermutation({2, 1}), 2), {})};
    EXPECT_THROW(simplex_from_mixed(bad, Drop::one), VerificationError);
    MixedPair<Q> swapped{z2_pair().s, z2_pair().t};
    EXPECT_THROW(simplex_from_mixed(swapped, Drop::one), DomainError);
    EXPECT_THROW(simplex_R(Tensor<Q>::identity(2, 1), Tensor<Q>::identity(2, 1), 2), DomainError);
}

TEST(YangBaxter, ComposeAndFourFactor) {
    const auto& p = z2_pair();
    auto r = yang_baxter_from_pair(p.t.tensor, p.s.tensor, YangBaxterMode::compose);
    EXPECT_EQ(r.order, 2);
    EXPECT_EQ(r.tensor, Tensor<Q>::identity(2, 2));
    auto f = yang_baxter_from_pair(p.t.tensor, p.s.tensor, YangBaxterMode::four_factor);
    EXPECT_EQ(f.tensor.dim(), 4);
    EXPECT_TRUE(check_simplex(f.tensor, 2).holds);
    auto id = Tensor<Q>::identity(2, 2);
    EXPECT_EQ(yang_baxter_from_pair(id, id, YangBaxterMode::compose).tensor, id);
    EXPECT_THROW(yang_baxter_from_pair(id, Tensor<Q>::identity(3, 2), YangBaxterMode::compose), ShapeError);
}

// ---- descriptors ----

TEST(Descriptor, ShapeCheckedAndVerified) {
    EXPECT_THROW(make_descriptor(Family::polygon, 6, Tensor<Q>::identity(2, 2), {}), ShapeError);
    auto d = make_descriptor(Family::simplex, 2, permutation_tensor<Q>(LegPermutation({2, 1}), 2), {"flip"});
    EXPECT_EQ(d.label(), "2-simplex");
    EXPECT_TRUE(verify_descriptor(d).holds);
    EXPECT_EQ(parse_family("dual"), Family::dual_polygon);
    EXPECT_THROW(parse_family("cube"), ConfigError);
    auto bad = make_descriptor(Family::polygon, 5, permutation_tensor<Q>(LegPermutation({2, 1}), 2), {});
    EXPECT_THROW(ensure_solution(bad, ConstructOptions{}), VerificationError);
}
