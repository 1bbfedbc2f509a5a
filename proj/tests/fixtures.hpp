#pragma once

#include <random>

#include "pgon/pgon.hpp"

namespace pgon::testing {

using Q = Rational;

inline HopfInstance<Q> kz(int n) { return group_algebra<Q>(CayleyTable::cyclic(n), "k[Z" + std::to_string(n) + "]"); }

inline const MixedPair<Q>& z2_pair() {
    static const MixedPair<Q> p = hopf_pentagon_pair(kz(2));
    return p;
}

// Random tensor with small integer entries, about half of them zero.
inline Tensor<Q> random_tensor(std::mt19937& rng, int d, int k, int l) {
    std::uniform_int_distribution<int> v(-2, 2);
    Tensor<Q> shape(d, k, l);
    std::vector<std::vector<Q>> m(shape.out_basis().size(), std::vector<Q>(shape.in_basis().size()));
    for (auto& row : m) {
        for (auto& x : row) x = v(rng) * (v(rng) > 0);
    }
    return from_dense<Q>(d, k, l, m);
}

inline FiniteMap random_map(std::mt19937& rng, int base, int k, int l) {
    std::uniform_int_distribution<int> v(0, base - 1);
    return FiniteMap::from_function(base, k, l, [&](const Digits&) {
        Digits y(l);
        for (auto& a : y) a = v(rng);
        return y;
    });
}

// Invertible 1 -> 1 map depending on a face label.
inline Tensor<Q> face_gauge(const Face& f) {
    int w = 0;
    for (int v : f) w = w * 3 + v + 1;
    return single_leg<Q>(2, {{Q(1), Q(0)}, {Q(w % 5), Q(w % 4 + 1)}});
}

// Family T(p) = (x) g(out)^-1 o t o (x) g(in) over the steps of a program:
// inner wires cancel, so the family solves the program whenever t does.
inline SolutionFamily<Q> gauge_family(const ProgramPair& pp, MapTag tag, const Tensor<Q>& t) {
    SolutionFamily<Q> fam;
    for (const auto* side : {&pp.lhs, &pp.rhs}) {
        for (const auto& st : side->steps) {
            if (st.tag != tag) continue;
            auto in = Tensor<Q>::scalar(t.dim(), Q(1)), out = in;
            for (const auto& f : st.inputs) in = tensor_product(in, face_gauge(f));
            for (const auto& f : st.outputs) out = tensor_product(out, invert(face_gauge(f)));
            fam.set(st.face, compose(out, compose(t, in)));
        }
    }
    return fam;
}

}  // namespace pgon::testing
