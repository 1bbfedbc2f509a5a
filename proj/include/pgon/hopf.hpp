#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgon/finite_map.hpp"
#include "pgon/linalg.hpp"
#include "pgon/tensor.hpp"
#include "pgon/verifier.hpp"

namespace pgon {

// Finite group by multiplication table; element 0 is the identity.
struct CayleyTable {
    int order = 0;
    std::vector<std::vector<int>> table;

    int mul(int g, int h) const { return table[g][h]; }

    int inverse(int g) const {
        for (int h = 0; h < order; ++h) {
            if (table[g][h] == 0) return h;
        }
        throw DomainError("group element " + std::to_string(g) + " has no inverse");
    }

    bool is_abelian() const {
        for (int g = 0; g < order; ++g) {
            for (int h = 0; h < order; ++h) {
                if (table[g][h] != table[h][g]) return false;
            }
        }
        return true;
    }

    void validate() const {
        if (order < 1) throw DomainError("group order must be positive");
        if (static_cast<int>(table.size()) != order) throw DomainError("Cayley table needs one row per element");
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != order) throw DomainError("Cayley table rows must have length order");
            std::vector<char> seen(order, 0);
            for (int v : row) {
                if (v < 0 || v >= order) throw DomainError("Cayley table entry out of range");
                if (seen[v]) throw DomainError("Cayley table row repeats an element");
                seen[v] = 1;
            }
        }
        for (int g = 0; g < order; ++g) {
            if (table[0][g] != g || table[g][0] != g) throw DomainError("element 0 is not the identity");
        }
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                for (int c = 0; c < order; ++c) {
                    if (table[table[a][b]][c] != table[a][table[b][c]]) {
                        throw DomainError("Cayley table is not associative");
                    }
                }
            }
        }
        for (int g = 0; g < order; ++g) {
            int h = inverse(g);
            if (table[h][g] != 0) throw DomainError("left and right inverses differ");
        }
    }

    static CayleyTable cyclic(int n) {
        CayleyTable g{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
        }
        return g;
    }

    // Direct product; (a, b) is element a * other.order + b.
    CayleyTable product(const CayleyTable& other) const {
        int n = order * other.order;
        CayleyTable g{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                g.table[x][y] = mul(x / other.order, y / other.order) * other.order +
                                other.mul(x % other.order, y % other.order);
            }
        }
        return g;
    }

    // Permutations of {0,1,2} in lexicographic order, identity first.
    static CayleyTable symmetric3() {
        std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        CayleyTable g{6, std::vector<std::vector<int>>(6, std::vector<int>(6))};
        for (int a = 0; a < 6; ++a) {
            for (int b = 0; b < 6; ++b) {
                std::vector<int> c(3);
                for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
                g.table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
            }
        }
        return g;
    }
};

template <Scalar S>
struct HopfInstance {
    std::string name;
    int dim = 1;
    Tensor<S> unit;       // 0 -> 1
    Tensor<S> counit;     // 1 -> 0
    Tensor<S> product;    // 2 -> 1
    Tensor<S> coproduct;  // 1 -> 2
    std::optional<Tensor<S>> antipode;
};

// k[G]: basis G, Delta(g) = g (x) g, s(g) = g^-1.
template <Scalar S>
HopfInstance<S> group_algebra(const CayleyTable& g, const std::string& name = "k[G]") {
    g.validate();
    int d = g.order;
    HopfInstance<S> h;
    h.name = name;
    h.dim = d;
    h.unit = Tensor<S>::from_digits(d, 0, 1, {{{0}, {}, one<S>()}});
    h.counit = Tensor<S>::from_function(d, 1, 0, [](const Digits&) { return Digits{}; });
    h.product = Tensor<S>::from_function(d, 2, 1, [&](const Digits& x) { return Digits{g.mul(x[0], x[1])}; });
    h.coproduct = Tensor<S>::from_function(d, 1, 2, [](const Digits& x) { return Digits{x[0], x[0]}; });
    h.antipode = Tensor<S>::from_function(d, 1, 1, [&](const Digits& x) { return Digits{g.inverse(x[0])}; });
    return h;
}

// Functions on G in the delta basis: pointwise product,
// Delta(d_g) = sum over hk = g of d_h (x) d_k, s(d_g) = d_{g^-1}.
template <Scalar S>
HopfInstance<S> dual_group_algebra(const CayleyTable& g, const std::string& name = "k[G]*") {
    g.validate();
    int d = g.order;
    HopfInstance<S> h;
    h.name = name;
    h.dim = d;
    std::vector<std::tuple<Digits, Digits, S>> unit, prod, cop;
    for (int x = 0; x < d; ++x) {
        unit.push_back({{x}, {}, one<S>()});
        prod.push_back({{x}, {x, x}, one<S>()});
        for (int y = 0; y < d; ++y) cop.push_back({{x, y}, {g.mul(x, y)}, one<S>()});
    }
    h.unit = Tensor<S>::from_digits(d, 0, 1, unit);
    h.counit = Tensor<S>::from_digits(d, 1, 0, {{{}, {0}, one<S>()}});
    h.product = Tensor<S>::from_digits(d, 2, 1, prod);
    h.coproduct = Tensor<S>::from_digits(d, 1, 2, cop);
    h.antipode = Tensor<S>::from_function(d, 1, 1, [&](const Digits& x) { return Digits{g.inverse(x[0])}; });
    return h;
}

struct AxiomReport {
    VerificationReport report;  // parts: one entry per law
    bool bialgebra = false;
    bool hopf = false;
    bool commutative = false;
    bool cocommutative = false;
    bool antipode_invertible = false;
};

template <Scalar S>
AxiomReport check_axioms(const HopfInstance<S>& h, const VerifyOptions& opt = {}) {
    int d = h.dim;
    auto id = Tensor<S>::identity(d, 1);
    auto flip = permutation_tensor<S>(LegPermutation::reversal(2), d);
    const auto &M = h.product, &D = h.coproduct, &u = h.unit, &e = h.counit;
    AxiomReport ar;
    ar.report.equation = "axioms of " + h.name;
    auto law = [&](const std::string& name, const Tensor<S>& l, const Tensor<S>& r) {
        ar.report.parts.push_back(compare_sides(name, l, r, opt));
        return ar.report.parts.back().holds;
    };
    bool ok = true;
    ok &= law("associativity", compose(M, tensor_product(M, id)), compose(M, tensor_product(id, M)));
    ok &= law("coassociativity", compose(tensor_product(D, id), D), compose(tensor_product(id, D), D));
    ok &= law("left unit", compose(M, tensor_product(u, id)), id);
    ok &= law("right unit", compose(M, tensor_product(id, u)), id);
    ok &= law("left counit", compose(tensor_product(e, id), D), id);
    ok &= law("right counit", compose(tensor_product(id, e), D), id);
    auto mid = permutation_tensor<S>(LegPermutation::transposition(4, 2), d);
    ok &= law("bialgebra", compose(D, M), compose(tensor_product(M, M), compose(mid, tensor_product(D, D))));
    ok &= law("coproduct of unit", compose(D, u), tensor_product(u, u));
    ok &= law("counit of product", compose(e, M), tensor_product(e, e));
    ok &= law("counit of unit", compose(e, u), Tensor<S>::scalar(d, one<S>()));
    ar.bialgebra = ok;
    if (h.antipode) {
        const auto& s = *h.antipode;
        bool a = law("left antipode", compose(M, compose(tensor_product(s, id), D)), compose(u, e));
        a &= law("right antipode", compose(M, compose(tensor_product(id, s), D)), compose(u, e));
        ar.hopf = ok && a;
        ar.antipode_invertible = is_invertible(s, opt.tolerance);
    }
    ar.commutative = law("commutativity", compose(M, flip), M);
    ar.cocommutative = law("cocommutativity", compose(flip, D), D);
    ar.report.holds = ar.bialgebra && (!h.antipode || ar.hopf);
    ar.report.lhs_dims = {d, 2, 1};
    ar.report.rhs_dims = {d, 1, 2};
    return ar;
}

}  // namespace pgon
