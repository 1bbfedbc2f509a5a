#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pgon/placement.hpp"
#include "pgon/tensor.hpp"

namespace pgon {

enum class MatrixKind { A, B, D, E, F, G };

inline char kind_char(MatrixKind k) { return "ABDEFG"[static_cast<int>(k)]; }

struct MultiIndexMatrix {
    MatrixKind kind = MatrixKind::A;
    int order = 0;
    std::vector<MultiIndex> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }

    MultiIndexMatrix transpose(MatrixKind k) const {
        MultiIndexMatrix t{k, order, {}};
        for (std::size_t c = 0; c < col_count(); ++c) {
            MultiIndex r;
            for (const auto& row : rows) r.push_back(row.at(c));
            t.rows.push_back(std::move(r));
        }
        return t;
    }

    int max_entry() const {
        int m = 0;
        for (const auto& r : rows) {
            for (int v : r) m = std::max(m, v);
        }
        return m;
    }

    // Rows only: kind and order are labels.
    friend bool operator==(const MultiIndexMatrix& x, const MultiIndexMatrix& y) { return x.rows == y.rows; }
};

struct PolygonIndices {
    MultiIndexMatrix a;
    MultiIndexMatrix b;
};

struct MixedIndices {
    MultiIndexMatrix d, e, f, g;
};

namespace detail {

inline MultiIndex iota_index(int from, int to) {
    MultiIndex r;
    for (int v = from; v <= to; ++v) r.push_back(v);
    return r;
}

inline MultiIndex shifted(int head, const MultiIndex& tail, int by) {
    MultiIndex r{head};
    for (int v : tail) r.push_back(v + by);
    return r;
}

// A_{2k+1}, B_{2k+1} in recursion order a_1.., b_1..
inline std::pair<std::vector<MultiIndex>, std::vector<MultiIndex>> odd_ab(int k) {
    std::vector<MultiIndex> a{{1}, {1}}, b{{1}};
    for (int j = 2; j <= k; ++j) {
        std::vector<MultiIndex> na{iota_index(1, j)}, nb{iota_index(1, j)};
        for (int i = 0; i < j; ++i) na.push_back(shifted(i + 1, a[i], j));
        for (int i = 0; i < j - 1; ++i) nb.push_back(shifted(i + 2, b[i], j));
        a = std::move(na);
        b = std::move(nb);
    }
    return {a, b};
}

struct MixedRows {
    std::vector<MultiIndex> d, e, f;
};

inline MixedRows odd_mixed_rows(int k) {
    MixedRows r{{{1}, {1}}, {{1}}, {{1}, {1}}};
    for (int j = 2; j <= k; ++j) {
        int s = 2 * j - 1;
        MultiIndex head{1};
        for (int v = j + 1; v <= 2 * j - 1; ++v) head.push_back(v);
        MixedRows n;
        n.e.push_back(head);
        for (int i = 0; i < j - 1; ++i) n.e.push_back(shifted(i + 2, r.e[i], s));
        n.d.push_back(iota_index(1, j));
        for (int i = 0; i < j; ++i) n.d.push_back(shifted(head[i], r.d[i], s));
        n.f.push_back(head);
        for (int i = 0; i < j; ++i) n.f.push_back(shifted(i + 1, r.f[i], s));
        r = std::move(n);
    }
    return r;
}

}  // namespace detail

// A in written left-hand order; B in written right-hand order of the
// n-gon equation (that is, b_k first).
inline PolygonIndices polygon_indices(int n) {
    if (n < 3) throw DomainError("polygon_indices: n must be at least 3, got " + std::to_string(n));
    PolygonIndices r{{MatrixKind::A, n, {}}, {MatrixKind::B, n, {}}};
    if (n % 2) {
        auto [a, b] = detail::odd_ab((n - 1) / 2);
        r.a.rows = a;
        r.b.rows.assign(b.rbegin(), b.rend());
    } else {
        int k = n / 2;
        r.a.rows = detail::odd_ab(k - 1).first;
        auto b = detail::odd_ab(k).second;
        for (auto it = b.rbegin(); it != b.rend(); ++it) r.b.rows.emplace_back(it->begin(), it->end() - 1);
    }
    return r;
}

inline MultiIndexMatrix simplex_indices(int n) {
    if (n < 1) throw DomainError("simplex_indices: n must be at least 1, got " + std::to_string(n));
    return {MatrixKind::A, 2 * n + 1, detail::odd_ab(n).first};
}

inline MixedIndices mixed_indices(int n) {
    if (n < 3 || n % 2 == 0) throw DomainError("mixed_indices: n must be odd and at least 3, got " + std::to_string(n));
    auto rows = detail::odd_mixed_rows((n - 1) / 2);
    MixedIndices r{{MatrixKind::D, n, rows.d}, {MatrixKind::E, n, rows.e}, {MatrixKind::F, n, rows.f}, {}};
    r.g = r.e.transpose(MatrixKind::G);
    return r;
}

// Order-reversing permutation on k legs.
template <Scalar S>
Tensor<S> bar_sigma(int k, int dim) {
    if (k < 1) throw DomainError("bar_sigma: k must be at least 1");
    return permutation_tensor<S>(LegPermutation::reversal(k), dim);
}

struct MapShape {
    int in_legs = 0;
    int out_legs = 0;
    friend bool operator==(const MapShape&, const MapShape&) = default;
};

// Leg counts of a solution of the (dual) n-gon equation.
inline MapShape polygon_map_shape(int n, bool dual) {
    if (n < 3) throw DomainError("polygon order must be at least 3");
    int k = n / 2;
    if (n % 2) return {k, k};
    return dual ? MapShape{k, k - 1} : MapShape{k - 1, k};
}

// Leg counts of the space the (dual) n-gon equation acts on.
inline MapShape polygon_space(int n, bool dual) {
    if (n < 3) throw DomainError("polygon order must be at least 3");
    int k = n / 2;
    if (n % 2) return {k * (k + 1) / 2, k * (k + 1) / 2};
    int lo = k * (k - 1) / 2;
    return dual ? MapShape{lo + k, lo} : MapShape{lo, lo + k};
}

inline std::string polygon_name(int n, bool dual) {
    return std::string(dual ? "dual " : "") + std::to_string(n) + "-gon";
}

inline Equation polygon_equation(int n, bool dual) {
    auto idx = polygon_indices(n);
    auto ms = polygon_map_shape(n, dual);
    auto sp = polygon_space(n, dual);
    MapTag tag = dual ? MapTag::S : MapTag::T;
    Equation eq{polygon_name(n, dual), sp.in_legs, sp.out_legs, {}, {}};
    auto add = [&](std::vector<Placement>& side, const MultiIndex& w) {
        side.push_back(Placement::shorthand(tag, w, ms.in_legs, ms.out_legs));
    };
    if (!dual) {
        for (const auto& r : idx.a.rows) add(eq.lhs, r);
        for (const auto& r : idx.b.rows) add(eq.rhs, r);
    } else {
        for (auto it = idx.a.rows.rbegin(); it != idx.a.rows.rend(); ++it) add(eq.lhs, *it);
        for (auto it = idx.b.rows.rbegin(); it != idx.b.rows.rend(); ++it) add(eq.rhs, *it);
    }
    return eq;
}

inline Equation simplex_equation(int n) {
    auto a = simplex_indices(n);
    int legs = n * (n + 1) / 2;
    Equation eq{std::to_string(n) + "-simplex", legs, legs, {}, {}};
    for (const auto& r : a.rows) eq.lhs.push_back(Placement::shorthand(MapTag::R, r, n, n));
    for (auto it = a.rows.rbegin(); it != a.rows.rend(); ++it) {
        eq.rhs.push_back(Placement::shorthand(MapTag::R, *it, n, n));
    }
    return eq;
}

// T_{d_{k+1}} S_{e_k} T_{d_k} ... S_{e_1} T_{d_1} = S_{f_1} T_{g_1} ... T_{g_k} S_{f_{k+1}}
inline Equation mixed_equation(int n) {
    auto m = mixed_indices(n);
    int k = (n - 1) / 2;
    Equation eq{"mixed " + std::to_string(n) + "-gon", k * k, k * k, {}, {}};
    for (int i = k; i >= 1; --i) {
        eq.lhs.push_back(Placement::shorthand(MapTag::T, m.d.rows[i], k, k));
        eq.lhs.push_back(Placement::shorthand(MapTag::S, m.e.rows[i - 1], k, k));
    }
    eq.lhs.push_back(Placement::shorthand(MapTag::T, m.d.rows[0], k, k));
    for (int i = 0; i < k; ++i) {
        eq.rhs.push_back(Placement::shorthand(MapTag::S, m.f.rows[i], k, k));
        eq.rhs.push_back(Placement::shorthand(MapTag::T, m.g.rows[i], k, k));
    }
    eq.rhs.push_back(Placement::shorthand(MapTag::S, m.f.rows[k], k, k));
    return eq;
}

}  // namespace pgon
