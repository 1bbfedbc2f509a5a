#pragma once

#include <cstdint>
#include <vector>

#include "pgon/tensor.hpp"

namespace pgon {

namespace detail {

template <Scalar S>
bool pivot_ok(const S& v, double tol) {
    return !scalar_traits<S>::is_zero(v, scalar_traits<S>::exact ? 0 : tol);
}

// Row-reduces m in place, applying the same operations to aug.  Returns rank.
template <Scalar S>
std::size_t row_reduce(std::vector<std::vector<S>>& m, std::vector<std::vector<S>>* aug, double tol) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t best = rows;
        double best_mag = -1;
        for (std::size_t r = rank; r < rows; ++r) {
            if (!pivot_ok(m[r][c], tol)) continue;
            if constexpr (scalar_traits<S>::exact) {
                best = r;
                break;
            } else {
                double mag = scalar_traits<S>::magnitude(m[r][c]);
                if (mag > best_mag) {
                    best_mag = mag;
                    best = r;
                }
            }
        }
        if (best == rows) continue;
        std::swap(m[rank], m[best]);
        if (aug) std::swap((*aug)[rank], (*aug)[best]);
        S inv = scalar_traits<S>::inverse(m[rank][c]);
        for (auto& v : m[rank]) v *= inv;
        if (aug) {
            for (auto& v : (*aug)[rank]) v *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || scalar_traits<S>::is_zero(m[r][c], 0)) continue;
            S f = m[r][c];
            for (std::size_t q = 0; q < cols; ++q) m[r][q] -= f * m[rank][q];
            if (aug) {
                for (std::size_t q = 0; q < (*aug)[r].size(); ++q) (*aug)[r][q] -= f * (*aug)[rank][q];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

template <Scalar S>
std::size_t rank(const Tensor<S>& f, double tol = kDefaultTolerance) {
    auto m = to_dense(f);
    return detail::row_reduce(m, static_cast<std::vector<std::vector<S>>*>(nullptr), tol);
}

template <Scalar S>
bool is_invertible(const Tensor<S>& f, double tol = kDefaultTolerance) {
    return f.in_legs() == f.out_legs() && rank(f, tol) == f.in_basis().size();
}

// Gauss-Jordan inverse; throws SingularError when f is not invertible.
template <Scalar S>
Tensor<S> invert(const Tensor<S>& f, double tol = kDefaultTolerance) {
    if (f.in_legs() != f.out_legs()) throw ShapeError("invert: map is not square: " + f.shape_string());
    auto m = to_dense(f);
    std::size_t n = m.size();
    std::vector<std::vector<S>> inv(n, std::vector<S>(n, zero<S>()));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = one<S>();
    if (detail::row_reduce(m, &inv, tol) != n) throw SingularError("invert: map is singular");
    return from_dense<S>(f.dim(), f.in_legs(), f.out_legs(), inv);
}

}  // namespace pgon
