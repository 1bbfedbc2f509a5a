#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgon/error.hpp"
#include "pgon/permutation.hpp"
#include "pgon/scalar.hpp"

namespace pgon {

// 0-based basis digits, one per leg, first leg first.
using Digits = std::vector<int>;

// Row-major encoding of digit tuples; the first leg is most significant.
struct Basis {
    int dim = 0;
    int legs = 0;

    std::uint64_t size() const { return power(dim, legs); }

    std::uint64_t encode(std::span<const int> digits) const {
        if (static_cast<int>(digits.size()) != legs) {
            throw ShapeError("expected " + std::to_string(legs) + " digits, got " +
                             std::to_string(digits.size()));
        }
        std::uint64_t c = 0;
        for (int x : digits) {
            if (x < 0 || x >= dim) throw ShapeError("digit " + std::to_string(x) + " out of range");
            c = c * dim + x;
        }
        return c;
    }

    Digits decode(std::uint64_t code) const {
        Digits d(legs);
        for (int p = legs - 1; p >= 0; --p) {
            d[p] = static_cast<int>(code % dim);
            code /= dim;
        }
        return d;
    }

    // Weight of leg p (0-based) in the code.
    std::uint64_t weight(int p) const { return power(dim, legs - 1 - p); }

    static std::uint64_t power(int d, int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) {
            if (r > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(d)) {
                throw ShapeError("index space " + std::to_string(d) + "^" + std::to_string(e) +
                                 " is too large");
            }
            r *= d;
        }
        return r;
    }
};

// Sparse linear map V^{in} -> V^{out} over an exact or floating scalar ring.
// Entries are kept sorted by (out, in) code with zeros removed, so two
// tensors are equal exactly when their entry lists are.
template <Scalar S>
class Tensor {
public:
    struct Entry {
        std::uint64_t out;
        std::uint64_t in;
        S value;
    };

    Tensor() = default;
    Tensor(int dim, int in_legs, int out_legs) : dim_(dim), in_(in_legs), out_(out_legs) {
        if (dim < 1) throw ShapeError("dimension must be positive");
        if (in_legs < 0 || out_legs < 0) throw ShapeError("leg counts must be non-negative");
        Basis::power(dim, in_legs);
        Basis::power(dim, out_legs);
    }

    // Duplicate positions are summed.
    static Tensor from_entries(int dim, int in_legs, int out_legs, std::vector<Entry> entries) {
        Tensor t(dim, in_legs, out_legs);
        std::uint64_t os = t.out_basis().size(), is = t.in_basis().size();
        for (const auto& e : entries) {
            if (e.out >= os || e.in >= is) throw ShapeError("entry code out of range");
        }
        t.entries_ = std::move(entries);
        t.normalize();
        return t;
    }

    static Tensor from_digits(int dim, int in_legs, int out_legs,
                              const std::vector<std::tuple<Digits, Digits, S>>& entries) {
        Tensor t(dim, in_legs, out_legs);
        Basis ob = t.out_basis(), ib = t.in_basis();
        std::vector<Entry> es;
        es.reserve(entries.size());
        for (const auto& [o, i, v] : entries) es.push_back({ob.encode(o), ib.encode(i), v});
        t.entries_ = std::move(es);
        t.normalize();
        return t;
    }

    // 0/1 tensor of a function on basis elements.
    static Tensor from_function(int dim, int in_legs, int out_legs,
                                const std::function<Digits(const Digits&)>& f) {
        Tensor t(dim, in_legs, out_legs);
        Basis ob = t.out_basis(), ib = t.in_basis();
        for (std::uint64_t c = 0; c < ib.size(); ++c) {
            t.entries_.push_back({ob.encode(f(ib.decode(c))), c, one<S>()});
        }
        t.normalize();
        return t;
    }

    static Tensor identity(int dim, int legs) {
        Tensor t(dim, legs, legs);
        for (std::uint64_t c = 0; c < t.in_basis().size(); ++c) t.entries_.push_back({c, c, one<S>()});
        return t;
    }

    static Tensor scalar(int dim, const S& v) {
        Tensor t(dim, 0, 0);
        t.entries_.push_back({0, 0, v});
        t.normalize();
        return t;
    }

    int dim() const { return dim_; }
    int in_legs() const { return in_; }
    int out_legs() const { return out_; }
    Basis in_basis() const { return {dim_, in_}; }
    Basis out_basis() const { return {dim_, out_}; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    S at(std::uint64_t out, std::uint64_t in) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(out, in),
                                   [](const Entry& e, const std::pair<std::uint64_t, std::uint64_t>& k) {
                                       return std::make_pair(e.out, e.in) < k;
                                   });
        if (it != entries_.end() && it->out == out && it->in == in) return it->value;
        return zero<S>();
    }

    S at(const Digits& out, const Digits& in) const {
        return at(out_basis().encode(out), in_basis().encode(in));
    }

    bool same_shape(const Tensor& o) const {
        return dim_ == o.dim_ && in_ == o.in_ && out_ == o.out_;
    }

    std::string shape_string() const {
        return "V^" + std::to_string(in_) + " -> V^" + std::to_string(out_) +
               " (d=" + std::to_string(dim_) + ")";
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        if (!a.same_shape(b) || a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            const auto &x = a.entries_[i], &y = b.entries_[i];
            if (x.out != y.out || x.in != y.in || !(x.value == y.value)) return false;
        }
        return true;
    }

    // Sort, merge duplicates, drop exact zeros.
    void normalize() {
        std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
            return a.out != b.out ? a.out < b.out : a.in < b.in;
        });
        std::vector<Entry> merged;
        merged.reserve(entries_.size());
        for (auto& e : entries_) {
            if (!merged.empty() && merged.back().out == e.out && merged.back().in == e.in) {
                merged.back().value += e.value;
            } else {
                merged.push_back(std::move(e));
            }
        }
        std::erase_if(merged, [](const Entry& e) { return scalar_traits<S>::is_zero(e.value, 0); });
        entries_ = std::move(merged);
    }

private:
    int dim_ = 1;
    int in_ = 0;
    int out_ = 0;
    std::vector<Entry> entries_;
};

// f after g.
template <Scalar S>
Tensor<S> compose(const Tensor<S>& f, const Tensor<S>& g) {
    if (f.dim() != g.dim()) throw ShapeError("compose: dimensions differ");
    if (f.in_legs() != g.out_legs()) {
        throw ShapeError("compose: " + f.shape_string() + " after " + g.shape_string());
    }
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_in;
    const auto& fe = f.entries();
    for (std::size_t i = 0; i < fe.size(); ++i) by_in[fe[i].in].push_back(i);
    std::vector<typename Tensor<S>::Entry> out;
    for (const auto& ge : g.entries()) {
        auto it = by_in.find(ge.out);
        if (it == by_in.end()) continue;
        for (std::size_t i : it->second) out.push_back({fe[i].out, ge.in, fe[i].value * ge.value});
    }
    return Tensor<S>::from_entries(f.dim(), g.in_legs(), f.out_legs(), std::move(out));
}

// Kronecker product; f's legs come first.
template <Scalar S>
Tensor<S> tensor_product(const Tensor<S>& f, const Tensor<S>& g) {
    if (f.dim() != g.dim()) throw ShapeError("tensor_product: dimensions differ");
    std::uint64_t gi = g.in_basis().size(), go = g.out_basis().size();
    std::vector<typename Tensor<S>::Entry> out;
    out.reserve(f.nnz() * g.nnz());
    for (const auto& a : f.entries()) {
        for (const auto& b : g.entries()) out.push_back({a.out * go + b.out, a.in * gi + b.in, a.value * b.value});
    }
    return Tensor<S>::from_entries(f.dim(), f.in_legs() + g.in_legs(), f.out_legs() + g.out_legs(),
                                   std::move(out));
}

template <Scalar S>
Tensor<S> tensor_power(const Tensor<S>& f, int m) {
    Tensor<S> r = Tensor<S>::scalar(f.dim(), one<S>());
    for (int i = 0; i < m; ++i) r = tensor_product(r, f);
    return r;
}

template <Scalar S>
Tensor<S> scale(const Tensor<S>& f, const S& s) {
    auto es = f.entries();
    for (auto& e : es) e.value *= s;
    return Tensor<S>::from_entries(f.dim(), f.in_legs(), f.out_legs(), std::move(es));
}

template <Scalar S>
Tensor<S> add(const Tensor<S>& f, const Tensor<S>& g) {
    if (!f.same_shape(g)) throw ShapeError("add: shapes differ");
    auto es = f.entries();
    es.insert(es.end(), g.entries().begin(), g.entries().end());
    return Tensor<S>::from_entries(f.dim(), f.in_legs(), f.out_legs(), std::move(es));
}

// P(out_perm) o f o P(in_perm), where P(pi) moves the factor at position p
// to position pi(p).
template <Scalar S>
Tensor<S> permute_legs(const Tensor<S>& f, const LegPermutation& out_perm, const LegPermutation& in_perm) {
    if (out_perm.size() != f.out_legs() || in_perm.size() != f.in_legs()) {
        throw ShapeError("permute_legs: permutation sizes do not match " + f.shape_string());
    }
    Basis ob = f.out_basis(), ib = f.in_basis();
    std::vector<typename Tensor<S>::Entry> es;
    es.reserve(f.nnz());
    Digits o2(f.out_legs()), i2(f.in_legs());
    for (const auto& e : f.entries()) {
        Digits o = ob.decode(e.out), i = ib.decode(e.in);
        for (int p = 0; p < f.out_legs(); ++p) o2[out_perm(p + 1) - 1] = o[p];
        for (int p = 0; p < f.in_legs(); ++p) i2[p] = i[in_perm(p + 1) - 1];
        es.push_back({ob.encode(o2), ib.encode(i2), e.value});
    }
    return Tensor<S>::from_entries(f.dim(), f.in_legs(), f.out_legs(), std::move(es));
}

template <Scalar S>
Tensor<S> permutation_tensor(const LegPermutation& pi, int dim) {
    return permute_legs(Tensor<S>::identity(dim, pi.size()), pi, LegPermutation::identity(pi.size()));
}

// tau_{i,j} on V^n: the factor at position j moves to position i and the
// factors at i..j-1 shift one place right.  tau_{i,i} is the identity.
template <Scalar S>
Tensor<S> sweep(int i, int j, int n, int dim) {
    if (i < 1 || j < i || j > n) throw ShapeError("sweep: need 1 <= i <= j <= n");
    std::vector<int> img(n);
    for (int p = 1; p <= n; ++p) img[p - 1] = (p == j) ? i : (p >= i && p < j ? p + 1 : p);
    return permutation_tensor<S>(LegPermutation(std::move(img)), dim);
}

inline void check_index(const MultiIndex& a, int bound, const char* what) {
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r] < 1 || a[r] > bound) {
            throw ShapeError(std::string(what) + ": position " + std::to_string(a[r]) + " outside 1.." +
                             std::to_string(bound));
        }
        if (r > 0 && a[r] <= a[r - 1]) throw ShapeError(std::string(what) + ": positions must increase");
    }
}

// F_(a,b) on V^n: F reads the legs at positions a and writes its outputs to
// positions b of V^{n-k+l}; all other legs keep their relative order.
template <Scalar S>
Tensor<S> place(const Tensor<S>& f, const MultiIndex& a, const MultiIndex& b, int n) {
    int k = f.in_legs(), l = f.out_legs(), m = n - k + l;
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != l) {
        throw ShapeError("place: index lengths do not match " + f.shape_string());
    }
    check_index(a, n, "place input");
    check_index(b, m, "place output");
    int d = f.dim();
    Basis nb{d, n}, mb{d, m}, rb{d, n - k};
    std::vector<int> rest_in, rest_out;
    for (int p = 1, r = 0; p <= n; ++p) {
        if (r < k && a[r] == p) {
            ++r;
        } else {
            rest_in.push_back(p);
        }
    }
    for (int p = 1, r = 0; p <= m; ++p) {
        if (r < l && b[r] == p) {
            ++r;
        } else {
            rest_out.push_back(p);
        }
    }
    std::uint64_t rsize = rb.size();
    std::vector<std::uint64_t> rin(rsize), rout(rsize);
    for (std::uint64_t c = 0; c < rsize; ++c) {
        Digits rd = rb.decode(c);
        std::uint64_t x = 0, y = 0;
        for (int q = 0; q < n - k; ++q) {
            x += rd[q] * nb.weight(rest_in[q] - 1);
            y += rd[q] * mb.weight(rest_out[q] - 1);
        }
        rin[c] = x;
        rout[c] = y;
    }
    Basis fi = f.in_basis(), fo = f.out_basis();
    std::vector<typename Tensor<S>::Entry> es;
    es.reserve(f.nnz() * rsize);
    for (const auto& e : f.entries()) {
        Digits id = fi.decode(e.in), od = fo.decode(e.out);
        std::uint64_t x = 0, y = 0;
        for (int q = 0; q < k; ++q) x += id[q] * nb.weight(a[q] - 1);
        for (int q = 0; q < l; ++q) y += od[q] * mb.weight(b[q] - 1);
        for (std::uint64_t c = 0; c < rsize; ++c) es.push_back({y + rout[c], x + rin[c], e.value});
    }
    return Tensor<S>::from_entries(d, n, m, std::move(es));
}

// Completes a written index to the (a, b) pair of a placement.
// l = k reads and writes the same legs; l = k+1 also writes a_k+1;
// l = k-1 is written with the shortened index and reads one leg past its end.
inline std::pair<MultiIndex, MultiIndex> complete_index(const MultiIndex& written, int k, int l) {
    if (l == k) {
        if (static_cast<int>(written.size()) != k) throw ShapeError("written index must have k entries");
        return {written, written};
    }
    if (l == k + 1) {
        if (static_cast<int>(written.size()) != k) throw ShapeError("written index must have k entries");
        MultiIndex b = written;
        b.push_back(k == 0 ? 1 : written.back() + 1);
        return {written, b};
    }
    if (l == k - 1) {
        if (static_cast<int>(written.size()) != l) throw ShapeError("written index must have k-1 entries");
        MultiIndex a = written;
        a.push_back(l == 0 ? 1 : written.back() + 1);
        return {a, written};
    }
    throw ShapeError("shorthand placement needs |in - out| <= 1");
}

// F_a with the index conventions above.
template <Scalar S>
Tensor<S> place_written(const Tensor<S>& f, const MultiIndex& written, int n) {
    auto [a, b] = complete_index(written, f.in_legs(), f.out_legs());
    return place(f, a, b, n);
}

// Partial trace over the leftmost (tr_l) or rightmost (tr_r) leg pair.
template <Scalar S>
Tensor<S> partial_trace(const Tensor<S>& f, bool left) {
    if (f.in_legs() < 1 || f.out_legs() < 1) throw ShapeError("partial trace needs at least one leg each side");
    int d = f.dim();
    Basis ri{d, f.in_legs() - 1}, ro{d, f.out_legs() - 1};
    std::vector<typename Tensor<S>::Entry> es;
    for (const auto& e : f.entries()) {
        std::uint64_t ih, il, oh, ol;
        if (left) {
            ih = e.in / ri.size();
            il = e.in % ri.size();
            oh = e.out / ro.size();
            ol = e.out % ro.size();
            if (ih == oh) es.push_back({ol, il, e.value});
        } else {
            ih = e.in % d;
            il = e.in / d;
            oh = e.out % d;
            ol = e.out / d;
            if (ih == oh) es.push_back({ol, il, e.value});
        }
    }
    return Tensor<S>::from_entries(d, f.in_legs() - 1, f.out_legs() - 1, std::move(es));
}

template <Scalar S>
Tensor<S> trace_left(const Tensor<S>& f) { return partial_trace(f, true); }

template <Scalar S>
Tensor<S> trace_right(const Tensor<S>& f) { return partial_trace(f, false); }

// Dense row-major matrix, rows indexed by output code.
template <Scalar S>
std::vector<std::vector<S>> to_dense(const Tensor<S>& f) {
    std::uint64_t rows = f.out_basis().size(), cols = f.in_basis().size();
    if (rows * cols > (std::uint64_t{1} << 24)) throw ShapeError("to_dense: tensor too large");
    std::vector<std::vector<S>> m(rows, std::vector<S>(cols, zero<S>()));
    for (const auto& e : f.entries()) m[e.out][e.in] = e.value;
    return m;
}

template <Scalar S>
Tensor<S> from_dense(int dim, int in_legs, int out_legs, const std::vector<std::vector<S>>& m) {
    Tensor<S> shape(dim, in_legs, out_legs);
    if (m.size() != shape.out_basis().size()) throw ShapeError("from_dense: row count");
    std::vector<typename Tensor<S>::Entry> es;
    for (std::uint64_t r = 0; r < m.size(); ++r) {
        if (m[r].size() != shape.in_basis().size()) throw ShapeError("from_dense: column count");
        for (std::uint64_t c = 0; c < m[r].size(); ++c) {
            if (!scalar_traits<S>::is_zero(m[r][c], 0)) es.push_back({r, c, m[r][c]});
        }
    }
    return Tensor<S>::from_entries(dim, in_legs, out_legs, std::move(es));
}

// Tensor built from a linear map on single basis vectors, one leg in and out.
template <Scalar S>
Tensor<S> single_leg(int dim, const std::vector<std::vector<S>>& m) {
    return from_dense<S>(dim, 1, 1, m);
}

// First entry (in code order) where two same-shaped tensors disagree.
template <Scalar S>
struct Difference {
    std::uint64_t out = 0;
    std::uint64_t in = 0;
    S lhs{};
    S rhs{};
};

template <Scalar S>
struct Comparison {
    bool equal = true;
    double max_deviation = 0;
    std::optional<Difference<S>> first;
};

template <Scalar S>
Comparison<S> compare(const Tensor<S>& a, const Tensor<S>& b, double tol = kDefaultTolerance) {
    if (!a.same_shape(b)) throw ShapeError("compare: " + a.shape_string() + " vs " + b.shape_string());
    Comparison<S> r;
    const auto &x = a.entries(), &y = b.entries();
    std::size_t i = 0, j = 0;
    auto key = [](const auto& e) { return std::make_pair(e.out, e.in); };
    auto note = [&](std::uint64_t o, std::uint64_t in, const S& u, const S& v) {
        S diff = u - v;
        bool same = scalar_traits<S>::is_zero(diff, scalar_traits<S>::exact ? 0 : tol);
        double mag = scalar_traits<S>::magnitude(diff);
        if (!scalar_traits<S>::exact) r.max_deviation = std::max(r.max_deviation, mag);
        if (!same) {
            if (scalar_traits<S>::exact) r.max_deviation = std::max(r.max_deviation, mag);
            if (r.equal) r.first = Difference<S>{o, in, u, v};
            r.equal = false;
        }
    };
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && key(x[i]) < key(y[j]))) {
            note(x[i].out, x[i].in, x[i].value, zero<S>());
            ++i;
        } else if (i == x.size() || key(y[j]) < key(x[i])) {
            note(y[j].out, y[j].in, zero<S>(), y[j].value);
            ++j;
        } else {
            note(x[i].out, x[i].in, x[i].value, y[j].value);
            ++i;
            ++j;
        }
    }
    return r;
}

template <Scalar S>
bool approx_equal(const Tensor<S>& a, const Tensor<S>& b, double tol = kDefaultTolerance) {
    return a.same_shape(b) && compare(a, b, tol).equal;
}

}  // namespace pgon
