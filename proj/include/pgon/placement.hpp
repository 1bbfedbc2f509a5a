#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pgon/tensor.hpp"

namespace pgon {

enum class MapTag { T, S, R, P };

inline char tag_char(MapTag t) {
    switch (t) {
    case MapTag::T: return 'T';
    case MapTag::S: return 'S';
    case MapTag::R: return 'R';
    case MapTag::P: return 'P';
    }
    return '?';
}

inline MapTag parse_tag(char c) {
    switch (c) {
    case 'T': return MapTag::T;
    case 'S': return MapTag::S;
    case 'R': return MapTag::R;
    case 'P': return MapTag::P;
    }
    throw ConfigError(std::string("unknown map tag '") + c + "'");
}

// Vertex list of a simplex face, strictly increasing.
using Face = std::vector<int>;

// One factor of a written composite: a map read from positions a and
// written to positions b, or (tag P) a leg permutation of the current legs.
struct Placement {
    MapTag tag = MapTag::T;
    MultiIndex a;
    MultiIndex b;
    std::optional<LegPermutation> perm;
    Face face;

    int in_legs() const { return tag == MapTag::P ? perm->size() : static_cast<int>(a.size()); }
    int out_legs() const { return tag == MapTag::P ? perm->size() : static_cast<int>(b.size()); }

    // The single written index when (a, b) follows the shorthand rule.
    std::optional<MultiIndex> written() const {
        if (tag == MapTag::P) return std::nullopt;
        int k = static_cast<int>(a.size()), l = static_cast<int>(b.size());
        if (l == k && a == b) return a;
        if (l == k + 1 && k > 0 && MultiIndex(b.begin(), b.end() - 1) == a && b.back() == a.back() + 1) return a;
        if (l + 1 == k && l > 0 && MultiIndex(a.begin(), a.end() - 1) == b && a.back() == b.back() + 1) return b;
        return std::nullopt;
    }

    bool same_action(const Placement& o) const {
        return tag == o.tag && a == o.a && b == o.b && perm == o.perm;
    }

    static Placement shorthand(MapTag tag, const MultiIndex& written, int k, int l) {
        auto [a, b] = complete_index(written, k, l);
        return Placement{tag, std::move(a), std::move(b), std::nullopt, {}};
    }

    static Placement permutation(LegPermutation p) {
        return Placement{MapTag::P, {}, {}, std::move(p), {}};
    }
};

// Digits concatenate; an entry of 10 or more is preceded by a comma.
inline std::string render_index(const MultiIndex& idx) {
    std::string s;
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (r > 0 && idx[r] >= 10) s += ',';
        s += std::to_string(idx[r]);
    }
    return s;
}

inline std::string render_placement(const Placement& p) {
    std::string s(1, tag_char(p.tag));
    if (p.tag == MapTag::P) return s + "_{" + render_index(p.perm->image()) + "}";
    if (auto w = p.written()) return s + "_{" + render_index(*w) + "}";
    return s + "_{" + render_index(p.a) + ";" + render_index(p.b) + "}";
}

// Written (left to right) order, the rightmost factor acts first.
struct Equation {
    std::string name;
    int in_legs = 0;
    int out_legs = 0;
    std::vector<Placement> lhs;
    std::vector<Placement> rhs;

    std::string render() const {
        std::string s;
        for (const auto& p : lhs) s += render_placement(p);
        s += "=";
        for (const auto& p : rhs) s += render_placement(p);
        return s;
    }
};

template <Scalar S>
using Resolver = std::function<const Tensor<S>&(const Placement&)>;

// Applies the factors of one side, rightmost first, to V^{in_legs}.
template <Scalar S>
Tensor<S> evaluate_side(const std::vector<Placement>& side, int in_legs, int dim, const Resolver<S>& resolve) {
    Tensor<S> acc = Tensor<S>::identity(dim, in_legs);
    int width = in_legs;
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
        Tensor<S> step;
        if (it->tag == MapTag::P) {
            if (it->perm->size() != width) throw ShapeError("permutation step does not span the current legs");
            step = permutation_tensor<S>(*it->perm, dim);
        } else {
            const Tensor<S>& f = resolve(*it);
            if (f.dim() != dim) throw ShapeError("map dimension differs from the equation's");
            if (f.in_legs() != static_cast<int>(it->a.size()) || f.out_legs() != static_cast<int>(it->b.size())) {
                throw ShapeError("map " + render_placement(*it) + " expects " + std::to_string(it->a.size()) +
                                 " -> " + std::to_string(it->b.size()) + " legs, got " + f.shape_string());
            }
            step = place(f, it->a, it->b, width);
        }
        width = step.out_legs();
        acc = compose(step, acc);
    }
    return acc;
}

}  // namespace pgon
