#pragma once

#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgon/index_calculus.hpp"
#include "pgon/placement.hpp"
#include "pgon/simplicial.hpp"
#include "pgon/tensor.hpp"

namespace pgon {

struct ShapeRecord {
    int dim = 0;
    int in_legs = 0;
    int out_legs = 0;
    friend bool operator==(const ShapeRecord&, const ShapeRecord&) = default;
};

template <Scalar S>
ShapeRecord shape_of(const Tensor<S>& t) {
    return {t.dim(), t.in_legs(), t.out_legs()};
}

struct Witness {
    Digits out;
    Digits in;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string equation;
    bool holds = true;
    double max_deviation = 0;
    ShapeRecord lhs_dims;
    ShapeRecord rhs_dims;
    std::optional<Witness> witness;
    // Sub-checks (relations of a batch, the two mixed evaluation paths, ...).
    std::vector<VerificationReport> parts;
    std::string note;

    const VerificationReport* part(const std::string& name) const {
        for (const auto& p : parts) {
            if (p.equation == name) return &p;
        }
        return nullptr;
    }
};

struct VerifyOptions {
    double tolerance = kDefaultTolerance;
    bool parallel = true;
};

template <Scalar S>
VerificationReport compare_sides(const std::string& name, const Tensor<S>& lhs, const Tensor<S>& rhs,
                                 const VerifyOptions& opt = {}) {
    VerificationReport r;
    r.equation = name;
    r.lhs_dims = shape_of(lhs);
    r.rhs_dims = shape_of(rhs);
    if (!lhs.same_shape(rhs)) {
        throw ShapeError(name + ": sides have shapes " + lhs.shape_string() + " and " + rhs.shape_string());
    }
    auto c = compare(lhs, rhs, opt.tolerance);
    r.holds = c.equal;
    r.max_deviation = c.max_deviation;
    if (c.first) {
        r.witness = Witness{lhs.out_basis().decode(c.first->out), lhs.in_basis().decode(c.first->in),
                            scalar_traits<S>::to_string(c.first->lhs), scalar_traits<S>::to_string(c.first->rhs)};
    }
    return r;
}

template <Scalar S>
std::pair<Tensor<S>, Tensor<S>> evaluate_equation(const Equation& eq, int dim, const Resolver<S>& resolve,
                                                  const VerifyOptions& opt = {}) {
    if (opt.parallel) {
        auto fut = std::async(std::launch::async,
                              [&] { return evaluate_side<S>(eq.rhs, eq.in_legs, dim, resolve); });
        Tensor<S> lhs = evaluate_side<S>(eq.lhs, eq.in_legs, dim, resolve);
        return {std::move(lhs), fut.get()};
    }
    Tensor<S> lhs = evaluate_side<S>(eq.lhs, eq.in_legs, dim, resolve);
    Tensor<S> rhs = evaluate_side<S>(eq.rhs, eq.in_legs, dim, resolve);
    return {std::move(lhs), std::move(rhs)};
}

template <Scalar S>
VerificationReport check_equation(const Equation& eq, int dim, const Resolver<S>& resolve,
                                  const VerifyOptions& opt = {}) {
    auto [l, r] = evaluate_equation<S>(eq, dim, resolve, opt);
    auto rep = compare_sides(eq.name + ": " + eq.render(), l, r, opt);
    return rep;
}

// Resolver for equations whose factors are all the same tensor, or one
// tensor per tag.
template <Scalar S>
Resolver<S> by_tag(std::map<MapTag, const Tensor<S>*> maps) {
    return [maps = std::move(maps)](const Placement& p) -> const Tensor<S>& {
        auto it = maps.find(p.tag);
        if (it == maps.end()) throw ShapeError(std::string("no map supplied for tag ") + tag_char(p.tag));
        return *it->second;
    };
}

inline void require_shape(const std::string& what, int in, int out, int want_in, int want_out) {
    if (in != want_in || out != want_out) {
        throw ShapeError(what + " needs a map V^" + std::to_string(want_in) + " -> V^" + std::to_string(want_out) +
                         ", got V^" + std::to_string(in) + " -> V^" + std::to_string(out));
    }
}

inline std::string failure_text(const std::string& what, const VerificationReport& r) {
    std::string msg = what + " failed: " + r.equation;
    if (r.witness) {
        msg += " (first difference at out=" + face_string(r.witness->out) + " in=" + face_string(r.witness->in) +
               ": " + r.witness->lhs + " vs " + r.witness->rhs + ")";
    }
    if (!r.note.empty()) msg += "; " + r.note;
    return msg;
}

inline void require_holds(const std::string& what, const VerificationReport& r) {
    if (!r.holds) throw VerificationError(failure_text(what, r));
}

template <Scalar S>
VerificationReport check_polygon(const Tensor<S>& t, int n, bool dual, const VerifyOptions& opt = {}) {
    auto ms = polygon_map_shape(n, dual);
    require_shape(polygon_name(n, dual) + " equation", t.in_legs(), t.out_legs(), ms.in_legs, ms.out_legs);
    auto eq = polygon_equation(n, dual);
    return check_equation<S>(eq, t.dim(), [&](const Placement&) -> const Tensor<S>& { return t; }, opt);
}

template <Scalar S>
VerificationReport check_simplex(const Tensor<S>& r, int n, const VerifyOptions& opt = {}) {
    if (n < 1) throw DomainError("simplex order must be at least 1");
    require_shape(std::to_string(n) + "-simplex equation", r.in_legs(), r.out_legs(), n, n);
    auto eq = simplex_equation(n);
    return check_equation<S>(eq, r.dim(), [&](const Placement&) -> const Tensor<S>& { return r; }, opt);
}

// Both sides of a compiled program pair with maps looked up per face.
template <Scalar S>
VerificationReport check_program(const ProgramPair& pp, int dim, const FaceResolver<S>& resolve,
                                 const VerifyOptions& opt = {}) {
    auto fe = flatten(pp);
    Equation eq = fe.equation(pp.name);
    return check_equation<S>(eq, dim, [&](const Placement& p) -> const Tensor<S>& { return resolve(p.tag, p.face); },
                             opt);
}

template <Scalar S>
VerificationReport check_mixed(const Tensor<S>& t, const Tensor<S>& s, int n, const VerifyOptions& opt = {}) {
    auto ts = polygon_map_shape(n, false), ss = polygon_map_shape(n, true);
    require_shape("mixed relation T", t.in_legs(), t.out_legs(), ts.in_legs, ts.out_legs);
    require_shape("mixed relation S", s.in_legs(), s.out_legs(), ss.in_legs, ss.out_legs);
    if (t.dim() != s.dim()) throw ShapeError("mixed relation: T and S have different dimensions");
    auto resolve = by_tag<S>({{MapTag::T, &t}, {MapTag::S, &s}});
    auto compiled = flatten(compile_mixed(n)).equation("mixed " + std::to_string(n) + "-gon");
    auto [cl, cr] = evaluate_equation<S>(compiled, t.dim(), resolve, opt);
    auto rep = compare_sides(compiled.name + ": " + compiled.render(), cl, cr, opt);
    if (n % 2) {
        auto eq = mixed_equation(n);
        auto [il, ir] = evaluate_equation<S>(eq, t.dim(), resolve, opt);
        auto by_index = compare_sides("index matrices: " + eq.render(), il, ir, opt);
        auto via_program = rep;
        via_program.equation = "compiled program: " + compiled.render();
        bool agree = il == cl && ir == cr;
        rep.equation = eq.name + ": " + eq.render();
        rep.parts = {by_index, via_program};
        if (!agree) {
            rep.holds = false;
            rep.note = "index-matrix and compiled evaluations disagree";
        }
    }
    return rep;
}

namespace detail {

// Moves position a*cols+b of a rows x cols grid to b*rows+a.
inline LegPermutation grid_transpose(int rows, int cols) {
    std::vector<int> img(rows * cols);
    for (int a = 0; a < rows; ++a) {
        for (int b = 0; b < cols; ++b) img[a * cols + b] = b * rows + a + 1;
    }
    return LegPermutation(img);
}

}  // namespace detail

// F <-> G for F: V^k -> V^l and G: V^i -> V^j.  Copies of F and G are laid
// out on a grid: the left side applies i copies of F and then l copies of
// G, each G reading one output leg from every F; the right side applies k
// copies of G first and then j copies of F.
template <Scalar S>
VerificationReport check_commutes(const Tensor<S>& f, const Tensor<S>& g, const VerifyOptions& opt = {}) {
    if (f.dim() != g.dim()) throw ShapeError("check_commutes: dimensions differ");
    int k = f.in_legs(), l = f.out_legs(), i = g.in_legs(), j = g.out_legs();
    if (k < 1 || l < 1 || i < 1 || j < 1) throw ShapeError("check_commutes: both maps need legs on each side");
    int d = f.dim();
    auto apply = [&](const LegPermutation& p) { return permutation_tensor<S>(p, d); };
    Tensor<S> lhs = compose(apply(detail::grid_transpose(l, j)),
                            compose(tensor_power(g, l), compose(apply(detail::grid_transpose(i, l)), tensor_power(f, i))));
    Tensor<S> rhs = compose(tensor_power(f, j),
                            compose(apply(detail::grid_transpose(k, j)), compose(tensor_power(g, k), apply(detail::grid_transpose(i, k)))));
    return compare_sides("F<->G (F: V^" + std::to_string(k) + "->V^" + std::to_string(l) + ", G: V^" +
                             std::to_string(i) + "->V^" + std::to_string(j) + ")",
                         lhs, rhs, opt);
}

// Reads "T_{13}S_{23}=S_{23}T_{13}": single-digit positions, shorthand rule,
// with map shapes taken from the supplied table.
inline Equation parse_equation(const std::string& text, int legs, const std::map<MapTag, MapShape>& shapes,
                               const std::string& name = "") {
    Equation eq{name.empty() ? text : name, legs, legs, {}, {}};
    std::vector<Placement>* side = &eq.lhs;
    for (std::size_t p = 0; p < text.size();) {
        char c = text[p];
        if (c == '=') {
            side = &eq.rhs;
            ++p;
            continue;
        }
        MapTag tag = parse_tag(c);
        if (text.compare(p + 1, 2, "_{") != 0) throw ConfigError("bad factor in '" + text + "'");
        auto close = text.find('}', p);
        if (close == std::string::npos) throw ConfigError("unterminated index in '" + text + "'");
        MultiIndex idx;
        for (std::size_t q = p + 3; q < close; ++q) idx.push_back(text[q] - '0');
        auto it = shapes.find(tag);
        if (it == shapes.end()) throw ConfigError(std::string("no shape for tag ") + c);
        side->push_back(Placement::shorthand(tag, idx, it->second.in_legs, it->second.out_legs));
        p = close + 1;
    }
    // Output width follows from the left side.
    int width = legs;
    for (const auto& f : eq.lhs) width += f.out_legs() - f.in_legs();
    eq.out_legs = width;
    return eq;
}

inline const std::vector<std::pair<std::string, int>>& relations_1_6() {
    static const std::vector<std::pair<std::string, int>> rel{
        {"T_{13}S_{23}=S_{23}T_{13}", 3},
        {"T_{23}T_{13}S_{12}=S_{12}T_{23}", 3},
        {"T_{12}S_{13}S_{23}=S_{23}T_{12}", 3},
        {"T_{12}S_{13}=S_{13}T_{12}", 4},
        {"T_{23}S_{34}T_{13}S_{12}=S_{34}T_{24}S_{12}T_{23}", 4},
        {"T_{12}S_{13}T_{34}S_{23}=S_{23}T_{12}S_{24}T_{34}", 4},
    };
    return rel;
}

// Relations (1)-(3) on V^3 and (4)-(6) on V^4, reported one by one in the
// parts of the result; the top-level verdict is their conjunction.
template <Scalar S>
VerificationReport check_relations_1_6(const Tensor<S>& t, const Tensor<S>& s, const VerifyOptions& opt = {}) {
    require_shape("relations (1)-(6) T", t.in_legs(), t.out_legs(), 2, 2);
    require_shape("relations (1)-(6) S", s.in_legs(), s.out_legs(), 2, 2);
    if (t.dim() != s.dim()) throw ShapeError("relations (1)-(6): T and S have different dimensions");
    std::map<MapTag, MapShape> shapes{{MapTag::T, {2, 2}}, {MapTag::S, {2, 2}}};
    auto resolve = by_tag<S>({{MapTag::T, &t}, {MapTag::S, &s}});
    VerificationReport all;
    all.equation = "relations (1)-(6)";
    all.lhs_dims = shape_of(t);
    all.rhs_dims = shape_of(s);
    int num = 1;
    for (const auto& [text, legs] : relations_1_6()) {
        auto eq = parse_equation(text, legs, shapes, "(" + std::to_string(num++) + ")");
        auto rep = check_equation<S>(eq, t.dim(), resolve, opt);
        all.holds = all.holds && rep.holds;
        all.max_deviation = std::max(all.max_deviation, rep.max_deviation);
        all.parts.push_back(std::move(rep));
    }
    return all;
}

}  // namespace pgon
