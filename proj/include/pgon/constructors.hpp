#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgon/hopf.hpp"
#include "pgon/index_calculus.hpp"
#include "pgon/linalg.hpp"
#include "pgon/tensor.hpp"
#include "pgon/verifier.hpp"

namespace pgon {

enum class Family { polygon, dual_polygon, simplex };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::polygon: return "polygon";
        case Family::dual_polygon: return "dual-polygon";
        case Family::simplex: return "simplex";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    if (s == "polygon") return Family::polygon;
    if (s == "dual-polygon" || s == "dual_polygon" || s == "dual") return Family::dual_polygon;
    if (s == "simplex") return Family::simplex;
    throw ConfigError("unknown family '" + s + "' (polygon, dual-polygon, simplex)");
}

// Leg counts a solution of the given family and order must have.
inline MapShape family_shape(Family f, int order) {
    if (f == Family::simplex) {
        if (order < 1) throw DomainError("simplex order must be at least 1");
        return {order, order};
    }
    return polygon_map_shape(order, f == Family::dual_polygon);
}

template <Scalar S>
struct SolutionDescriptor {
    Family family = Family::polygon;
    int order = 3;
    Tensor<S> tensor;
    std::vector<std::string> provenance;

    std::string label() const {
        return family == Family::simplex ? std::to_string(order) + "-simplex"
                                         : polygon_name(order, family == Family::dual_polygon);
    }
};

template <Scalar S>
struct MixedPair {
    SolutionDescriptor<S> t;
    SolutionDescriptor<S> s;
};

struct ConstructOptions {
    bool verify = true;
    bool check_preconditions = true;
    VerifyOptions verify_options;
};

enum class Side { left, right };

template <Scalar S>
SolutionDescriptor<S> make_descriptor(Family f, int order, Tensor<S> t, std::vector<std::string> prov) {
    auto ms = family_shape(f, order);
    require_shape(family_name(f) + " " + std::to_string(order), t.in_legs(), t.out_legs(), ms.in_legs, ms.out_legs);
    return {f, order, std::move(t), std::move(prov)};
}

template <Scalar S>
VerificationReport verify_descriptor(const SolutionDescriptor<S>& d, const VerifyOptions& opt = {}) {
    if (d.family == Family::simplex) return check_simplex(d.tensor, d.order, opt);
    return check_polygon(d.tensor, d.order, d.family == Family::dual_polygon, opt);
}

template <Scalar S>
const SolutionDescriptor<S>& ensure_solution(const SolutionDescriptor<S>& d, const ConstructOptions& opt) {
    if (opt.verify) require_holds(d.label() + " check", verify_descriptor(d, opt.verify_options));
    return d;
}

template <Scalar S>
void ensure_mixed(const SolutionDescriptor<S>& t, const SolutionDescriptor<S>& s, const ConstructOptions& opt) {
    if (!opt.verify) return;
    ensure_solution(t, opt);
    ensure_solution(s, opt);
    require_holds("mixed relation", check_mixed(t.tensor, s.tensor, t.order, opt.verify_options));
}

namespace detail {

template <Scalar S>
std::vector<std::string> extend(std::vector<std::string> p, const std::string& step) {
    p.push_back(step);
    return p;
}

template <Scalar S>
std::vector<std::string> merge(const std::vector<std::string>& a, const std::vector<std::string>& b,
                               const std::string& step) {
    std::vector<std::string> p;
    for (const auto& s : a) p.push_back("x: " + s);
    for (const auto& s : b) p.push_back("y: " + s);
    p.push_back(step);
    return p;
}

// 1/d in the scalar field of t.
template <Scalar S>
S inverse_dim(const Tensor<S>& t) {
    S d = scalar_traits<S>::from_int(t.dim());
    if constexpr (std::same_as<S, Gf>) {
        std::uint64_t p = 0;
        for (const auto& e : t.entries()) {
            if (e.value.modulus()) {
                p = e.value.modulus();
                break;
            }
        }
        if (p == 0) throw DomainError("trace normalization: cannot infer the field modulus");
        if (t.dim() % p == 0) {
            throw DomainError("trace normalization: dim " + std::to_string(t.dim()) + " vanishes in GF(" +
                              std::to_string(p) + ")");
        }
        return d.inverse(p);
    } else {
        return scalar_traits<S>::inverse(d);
    }
}

template <Scalar S>
Tensor<S> normalized_trace(const Tensor<S>& t, Side side) {
    return scale(partial_trace(t, side == Side::left), inverse_dim(t));
}

// Componentwise map on a tensor product of spaces: factor j acts on the
// j-th component of every leg.  Combined digits are row-major in j.
template <Scalar S>
Tensor<S> factorwise(const std::vector<Tensor<S>>& fs) {
    if (fs.empty()) throw ShapeError("factorwise: no factors");
    int in = fs[0].in_legs(), out = fs[0].out_legs();
    for (const auto& f : fs) {
        if (f.in_legs() != in || f.out_legs() != out) throw ShapeError("factorwise: factors differ in leg counts");
    }
    struct Partial {
        Digits out, in;
        S value;
    };
    std::vector<Partial> acc{{Digits(out, 0), Digits(in, 0), one<S>()}};
    int total = 1;
    for (const auto& f : fs) {
        int d = f.dim();
        total *= d;
        Basis fi = f.in_basis(), fo = f.out_basis();
        std::vector<Partial> next;
        for (const auto& p : acc) {
            for (const auto& e : f.entries()) {
                Partial q{p.out, p.in, p.value * e.value};
                Digits id = fi.decode(e.in), od = fo.decode(e.out);
                for (int r = 0; r < in; ++r) q.in[r] = q.in[r] * d + id[r];
                for (int r = 0; r < out; ++r) q.out[r] = q.out[r] * d + od[r];
                next.push_back(std::move(q));
            }
        }
        acc = std::move(next);
    }
    std::vector<std::tuple<Digits, Digits, S>> es;
    for (auto& p : acc) es.emplace_back(std::move(p.out), std::move(p.in), std::move(p.value));
    return Tensor<S>::from_digits(total, in, out, es);
}

inline LegPermutation pair_swaps(int legs, int pairs) {
    std::vector<int> img(legs);
    for (int p = 0; p < legs; ++p) img[p] = p + 1;
    for (int i = 0; i < pairs; ++i) std::swap(img[2 * i], img[2 * i + 1]);
    return LegPermutation(img);
}

inline MultiIndex stepped(int from, int count) {
    MultiIndex m;
    for (int i = 0; i < count; ++i) m.push_back(from + 2 * i);
    return m;
}

}  // namespace detail

// X o_l Y: the first output leg of Y feeds the last input leg of X.
template <Scalar S>
Tensor<S> compose_left(const Tensor<S>& x, const Tensor<S>& y) {
    if (x.dim() != y.dim()) throw ShapeError("o_l: dimensions differ");
    if (x.in_legs() < 1 || y.out_legs() < 1) throw ShapeError("o_l needs an input leg on X and an output leg on Y");
    int d = x.dim();
    return compose(tensor_product(x, Tensor<S>::identity(d, y.out_legs() - 1)),
                   tensor_product(Tensor<S>::identity(d, x.in_legs() - 1), y));
}

// X o_r Y: the last output leg of X feeds the first input leg of Y.
template <Scalar S>
Tensor<S> compose_right(const Tensor<S>& x, const Tensor<S>& y) {
    if (x.dim() != y.dim()) throw ShapeError("o_r: dimensions differ");
    if (x.out_legs() < 1 || y.in_legs() < 1) throw ShapeError("o_r needs an output leg on X and an input leg on Y");
    int d = x.dim();
    return compose(tensor_product(Tensor<S>::identity(d, x.out_legs() - 1), y),
                   tensor_product(x, Tensor<S>::identity(d, y.in_legs() - 1)));
}

// ---- transforms of a single solution ----

template <Scalar S>
SolutionDescriptor<S> invert_to_dual(const SolutionDescriptor<S>& t, const ConstructOptions& opt = {}) {
    if (t.family == Family::simplex || t.order % 2 == 0) {
        throw DomainError("invert_to_dual needs a solution of an odd polygon equation or its dual");
    }
    Tensor<S> inv = invert(t.tensor, opt.verify_options.tolerance);
    Family f = t.family == Family::polygon ? Family::dual_polygon : Family::polygon;
    auto out = make_descriptor(f, t.order, std::move(inv), detail::extend<S>(t.provenance, "inverse"));
    ensure_solution(out, opt);
    return out;
}

// (phi^-1)^(x out) o T o phi^(x in).
template <Scalar S>
SolutionDescriptor<S> conjugate(const SolutionDescriptor<S>& t, const Tensor<S>& phi, const ConstructOptions& opt = {}) {
    require_shape("conjugating map", phi.in_legs(), phi.out_legs(), 1, 1);
    if (phi.dim() != t.tensor.dim()) throw ShapeError("conjugating map has the wrong dimension");
    Tensor<S> pinv = invert(phi, opt.verify_options.tolerance);
    Tensor<S> r = compose(tensor_power(pinv, t.tensor.out_legs()), compose(t.tensor, tensor_power(phi, t.tensor.in_legs())));
    auto out = make_descriptor(t.family, t.order, std::move(r), detail::extend<S>(t.provenance, "conjugate"));
    ensure_solution(out, opt);
    return out;
}

// Reverses input and output legs.  Odd orders move to the dual family;
// even orders stay in theirs.
template <Scalar S>
SolutionDescriptor<S> bar_sigma_conjugate(const SolutionDescriptor<S>& t, const ConstructOptions& opt = {}) {
    if (t.family == Family::simplex) throw DomainError("bar_sigma_conjugate applies to polygon solutions");
    int d = t.tensor.dim(), in = t.tensor.in_legs(), out = t.tensor.out_legs();
    Tensor<S> r = t.tensor;
    if (in > 0) r = compose(r, bar_sigma<S>(in, d));
    if (out > 0) r = compose(bar_sigma<S>(out, d), r);
    Family f = t.family;
    if (t.order % 2) f = f == Family::polygon ? Family::dual_polygon : Family::polygon;
    auto res = make_descriptor(f, t.order, std::move(r), detail::extend<S>(t.provenance, "bar-sigma"));
    ensure_solution(res, opt);
    return res;
}

// Partial trace one order down.  Odd polygon solutions are normalized by
// 1/dim; simplex solutions are not.
template <Scalar S>
SolutionDescriptor<S> trace_descend(const SolutionDescriptor<S>& t, Side side, const ConstructOptions& opt = {}) {
    std::string tag = side == Side::left ? "tr_l" : "tr_r";
    if (opt.check_preconditions && !is_invertible(t.tensor, opt.verify_options.tolerance)) {
        throw DomainError("trace_descend needs an invertible solution");
    }
    if (t.family == Family::simplex) {
        if (t.order < 2) throw DomainError("trace_descend: simplex order must be at least 2");
        auto out = make_descriptor(Family::simplex, t.order - 1, partial_trace(t.tensor, side == Side::left),
                                   detail::extend<S>(t.provenance, tag));
        ensure_solution(out, opt);
        return out;
    }
    if (t.order % 2 == 0 || t.order < 5) throw DomainError("trace_descend: polygon order must be odd and at least 5");
    auto out = make_descriptor(t.family, t.order - 2, detail::normalized_trace(t.tensor, side),
                               detail::extend<S>(t.provenance, tag + "/d"));
    ensure_solution(out, opt);
    return out;
}

template <Scalar S>
MixedPair<S> trace_descend_mixed(const MixedPair<S>& p, Side side, const ConstructOptions& opt = {}) {
    const auto &t = p.t, &s = p.s;
    if (t.family != Family::polygon || s.family != Family::dual_polygon || t.order != s.order) {
        throw DomainError("trace_descend_mixed needs a polygon solution and a dual solution of the same order");
    }
    if (t.order % 2 == 0 || t.order < 5) throw DomainError("trace_descend_mixed: order must be odd and at least 5");
    if (opt.check_preconditions) {
        double tol = opt.verify_options.tolerance;
        if (!is_invertible(t.tensor, tol) || !is_invertible(s.tensor, tol)) {
            throw DomainError("trace_descend_mixed needs invertible maps");
        }
        require_holds("mixed relation of the input pair", check_mixed(t.tensor, s.tensor, t.order, opt.verify_options));
    }
    std::string tag = side == Side::left ? "tr_l/d" : "tr_r/d";
    MixedPair<S> out{
        make_descriptor(Family::polygon, t.order - 2, detail::normalized_trace(t.tensor, side),
                        detail::extend<S>(t.provenance, tag)),
        make_descriptor(Family::dual_polygon, s.order - 2, detail::normalized_trace(s.tensor, side),
                        detail::extend<S>(s.provenance, tag))};
    ensure_mixed(out.t, out.s, opt);
    return out;
}

// ---- stacking ----

enum class StackMode { compose_left, compose_right, tensor };

inline std::string stack_mode_name(StackMode m) {
    switch (m) {
        case StackMode::compose_left: return "o_l";
        case StackMode::compose_right: return "o_r";
        case StackMode::tensor: return "(x)";
    }
    return "?";
}

struct StackSignature {
    Family family;
    int order;
};

// Family and order of the stacked solution; throws on pairs and modes
// outside the table.
//   odd polygon x, polygon y:   o_l -> n+2k-2,       (x) -> n+2k
//   odd dual x, dual y:         o_r -> dual n+2k-2,  (x) -> dual n+2k
//   even dual x, polygon y:     o_l -> dual n+2k-3,  (x) -> dual n+2k-1
//   even polygon x, dual y:     o_r -> n+2k-3,       (x) -> n+2k-1
inline StackSignature stack_signature(Family xf, int xo, Family yf, int yo, StackMode mode) {
    if (xf == Family::simplex || yf == Family::simplex) throw DomainError("stack: simplex solutions do not stack");
    bool x_odd = xo % 2 == 1;
    bool x_dual = xf == Family::dual_polygon, y_dual = yf == Family::dual_polygon;
    StackMode composing;
    Family result;
    if (x_odd && !x_dual && !y_dual) {
        composing = StackMode::compose_left;
        result = Family::polygon;
    } else if (x_odd && x_dual && y_dual) {
        composing = StackMode::compose_right;
        result = Family::dual_polygon;
    } else if (!x_odd && x_dual && !y_dual) {
        composing = StackMode::compose_left;
        result = Family::dual_polygon;
    } else if (!x_odd && !x_dual && y_dual) {
        composing = StackMode::compose_right;
        result = Family::polygon;
    } else {
        throw DomainError("stack: no rule for " + polygon_name(xo, x_dual) + " with " + polygon_name(yo, y_dual));
    }
    // In all four cases: n + (x order) - 1 for (x), three less for o_l / o_r.
    if (mode == StackMode::tensor) return {result, yo + xo - 1};
    if (mode != composing) {
        throw DomainError("stack: " + stack_mode_name(mode) + " is not admissible for " + polygon_name(xo, x_dual) +
                          " with " + polygon_name(yo, y_dual));
    }
    return {result, yo + xo - 3};
}

template <Scalar S>
SolutionDescriptor<S> stack(const SolutionDescriptor<S>& x, const SolutionDescriptor<S>& y, StackMode mode,
                            const ConstructOptions& opt = {}) {
    auto sig = stack_signature(x.family, x.order, y.family, y.order, mode);
    if (opt.check_preconditions) {
        require_holds("x <-> y", check_commutes(x.tensor, y.tensor, opt.verify_options));
    }
    Tensor<S> r;
    switch (mode) {
        case StackMode::compose_left: r = compose_left(x.tensor, y.tensor); break;
        case StackMode::compose_right: r = compose_right(x.tensor, y.tensor); break;
        case StackMode::tensor: r = tensor_product(x.tensor, y.tensor); break;
    }
    auto out = make_descriptor(sig.family, sig.order, std::move(r),
                               detail::merge<S>(x.provenance, y.provenance, "stack " + stack_mode_name(mode)));
    ensure_solution(out, opt);
    return out;
}

// ---- towers from bialgebras ----

namespace detail {

template <Scalar S>
void require_commutative_bialgebra(const HopfInstance<S>& h, const VerifyOptions& vo, bool need_hopf) {
    auto ax = check_axioms(h, vo);
    if (!ax.bialgebra) throw DomainError(h.name + " is not a bialgebra");
    if (need_hopf && !ax.hopf) throw DomainError(h.name + " is not a Hopf algebra");
    if (!ax.commutative || !ax.cocommutative) throw DomainError(h.name + " is not commutative and cocommutative");
}

// maps[0] op[0] maps[1] op[1] ... folded from the left; ops[i] is true for o_r.
template <Scalar S>
Tensor<S> fold(const std::vector<const Tensor<S>*>& maps, const std::vector<bool>& right) {
    Tensor<S> acc = *maps[0];
    for (std::size_t i = 1; i < maps.size(); ++i) {
        acc = right[i - 1] ? compose_right(acc, *maps[i]) : compose_left(acc, *maps[i]);
    }
    return acc;
}

}  // namespace detail

// T^(n) = D o_r M o_l D o_r M ... with n-3 maps, T^(3) = id.  The dual
// tower S^(n) = M o_l D o_r M ... .
template <Scalar S>
SolutionDescriptor<S> bialgebra_tower(int n, const HopfInstance<S>& h, bool dual, const ConstructOptions& opt = {}) {
    if (n < 3) throw DomainError("bialgebra_tower: order must be at least 3");
    if (opt.check_preconditions) detail::require_commutative_bialgebra(h, opt.verify_options, false);
    Family f = dual ? Family::dual_polygon : Family::polygon;
    std::string word;
    Tensor<S> r;
    if (n == 3) {
        r = Tensor<S>::identity(h.dim, 1);
        word = "id";
    } else {
        std::vector<const Tensor<S>*> maps;
        std::vector<bool> right;
        for (int i = 0; i < n - 3; ++i) {
            bool copr = (i % 2 == 0) != dual;
            maps.push_back(copr ? &h.coproduct : &h.product);
            if (i > 0) right.push_back(dual ? i % 2 == 0 : i % 2 == 1);
            if (i > 0) word += right.back() ? " o_r " : " o_l ";
            word += copr ? "D" : "M";
        }
        r = detail::fold(maps, right);
    }
    auto out = make_descriptor(f, n, std::move(r),
                               {std::string(dual ? "dual " : "") + "tower over " + h.name + ": " + word});
    ensure_solution(out, opt);
    return out;
}

// The structure maps on H_1 (x) ... (x) H_m indexed by i: i = 0 is the
// componentwise bialgebra; for i >= 1 the product keeps x_1..x_i and
// y_{i+1}..y_m weighted by the counits of the rest, the coproduct splits x
// into (x_1..x_i, 1..1) (x) (1..1, x_{i+1}..x_m).
template <Scalar S>
Tensor<S> hat_product(const std::vector<HopfInstance<S>>& hs, int i) {
    std::vector<Tensor<S>> fs;
    for (std::size_t j = 0; j < hs.size(); ++j) {
        const auto& h = hs[j];
        auto id = Tensor<S>::identity(h.dim, 1);
        if (i == 0) {
            fs.push_back(h.product);
        } else if (static_cast<int>(j) < i) {
            fs.push_back(tensor_product(id, h.counit));
        } else {
            fs.push_back(tensor_product(h.counit, id));
        }
    }
    return detail::factorwise(fs);
}

template <Scalar S>
Tensor<S> hat_coproduct(const std::vector<HopfInstance<S>>& hs, int i) {
    std::vector<Tensor<S>> fs;
    for (std::size_t j = 0; j < hs.size(); ++j) {
        const auto& h = hs[j];
        auto id = Tensor<S>::identity(h.dim, 1);
        if (i == 0) {
            fs.push_back(h.coproduct);
        } else if (static_cast<int>(j) < i) {
            fs.push_back(tensor_product(id, h.unit));
        } else {
            fs.push_back(tensor_product(h.unit, id));
        }
    }
    return detail::factorwise(fs);
}

// T^(2k+1) = D_o o_r M_o o_l D_{o+1} o_r ... o_r M_{o+k-2}; the even
// variant T^(2k+2) appends o_l D_{o+k-1}.  o is the first structure index.
template <Scalar S>
SolutionDescriptor<S> multi_bialgebra_tower(int k, const std::vector<HopfInstance<S>>& hs, bool even, int offset = 0,
                                            const ConstructOptions& opt = {}) {
    if (k < 1) throw DomainError("multi_bialgebra_tower: k must be at least 1");
    if (hs.empty()) throw DomainError("multi_bialgebra_tower: no factors");
    if (offset < 0) throw DomainError("multi_bialgebra_tower: negative offset");
    int m = static_cast<int>(hs.size());
    int last = offset + k - (even ? 1 : 2);
    if (last > m - 1) {
        throw DomainError("multi_bialgebra_tower: needs structure index " + std::to_string(last) + " but only " +
                          std::to_string(m) + " factors are given");
    }
    if (opt.check_preconditions) {
        for (const auto& h : hs) {
            auto ax = check_axioms(h, opt.verify_options);
            if (!ax.bialgebra) throw DomainError(h.name + " is not a bialgebra");
        }
    }
    int order = even ? 2 * k + 2 : 2 * k + 1;
    int dim = 1;
    std::string names;
    for (const auto& h : hs) {
        dim *= h.dim;
        names += (names.empty() ? "" : " (x) ") + h.name;
    }
    std::vector<Tensor<S>> store;
    std::vector<bool> right;
    std::string word;
    for (int i = 0; i < k - 1; ++i) {
        store.push_back(hat_coproduct(hs, offset + i));
        store.push_back(hat_product(hs, offset + i));
        if (i > 0) {
            right.push_back(false);
            word += " o_l ";
        }
        right.push_back(true);
        word += "D" + std::to_string(offset + i) + " o_r M" + std::to_string(offset + i);
    }
    if (even) {
        store.push_back(hat_coproduct(hs, offset + k - 1));
        if (k > 1) {
            right.push_back(false);
            word += " o_l ";
        }
        word += "D" + std::to_string(offset + k - 1);
    }
    Tensor<S> r;
    if (store.empty()) {
        r = Tensor<S>::identity(dim, 1);
        word = "id";
    } else {
        std::vector<const Tensor<S>*> maps;
        for (const auto& t : store) maps.push_back(&t);
        r = detail::fold(maps, right);
    }
    auto out = make_descriptor(Family::polygon, order, std::move(r), {"multi tower over " + names + ": " + word});
    ensure_solution(out, opt);
    return out;
}

// ---- mixed pairs ----

// T(x (x) y) = x1 (x) x2 y and S(x (x) y) = x1 (x) y s^-1(x2).
template <Scalar S>
MixedPair<S> hopf_pentagon_pair(const HopfInstance<S>& h, const ConstructOptions& opt = {}) {
    if (!h.antipode) throw DomainError(h.name + " has no antipode");
    double tol = opt.verify_options.tolerance;
    if (!is_invertible(*h.antipode, tol)) throw DomainError("antipode of " + h.name + " is not invertible");
    if (opt.check_preconditions) {
        auto ax = check_axioms(h, opt.verify_options);
        if (!ax.hopf) throw DomainError(h.name + " is not a Hopf algebra");
    }
    int d = h.dim;
    auto id = Tensor<S>::identity(d, 1);
    Tensor<S> sinv = invert(*h.antipode, tol);
    Tensor<S> t = compose_right(h.coproduct, h.product);
    Tensor<S> s = compose(tensor_product(id, h.product),
                          compose(permutation_tensor<S>(LegPermutation({1, 3, 2}), d),
                                  compose(tensor_product(id, tensor_product(sinv, id)),
                                          tensor_product(h.coproduct, id))));
    MixedPair<S> out{make_descriptor(Family::polygon, 5, std::move(t), {"pentagon T over " + h.name}),
                     make_descriptor(Family::dual_polygon, 5, std::move(s), {"dual pentagon S over " + h.name})};
    ensure_mixed(out.t, out.s, opt);
    return out;
}

// k copies: T o_l ... o_l T and S o_r ... o_r S, a mixed pair of order 2k+3.
template <Scalar S>
MixedPair<S> higher_mixed_pair(int k, const Tensor<S>& t, const Tensor<S>& s, const ConstructOptions& opt = {}) {
    if (k < 1) throw DomainError("higher_mixed_pair: k must be at least 1");
    require_shape("higher_mixed_pair T", t.in_legs(), t.out_legs(), 2, 2);
    require_shape("higher_mixed_pair S", s.in_legs(), s.out_legs(), 2, 2);
    if (opt.check_preconditions) {
        auto rel = check_relations_1_6(t, s, opt.verify_options);
        int need = k > 1 ? 6 : 3;
        for (int i = 0; i < need; ++i) require_holds("relation " + rel.parts[i].equation, rel.parts[i]);
    }
    Tensor<S> tt = t, ss = s;
    for (int i = 1; i < k; ++i) {
        tt = compose_left(tt, t);
        ss = compose_right(ss, s);
    }
    std::string rep = std::to_string(k) + " copies";
    MixedPair<S> out{make_descriptor(Family::polygon, 2 * k + 3, std::move(tt), {"T o_l ... o_l T, " + rep}),
                     make_descriptor(Family::dual_polygon, 2 * k + 3, std::move(ss), {"S o_r ... o_r S, " + rep})};
    ensure_mixed(out.t, out.s, opt);
    return out;
}

// T^(2k+1) from the bialgebra tower; S^(2k+1) = D o_r M_S o_r D o_r ... o_r M_S
// with 2k-2 maps and M_S = M o (s (x) id).
template <Scalar S>
MixedPair<S> hopf_mixed_pair_MS(int k, const HopfInstance<S>& h, const ConstructOptions& opt = {}) {
    if (k < 1) throw DomainError("hopf_mixed_pair_MS: k must be at least 1");
    if (!h.antipode) throw DomainError(h.name + " has no antipode");
    if (opt.check_preconditions) detail::require_commutative_bialgebra(h, opt.verify_options, true);
    int d = h.dim;
    Tensor<S> ms = compose(h.product, tensor_product(*h.antipode, Tensor<S>::identity(d, 1)));
    auto build_s = [&](int kk) {
        if (kk == 1) return Tensor<S>::identity(d, 1);
        Tensor<S> acc = h.coproduct;
        for (int i = 1; i < 2 * kk - 2; ++i) acc = compose_right(acc, i % 2 ? ms : h.coproduct);
        return acc;
    };
    ConstructOptions inner = opt;
    inner.verify = false;
    inner.check_preconditions = false;
    if (opt.check_preconditions && k > 1) {
        auto t5 = bialgebra_tower(5, h, false, inner);
        auto rel = check_relations_1_6(t5.tensor, build_s(2), opt.verify_options);
        require_holds("relations (1)-(6) for the pentagon pair", rel);
    }
    auto t = bialgebra_tower(2 * k + 1, h, false, inner);
    std::string word = k == 1 ? "id" : "D o_r M_S o_r ... (" + std::to_string(2 * k - 2) + " maps)";
    MixedPair<S> out{t, make_descriptor(Family::dual_polygon, 2 * k + 1, build_s(k),
                                        {"dual tower over " + h.name + ": " + word})};
    ensure_mixed(out.t, out.s, opt);
    return out;
}

// ---- simplex solutions from mixed pairs ----

enum class Drop { one, two, two_right };

// sigma_12 sigma_34 ... T_{2,4,..} S_{1,3,..} for a mixed pair of order n.
template <Scalar S>
Tensor<S> simplex_R(const Tensor<S>& t, const Tensor<S>& s, int n) {
    if (n < 3) throw DomainError("simplex_R: order must be at least 3");
    auto ts = polygon_map_shape(n, false), ss = polygon_map_shape(n, true);
    require_shape("simplex_R T", t.in_legs(), t.out_legs(), ts.in_legs, ts.out_legs);
    require_shape("simplex_R S", s.in_legs(), s.out_legs(), ss.in_legs, ss.out_legs);
    int d = t.dim(), k = n / 2;
    if (n % 2) {
        int legs = 2 * k;
        auto odd = detail::stepped(1, k), even = detail::stepped(2, k);
        Tensor<S> r = compose(place(t, even, even, legs), place(s, odd, odd, legs));
        return compose(permutation_tensor<S>(detail::pair_swaps(legs, k), d), r);
    }
    int legs = 2 * k - 1;
    Tensor<S> sp = place(s, detail::stepped(1, k), detail::stepped(1, k - 1), legs);
    MultiIndex ta = detail::stepped(2, k - 1), tb = ta;
    tb.push_back(2 * k - 1);
    Tensor<S> tp = place(t, ta, tb, legs - 1);
    return compose(permutation_tensor<S>(detail::pair_swaps(legs, k - 1), d), compose(tp, sp));
}

template <Scalar S>
SolutionDescriptor<S> simplex_from_mixed(const MixedPair<S>& p, Drop drop, const ConstructOptions& opt = {}) {
    const auto &t = p.t, &s = p.s;
    if (t.family != Family::polygon || s.family != Family::dual_polygon || t.order != s.order) {
        throw DomainError("simplex_from_mixed needs a polygon solution and a dual solution of the same order");
    }
    int n = t.order;
    if (opt.check_preconditions) {
        require_holds("mixed relation of the input pair", check_mixed(t.tensor, s.tensor, n, opt.verify_options));
    }
    Tensor<S> r = simplex_R(t.tensor, s.tensor, n);
    auto prov = detail::merge<S>(t.provenance, s.provenance, "R^(" + std::to_string(n - 1) + ")");
    int order = n - 1;
    if (drop != Drop::one) {
        r = partial_trace(r, drop == Drop::two);
        prov.push_back(drop == Drop::two ? "tr_l" : "tr_r");
        --order;
    }
    auto out = make_descriptor(Family::simplex, order, std::move(r), std::move(prov));
    ensure_solution(out, opt);
    return out;
}

enum class YangBaxterMode { compose, four_factor };

// S o T, or S_14 T_13 S_24 T_23 on (V (x) V) (x) (V (x) V) as a map on two
// legs of dimension d^2.
template <Scalar S>
SolutionDescriptor<S> yang_baxter_from_pair(const Tensor<S>& t, const Tensor<S>& s, YangBaxterMode mode,
                                            const ConstructOptions& opt = {}) {
    require_shape("Yang-Baxter T", t.in_legs(), t.out_legs(), 2, 2);
    require_shape("Yang-Baxter S", s.in_legs(), s.out_legs(), 2, 2);
    if (t.dim() != s.dim()) throw ShapeError("Yang-Baxter: T and S have different dimensions");
    if (mode == YangBaxterMode::compose) {
        auto out = make_descriptor(Family::simplex, 2, compose(s, t), {"S o T"});
        ensure_solution(out, opt);
        return out;
    }
    auto at = [](const Tensor<S>& f, MultiIndex a) { return place(f, a, a, 4); };
    Tensor<S> r = compose(at(s, {1, 4}), compose(at(t, {1, 3}), compose(at(s, {2, 4}), at(t, {2, 3}))));
    int d = t.dim();
    // Leg pairs regroup without changing any code.
    std::vector<typename Tensor<S>::Entry> es(r.entries().begin(), r.entries().end());
    auto out = make_descriptor(Family::simplex, 2, Tensor<S>::from_entries(d * d, 2, 2, std::move(es)),
                               {"S_14 T_13 S_24 T_23"});
    ensure_solution(out, opt);
    return out;
}

}  // namespace pgon
