#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pgon/index_calculus.hpp"
#include "pgon/placement.hpp"
#include "pgon/tensor.hpp"

namespace pgon {

// Reverse lexicographic order on vertex tuples: a comes first when it is
// lexicographically larger.  Every generator orders labels through this.
inline bool revlex_before(const Face& a, const Face& b) { return b < a; }

inline void sort_revlex(std::vector<Face>& fs) { std::sort(fs.begin(), fs.end(), revlex_before); }

inline Face boundary(const Face& p, int m) {
    if (m < 0 || m >= static_cast<int>(p.size())) throw DomainError("boundary: face index out of range");
    Face r;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        if (i != m) r.push_back(p[i]);
    }
    return r;
}

inline std::vector<Face> faces_of(const Face& p) {
    std::vector<Face> r;
    for (int m = 0; m < static_cast<int>(p.size()); ++m) r.push_back(boundary(p, m));
    return r;
}

inline Face standard_simplex(int n) {
    Face v(n + 1);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

inline std::string face_string(const Face& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0 && (f[i] >= 10 || f[i - 1] >= 10)) s += ',';
        s += std::to_string(f[i]);
    }
    return s;
}

struct Step {
    MapTag tag = MapTag::T;
    Face face;
    std::vector<Face> inputs;
    std::vector<Face> outputs;
};

// Steps in the order they are applied.
struct ContractionProgram {
    std::vector<Step> steps;
    std::vector<Face> free_inputs;
    std::vector<Face> free_outputs;

    // Each step consumes live labels and produces labels that are not live;
    // what remains live at the end is exactly free_outputs.
    void validate() const {
        std::set<Face> live(free_inputs.begin(), free_inputs.end());
        if (live.size() != free_inputs.size()) throw DomainError("program: repeated free input label");
        for (const auto& s : steps) {
            for (const auto& f : s.inputs) {
                if (!live.erase(f)) throw DomainError("program: dangling label " + face_string(f));
            }
            for (const auto& f : s.outputs) {
                if (!live.insert(f).second) throw DomainError("program: label " + face_string(f) + " produced twice");
            }
        }
        std::set<Face> outs(free_outputs.begin(), free_outputs.end());
        if (outs != live || outs.size() != free_outputs.size()) {
            throw DomainError("program: free outputs do not match the wiring");
        }
    }
};

struct ProgramPair {
    std::string name;
    ContractionProgram lhs;
    ContractionProgram rhs;
};

// Even and odd vertices of the simplex on {0..n+1}.
inline std::pair<std::vector<int>, std::vector<int>> pachner_split(int n) {
    if (n < 1) throw DomainError("pachner_split: n must be at least 1");
    std::vector<int> evens, odds;
    for (int v = 0; v <= n + 1; ++v) (v % 2 ? odds : evens).push_back(v);
    return {evens, odds};
}

namespace detail {

// T(p) reads the odd-position faces of p and writes the even-position ones;
// S(p) does the opposite.
inline Step face_map(MapTag tag, const Face& p, bool reversed) {
    Step s{tag, p, {}, {}};
    auto fs = faces_of(p);
    for (std::size_t m = 0; m < fs.size(); ++m) (m % 2 ? s.inputs : s.outputs).push_back(fs[m]);
    if (reversed) std::swap(s.inputs, s.outputs);
    return s;
}

// Labels consumed before being produced, in reverse-lex order.
inline std::vector<Face> consumed_first(const std::vector<Step>& steps) {
    std::set<Face> produced, seen;
    std::vector<Face> r;
    for (const auto& s : steps) {
        for (const auto& f : s.inputs) {
            if (!produced.count(f) && seen.insert(f).second) r.push_back(f);
        }
        for (const auto& f : s.outputs) produced.insert(f);
    }
    sort_revlex(r);
    return r;
}

inline std::vector<Face> live_at_end(const std::vector<Face>& inputs, const std::vector<Step>& steps) {
    std::set<Face> live(inputs.begin(), inputs.end());
    for (const auto& s : steps) {
        for (const auto& f : s.inputs) live.erase(f);
        for (const auto& f : s.outputs) live.insert(f);
    }
    std::vector<Face> r(live.begin(), live.end());
    sort_revlex(r);
    return r;
}

inline ContractionProgram make_program(std::vector<Step> steps) {
    ContractionProgram p;
    p.free_inputs = consumed_first(steps);
    p.free_outputs = live_at_end(p.free_inputs, steps);
    p.steps = std::move(steps);
    return p;
}

}  // namespace detail

struct FlatProgram {
    std::vector<Placement> factors;  // written order, last applied first
    std::vector<Face> inputs;
    std::vector<Face> outputs;
    int in_legs = 0;
    int out_legs = 0;

    // Factors that are maps, ignoring leg permutations.
    std::size_t map_count() const {
        return static_cast<std::size_t>(std::count_if(factors.begin(), factors.end(),
                                                      [](const Placement& p) { return p.tag != MapTag::P; }));
    }
};

namespace detail {

inline FlatProgram flatten_raw(const ContractionProgram& prog, std::vector<Face>* natural_end) {
    prog.validate();
    std::vector<Face> wires = prog.free_inputs;
    std::vector<Placement> applied;
    auto position = [&](const Face& f) {
        auto it = std::find(wires.begin(), wires.end(), f);
        if (it == wires.end()) throw DomainError("flatten: dangling label " + face_string(f));
        return static_cast<int>(it - wires.begin()) + 1;
    };
    for (const auto& s : prog.steps) {
        int k = static_cast<int>(s.inputs.size()), l = static_cast<int>(s.outputs.size());
        MultiIndex a;
        for (const auto& f : s.inputs) a.push_back(position(f));
        MultiIndex slots = a;
        std::sort(slots.begin(), slots.end());
        if (slots != a) {
            // Bring the inputs into increasing leg order before the map reads them.
            std::vector<int> img(wires.size());
            std::iota(img.begin(), img.end(), 1);
            for (int j = 0; j < k; ++j) img[a[j] - 1] = slots[j];
            LegPermutation pi(img);
            std::vector<Face> moved(wires.size());
            for (std::size_t p = 0; p < wires.size(); ++p) moved[pi(static_cast<int>(p) + 1) - 1] = wires[p];
            wires = std::move(moved);
            applied.push_back(Placement::permutation(std::move(pi)));
            a = slots;
        }
        MultiIndex b;
        if (l == k) {
            b = a;
        } else if (l == k + 1) {
            b = a;
            b.push_back(k == 0 ? 1 : a.back() + 1);
        } else if (l + 1 == k) {
            b.assign(a.begin(), a.end() - 1);
        } else {
            throw DomainError("flatten: step changes the leg count by more than one");
        }
        std::vector<Face> rest;
        for (std::size_t p = 0; p < wires.size(); ++p) {
            if (!std::binary_search(a.begin(), a.end(), static_cast<int>(p) + 1)) rest.push_back(wires[p]);
        }
        std::vector<std::optional<Face>> next(wires.size() - k + l);
        for (int j = 0; j < l; ++j) next[b[j] - 1] = s.outputs[j];
        auto it = rest.begin();
        wires.clear();
        for (auto& slot : next) wires.push_back(slot ? *slot : *it++);
        applied.push_back(Placement{s.tag, a, b, std::nullopt, s.face});
    }
    if (natural_end) *natural_end = wires;
    if (wires != prog.free_outputs) {
        std::vector<int> img(wires.size());
        for (std::size_t p = 0; p < wires.size(); ++p) {
            auto it = std::find(prog.free_outputs.begin(), prog.free_outputs.end(), wires[p]);
            if (it == prog.free_outputs.end()) throw DomainError("flatten: free outputs do not match the wiring");
            img[p] = static_cast<int>(it - prog.free_outputs.begin()) + 1;
        }
        applied.push_back(Placement::permutation(LegPermutation(img)));
    }
    FlatProgram fp;
    fp.factors.assign(applied.rbegin(), applied.rend());
    fp.inputs = prog.free_inputs;
    fp.outputs = prog.free_outputs;
    fp.in_legs = static_cast<int>(fp.inputs.size());
    fp.out_legs = static_cast<int>(fp.outputs.size());
    return fp;
}

}  // namespace detail

// Positions are assigned to labels stage by stage starting from the free
// inputs; a map's outputs take over the slots of its inputs.
inline FlatProgram flatten(const ContractionProgram& prog) { return detail::flatten_raw(prog, nullptr); }

template <Scalar S>
class SolutionFamily {
public:
    SolutionFamily() = default;

    static SolutionFamily constant(Tensor<S> t) {
        SolutionFamily f;
        f.constant_ = std::move(t);
        return f;
    }

    void set(const Face& face, Tensor<S> t) { by_face_[face] = std::move(t); }

    bool contains(const Face& face) const { return constant_ || by_face_.count(face); }

    const Tensor<S>& at(const Face& face) const {
        auto it = by_face_.find(face);
        if (it != by_face_.end()) return it->second;
        if (constant_) return *constant_;
        throw DomainError("family has no map for face " + face_string(face));
    }

    bool is_constant() const { return constant_.has_value() && by_face_.empty(); }
    const std::map<Face, Tensor<S>>& assigned() const { return by_face_; }

private:
    std::optional<Tensor<S>> constant_;
    std::map<Face, Tensor<S>> by_face_;
};

// Both sides of the (dual) n-gon equation on the simplex with vertices 0..n-1.
inline ProgramPair compile_polygon(int n, bool dual) {
    if (n < 3) throw DomainError("compile_polygon: n must be at least 3, got " + std::to_string(n));
    auto [evens, odds] = pachner_split(n - 2);
    Face all = standard_simplex(n - 1);
    MapTag tag = dual ? MapTag::S : MapTag::T;
    auto map_at = [&](int v) { return detail::face_map(tag, boundary(all, v), dual); };
    std::vector<Step> left, right;
    if (!dual) {
        for (auto it = evens.rbegin(); it != evens.rend(); ++it) left.push_back(map_at(*it));
        for (int v : odds) right.push_back(map_at(v));
    } else {
        for (int v : evens) left.push_back(map_at(v));
        for (auto it = odds.rbegin(); it != odds.rend(); ++it) right.push_back(map_at(*it));
    }
    ProgramPair pp{polygon_name(n, dual), detail::make_program(std::move(left)),
                   detail::make_program(std::move(right))};
    pp.lhs.validate();
    pp.rhs.validate();
    return pp;
}

// R(d_i) acts on the faces d_{j,i} of the simplex with vertices 0..n.
inline ProgramPair compile_simplex(int n) {
    if (n < 1) throw DomainError("compile_simplex: n must be at least 1, got " + std::to_string(n));
    Face all = standard_simplex(n);
    auto map_at = [&](int v) {
        Face p = boundary(all, v);
        auto fs = faces_of(p);
        return Step{MapTag::R, p, fs, fs};
    };
    std::vector<Step> left, right;
    for (int v = n; v >= 0; --v) left.push_back(map_at(v));
    for (int v = 0; v <= n; ++v) right.push_back(map_at(v));
    ProgramPair pp{std::to_string(n) + "-simplex", detail::make_program(std::move(left)),
                   detail::make_program(std::move(right))};
    pp.lhs.validate();
    pp.rhs.validate();
    return pp;
}

// Mixed relation of the n-gon on the simplex with vertices 0..n-1.  The
// left side puts T on even and S on odd vertices and is applied from
// vertex 0 up; the right side puts S on even vertices and is applied from
// the top vertex down.  swap_roles exchanges the two assignments.
inline ProgramPair compile_mixed(int n, bool swap_roles = false) {
    if (n < 3) throw DomainError("compile_mixed: n must be at least 3, got " + std::to_string(n));
    Face all = standard_simplex(n - 1);
    std::vector<Step> left, right;
    for (int v = 0; v < n; ++v) {
        Face p = boundary(all, v);
        bool even = v % 2 == 0;
        bool t_left = even != swap_roles;
        left.push_back(detail::face_map(t_left ? MapTag::T : MapTag::S, p, !t_left));
        right.push_back(detail::face_map(t_left ? MapTag::S : MapTag::T, p, t_left));
    }
    // The side carrying T on even vertices runs upward.
    auto& downward = swap_roles ? left : right;
    std::reverse(downward.begin(), downward.end());
    ProgramPair pp{"mixed " + std::to_string(n) + "-gon", detail::make_program(std::move(left)),
                   detail::make_program(std::move(right))};
    if (pp.lhs.free_inputs != pp.rhs.free_inputs) throw DomainError("mixed relation: sides have different inputs");
    std::vector<Face> natural;
    detail::flatten_raw(pp.lhs, &natural);
    pp.lhs.free_outputs = natural;
    pp.rhs.free_outputs = natural;
    pp.lhs.validate();
    pp.rhs.validate();
    return pp;
}

struct FlatEquation {
    FlatProgram lhs;
    FlatProgram rhs;

    Equation equation(const std::string& name) const {
        return Equation{name, lhs.in_legs, lhs.out_legs, lhs.factors, rhs.factors};
    }
};

inline FlatEquation flatten(const ProgramPair& pp) { return {flatten(pp.lhs), flatten(pp.rhs)}; }

template <Scalar S>
using FaceResolver = std::function<const Tensor<S>&(MapTag, const Face&)>;

template <Scalar S>
Tensor<S> evaluate(const FlatProgram& fp, int dim, const FaceResolver<S>& resolve) {
    return evaluate_side<S>(fp.factors, fp.in_legs, dim,
                            [&](const Placement& p) -> const Tensor<S>& { return resolve(p.tag, p.face); });
}

// R(p) = sigma o (S(p) (x) T(p)) o tau, for every facet p
// of the simplex with vertices 0..m.  T(p) reads the odd faces of p, S(p)
// the even ones.
template <Scalar S>
SolutionFamily<S> compile_nonconstant_R(int m, const SolutionFamily<S>& t_family, const SolutionFamily<S>& s_family) {
    if (m < 2) throw DomainError("compile_nonconstant_R: order must be at least 2");
    int n_odd = m / 2, n_even = m - n_odd;
    std::vector<int> tau(m), sigma(m);
    for (int f = 0; f < m; ++f) tau[f] = f % 2 == 0 ? f / 2 + 1 : n_even + (f - 1) / 2 + 1;
    for (int r = 0; r < m; ++r) sigma[r] = r < n_odd ? 2 * r + 2 : 2 * (r - n_odd) + 1;
    LegPermutation tp(tau), sp(sigma);
    Face all = standard_simplex(m);
    SolutionFamily<S> out;
    for (int i = 0; i <= m; ++i) {
        Face p = boundary(all, i);
        const Tensor<S>& t = t_family.at(p);
        const Tensor<S>& s = s_family.at(p);
        if (t.in_legs() != n_odd || t.out_legs() != n_even) {
            throw ShapeError("T(" + face_string(p) + ") must map V^" + std::to_string(n_odd) + " -> V^" +
                             std::to_string(n_even) + ", got " + t.shape_string());
        }
        if (s.in_legs() != n_even || s.out_legs() != n_odd) {
            throw ShapeError("S(" + face_string(p) + ") must map V^" + std::to_string(n_even) + " -> V^" +
                             std::to_string(n_odd) + ", got " + s.shape_string());
        }
        out.set(p, permute_legs(tensor_product(s, t), sp, tp));
    }
    return out;
}

// Q(q) = tr_l R(q') with q' = [0, q_0+1, q_1+1, ...], for every facet q of
// the simplex with vertices 0..n.  The traced leg is the face d_0 q'.
template <Scalar S>
SolutionFamily<S> compile_Q(int n, const SolutionFamily<S>& r_family) {
    if (n < 2) throw DomainError("compile_Q: order must be at least 2");
    Face all = standard_simplex(n);
    SolutionFamily<S> out;
    for (int i = 0; i <= n; ++i) {
        Face q = boundary(all, i);
        Face qp{0};
        for (int v : q) qp.push_back(v + 1);
        if (!r_family.contains(qp)) throw DomainError("compile_Q: missing R(" + face_string(qp) + ")");
        const Tensor<S>& r = r_family.at(qp);
        if (r.in_legs() != n + 1 || r.out_legs() != n + 1) {
            throw ShapeError("compile_Q: R(" + face_string(qp) + ") must have " + std::to_string(n + 1) + " legs");
        }
        out.set(q, trace_left(r));
    }
    return out;
}

// Graphviz rendering of both sides of a program pair.
inline std::string to_dot(const ProgramPair& pp) {
    std::ostringstream os;
    os << "digraph wiring {\n  rankdir=BT;\n  label=\"" << pp.name << "\";\n";
    auto side = [&](const ContractionProgram& p, const std::string& id) {
        os << "  subgraph cluster_" << id << " {\n    label=\"" << id << "\";\n";
        std::map<Face, std::string> source;
        for (const auto& f : p.free_inputs) {
            std::string node = id + "_in_" + face_string(f);
            os << "    \"" << node << "\" [shape=point];\n";
            source[f] = node;
        }
        for (std::size_t s = 0; s < p.steps.size(); ++s) {
            const auto& st = p.steps[s];
            std::string node = id + "_" + std::to_string(s);
            os << "    \"" << node << "\" [shape=box,label=\"" << tag_char(st.tag) << "(" << face_string(st.face)
               << ")\"];\n";
            for (const auto& f : st.inputs) {
                os << "    \"" << source.at(f) << "\" -> \"" << node << "\" [label=\"" << face_string(f) << "\"];\n";
            }
            for (const auto& f : st.outputs) source[f] = node;
        }
        for (const auto& f : p.free_outputs) {
            std::string node = id + "_out_" + face_string(f);
            os << "    \"" << node << "\" [shape=point];\n";
            os << "    \"" << source.at(f) << "\" -> \"" << node << "\" [label=\"" << face_string(f) << "\"];\n";
        }
        os << "  }\n";
    };
    side(pp.lhs, "lhs");
    side(pp.rhs, "rhs");
    os << "}\n";
    return os.str();
}

}  // namespace pgon
