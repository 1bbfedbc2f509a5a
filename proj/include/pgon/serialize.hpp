#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgon/constructors.hpp"
#include "pgon/finite_map.hpp"
#include "pgon/hopf.hpp"
#include "pgon/tensor.hpp"
#include "pgon/verifier.hpp"

namespace pgon {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ShapeError("'" + path + "' is not valid JSON: " + e.what());
    }
}

namespace detail {

inline const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ShapeError(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

inline int int_field(const json& j, const char* key, const char* what) {
    const json& v = field(j, key, what);
    if (!v.is_number_integer()) throw ShapeError(std::string(what) + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

inline Digits digits_of(const json& j, const char* what) {
    if (!j.is_array()) throw ShapeError(std::string(what) + ": expected an array of basis digits");
    Digits d;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ShapeError(std::string(what) + ": basis digits must be integers");
        d.push_back(v.get<int>());
    }
    return d;
}

}  // namespace detail

// Scalar ring named by a tensor document; rational when absent.
inline ScalarContext scalar_context_of(const json& j) {
    if (j.is_object() && j.contains("scalar")) {
        if (!j["scalar"].is_string()) throw ShapeError("tensor: 'scalar' must be a string");
        return ScalarContext::parse(j["scalar"].get<std::string>());
    }
    return {};
}

template <Scalar S>
json tensor_to_json(const Tensor<S>& t, const ScalarContext& ctx) {
    json j;
    j["dim"] = t.dim();
    j["in_legs"] = t.in_legs();
    j["out_legs"] = t.out_legs();
    j["scalar"] = ctx.tag();
    json es = json::array();
    Basis ob = t.out_basis(), ib = t.in_basis();
    for (const auto& e : t.entries()) {
        es.push_back(json::array({ob.decode(e.out), ib.decode(e.in), scalar_traits<S>::to_string(e.value)}));
    }
    j["entries"] = std::move(es);
    return j;
}

template <Scalar S>
json tensor_to_json(const Tensor<S>& t) {
    S sample = t.nnz() ? t.entries().front().value : one<S>();
    return tensor_to_json(t, context_of(sample));
}

// Entries may repeat a position; values add up.
template <Scalar S>
Tensor<S> tensor_from_json(const json& j, const ScalarContext& ctx) {
    const char* what = "tensor";
    int dim = detail::int_field(j, "dim", what);
    int in = detail::int_field(j, "in_legs", what);
    int out = detail::int_field(j, "out_legs", what);
    const json& es = detail::field(j, "entries", what);
    if (!es.is_array()) throw ShapeError("tensor: 'entries' must be an array");
    std::vector<std::tuple<Digits, Digits, S>> rows;
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 3) throw ShapeError("tensor: each entry is [[out], [in], value]");
        Digits o = detail::digits_of(e[0], what), i = detail::digits_of(e[1], what);
        if (static_cast<int>(o.size()) != out || static_cast<int>(i.size()) != in) {
            throw ShapeError("tensor: entry digit count does not match in_legs/out_legs");
        }
        for (int v : o) {
            if (v < 0 || v >= dim) throw ShapeError("tensor: output digit out of range");
        }
        for (int v : i) {
            if (v < 0 || v >= dim) throw ShapeError("tensor: input digit out of range");
        }
        std::string lit;
        if (e[2].is_string()) {
            lit = e[2].get<std::string>();
        } else if (e[2].is_number_integer()) {
            lit = std::to_string(e[2].get<long long>());
        } else if (e[2].is_number()) {
            if (ctx.kind != ScalarContext::Kind::f64) throw ShapeError("tensor: float literal in an exact ring");
            lit = scalar_traits<double>::to_string(e[2].get<double>());
        } else {
            throw ShapeError("tensor: entry value must be a string or number");
        }
        rows.emplace_back(std::move(o), std::move(i), scalar_traits<S>::parse(lit, ctx));
    }
    return Tensor<S>::from_digits(dim, in, out, rows);
}

inline CayleyTable group_from_json(const json& j) {
    const char* what = "group";
    CayleyTable g;
    g.order = detail::int_field(j, "order", what);
    const json& t = detail::field(j, "table", what);
    if (!t.is_array()) throw ShapeError("group: 'table' must be an array of rows");
    for (const auto& row : t) g.table.push_back(detail::digits_of(row, what));
    g.validate();
    return g;
}

inline json group_to_json(const CayleyTable& g) { return {{"order", g.order}, {"table", g.table}}; }

inline std::string tuple_key(const Digits& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s;
}

// "table" is either an object keyed by comma-joined inputs ("0,1") or an
// array of output tuples in row-major input order.
inline FiniteMap finite_map_from_json(const json& j) {
    const char* what = "finite map";
    int base = detail::int_field(j, "base", what);
    int in = detail::int_field(j, "in", what);
    int out = detail::int_field(j, "out", what);
    if (base < 1 || in < 0 || out < 0) throw ShapeError("finite map: bad base or arity");
    Basis b{base, in};
    const json& t = detail::field(j, "table", what);
    std::vector<Digits> rows;
    if (t.is_array()) {
        for (const auto& r : t) rows.push_back(detail::digits_of(r, what));
    } else if (t.is_object()) {
        rows.resize(b.size());
        std::vector<char> seen(b.size(), 0);
        for (auto it = t.begin(); it != t.end(); ++it) {
            Digits x;
            std::stringstream ss(it.key());
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    x.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw ShapeError("finite map: bad key '" + it.key() + "'");
                }
            }
            if (static_cast<int>(x.size()) != in) throw ShapeError("finite map: key '" + it.key() + "' has wrong arity");
            for (int v : x) {
                if (v < 0 || v >= base) throw ShapeError("finite map: key '" + it.key() + "' outside X");
            }
            auto c = b.encode(x);
            if (seen[c]) throw ShapeError("finite map: duplicate key '" + it.key() + "'");
            seen[c] = 1;
            rows[c] = detail::digits_of(it.value(), what);
        }
        for (std::uint64_t c = 0; c < b.size(); ++c) {
            if (!seen[c]) throw ShapeError("finite map: no value for input " + tuple_key(b.decode(c)));
        }
    } else {
        throw ShapeError("finite map: 'table' must be an object or an array");
    }
    return FiniteMap(base, in, out, std::move(rows));
}

inline json finite_map_to_json(const FiniteMap& f) {
    json t = json::object();
    Basis b{f.base(), f.in_arity()};
    for (std::uint64_t c = 0; c < b.size(); ++c) t[tuple_key(b.decode(c))] = f.table()[c];
    return {{"base", f.base()}, {"in", f.in_arity()}, {"out", f.out_arity()}, {"table", std::move(t)}};
}

inline json report_to_json(const VerificationReport& r) {
    json j;
    j["equation"] = r.equation;
    j["holds"] = r.holds;
    j["max_deviation"] = r.max_deviation;
    auto dims = [](const ShapeRecord& s) { return json{{"dim", s.dim}, {"in_legs", s.in_legs}, {"out_legs", s.out_legs}}; };
    j["lhs_dims"] = dims(r.lhs_dims);
    j["rhs_dims"] = dims(r.rhs_dims);
    if (r.witness) {
        j["witness"] = {{"out", r.witness->out}, {"in", r.witness->in}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    } else {
        j["witness"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.parts.empty()) {
        j["parts"] = json::array();
        for (const auto& p : r.parts) j["parts"].push_back(report_to_json(p));
    }
    return j;
}

template <Scalar S>
json descriptor_to_json(const SolutionDescriptor<S>& d, const ScalarContext& ctx) {
    return {{"family", family_name(d.family)},
            {"order", d.order},
            {"tensor", tensor_to_json(d.tensor, ctx)},
            {"provenance", d.provenance}};
}

template <Scalar S>
SolutionDescriptor<S> descriptor_from_json(const json& j, const ScalarContext& ctx) {
    const json& fam = detail::field(j, "family", "descriptor");
    if (!fam.is_string()) throw ShapeError("descriptor: 'family' must be a string");
    std::vector<std::string> prov;
    if (j.contains("provenance")) prov = j["provenance"].get<std::vector<std::string>>();
    return make_descriptor(parse_family(fam.get<std::string>()), detail::int_field(j, "order", "descriptor"),
                           tensor_from_json<S>(detail::field(j, "tensor", "descriptor"), ctx), std::move(prov));
}

inline json equation_to_json(const Equation& eq) {
    json l = json::array(), r = json::array();
    for (const auto& p : eq.lhs) l.push_back(render_placement(p));
    for (const auto& p : eq.rhs) r.push_back(render_placement(p));
    return {{"name", eq.name}, {"in_legs", eq.in_legs}, {"out_legs", eq.out_legs},
            {"text", eq.render()}, {"lhs", std::move(l)}, {"rhs", std::move(r)}};
}

// Dense matrix as nested arrays of literals, rows by output code.
template <Scalar S>
json dense_to_json(const Tensor<S>& t) {
    json rows = json::array();
    for (const auto& row : to_dense(t)) {
        json r = json::array();
        for (const auto& v : row) r.push_back(scalar_traits<S>::to_string(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace pgon
