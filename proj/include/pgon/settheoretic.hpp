#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pgon/finite_map.hpp"
#include "pgon/index_calculus.hpp"
#include "pgon/placement.hpp"
#include "pgon/verifier.hpp"

namespace pgon {

inline std::string tuple_string(const Digits& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

using SetResolver = std::function<const FiniteMap&(const Placement&)>;

inline Digits apply_placement_set(const Placement& p, const Digits& x, const FiniteMap* f) {
    if (p.tag == MapTag::P) {
        Digits y(x.size());
        for (int i = 0; i < p.perm->size(); ++i) y[(*p.perm)(i + 1) - 1] = x[i];
        return y;
    }
    Digits in, rest;
    for (int pos = 1, r = 0; pos <= static_cast<int>(x.size()); ++pos) {
        if (r < static_cast<int>(p.a.size()) && p.a[r] == pos) {
            in.push_back(x[pos - 1]);
            ++r;
        } else {
            rest.push_back(x[pos - 1]);
        }
    }
    const Digits& out = (*f)(in);
    int m = static_cast<int>(rest.size() + out.size());
    Digits y;
    y.reserve(m);
    for (int pos = 1, r = 0, q = 0; pos <= m; ++pos) {
        if (r < static_cast<int>(p.b.size()) && p.b[r] == pos) {
            y.push_back(out[r++]);
        } else {
            y.push_back(rest[q++]);
        }
    }
    return y;
}

// Rightmost factor first.
inline Digits apply_side_set(const std::vector<Placement>& side, Digits x, const SetResolver& resolve) {
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
        const FiniteMap* f = it->tag == MapTag::P ? nullptr : &resolve(*it);
        if (f && (f->in_arity() != static_cast<int>(it->a.size()) || f->out_arity() != static_cast<int>(it->b.size()))) {
            throw ShapeError("set map does not fit placement " + render_placement(*it));
        }
        x = apply_placement_set(*it, x, f);
    }
    return x;
}

// Pointwise comparison on all of X^(in_legs).  The witness records the
// first differing input tuple and both outputs.
inline VerificationReport check_equation_set(const Equation& eq, int base, const SetResolver& resolve) {
    VerificationReport r;
    r.equation = eq.name + ": " + eq.render();
    r.lhs_dims = {base, eq.in_legs, eq.out_legs};
    r.rhs_dims = r.lhs_dims;
    Basis b{base, eq.in_legs};
    for (std::uint64_t c = 0; c < b.size(); ++c) {
        Digits x = b.decode(c);
        Digits l = apply_side_set(eq.lhs, x, resolve), rr = apply_side_set(eq.rhs, x, resolve);
        if (l != rr) {
            r.holds = false;
            r.max_deviation = 1;
            r.witness = Witness{l, x, tuple_string(l), tuple_string(rr)};
            return r;
        }
    }
    return r;
}

inline VerificationReport check_polygon_set(const FiniteMap& f, int n, bool dual) {
    auto ms = polygon_map_shape(n, dual);
    require_shape(polygon_name(n, dual) + " equation", f.in_arity(), f.out_arity(), ms.in_legs, ms.out_legs);
    return check_equation_set(polygon_equation(n, dual), f.base(), [&](const Placement&) -> const FiniteMap& { return f; });
}

// ---- the six constructions of one order higher ----

struct LiftResult {
    std::string name;
    FiniteMap map;
    int order = 0;                     // of the constructed polygon map
    std::optional<bool> fixed_point;   // checked condition of the u-variants
    bool is_solution = false;
    VerificationReport report;
};

namespace detail {

inline void require_source(const FiniteMap& f, int n, bool dual, bool verify_source) {
    auto ms = polygon_map_shape(n, dual);
    require_shape(polygon_name(n, dual) + " source", f.in_arity(), f.out_arity(), ms.in_legs, ms.out_legs);
    if (!verify_source) return;
    auto r = check_polygon_set(f, n, dual);
    if (!r.holds) throw VerificationError(failure_text("source " + polygon_name(n, dual) + " check", r));
}

inline bool fixes_diagonal(const FiniteMap& f, int u) {
    const Digits& y = f(Digits(f.in_arity(), u));
    return std::all_of(y.begin(), y.end(), [u](int v) { return v == u; });
}

inline void check_point(const FiniteMap& f, int u) {
    if (u < 0 || u >= f.base()) throw DomainError("u = " + std::to_string(u) + " is not an element of X");
}

inline LiftResult finish(std::string name, FiniteMap m, int order) {
    LiftResult r{std::move(name), std::move(m), order, std::nullopt, false, {}};
    r.report = check_polygon_set(r.map, order, false);
    r.is_solution = r.report.holds;
    return r;
}

// (head, f(a)) or (f(a), tail) with head/tail either a fixed element or a copied input.
inline FiniteMap prepend(const FiniteMap& f, std::optional<int> u) {
    return FiniteMap::from_function(f.base(), f.in_arity(), f.out_arity() + 1, [&](const Digits& a) {
        Digits y{u ? *u : a[0]};
        const Digits& s = f(a);
        y.insert(y.end(), s.begin(), s.end());
        return y;
    });
}

inline FiniteMap append(const FiniteMap& f, std::optional<int> u) {
    return FiniteMap::from_function(f.base(), f.in_arity(), f.out_arity() + 1, [&](const Digits& a) {
        Digits y = f(a);
        y.push_back(u ? *u : a.back());
        return y;
    });
}

}  // namespace detail

// S a solution of the dual 2k-gon equation: (a_1, S(a)) for the (2k+1)-gon.
inline LiftResult conjecture_7_32(const FiniteMap& s, bool verify_source = true) {
    int k = s.in_arity();
    if (k < 2) throw DomainError("conjecture_7_32 needs S: X^k -> X^(k-1) with k >= 2");
    detail::require_source(s, 2 * k, true, verify_source);
    return detail::finish("conjecture_7_32", detail::prepend(s, std::nullopt), 2 * k + 1);
}

// (u, S(a)); a solution iff S(u..u) = (u..u).
inline LiftResult conjecture_7_33(const FiniteMap& s, int u, bool verify_source = true) {
    int k = s.in_arity();
    if (k < 2) throw DomainError("conjecture_7_33 needs S: X^k -> X^(k-1) with k >= 2");
    detail::check_point(s, u);
    detail::require_source(s, 2 * k, true, verify_source);
    auto r = detail::finish("conjecture_7_33", detail::prepend(s, u), 2 * k + 1);
    r.fixed_point = detail::fixes_diagonal(s, u);
    return r;
}

// T a solution of the (2k+1)-gon equation: (T(a), a_k) for the (2k+2)-gon.
inline LiftResult conjecture_7_34(const FiniteMap& t, bool verify_source = true) {
    int k = t.in_arity();
    if (k < 1) throw DomainError("conjecture_7_34 needs T: X^k -> X^k with k >= 1");
    detail::require_source(t, 2 * k + 1, false, verify_source);
    return detail::finish("conjecture_7_34", detail::append(t, std::nullopt), 2 * k + 2);
}

// (T(a), u); a solution iff T(u..u) = (u..u).
inline LiftResult conjecture_7_35(const FiniteMap& t, int u, bool verify_source = true) {
    int k = t.in_arity();
    if (k < 1) throw DomainError("conjecture_7_35 needs T: X^k -> X^k with k >= 1");
    detail::check_point(t, u);
    detail::require_source(t, 2 * k + 1, false, verify_source);
    auto r = detail::finish("conjecture_7_35", detail::append(t, u), 2 * k + 2);
    r.fixed_point = detail::fixes_diagonal(t, u);
    return r;
}

// S a solution of the dual (2k+1)-gon equation: (a_1, S(a)) for the (2k+2)-gon.
inline LiftResult conjecture_7_36(const FiniteMap& s, bool verify_source = true) {
    int k = s.in_arity();
    if (k < 1) throw DomainError("conjecture_7_36 needs S: X^k -> X^k with k >= 1");
    detail::require_source(s, 2 * k + 1, true, verify_source);
    return detail::finish("conjecture_7_36", detail::prepend(s, std::nullopt), 2 * k + 2);
}

// (u, S(a)); a solution iff S(u..u) = (u..u).
inline LiftResult conjecture_7_37(const FiniteMap& s, int u, bool verify_source = true) {
    int k = s.in_arity();
    if (k < 1) throw DomainError("conjecture_7_37 needs S: X^k -> X^k with k >= 1");
    detail::check_point(s, u);
    detail::require_source(s, 2 * k + 1, true, verify_source);
    auto r = detail::finish("conjecture_7_37", detail::prepend(s, u), 2 * k + 2);
    r.fixed_point = detail::fixes_diagonal(s, u);
    return r;
}

// ---- brute-force enumeration ----

inline constexpr std::uint64_t kEnumerationCap = 387420489;  // 9^9

struct EnumerationResult {
    int n = 0;
    bool dual = false;
    int base = 0;
    std::uint64_t candidates = 0;
    std::vector<FiniteMap> solutions;  // lexicographic table order
};

namespace detail {

// The equation compiled to integer operations on digit arrays.
struct FastSide {
    struct Op {
        std::vector<int> a, b, rest_in, rest_out;
        int width_out;
    };
    std::vector<Op> ops;
};

inline FastSide compile_side(const std::vector<Placement>& side, int width) {
    FastSide fs;
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
        FastSide::Op op;
        for (int v : it->a) op.a.push_back(v - 1);
        for (int v : it->b) op.b.push_back(v - 1);
        int m = width - static_cast<int>(it->a.size()) + static_cast<int>(it->b.size());
        for (int p = 0; p < width; ++p) {
            if (std::find(op.a.begin(), op.a.end(), p) == op.a.end()) op.rest_in.push_back(p);
        }
        for (int p = 0; p < m; ++p) {
            if (std::find(op.b.begin(), op.b.end(), p) == op.b.end()) op.rest_out.push_back(p);
        }
        op.width_out = m;
        fs.ops.push_back(std::move(op));
        width = m;
    }
    return fs;
}

inline void run_side(const FastSide& fs, const std::vector<int>& table, int base, int out_arity, std::vector<int>& x,
                     std::vector<int>& tmp) {
    for (const auto& op : fs.ops) {
        int code = 0;
        for (int p : op.a) code = code * base + x[p];
        int y = table[code];
        tmp.assign(op.width_out, 0);
        for (int r = out_arity - 1; r >= 0; --r) {
            tmp[op.b[r]] = y % base;
            y /= base;
        }
        for (std::size_t q = 0; q < op.rest_in.size(); ++q) tmp[op.rest_out[q]] = x[op.rest_in[q]];
        x.swap(tmp);
    }
}

}  // namespace detail

// All maps X^k -> X^l (shape of the (dual) n-gon) solving the equation.
// threads = 0 uses the hardware concurrency.
inline EnumerationResult enumerate_solutions(int n, bool dual, int base, unsigned threads = 0) {
    if (base < 1) throw ConfigError("enumeration: |X| must be positive");
    if (base > 3) throw ConfigError("enumeration is capped at |X| <= 3");
    auto ms = polygon_map_shape(n, dual);
    std::uint64_t inputs = Basis{base, ms.in_legs}.size(), outputs = Basis{base, ms.out_legs}.size();
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < inputs; ++i) {
        total *= outputs;
        if (total > kEnumerationCap) {
            throw ConfigError("enumeration: " + polygon_name(n, dual) + " over |X| = " + std::to_string(base) +
                              " exceeds the search cap of 9^9 candidates");
        }
    }
    Equation eq = polygon_equation(n, dual);
    auto lhs = detail::compile_side(eq.lhs, eq.in_legs), rhs = detail::compile_side(eq.rhs, eq.in_legs);
    Basis xb{base, eq.in_legs};
    std::vector<Digits> points;
    for (std::uint64_t c = 0; c < xb.size(); ++c) points.push_back(xb.decode(c));

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
    std::vector<std::vector<std::vector<int>>> found(threads);
    auto work = [&](unsigned w) {
        std::uint64_t from = total * w / threads, to = total * (w + 1) / threads;
        std::vector<int> table(inputs), x, y, tmp;
        for (std::uint64_t c = from; c < to; ++c) {
            std::uint64_t v = c;
            for (std::uint64_t i = inputs; i-- > 0;) {
                table[i] = static_cast<int>(v % outputs);
                v /= outputs;
            }
            bool ok = true;
            for (const auto& p : points) {
                x = p;
                y = p;
                detail::run_side(lhs, table, base, ms.out_legs, x, tmp);
                detail::run_side(rhs, table, base, ms.out_legs, y, tmp);
                if (x != y) {
                    ok = false;
                    break;
                }
            }
            if (ok) found[w].push_back(table);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();

    EnumerationResult res{n, dual, base, total, {}};
    Basis ob{base, ms.out_legs};
    for (const auto& part : found) {
        for (const auto& table : part) {
            std::vector<Digits> rows;
            for (int code : table) rows.push_back(ob.decode(static_cast<std::uint64_t>(code)));
            res.solutions.emplace_back(base, ms.in_legs, ms.out_legs, std::move(rows));
        }
    }
    return res;
}

}  // namespace pgon
