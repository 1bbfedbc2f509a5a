#pragma once

#include <string>
#include <vector>

#include "pgon/tensor.hpp"

namespace pgon {

// Total function X^k -> X^l on X = {0..base-1}.  The table is indexed by
// the row-major code of the input tuple.
class FiniteMap {
public:
    FiniteMap() = default;
    FiniteMap(int base, int in, int out, std::vector<Digits> table)
        : base_(base), in_(in), out_(out), table_(std::move(table)) {
        if (base < 1) throw ShapeError("finite map: base must be positive");
        if (in < 0 || out < 0) throw ShapeError("finite map: arities must be non-negative");
        if (table_.size() != Basis{base, in}.size()) {
            throw ShapeError("finite map: table has " + std::to_string(table_.size()) + " rows, need " +
                             std::to_string(Basis{base, in}.size()));
        }
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != out) throw ShapeError("finite map: output arity mismatch");
            for (int v : row) {
                if (v < 0 || v >= base) throw ShapeError("finite map: output outside X");
            }
        }
    }

    static FiniteMap from_function(int base, int in, int out, const std::function<Digits(const Digits&)>& f) {
        Basis b{base, in};
        std::vector<Digits> t;
        for (std::uint64_t c = 0; c < b.size(); ++c) t.push_back(f(b.decode(c)));
        return FiniteMap(base, in, out, std::move(t));
    }

    static FiniteMap identity(int base, int legs) {
        return from_function(base, legs, legs, [](const Digits& x) { return x; });
    }

    int base() const { return base_; }
    int in_arity() const { return in_; }
    int out_arity() const { return out_; }
    const std::vector<Digits>& table() const { return table_; }

    const Digits& operator()(const Digits& x) const { return table_[Basis{base_, in_}.encode(x)]; }

    // g after f.
    friend FiniteMap then(const FiniteMap& f, const FiniteMap& g) {
        if (f.base_ != g.base_ || f.out_ != g.in_) throw ShapeError("finite map composition: shapes differ");
        std::vector<Digits> t;
        for (const auto& y : f.table_) t.push_back(g(y));
        return FiniteMap(f.base_, f.in_, g.out_, std::move(t));
    }

    friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

private:
    int base_ = 1;
    int in_ = 0;
    int out_ = 0;
    std::vector<Digits> table_{{}};
};

// 0/1 tensor with entry 1 at (f(x), x).
template <Scalar S>
Tensor<S> settheoretic_lift(const FiniteMap& f) {
    return Tensor<S>::from_function(f.base(), f.in_arity(), f.out_arity(), [&](const Digits& x) { return f(x); });
}

}  // namespace pgon
