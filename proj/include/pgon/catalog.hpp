#pragma once

#include <string>
#include <vector>

#include "pgon/index_calculus.hpp"
#include "pgon/serialize.hpp"
#include "pgon/simplicial.hpp"

namespace pgon {

inline constexpr int kCatalogMax = 12;

// Polygon and dual equations for orders 3..max_n, the mixed relation for
// the same orders (even ones from the compiled programs), and simplex
// equations of orders 1..max_n-3.
inline std::vector<Equation> catalog_equations(int max_n) {
    if (max_n < 3 || max_n > kCatalogMax) {
        throw ConfigError("catalog order must be between 3 and " + std::to_string(kCatalogMax));
    }
    std::vector<Equation> eqs;
    for (int n = 3; n <= max_n; ++n) eqs.push_back(polygon_equation(n, false));
    for (int n = 3; n <= max_n; ++n) eqs.push_back(polygon_equation(n, true));
    for (int n = 1; n <= max_n - 3; ++n) eqs.push_back(simplex_equation(n));
    for (int n = 3; n <= max_n; ++n) {
        if (n % 2) {
            eqs.push_back(mixed_equation(n));
        } else {
            eqs.push_back(flatten(compile_mixed(n)).equation("mixed " + std::to_string(n) + "-gon"));
        }
    }
    return eqs;
}

inline std::string emit_catalog(int max_n, bool as_json = false) {
    auto eqs = catalog_equations(max_n);
    if (as_json) {
        json j = json::array();
        for (const auto& e : eqs) j.push_back(equation_to_json(e));
        return j.dump(2) + "\n";
    }
    std::string s;
    for (const auto& e : eqs) s += e.name + ": " + e.render() + "\n";
    return s;
}

}  // namespace pgon
