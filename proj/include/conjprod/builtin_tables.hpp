#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "table.hpp"

namespace conjprod {

/// Builds a row-major table of order n from an index-level multiplication.
inline std::vector<std::uint32_t> tabulate(std::size_t n,
                                           const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul) {
    std::vector<std::uint32_t> entries(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) entries[i * n + j] = mul(i, j);
    return entries;
}

/**
 * Upper unitriangular 3x3 matrices over F_p.
 *
 * The matrix [[1,a,c],[0,1,b],[0,0,1]] is stored at index a*p^2 + b*p + c, so
 * the identity is index 0, x = (1,0,0), y = (0,1,0) and z = (0,0,1) spans the center.
 * (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
 */
inline std::shared_ptr<const CayleyTable> heisenberg_table(std::uint64_t p) {
    if (!numeric::is_prime(p) || p == 2)
        throw SpecError("Heisenberg group needs an odd prime, got " + std::to_string(p));
    const std::uint64_t n = p * p * p;
    auto unpack = [p](std::uint32_t i) {
        return std::array<std::uint64_t, 3>{i / (p * p), (i / p) % p, i % p};
    };
    auto entries = tabulate(n, [&](std::uint32_t i, std::uint32_t j) {
        auto [a, b, c] = unpack(i);
        auto [a2, b2, c2] = unpack(j);
        const std::uint64_t ra = (a + a2) % p;
        const std::uint64_t rb = (b + b2) % p;
        const std::uint64_t rc = (c + c2 + a * b2) % p;
        return static_cast<std::uint32_t>(ra * p * p + rb * p + rc);
    });
    return check_cayley_table(n, std::move(entries), n > kFullAssociativityLimit);
}

/// A catalog group: validated table plus named elements.
struct CatalogTable {
    std::string name;
    std::string description;
    std::shared_ptr<const CayleyTable> table;
    std::map<std::string, std::uint32_t> element_names;
    std::string distinguished;
};

namespace detail {

// (i, j) <-> i + m*j for groups of the form C_m ⋊ C_k with y x y^-1 = x^r.
inline std::shared_ptr<const CayleyTable> metacyclic_table(std::uint32_t m, std::uint32_t k, std::uint32_t r) {
    std::vector<std::uint32_t> rpow(k, 1);
    for (std::uint32_t j = 1; j < k; ++j) rpow[j] = rpow[j - 1] * r % m;
    return check_cayley_table(m * k, tabulate(m * k, [=](std::uint32_t a, std::uint32_t b) {
                                  const std::uint32_t i1 = a % m, j1 = a / m, i2 = b % m, j2 = b / m;
                                  const std::uint32_t i = (i1 + rpow[j1] * i2) % m;
                                  const std::uint32_t j = (j1 + j2) % k;
                                  return i + m * j;
                              }));
}

inline std::shared_ptr<const CayleyTable> quaternion_table() {
    // Units 1,i,j,k; entry is (unit, sign) of the product of two units.
    static constexpr int unit_product[4][4][2] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},  // i*i=-1, i*j=k, i*k=-j
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},  // j*i=-k, j*j=-1, j*k=i
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},  // k*i=j, k*j=-i, k*k=-1
    };
    return check_cayley_table(8, tabulate(8, [](std::uint32_t a, std::uint32_t b) {
                                  const auto& r = unit_product[a / 2][b / 2];
                                  const std::uint32_t sign = (r[1] + a % 2 + b % 2) % 2;
                                  return static_cast<std::uint32_t>(2 * r[0]) + sign;
                              }));
}

inline std::vector<CatalogTable> make_catalog() {
    std::vector<CatalogTable> out;
    out.push_back({"Q8", "quaternion group of order 8, index 2*unit+sign over units 1,i,j,k",
                   quaternion_table(),
                   {{"neg1", 1}, {"i", 2}, {"-i", 3}, {"j", 4}, {"-j", 5}, {"k", 6}, {"-k", 7}},
                   "i"});
    out.push_back({"D4", "dihedral group of order 8, <r,s | r^4, s^2, srs=r^-1>, index i+4j for r^i s^j",
                   metacyclic_table(4, 2, 3),
                   {{"r", 1}, {"s", 4}},
                   "r"});
    out.push_back({"C4", "cyclic group of order 4", metacyclic_table(4, 1, 1), {{"c", 1}}, "c"});
    out.push_back({"C2xC2", "Klein four group, index i+2j for a^i b^j", metacyclic_table(2, 2, 1),
                   {{"a", 1}, {"b", 2}}, "a"});
    out.push_back({"C9", "cyclic group of order 9", metacyclic_table(9, 1, 1), {{"c", 1}}, "c"});
    out.push_back({"M16", "modular group of order 16, <x,y | x^8, y^2, yxy^-1=x^5>, index i+8j",
                   metacyclic_table(8, 2, 5),
                   {{"x", 1}, {"y", 8}},
                   "x"});
    out.push_back({"C9sdC3", "C9 semidirect C3, <x,y | x^9, y^3, yxy^-1=x^4>, index i+9j",
                   metacyclic_table(9, 3, 4),
                   {{"x", 1}, {"y", 9}},
                   "y"});
    out.push_back({"Heis3", "upper unitriangular 3x3 matrices over F_3, index 9a+3b+c",
                   heisenberg_table(3),
                   {{"x", 9}, {"y", 3}, {"z", 1}},
                   "x"});
    return out;
}

}  // namespace detail

inline const std::vector<CatalogTable>& catalog_tables() {
    static const std::vector<CatalogTable> tables = detail::make_catalog();
    return tables;
}

inline const CatalogTable& catalog_table(std::string_view name) {
    for (const auto& t : catalog_tables())
        if (t.name == name) return t;
    throw SpecError("unknown catalog group '" + std::string(name) + "'");
}

}  // namespace conjprod
