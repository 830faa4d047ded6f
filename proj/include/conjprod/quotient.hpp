#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "numeric.hpp"

namespace conjprod {

/// Projection G -> G/N onto the table-backed quotient.
class Projection {
public:
    Projection() = default;
    explicit Projection(std::shared_ptr<const std::unordered_map<Element, std::uint32_t, ElementHash>> index)
        : index_(std::move(index)) {}

    Element operator()(const Element& x) const {
        auto it = index_->find(x);
        if (it == index_->end()) throw ShapeError("element is not in the source group of the projection");
        return Element::table(it->second);
    }

private:
    std::shared_ptr<const std::unordered_map<Element, std::uint32_t, ElementHash>> index_;
};

struct Quotient {
    Group group;
    Projection project;
    std::uint64_t p = 0;
    /// N = <z>, in increasing order.
    std::vector<Element> kernel;
};

/**
 * G/<z> for a central z of prime order.
 *
 * Cosets are numbered in the order of their least element, so the identity
 * coset is index 0. The projection is spot-checked as a homomorphism.
 */
inline Quotient quotient_by_central(const Group& g, const Element& z, const Limits& limits = {}) {
    require_enumerable(g, limits);
    if (!g.contains(z)) throw ShapeError("z is not an element of the group");
    for (const auto& gen : g.generators())
        if (g.multiply(z, gen) != g.multiply(gen, z))
            throw PreconditionError("z = " + g.format(z) + " is not central");
    const std::uint64_t p = element_order(g, z, limits.enumeration);
    if (!numeric::is_prime(p))
        throw PreconditionError("z = " + g.format(z) + " has order " + std::to_string(p) + ", not a prime");

    std::vector<Element> kernel{g.identity()};
    for (std::uint64_t k = 1; k < p; ++k) kernel.push_back(g.multiply(kernel.back(), z));
    std::sort(kernel.begin(), kernel.end());

    const auto elems = enumerate_elements(g, limits);
    auto index = std::make_shared<std::unordered_map<Element, std::uint32_t, ElementHash>>();
    index->reserve(elems.size());
    std::vector<Element> reps;
    for (const auto& x : elems) {
        if (index->count(x)) continue;
        const auto coset = static_cast<std::uint32_t>(reps.size());
        reps.push_back(x);
        for (const auto& n : kernel) index->emplace(g.multiply(x, n), coset);
    }

    const std::size_t m = reps.size();
    std::vector<std::uint32_t> entries(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) entries[i * m + j] = index->at(g.multiply(reps[i], reps[j]));
    Group q = validate_table(m, std::move(entries), /*trusted=*/m > kFullAssociativityLimit);

    Projection proj(index);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < 64; ++trial) {
        const auto& x = elems[pick(rng)];
        const auto& y = elems[pick(rng)];
        if (proj(g.multiply(x, y)) != q.multiply(proj(x), proj(y)))
            throw ClaimViolation("projection fails to be a homomorphism at (" + g.format(x) + ", " + g.format(y) + ")");
    }
    return Quotient{std::move(q), std::move(proj), p, std::move(kernel)};
}

}  // namespace conjprod
