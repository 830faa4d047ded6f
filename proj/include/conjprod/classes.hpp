#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "limits.hpp"
#include "numeric.hpp"

namespace conjprod {

struct ConjugacyClass {
    Element rep;                    // least member
    std::vector<Element> elements;  // sorted
    std::size_t size() const noexcept { return elements.size(); }

    bool contains(const Element& x) const { return std::binary_search(elements.begin(), elements.end(), x); }

    friend bool operator==(const ConjugacyClass& a, const ConjugacyClass& b) { return a.rep == b.rep; }
};

/// Partition of a G-invariant set into conjugacy classes; eta is the class count.
struct InvariantSetDecomposition {
    std::vector<ConjugacyClass> classes;  // sorted by rep
    std::size_t total_size = 0;
    std::size_t eta() const noexcept { return classes.size(); }
};

/**
 * Orbit of a under conjugation, by breadth-first closure over the generators.
 * Never enumerates G, so it works for groups of astronomical order.
 */
inline ConjugacyClass conjugacy_class(const Group& g, const Element& a, const Limits& limits = {}) {
    if (!g.contains(a)) throw ShapeError("element " + g.format(a) + " is not in canonical form for this group");
    std::vector<Element> gens(g.generators().begin(), g.generators().end());
    std::vector<Element> gen_inv;
    gen_inv.reserve(gens.size());
    for (const auto& s : gens) gen_inv.push_back(g.invert(s));

    std::unordered_set<Element, ElementHash> seen{a};
    std::vector<Element> orbit{a};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            auto y = g.multiply(g.multiply(gens[k], orbit[i]), gen_inv[k]);
            if (seen.insert(y).second) {
                orbit.push_back(std::move(y));
                if (orbit.size() > limits.orbit)
                    throw ResourceError("conjugacy orbit exceeds the cap of " + std::to_string(limits.orbit));
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjugacyClass cls;
    cls.rep = orbit.front();
    cls.elements = std::move(orbit);
    return cls;
}

/// The product set AB = {xy}, deduplicated and sorted.
inline std::vector<Element> class_product(const Group& g, const ConjugacyClass& a, const ConjugacyClass& b,
                                          const Limits& limits = {}) {
    const auto pairs = static_cast<unsigned __int128>(a.size()) * b.size();
    if (pairs > limits.product_pairs)
        throw ResourceError("class product needs " + std::to_string(static_cast<std::uint64_t>(pairs)) +
                            " pairs, cap is " + std::to_string(limits.product_pairs));
    std::unordered_set<Element, ElementHash> seen;
    std::vector<Element> out;
    for (const auto& x : a.elements)
        for (const auto& y : b.elements) {
            auto xy = g.multiply(x, y);
            if (seen.insert(xy).second) out.push_back(std::move(xy));
        }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Splits a G-invariant set into its conjugacy classes.
 *
 * Invariance is checked first (closure under conjugation by every generator);
 * NotInvariant names a witness otherwise.
 */
inline InvariantSetDecomposition decompose(const Group& g, std::vector<Element> x, const Limits& limits = {}) {
    if (x.empty()) throw PreconditionError("decompose needs a nonempty set");
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    for (const auto& y : x)
        if (!g.contains(y)) throw ShapeError("element " + g.format(y) + " is not in canonical form for this group");
    const std::unordered_set<Element, ElementHash> members(x.begin(), x.end());

    for (const auto& s : g.generators()) {
        const auto s_inv = g.invert(s);
        for (const auto& y : x) {
            auto image = g.multiply(g.multiply(s, y), s_inv);
            if (!members.count(image))
                throw NotInvariant("set is not invariant: conjugating " + g.format(y) + " by " + g.format(s) +
                                   " gives " + g.format(image) + " outside the set");
        }
    }

    InvariantSetDecomposition out;
    out.total_size = x.size();
    std::unordered_set<Element, ElementHash> assigned;
    for (const auto& y : x) {
        if (assigned.count(y)) continue;
        auto cls = conjugacy_class(g, y, limits);
        for (const auto& e : cls.elements) assigned.insert(e);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

/// Result of analysing Cl(a)Cl(a^-1).
struct ClassSquare {
    ConjugacyClass cls;
    ConjugacyClass inverse_cls;
    std::vector<Element> product;
    InvariantSetDecomposition decomposition;
    std::size_t class_size = 0;
    /// log_p |Cl(a)| when G is a p-group.
    std::optional<std::uint64_t> n;
    std::size_t eta = 0;
};

inline ClassSquare eta_of_class_square(const Group& g, const Element& a, const Limits& limits = {}) {
    ClassSquare out;
    out.cls = conjugacy_class(g, a, limits);
    out.inverse_cls = conjugacy_class(g, g.invert(a), limits);
    out.product = class_product(g, out.cls, out.inverse_cls, limits);
    out.decomposition = decompose(g, out.product, limits);
    out.class_size = out.cls.size();
    out.eta = out.decomposition.eta();
    if (auto p = g.prime()) out.n = numeric::log_exact(out.class_size, *p);
    return out;
}

/// Whether a^-1 lies in Cl(a).
inline bool class_equals_inverse(const Group& g, const Element& a, const Limits& limits = {}) {
    return conjugacy_class(g, a, limits).contains(g.invert(a));
}

/// Every conjugacy class of an enumerable group, sorted by representative.
inline std::vector<ConjugacyClass> all_classes(const Group& g, const Limits& limits = {}) {
    std::vector<ConjugacyClass> out;
    std::unordered_set<Element, ElementHash> assigned;
    for (const auto& x : enumerate_elements(g, limits)) {
        if (assigned.count(x)) continue;
        auto cls = conjugacy_class(g, x, limits);
        for (const auto& e : cls.elements) assigned.insert(e);
        out.push_back(std::move(cls));
    }
    return out;
}

/// Cl(a)Cl(a^-1) = Z for a central subgroup Z of order p.
struct SizePCaseI {
    std::vector<Element> z;
    std::size_t eta = 0;
};

/// Cl(a)Cl(a^-1) = {e} plus p-1 classes of size p.
struct SizePCaseII {
    InvariantSetDecomposition classes;
    std::size_t eta = 0;
};

using SizePClassification = std::variant<SizePCaseI, SizePCaseII>;

/**
 * Classifies a class of size p in a p-group by the shape of Cl(a)Cl(a^-1).
 *
 * Case I when the product contains a nonidentity central element (checked
 * first, so it wins if both descriptions could apply); case II otherwise.
 * The structural consequences of each case are verified and a violation
 * raises ClaimViolation.
 */
inline SizePClassification classify_size_p_class(const Group& g, const Element& a, const Limits& limits = {}) {
    const auto p = g.prime();
    if (!p) throw PreconditionError("group of order " + g.order().to_string() + " is not a p-group");
    const auto sq = eta_of_class_square(g, a, limits);
    if (sq.class_size != *p)
        throw PreconditionError("class of " + g.format(a) + " has size " + std::to_string(sq.class_size) +
                                ", expected " + std::to_string(*p));

    auto is_central = [&](const Element& x) {
        return std::all_of(g.generators().begin(), g.generators().end(),
                           [&](const Element& s) { return g.multiply(x, s) == g.multiply(s, x); });
    };

    std::optional<Element> z;
    for (const auto& x : sq.product)
        if (x != g.identity() && is_central(x)) {
            z = x;
            break;
        }

    if (z) {
        std::vector<Element> sub{g.identity()};
        for (Element y = *z; y != g.identity(); y = g.multiply(y, *z)) sub.push_back(y);
        std::sort(sub.begin(), sub.end());
        if (sub.size() != *p) throw ClaimViolation("<z> has order " + std::to_string(sub.size()) + ", expected p");
        if (sub != sq.product) throw ClaimViolation("Cl(a)Cl(a^-1) differs from <z> for z = " + g.format(*z));
        if (sq.eta != *p) throw ClaimViolation("case I with eta " + std::to_string(sq.eta));
        return SizePCaseI{std::move(sub), sq.eta};
    }

    const auto& cls = sq.decomposition.classes;
    const bool shape_ok = !cls.empty() && cls.front().rep == g.identity() && cls.front().size() == 1 &&
                          cls.size() == *p &&
                          std::all_of(cls.begin() + 1, cls.end(), [&](const ConjugacyClass& c) { return c.size() == *p; });
    if (!shape_ok) throw ClaimViolation("case II decomposition is not {e} plus p-1 classes of size p");
    return SizePCaseII{sq.decomposition, sq.eta};
}

}  // namespace conjprod
