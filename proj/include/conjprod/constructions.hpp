#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "builtin_tables.hpp"
#include "classes.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "numeric.hpp"

namespace conjprod {

/// A group together with the element of interest in it.
struct FamilyInstance {
    Group group;
    Element distinguished;
    std::string family;
    std::vector<std::uint64_t> params;
    /// Named elements usable as literals (catalog and Heisenberg groups).
    std::map<std::string, Element> names;

    /// e.g. "tower:3:2"
    std::string label() const {
        std::string s = family;
        for (auto v : params) s += ":" + std::to_string(v);
        return s;
    }
};

inline void require_prime(std::uint64_t p) {
    if (!numeric::is_prime(p)) throw SpecError(std::to_string(p) + " is not prime");
}

/// Extraspecial group of order p^3 and exponent p, with distinguished element x = (1,0,0).
inline FamilyInstance heisenberg(std::uint64_t p, const Limits& limits = {}) {
    if (p == 2) throw SpecError("no extraspecial group of order 8 has exponent 2");
    require_prime(p);
    FamilyInstance f{build_group(GroupSpec::heisenberg(p)), Element::table(p * p), "heis", {p}, {}};
    for (const auto& x : enumerate_elements(f.group, limits)) {
        Element y = x;
        for (std::uint64_t k = 1; k < p; ++k) y = f.group.multiply(y, x);
        if (y != f.group.identity()) throw ClaimViolation("element " + f.group.format(x) + " has order above p");
    }
    f.names = {{"e", Element::table(0)}, {"x", Element::table(p * p)}, {"y", Element::table(p)}, {"z", Element::table(1)}};
    return f;
}

/// C_{p^2} wr C_p with a = (c, e, ..., e).
inline FamilyInstance remark_b_group(std::uint64_t p) {
    require_prime(p);
    std::vector<Element> f(p, Element::residue(0));
    f[0] = Element::residue(1);
    return {build_group(GroupSpec::wreath(GroupSpec::cyclic(p * p), p)), Element::wreath(std::move(f), Element::residue(0)),
            "remarkb", {p}, {}};
}

/**
 * G0 wr C_p with a = (g0, e, ..., e).
 *
 * Requires G0 to be a p-group with Cl(g0) != Cl(g0^-1); checks afterwards
 * that |Cl(a)| = p|Cl(g0)| and Cl(a) != Cl(a^-1).
 */
inline FamilyInstance wreath_construction(const FamilyInstance& base, std::uint64_t p, const Limits& limits = {}) {
    require_prime(p);
    const auto& g0 = base.group;
    const auto q = g0.prime();
    if (!q || *q != p)
        throw PreconditionError("base group " + base.label() + " of order " + g0.order().to_string() + " is not a " +
                                std::to_string(p) + "-group");
    const auto cls0 = conjugacy_class(g0, base.distinguished, limits);
    const auto inv0 = g0.invert(base.distinguished);
    if (cls0.contains(inv0))
        throw PreconditionError("Cl(g0) = Cl(g0^-1) for g0 = " + g0.format(base.distinguished) + ": inverse " +
                                g0.format(inv0) + " lies in the class");

    std::vector<Element> f(p, g0.identity());
    f[0] = base.distinguished;
    FamilyInstance out{build_group(GroupSpec::wreath(g0.spec(), p)),
                       Element::wreath(std::move(f), Element::residue(0)),
                       "wreath(" + base.label() + "," + std::to_string(p) + ")",
                       {},
                       {}};

    const auto cls = conjugacy_class(out.group, out.distinguished, limits);
    if (cls.size() != p * cls0.size())
        throw ClaimViolation("|Cl(a)| = " + std::to_string(cls.size()) + ", expected p|Cl(g0)| = " +
                             std::to_string(p * cls0.size()));
    if (cls.contains(out.group.invert(out.distinguished))) throw ClaimViolation("Cl(a) = Cl(a^-1) after wreathing");
    return out;
}

/// Iterated wreath products: (C_{p^2}, c) wreathed n times with C_p.
inline FamilyInstance tower(std::uint64_t p, std::uint64_t n, const Limits& limits = {}) {
    require_prime(p);
    FamilyInstance f{build_group(GroupSpec::cyclic(p * p)), Element::residue(1), "tower", {p, 0}, {}};
    for (std::uint64_t k = 1; k <= n; ++k) {
        f = wreath_construction(f, p, limits);
        f.family = "tower";
        f.params = {p, k};
    }
    return f;
}

/// C_p wr Aff(F_p) over the natural action on F_p, a = c at point 0.
inline FamilyInstance supersolvable_example(std::uint64_t p) {
    require_prime(p);
    std::vector<Element> f(p, Element::residue(0));
    f[0] = Element::residue(1 % p);
    auto spec = GroupSpec::wreath_over_set(GroupSpec::cyclic(p), GroupSpec::affine(p), p, WreathAction::AffineNatural);
    return {build_group(spec), Element::wreath(std::move(f), Element::affine(1, 0)), "super", {p}, {}};
}

inline FamilyInstance catalog_instance(const std::string& name) {
    const auto& t = catalog_table(name);
    FamilyInstance f{build_group(GroupSpec::catalog(name)), Element::table(t.element_names.at(t.distinguished)),
                     "catalog:" + name, {}, {}};
    f.names["e"] = Element::table(0);
    for (const auto& [k, v] : t.element_names) f.names[k] = Element::table(v);
    return f;
}

/// Small groups used as the sweep corpus, each with a named distinguished element.
inline std::vector<FamilyInstance> catalog() {
    std::vector<FamilyInstance> out;
    for (const auto& t : catalog_tables()) out.push_back(catalog_instance(t.name));
    return out;
}

}  // namespace conjprod
