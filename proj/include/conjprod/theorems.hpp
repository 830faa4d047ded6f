#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "classes.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "quotient.hpp"

namespace conjprod {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Outcome of checking one claim: parameters, expected relation values, measured values.
struct TheoremReport {
    std::string claim_id;
    KeyValues params;
    KeyValues expected;
    KeyValues computed;
    bool pass = false;
    /// Set when the claim is an inequality: whether equality was reached.
    std::optional<bool> tight;
    std::vector<std::string> witnesses;

    template <typename T>
    static void put(KeyValues& kv, std::string key, const T& value) {
        if constexpr (std::is_convertible_v<T, std::string>)
            kv.emplace_back(std::move(key), std::string(value));
        else if constexpr (std::is_same_v<T, bool>)
            kv.emplace_back(std::move(key), value ? "true" : "false");
        else
            kv.emplace_back(std::move(key), std::to_string(value));
    }
};

namespace detail {

inline std::string join_sizes(const InvariantSetDecomposition& d) {
    std::string s;
    for (const auto& c : d.classes) s += (s.empty() ? "" : ",") + std::to_string(c.size());
    return s;
}

inline std::string describe_decomposition(const Group& g, const InvariantSetDecomposition& d) {
    std::string s = "classes:";
    for (const auto& c : d.classes) s += " " + g.format(c.rep) + "[" + std::to_string(c.size()) + "]";
    return s;
}

inline std::uint64_t require_p_group(const Group& g) {
    const auto p = g.prime();
    if (!p) throw PreconditionError("group of order " + g.order().to_string() + " is not a p-group");
    return *p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Class-square lower bound for p-groups.

inline TheoremReport verify_theorem_a(const Group& g, const Element& a, const Limits& limits = {}) {
    const auto p = detail::require_p_group(g);
    const auto sq = eta_of_class_square(g, a, limits);
    TheoremReport r;
    r.claim_id = "TheoremA";
    TheoremReport::put(r.params, "p", p);
    if (!sq.n) {
        r.pass = false;
        TheoremReport::put(r.computed, "class_size", sq.class_size);
        r.witnesses.push_back("class size " + std::to_string(sq.class_size) + " is not a power of p");
        return r;
    }
    const std::uint64_t bound = *sq.n * (p - 1) + 1;
    TheoremReport::put(r.computed, "n", *sq.n);
    TheoremReport::put(r.computed, "eta", sq.eta);
    TheoremReport::put(r.expected, "bound", bound);
    r.pass = sq.eta >= bound;
    r.tight = sq.eta == bound;
    r.witnesses.push_back("a=" + g.format(a) + " class_size=" + std::to_string(sq.class_size));
    r.witnesses.push_back(detail::describe_decomposition(g, sq.decomposition));
    return r;
}

// ---------------------------------------------------------------------------
// The finite set of admissible class sizes.

struct SnSet {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> values;

    bool contains(std::uint64_t v) const { return std::binary_search(values.begin(), values.end(), v); }
};

/// All products of prime powers p^t with t(p-1)+1 <= n.
inline SnSet compute_sn(std::uint64_t n) {
    if (n < 1) throw SpecError("S_n needs n >= 1");
    std::set<std::uint64_t> acc{1};
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!numeric::is_prime(p)) continue;
        std::vector<std::uint64_t> powers{1};
        for (std::uint64_t t = 1; t * (p - 1) + 1 <= n; ++t) {
            const auto next = static_cast<unsigned __int128>(powers.back()) * p;
            if (next > UINT64_MAX) throw ResourceError("S_n element overflows 64 bits");
            powers.push_back(static_cast<std::uint64_t>(next));
        }
        std::set<std::uint64_t> grown;
        for (auto v : acc)
            for (auto q : powers) {
                const auto prod = static_cast<unsigned __int128>(v) * q;
                if (prod > UINT64_MAX) throw ResourceError("S_n element overflows 64 bits");
                grown.insert(static_cast<std::uint64_t>(prod));
            }
        acc = std::move(grown);
    }
    return SnSet{n, std::vector<std::uint64_t>(acc.begin(), acc.end())};
}

// ---------------------------------------------------------------------------
// Class sizes of nilpotent groups.

/**
 * Builds the direct product of the parts, takes a = (a_1, ..., a_r), checks
 * that |Cl(a)| and eta multiply across components by computing all of them,
 * then checks |Cl(a)| in S_n whenever eta <= n. With no n, n = eta.
 */
inline TheoremReport verify_theorem_b(const std::vector<FamilyInstance>& parts, std::optional<std::uint64_t> n = {},
                                      const Limits& limits = {}) {
    if (parts.empty()) throw PreconditionError("class-size product check needs at least one part");
    std::set<std::uint64_t> primes;
    std::vector<GroupSpec> specs;
    std::vector<Element> comps;
    std::string label;
    for (const auto& part : parts) {
        const auto p = detail::require_p_group(part.group);
        if (!primes.insert(p).second) throw PreconditionError("prime " + std::to_string(p) + " appears in two parts");
        specs.push_back(part.group.spec());
        comps.push_back(part.distinguished);
        label += (label.empty() ? "" : "x") + part.label();
    }

    std::uint64_t size_product = 1, eta_product = 1;
    std::string per_part;
    for (const auto& part : parts) {
        const auto sq = eta_of_class_square(part.group, part.distinguished, limits);
        size_product *= sq.class_size;
        eta_product *= sq.eta;
        per_part += (per_part.empty() ? "" : " ") + part.label() + ":size=" + std::to_string(sq.class_size) +
                    ",eta=" + std::to_string(sq.eta);
    }

    const auto g = build_group(GroupSpec::direct_product(specs));
    const auto a = Element::tuple(comps);
    const auto sq = eta_of_class_square(g, a, limits);
    const std::uint64_t bound_n = n.value_or(sq.eta);
    const auto sn = compute_sn(bound_n);

    TheoremReport r;
    r.claim_id = "TheoremB";
    TheoremReport::put(r.params, "group", label);
    TheoremReport::put(r.params, "n", bound_n);
    TheoremReport::put(r.computed, "class_size", sq.class_size);
    TheoremReport::put(r.computed, "eta", sq.eta);
    TheoremReport::put(r.expected, "class_size_product", size_product);
    TheoremReport::put(r.expected, "eta_product", eta_product);
    const bool in_sn = sn.contains(sq.class_size);
    TheoremReport::put(r.computed, "in_Sn", in_sn);
    const bool applies = sq.eta <= bound_n;
    r.pass = sq.class_size == size_product && sq.eta == eta_product && (!applies || in_sn);
    r.witnesses.push_back(per_part);
    r.witnesses.push_back("a=" + g.format(a));
    return r;
}

// ---------------------------------------------------------------------------
// Trichotomy of class sizes in p-groups.

/**
 * Sweeps every class: size 1 needs eta = 1, size p needs eta = p, larger
 * classes need eta >= 2p-1.
 */
inline TheoremReport verify_theorem_c(const Group& g, const Limits& limits = {}) {
    const auto p = detail::require_p_group(g);
    std::size_t arms[3] = {0, 0, 0};
    std::size_t violations = 0;
    TheoremReport r;
    r.claim_id = "TheoremC";
    for (const auto& cls : all_classes(g, limits)) {
        const auto sq = eta_of_class_square(g, cls.rep, limits);
        bool ok = false;
        if (sq.class_size == 1) {
            ++arms[0];
            ok = sq.eta == 1;
        } else if (sq.class_size == p) {
            ++arms[1];
            ok = sq.eta == p;
        } else {
            ++arms[2];
            ok = sq.class_size >= p * p && sq.eta >= 2 * p - 1;
        }
        if (!ok) {
            ++violations;
            r.witnesses.push_back("rep=" + g.format(cls.rep) + " size=" + std::to_string(sq.class_size) +
                                  " eta=" + std::to_string(sq.eta));
        }
    }
    TheoremReport::put(r.params, "p", p);
    TheoremReport::put(r.params, "order", g.order().to_string());
    TheoremReport::put(r.computed, "arm_i", arms[0]);
    TheoremReport::put(r.computed, "arm_ii", arms[1]);
    TheoremReport::put(r.computed, "arm_iii", arms[2]);
    TheoremReport::put(r.computed, "violations", violations);
    TheoremReport::put(r.expected, "violations", 0);
    r.pass = violations == 0;
    return r;
}

// ---------------------------------------------------------------------------
// Passing to a quotient by a central subgroup of order p.

inline TheoremReport verify_lemma1(const Group& g, const Quotient& q, const Element& z, const Element& a,
                                   const Element& b, const Limits& limits = {}) {
    const auto p = q.p;
    const auto& qg = q.group;
    const auto abar = q.project(a);
    const auto bbar = q.project(b);

    TheoremReport r;
    r.claim_id = "Lemma2.1";
    TheoremReport::put(r.params, "p", p);
    TheoremReport::put(r.params, "z", g.format(z));
    TheoremReport::put(r.params, "a", g.format(a));
    TheoremReport::put(r.params, "b", g.format(b));

    // (i) eta can only drop in the quotient; disjoint images force disjoint classes.
    const auto cla = conjugacy_class(g, a, limits);
    const auto clb = conjugacy_class(g, b, limits);
    const auto clabar = conjugacy_class(qg, abar, limits);
    const auto clbbar = conjugacy_class(qg, bbar, limits);
    const auto eta_ab = decompose(g, class_product(g, cla, clb, limits), limits).eta();
    const auto eta_ab_bar = decompose(qg, class_product(qg, clabar, clbbar, limits), limits).eta();
    const bool monotone = eta_ab_bar <= eta_ab;
    const bool disjoint_ok = !(clabar.rep != clbbar.rep && cla.rep == clb.rep);
    TheoremReport::put(r.computed, "eta_ab", eta_ab);
    TheoremReport::put(r.computed, "eta_ab_bar", eta_ab_bar);

    // (ii) |Cl(abar)| is |Cl(a)| or |Cl(a)|/p; in the second case eta grows by p-1 and N sits in the product.
    const auto size_a = cla.size();
    const auto size_abar = clabar.size();
    const bool same = size_abar == size_a;
    const bool shrink = size_abar * p == size_a;
    TheoremReport::put(r.computed, "size_a", size_a);
    TheoremReport::put(r.computed, "size_abar", size_abar);
    bool increment_ok = true;
    bool kernel_ok = true;
    if (shrink) {
        const auto sq = eta_of_class_square(g, a, limits);
        const auto sqbar = eta_of_class_square(qg, abar, limits);
        increment_ok = sq.eta >= sqbar.eta + (p - 1);
        kernel_ok = std::includes(sq.product.begin(), sq.product.end(), q.kernel.begin(), q.kernel.end());
        TheoremReport::put(r.computed, "eta_aa", sq.eta);
        TheoremReport::put(r.computed, "eta_aa_bar", sqbar.eta);
        TheoremReport::put(r.computed, "kernel_in_product", kernel_ok);
        TheoremReport::put(r.expected, "eta_aa_min", sqbar.eta + (p - 1));
        r.tight = sq.eta == sqbar.eta + (p - 1);
    }
    TheoremReport::put(r.computed, "case", same ? "same" : (shrink ? "shrink" : "neither"));

    r.pass = monotone && disjoint_ok && (same || shrink) && increment_ok && kernel_ok;
    if (!r.pass) {
        if (!monotone) r.witnesses.push_back("eta(Cl(abar)Cl(bbar)) exceeds eta(Cl(a)Cl(b))");
        if (!disjoint_ok) r.witnesses.push_back("Cl(abar) != Cl(bbar) but Cl(a) = Cl(b)");
        if (!(same || shrink)) r.witnesses.push_back("class size neither preserved nor divided by p");
        if (!increment_ok) r.witnesses.push_back("eta increment below p-1");
        if (!kernel_ok) r.witnesses.push_back("N not contained in Cl(a)Cl(a^-1)");
    }
    return r;
}

inline TheoremReport verify_lemma1(const Group& g, const Element& z, const Element& a, const Element& b,
                                   const Limits& limits = {}) {
    detail::require_p_group(g);
    const auto q = quotient_by_central(g, z, limits);
    if (q.p != *g.prime()) throw PreconditionError("z must have order p");
    return verify_lemma1(g, q, z, a, b, limits);
}

/// Central elements of order p.
inline std::vector<Element> central_elements_of_order_p(const Group& g, const Limits& limits = {}) {
    const auto p = detail::require_p_group(g);
    std::vector<Element> out;
    for (const auto& z : center(g, limits))
        if (z != g.identity() && element_order(g, z) == p) out.push_back(z);
    return out;
}

/// Every central z of order p, every pair of class representatives (a, b).
inline std::vector<TheoremReport> verify_lemma1_all(const Group& g, const Limits& limits = {}) {
    std::vector<TheoremReport> out;
    const auto classes = all_classes(g, limits);
    for (const auto& z : central_elements_of_order_p(g, limits)) {
        const auto q = quotient_by_central(g, z, limits);
        for (const auto& ca : classes)
            for (const auto& cb : classes) out.push_back(verify_lemma1(g, q, z, ca.rep, cb.rep, limits));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classes of size p.

inline TheoremReport verify_size_p_dichotomy(const Group& g, const Element& a, const Limits& limits = {}) {
    const auto p = detail::require_p_group(g);
    TheoremReport r;
    r.claim_id = "Lemma4.1";
    TheoremReport::put(r.params, "p", p);
    TheoremReport::put(r.params, "a", g.format(a));
    TheoremReport::put(r.expected, "eta", p);
    try {
        const auto cls = classify_size_p_class(g, a, limits);
        if (const auto* c1 = std::get_if<SizePCaseI>(&cls)) {
            TheoremReport::put(r.computed, "case", "I");
            TheoremReport::put(r.computed, "eta", c1->eta);
            std::string z;
            for (const auto& x : c1->z) z += (z.empty() ? "" : ",") + g.format(x);
            r.witnesses.push_back("Z={" + z + "}");
        } else {
            const auto& c2 = std::get<SizePCaseII>(cls);
            TheoremReport::put(r.computed, "case", "II");
            TheoremReport::put(r.computed, "eta", c2.eta);
            r.witnesses.push_back(detail::describe_decomposition(g, c2.classes));
        }
        r.pass = true;
    } catch (const ClaimViolation& e) {
        r.pass = false;
        r.witnesses.push_back(e.what());
    }
    return r;
}

// ---------------------------------------------------------------------------
// Named families.

/// Extraspecial p^3: every noncentral class squares onto the center, eta = p.
inline TheoremReport verify_remark_a(std::uint64_t p, const Limits& limits = {}) {
    const auto f = heisenberg(p, limits);
    const auto& g = f.group;
    const auto z = center(g, limits);
    std::size_t noncentral = 0, violations = 0;
    TheoremReport r;
    r.claim_id = "RemarkA";
    for (const auto& cls : all_classes(g, limits)) {
        if (cls.size() == 1) continue;
        ++noncentral;
        const auto sq = eta_of_class_square(g, cls.rep, limits);
        if (sq.product != z || sq.eta != p) {
            ++violations;
            r.witnesses.push_back("rep=" + g.format(cls.rep) + " eta=" + std::to_string(sq.eta) +
                                  " product_size=" + std::to_string(sq.product.size()));
        }
    }
    const auto lemma = verify_size_p_dichotomy(g, f.distinguished, limits);
    const bool case_one = lemma.pass && !lemma.computed.empty() && lemma.computed.front().second == "I";
    TheoremReport::put(r.params, "p", p);
    TheoremReport::put(r.computed, "order", g.order().to_string());
    TheoremReport::put(r.computed, "center_size", z.size());
    TheoremReport::put(r.computed, "noncentral_classes", noncentral);
    TheoremReport::put(r.computed, "violations", violations);
    TheoremReport::put(r.computed, "case_I", case_one);
    TheoremReport::put(r.expected, "order", std::to_string(p * p * p));
    TheoremReport::put(r.expected, "center_size", p);
    TheoremReport::put(r.expected, "violations", 0);
    r.pass = g.order() == GroupOrder::of(p * p * p) && z.size() == p && violations == 0 && case_one;
    if (!case_one) r.witnesses.insert(r.witnesses.end(), lemma.witnesses.begin(), lemma.witnesses.end());
    return r;
}

/**
 * C_{p^2} wr C_p: |G| = p^{2p+1}, |Cl(a)| = p, Cl(a)Cl(a^-1) is {e} plus
 * the p-1 classes of b_i = (c, .., c^-1 at i, ..), all distinct.
 */
inline TheoremReport verify_remark_b(std::uint64_t p, const Limits& limits = {}) {
    const auto f = remark_b_group(p);
    const auto& g = f.group;
    const auto sq = eta_of_class_square(g, f.distinguished, limits);
    const auto& cls = sq.decomposition.classes;

    bool shape_ok = !cls.empty() && cls.front().rep == g.identity() && cls.size() == p;
    for (std::size_t i = 1; shape_ok && i < cls.size(); ++i) shape_ok = cls[i].size() == p;

    // b_i classes: pairwise distinct and inside the product.
    std::set<Element> reps;
    bool b_ok = true;
    for (std::uint64_t i = 0; i < p; ++i) {
        // c at 0 times c^-1 at i; b_0 is the identity.
        const std::uint64_t m = p * p;
        std::vector<Element> fn(p, Element::residue(0));
        fn[0] = Element::residue(1);
        fn[i] = Element::residue((fn[i].value() + m - 1) % m);
        const auto bi = Element::wreath(fn, Element::residue(0));
        const auto cbi = conjugacy_class(g, bi, limits);
        b_ok = b_ok && std::binary_search(sq.product.begin(), sq.product.end(), bi) &&
               cbi.size() == (i == 0 ? 1 : p) && reps.insert(cbi.rep).second;
    }

    const auto lemma = verify_size_p_dichotomy(g, f.distinguished, limits);
    const bool case_two = lemma.pass && !lemma.computed.empty() && lemma.computed.front().second == "II";

    TheoremReport r;
    r.claim_id = "RemarkB";
    TheoremReport::put(r.params, "p", p);
    TheoremReport::put(r.computed, "order", g.order().to_string());
    TheoremReport::put(r.computed, "class_size", sq.class_size);
    TheoremReport::put(r.computed, "eta", sq.eta);
    TheoremReport::put(r.computed, "class_sizes", detail::join_sizes(sq.decomposition));
    TheoremReport::put(r.computed, "b_classes_distinct", b_ok);
    TheoremReport::put(r.computed, "case_II", case_two);
    TheoremReport::put(r.expected, "order", GroupOrder::of(p).pow(2 * p + 1).to_string());
    TheoremReport::put(r.expected, "class_size", p);
    TheoremReport::put(r.expected, "eta", p);
    r.pass = g.order() == GroupOrder::of(p).pow(2 * p + 1) && sq.class_size == p && sq.eta == p && shape_ok &&
             b_ok && case_two && g.invert(f.distinguished) != f.distinguished;
    r.witnesses.push_back(detail::describe_decomposition(g, sq.decomposition));
    return r;
}

/// Wreathing adds exactly p-1 classes to the class square and multiplies the class size by p.
inline TheoremReport verify_construction_lemma(const FamilyInstance& base, std::uint64_t p, const Limits& limits = {}) {
    const auto w = wreath_construction(base, p, limits);
    const auto sq0 = eta_of_class_square(base.group, base.distinguished, limits);
    const auto sq = eta_of_class_square(w.group, w.distinguished, limits);
    const bool inverse_in_class = sq.cls.contains(w.group.invert(w.distinguished));

    TheoremReport r;
    r.claim_id = "Lemma5.1";
    TheoremReport::put(r.params, "base", base.label());
    TheoremReport::put(r.params, "p", p);
    TheoremReport::put(r.computed, "eta0", sq0.eta);
    TheoremReport::put(r.computed, "eta", sq.eta);
    TheoremReport::put(r.computed, "size0", sq0.class_size);
    TheoremReport::put(r.computed, "size", sq.class_size);
    TheoremReport::put(r.expected, "eta", sq0.eta + (p - 1));
    TheoremReport::put(r.expected, "size", p * sq0.class_size);
    r.pass = sq.eta == sq0.eta + (p - 1) && sq.class_size == p * sq0.class_size && !inverse_in_class;
    r.witnesses.push_back(detail::describe_decomposition(w.group, sq.decomposition));
    return r;
}

/// The tower reaches the bound exactly: |Cl(a)| = p^n, eta = n(p-1)+1, Cl(a) != Cl(a^-1).
inline TheoremReport verify_tower(std::uint64_t p, std::uint64_t n, const Limits& limits = {}) {
    const auto f = tower(p, n, limits);
    const auto sq = eta_of_class_square(f.group, f.distinguished, limits);
    std::uint64_t pn = 1;
    for (std::uint64_t k = 0; k < n; ++k) pn *= p;
    const bool inverse_in_class = sq.cls.contains(f.group.invert(f.distinguished));

    TheoremReport r;
    r.claim_id = "Prop4.2";
    TheoremReport::put(r.params, "p", p);
    TheoremReport::put(r.params, "n", n);
    TheoremReport::put(r.computed, "class_size", sq.class_size);
    TheoremReport::put(r.computed, "eta", sq.eta);
    TheoremReport::put(r.expected, "class_size", pn);
    TheoremReport::put(r.expected, "eta", n * (p - 1) + 1);
    r.pass = sq.class_size == pn && sq.eta == n * (p - 1) + 1 && !inverse_in_class;
    r.witnesses.push_back(detail::describe_decomposition(f.group, sq.decomposition));
    return r;
}

/**
 * Supersolvable example: |Cl(a)| = p and eta = 2 with classes Cl(e) and
 * Cl((c,c^-1,e,...)). The size p^2-p of the second class is checked for odd
 * p only; at p = 2 that element is central.
 */
inline TheoremReport verify_prop_notforsuper(std::uint64_t p, const Limits& limits = {}) {
    const auto f = supersolvable_example(p);
    const auto& g = f.group;
    const auto sq = eta_of_class_square(g, f.distinguished, limits);

    std::vector<Element> fn(p, Element::residue(0));
    fn[0] = Element::residue(1 % p);
    fn[1 % p] = Element::residue((p - 1) % p);
    const auto b = Element::wreath(fn, Element::affine(1, 0));
    const auto clb = conjugacy_class(g, b, limits);
    const auto cle = conjugacy_class(g, g.identity(), limits);

    std::vector<Element> reps;
    for (const auto& c : sq.decomposition.classes) reps.push_back(c.rep);
    std::vector<Element> want{cle.rep, clb.rep};
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());

    TheoremReport r;
    r.claim_id = "Prop5.4";
    TheoremReport::put(r.params, "p", p);
    TheoremReport::put(r.computed, "order", g.order().to_string());
    TheoremReport::put(r.computed, "class_size", sq.class_size);
    TheoremReport::put(r.computed, "eta", sq.eta);
    TheoremReport::put(r.computed, "class_sizes", detail::join_sizes(sq.decomposition));
    TheoremReport::put(r.computed, "product_size", sq.product.size());
    TheoremReport::put(r.expected, "class_size", p);
    TheoremReport::put(r.expected, "eta", 2);
    TheoremReport::put(r.expected, "product_size_max", p * p - p + 1);
    const bool odd = p % 2 == 1;
    if (odd)
        TheoremReport::put(r.expected, "nontrivial_class_size", p * p - p);
    else
        TheoremReport::put(r.expected, "nontrivial_class_size", "skipped");
    r.pass = sq.class_size == p && sq.eta == 2 && reps == want && sq.product.size() <= p * p - p + 1 &&
             (!odd || clb.size() == p * p - p);
    r.witnesses.push_back(detail::describe_decomposition(g, sq.decomposition));
    return r;
}

// ---------------------------------------------------------------------------
// Corpus sweeps.

/// Catalog groups plus the enumerable named-family p-groups.
inline std::vector<FamilyInstance> default_corpus(const Limits& limits = {}) {
    auto out = catalog();
    out.push_back(heisenberg(5, limits));
    out.push_back(remark_b_group(2));
    out.push_back(remark_b_group(3));
    out.push_back(tower(2, 1, limits));
    out.push_back(tower(2, 2, limits));
    out.push_back(tower(3, 1, limits));
    out.push_back(supersolvable_example(2));
    return out;
}

/// One class-square bound report per (group, class), then one trichotomy report per group.
inline std::vector<TheoremReport> sweep(const std::vector<FamilyInstance>& corpus, const Limits& limits = {}) {
    std::vector<TheoremReport> out;
    for (const auto& inst : corpus) {
        const auto& g = inst.group;
        for (const auto& cls : all_classes(g, limits)) {
            auto r = verify_theorem_a(g, cls.rep, limits);
            r.params.insert(r.params.begin(), {{"group", inst.label()}, {"rep", g.format(cls.rep)}});
            out.push_back(std::move(r));
        }
        auto c = verify_theorem_c(g, limits);
        c.params.insert(c.params.begin(), {"group", inst.label()});
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace conjprod
