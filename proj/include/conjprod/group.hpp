#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "builtin_tables.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "numeric.hpp"
#include "order.hpp"
#include "spec.hpp"
#include "table.hpp"

namespace conjprod {

namespace detail {

// Resolved form of a GroupSpec: named families are lowered to tables and plain
// wreath products to a shift action over Cyclic(p).
struct Node {
    enum class Kind { Cyclic, Product, Wreath, Affine, Table };

    Kind kind = Kind::Cyclic;
    std::uint64_t modulus = 0;  // cyclic order, affine prime, wreath point count
    std::vector<std::shared_ptr<const Node>> children;  // product factors; wreath: {base, top}
    WreathAction action = WreathAction::CyclicShift;
    std::shared_ptr<const CayleyTable> table;
    std::uint64_t primitive_root = 1;  // affine only
    Element identity;
    std::vector<Element> generators;
    GroupOrder order;
};

using NodePtr = std::shared_ptr<const Node>;

[[noreturn]] inline void shape_error(const Node& node, const char* what) {
    static const char* names[] = {"cyclic", "product", "wreath", "affine", "table"};
    throw ShapeError(std::string("element does not fit ") + names[static_cast<int>(node.kind)] + " group: " + what);
}

inline bool is_canonical(const Node& node, const Element& x) {
    switch (node.kind) {
    case Node::Kind::Cyclic:
        return x.kind() == Element::Kind::Residue && x.value() < node.modulus;
    case Node::Kind::Table:
        return x.kind() == Element::Kind::TableIndex && x.value() < node.modulus;
    case Node::Kind::Affine:
        return x.kind() == Element::Kind::Affine && x.slope() != 0 && x.slope() < node.modulus &&
               x.shift() < node.modulus;
    case Node::Kind::Product: {
        if (x.kind() != Element::Kind::Tuple || x.parts().size() != node.children.size()) return false;
        for (std::size_t i = 0; i < node.children.size(); ++i)
            if (!is_canonical(*node.children[i], x.parts()[i])) return false;
        return true;
    }
    case Node::Kind::Wreath: {
        if (x.kind() != Element::Kind::Wreath || x.parts().size() != node.modulus + 1) return false;
        for (const auto& b : x.base())
            if (!is_canonical(*node.children[0], b)) return false;
        return is_canonical(*node.children[1], x.top());
    }
    }
    return false;
}

// Point t^-1 . x of the action set.
inline std::uint64_t act_inverse(const Node& wreath, const Element& t, std::uint64_t x) {
    const std::uint64_t k = wreath.modulus;
    if (wreath.action == WreathAction::CyclicShift) return (x + k - t.value()) % k;
    // x = m*y + b  =>  y = m^-1 (x - b)
    const std::uint64_t minv = numeric::inverse_mod_prime(t.slope(), k);
    return numeric::mul_mod(minv, (x + k - t.shift()) % k, k);
}

inline std::uint64_t act(const Node& wreath, const Element& t, std::uint64_t x) {
    const std::uint64_t k = wreath.modulus;
    if (wreath.action == WreathAction::CyclicShift) return (x + t.value()) % k;
    return (numeric::mul_mod(t.slope(), x, k) + t.shift()) % k;
}

inline Element mul(const Node& node, const Element& x, const Element& y);
inline Element inv(const Node& node, const Element& x);

inline Element mul(const Node& node, const Element& x, const Element& y) {
    switch (node.kind) {
    case Node::Kind::Cyclic:
        if (x.kind() != Element::Kind::Residue || y.kind() != Element::Kind::Residue) shape_error(node, "expected residue");
        return Element::residue((x.value() + y.value()) % node.modulus);
    case Node::Kind::Table:
        if (x.kind() != Element::Kind::TableIndex || y.kind() != Element::Kind::TableIndex ||
            x.value() >= node.modulus || y.value() >= node.modulus)
            shape_error(node, "expected table index");
        return Element::table((*node.table)(x.value(), y.value()));
    case Node::Kind::Affine: {
        if (x.kind() != Element::Kind::Affine || y.kind() != Element::Kind::Affine) shape_error(node, "expected affine map");
        // (m1,b1)(m2,b2): x -> m1*(m2*x + b2) + b1
        const std::uint64_t p = node.modulus;
        return Element::affine(numeric::mul_mod(x.slope(), y.slope(), p),
                               (numeric::mul_mod(x.slope(), y.shift(), p) + x.shift()) % p);
    }
    case Node::Kind::Product: {
        const auto n = node.children.size();
        if (x.kind() != Element::Kind::Tuple || y.kind() != Element::Kind::Tuple || x.parts().size() != n ||
            y.parts().size() != n)
            shape_error(node, "expected tuple of matching length");
        std::vector<Element> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(mul(*node.children[i], x.parts()[i], y.parts()[i]));
        return Element::tuple(std::move(out));
    }
    case Node::Kind::Wreath: {
        const auto k = node.modulus;
        if (x.kind() != Element::Kind::Wreath || y.kind() != Element::Kind::Wreath || x.parts().size() != k + 1 ||
            y.parts().size() != k + 1)
            shape_error(node, "expected wreath pair of matching length");
        // (f1,t1)(f2,t2) = (x -> f1(x) f2(t1^-1 x), t1 t2)
        const Node& base = *node.children[0];
        const auto xb = x.base();
        const auto yb = y.base();
        std::vector<Element> out;
        out.reserve(k);
        for (std::uint64_t pt = 0; pt < k; ++pt) out.push_back(mul(base, xb[pt], yb[act_inverse(node, x.top(), pt)]));
        return Element::wreath(std::move(out), mul(*node.children[1], x.top(), y.top()));
    }
    }
    shape_error(node, "unknown kind");
}

inline Element inv(const Node& node, const Element& x) {
    switch (node.kind) {
    case Node::Kind::Cyclic:
        if (x.kind() != Element::Kind::Residue) shape_error(node, "expected residue");
        return Element::residue((node.modulus - x.value() % node.modulus) % node.modulus);
    case Node::Kind::Table:
        if (x.kind() != Element::Kind::TableIndex || x.value() >= node.modulus) shape_error(node, "expected table index");
        return Element::table(node.table->inverse(x.value()));
    case Node::Kind::Affine: {
        if (x.kind() != Element::Kind::Affine || x.slope() == 0) shape_error(node, "expected affine map");
        const std::uint64_t p = node.modulus;
        const std::uint64_t minv = numeric::inverse_mod_prime(x.slope(), p);
        return Element::affine(minv, (p - numeric::mul_mod(minv, x.shift(), p)) % p);
    }
    case Node::Kind::Product: {
        if (x.kind() != Element::Kind::Tuple || x.parts().size() != node.children.size())
            shape_error(node, "expected tuple of matching length");
        std::vector<Element> out;
        out.reserve(node.children.size());
        for (std::size_t i = 0; i < node.children.size(); ++i) out.push_back(inv(*node.children[i], x.parts()[i]));
        return Element::tuple(std::move(out));
    }
    case Node::Kind::Wreath: {
        const auto k = node.modulus;
        if (x.kind() != Element::Kind::Wreath || x.parts().size() != k + 1)
            shape_error(node, "expected wreath pair of matching length");
        // (f,t)^-1 = (y -> f(t y)^-1, t^-1)
        const Node& base = *node.children[0];
        const auto xb = x.base();
        std::vector<Element> out;
        out.reserve(k);
        for (std::uint64_t pt = 0; pt < k; ++pt) out.push_back(inv(base, xb[act(node, x.top(), pt)]));
        return Element::wreath(std::move(out), inv(*node.children[1], x.top()));
    }
    }
    shape_error(node, "unknown kind");
}

/// Formats by the element's own shape; safe for elements that do not fit the group.
inline std::string format_raw(const Element& x) {
    switch (x.kind()) {
    case Element::Kind::Residue:
    case Element::Kind::TableIndex: return std::to_string(x.value());
    case Element::Kind::Affine: return "(" + std::to_string(x.slope()) + "," + std::to_string(x.shift()) + ")";
    case Element::Kind::Tuple: {
        std::string s = "(";
        for (std::size_t i = 0; i < x.parts().size(); ++i) s += (i ? "," : "") + format_raw(x.parts()[i]);
        return s + ")";
    }
    case Element::Kind::Wreath: {
        if (x.parts().empty()) return "[]";
        std::string s = "[(";
        const auto b = x.base();
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + format_raw(b[i]);
        return s + ");" + format_raw(x.top()) + "]";
    }
    }
    return {};
}

inline std::string format(const Node& node, const Element& x) {
    switch (node.kind) {
    case Node::Kind::Cyclic:
    case Node::Kind::Table:
        return std::to_string(x.value());
    case Node::Kind::Affine:
        return "(" + std::to_string(x.slope()) + "," + std::to_string(x.shift()) + ")";
    case Node::Kind::Product: {
        std::string s = "(";
        for (std::size_t i = 0; i < x.parts().size(); ++i)
            s += (i ? "," : "") + format(*node.children.at(i), x.parts()[i]);
        return s + ")";
    }
    case Node::Kind::Wreath: {
        std::string s = "[(";
        const auto b = x.base();
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + format(*node.children[0], b[i]);
        return s + ");" + format(*node.children[1], x.top()) + "]";
    }
    }
    return {};
}

inline NodePtr make_table_node(std::shared_ptr<const CayleyTable> table) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Table;
    node->modulus = table->size();
    node->identity = Element::table(0);
    for (std::uint64_t i = 0; i < table->size(); ++i) node->generators.push_back(Element::table(i));
    node->order = GroupOrder::of(table->size());
    node->table = std::move(table);
    return node;
}

inline NodePtr make_cyclic_node(std::uint64_t m) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Cyclic;
    node->modulus = m;
    node->identity = Element::residue(0);
    node->generators = {Element::residue(1 % m)};
    node->order = GroupOrder::of(m);
    return node;
}

inline NodePtr make_wreath_node(NodePtr base, NodePtr top, std::uint64_t k, WreathAction action) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Wreath;
    node->modulus = k;
    node->action = action;

    // Generation needs the top group to move point 0 everywhere.
    std::vector<char> seen(k, 0);
    std::vector<std::uint64_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const auto pt = stack.back();
        stack.pop_back();
        for (const auto& g : top->generators) {
            const auto q = act(*node, g, pt);
            if (!seen[q]) {
                seen[q] = 1;
                stack.push_back(q);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw SpecError("top group does not act transitively on the action set");

    const std::vector<Element> ones(k, base->identity);
    node->identity = Element::wreath(ones, top->identity);
    for (const auto& g : base->generators) {
        auto f = ones;
        f[0] = g;
        node->generators.push_back(Element::wreath(std::move(f), top->identity));
    }
    for (const auto& t : top->generators) node->generators.push_back(Element::wreath(ones, t));
    node->order = base->order.pow(k) * top->order;
    node->children = {std::move(base), std::move(top)};
    return node;
}

inline NodePtr resolve(const GroupSpec& spec) {
    using K = GroupSpec::Kind;
    switch (spec.kind()) {
    case K::Cyclic:
        return make_cyclic_node(spec.modulus());
    case K::DirectProduct: {
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::Product;
        std::vector<Element> ids;
        for (const auto& part : spec.parts()) {
            node->children.push_back(resolve(part));
            ids.push_back(node->children.back()->identity);
        }
        node->identity = Element::tuple(ids);
        for (std::size_t i = 0; i < node->children.size(); ++i) {
            node->order *= node->children[i]->order;
            for (const auto& g : node->children[i]->generators) {
                auto parts = ids;
                parts[i] = g;
                node->generators.push_back(Element::tuple(std::move(parts)));
            }
        }
        return node;
    }
    case K::Wreath:
        return make_wreath_node(resolve(spec.base()), make_cyclic_node(spec.modulus()), spec.modulus(),
                                WreathAction::CyclicShift);
    case K::WreathOverSet:
        return make_wreath_node(resolve(spec.base()), resolve(spec.top()), spec.modulus(), spec.action());
    case K::Affine: {
        const std::uint64_t p = spec.modulus();
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::Affine;
        node->modulus = p;
        node->primitive_root = numeric::smallest_primitive_root(p);
        node->identity = Element::affine(1, 0);
        node->generators = {Element::affine(1, 1 % p)};
        if (node->primitive_root != 1) node->generators.push_back(Element::affine(node->primitive_root, 0));
        node->order = GroupOrder::of(p) * GroupOrder::of(p - 1);
        return node;
    }
    case K::Table:
        return make_table_node(spec.table());
    case K::Heisenberg:
        return make_table_node(heisenberg_table(spec.modulus()));
    case K::Catalog:
        return make_table_node(catalog_table(spec.name()).table);
    }
    throw SpecError("unknown spec kind");
}

}  // namespace detail

/**
 * A finite group given by a spec: identity, generators, order and the
 * primitive operations. Immutable once built; copies share structure.
 */
class Group {
public:
    const GroupSpec& spec() const noexcept { return spec_; }
    const Element& identity() const noexcept { return root_->identity; }
    std::span<const Element> generators() const noexcept { return root_->generators; }
    const GroupOrder& order() const noexcept { return root_->order; }

    /// Both factors must be canonical elements of this group (ShapeError otherwise).
    Element multiply(const Element& x, const Element& y) const {
        require(x);
        require(y);
        return detail::mul(*root_, x, y);
    }

    Element invert(const Element& x) const {
        require(x);
        return detail::inv(*root_, x);
    }

    /// g x g^-1
    Element conjugate(const Element& g, const Element& x) const {
        require(g);
        require(x);
        return detail::mul(*root_, detail::mul(*root_, g, x), detail::inv(*root_, g));
    }

    /// Canonical-form membership predicate.
    bool contains(const Element& x) const { return detail::is_canonical(*root_, x); }

    bool enumerable(const Limits& limits = {}) const { return root_->order.at_most(limits.enumeration); }

    /// The prime p when |G| = p^k, k >= 1.
    std::optional<std::uint64_t> prime() const { return root_->order.prime(); }

    /// Table backing a Table/Heisenberg/Catalog group, else null.
    const std::shared_ptr<const CayleyTable>& table() const noexcept { return root_->table; }

    std::string format(const Element& x) const {
        return detail::is_canonical(*root_, x) ? detail::format(*root_, x) : detail::format_raw(x);
    }

    const detail::Node& root() const noexcept { return *root_; }

private:
    void require(const Element& x) const {
        if (!detail::is_canonical(*root_, x))
            throw ShapeError("element " + detail::format_raw(x) + " does not belong to " + spec_.describe());
    }

    Group(GroupSpec spec, detail::NodePtr root) : spec_(std::move(spec)), root_(std::move(root)) {}
    friend Group build_group(const GroupSpec& spec);

    GroupSpec spec_;
    detail::NodePtr root_;
};

inline Group build_group(const GroupSpec& spec) { return Group(spec, detail::resolve(spec)); }

inline Element multiply(const Group& g, const Element& x, const Element& y) { return g.multiply(x, y); }
inline Element invert(const Group& g, const Element& x) { return g.invert(x); }
inline const Element& identity(const Group& g) { return g.identity(); }
inline const GroupOrder& order(const Group& g) { return g.order(); }

inline void require_enumerable(const Group& g, const Limits& limits) {
    if (!g.enumerable(limits))
        throw ResourceError("group of order " + g.order().to_string() + " exceeds the enumeration limit " +
                            std::to_string(limits.enumeration));
}

/// Every element exactly once, in increasing order.
inline std::vector<Element> enumerate_elements(const Group& g, const Limits& limits = {}) {
    require_enumerable(g, limits);
    std::vector<Element> out;
    if (const auto& t = g.table()) {
        out.reserve(t->size());
        for (std::uint64_t i = 0; i < t->size(); ++i) out.push_back(Element::table(i));
        return out;
    }
    // Right-multiplication closure from the identity.
    std::unordered_set<Element, ElementHash> seen{g.identity()};
    out.push_back(g.identity());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& gen : g.generators()) {
            auto y = g.multiply(out[i], gen);
            if (seen.insert(y).second) {
                out.push_back(std::move(y));
                if (out.size() > limits.enumeration)
                    throw ResourceError("closure exceeded the enumeration limit");
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Group backed by a validated Cayley table (identity at index 0).
inline Group validate_table(std::size_t n, std::vector<std::uint32_t> entries, bool trusted = false) {
    return build_group(GroupSpec::table(check_cayley_table(n, std::move(entries), trusted)));
}

/// Cayley table of an enumerable group, indexed by enumeration order.
inline std::shared_ptr<const CayleyTable> cayley_table(const Group& g, const Limits& limits = {}) {
    if (g.table()) return g.table();
    const auto elems = enumerate_elements(g, limits);
    std::unordered_map<Element, std::uint32_t, ElementHash> index;
    for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    const std::size_t n = elems.size();
    std::vector<std::uint32_t> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = index.at(g.multiply(elems[i], elems[j]));
    return check_cayley_table(n, std::move(entries), n > kFullAssociativityLimit);
}

/// Elements commuting with every generator.
inline std::vector<Element> center(const Group& g, const Limits& limits = {}) {
    std::vector<Element> out;
    for (const auto& z : enumerate_elements(g, limits)) {
        const bool central = std::all_of(g.generators().begin(), g.generators().end(), [&](const Element& gen) {
            return g.multiply(z, gen) == g.multiply(gen, z);
        });
        if (central) out.push_back(z);
    }
    return out;
}

/// Order of x (smallest k >= 1 with x^k = e), capped at `cap`.
inline std::uint64_t element_order(const Group& g, const Element& x, std::uint64_t cap = 1'000'000) {
    Element y = x;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (y == g.identity()) return k;
        y = g.multiply(y, x);
    }
    throw ResourceError("element order exceeds " + std::to_string(cap));
}

}  // namespace conjprod
