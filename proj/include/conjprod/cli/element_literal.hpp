#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "../errors.hpp"
#include "../group.hpp"
#include "expr.hpp"

namespace conjprod::cli {

namespace detail {

/**
 * Element literals, shaped by the group they belong to:
 *   residue / table index   INT (or a name from the scope)
 *   affine map              (slope,shift)
 *   product                 (x,y,...)
 *   wreath pair             [(f0,...,fk-1);t]
 * At any level: 'e' is the identity; in a wreath group 'deltaK' is the first
 * base generator at point K with identity top.
 */
class ElementParser {
public:
    ElementParser(std::string_view text, const NameScope& scope) : s_(text), scope_(scope) {}

    Element parse(const conjprod::detail::Node& root) {
        auto x = element(root, &scope_);
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input in element literal");
        return x;
    }

private:
    using Node = conjprod::detail::Node;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool at_name() {
        skip_ws();
        return pos_ < s_.size() &&
               (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                (s_[pos_] == '-' && pos_ + 1 < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_ + 1]))));
    }

    std::string name() {
        const auto start = pos_;
        if (s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::int64_t integer() {
        skip_ws();
        const auto start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::int64_t v = 0;
        const auto digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (INT64_MAX - 9) / 10) throw ParseError("integer too large", start);
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        if (digits == pos_) throw ParseError("expected an integer", start);
        return neg ? -v : v;
    }

    static std::uint64_t reduce(std::int64_t v, std::uint64_t m) {
        const auto r = v % static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
    }

    const NameScope* child(const NameScope* scope, std::size_t i) const {
        if (!scope || i >= scope->children.size()) return nullptr;
        return &scope->children[i];
    }

    Element element(const Node& node, const NameScope* scope) {
        if (at_name()) {
            const auto start = pos_;
            const auto n = name();
            if (n == "e") return node.identity;
            if (scope) {
                auto it = scope->names.find(n);
                if (it != scope->names.end()) return it->second;
            }
            if (node.kind == Node::Kind::Wreath && n.rfind("delta", 0) == 0 && n.size() > 5) {
                std::uint64_t k = 0;
                for (std::size_t i = 5; i < n.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(n[i]))) throw ParseError("bad point in '" + n + "'", start);
                    k = k * 10 + static_cast<std::uint64_t>(n[i] - '0');
                }
                if (k >= node.modulus) throw ParseError("point " + std::to_string(k) + " outside the action set", start);
                const auto& base = *node.children[0];
                std::vector<Element> f(node.modulus, base.identity);
                f[k] = base.generators.front();
                return Element::wreath(std::move(f), node.children[1]->identity);
            }
            throw ParseError("unknown element name '" + n + "'", start);
        }
        switch (node.kind) {
        case Node::Kind::Cyclic: return Element::residue(reduce(integer(), node.modulus));
        case Node::Kind::Table: {
            const auto start = pos_;
            const auto v = integer();
            if (v < 0 || static_cast<std::uint64_t>(v) >= node.modulus)
                throw ParseError("table index " + std::to_string(v) + " out of range", start);
            return Element::table(static_cast<std::uint64_t>(v));
        }
        case Node::Kind::Affine: {
            expect('(');
            const auto at = pos_;
            const auto m = reduce(integer(), node.modulus);
            if (m == 0) throw ParseError("affine slope must be nonzero", at);
            expect(',');
            const auto b = reduce(integer(), node.modulus);
            expect(')');
            return Element::affine(m, b);
        }
        case Node::Kind::Product: {
            expect('(');
            std::vector<Element> parts;
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                if (i) expect(',');
                parts.push_back(element(*node.children[i], child(scope, i)));
            }
            expect(')');
            return Element::tuple(std::move(parts));
        }
        case Node::Kind::Wreath: {
            expect('[');
            expect('(');
            std::vector<Element> f;
            for (std::uint64_t i = 0; i < node.modulus; ++i) {
                if (i) expect(',');
                f.push_back(element(*node.children[0], child(scope, 0)));
            }
            expect(')');
            expect(';');
            auto t = element(*node.children[1], nullptr);
            expect(']');
            return Element::wreath(std::move(f), std::move(t));
        }
        }
        fail("unsupported group kind");
    }

    std::string_view s_;
    const NameScope& scope_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Element parse_element(const EvaluatedGroup& g, std::string_view text) {
    if (text == "dist") return g.instance.distinguished;
    return detail::ElementParser(text, g.scope).parse(g.instance.group.root());
}

}  // namespace conjprod::cli
