#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "../builtin_tables.hpp"
#include "../constructions.hpp"
#include "../errors.hpp"
#include "../group.hpp"
#include "../numeric.hpp"

namespace conjprod::cli {

/**
 * Group expression AST.
 *
 *   expr := 'dirprod' '(' expr { ',' expr } ')'
 *         | 'wreath' '(' expr ',' INT ')'
 *         | 'cyclic:' INT | 'heis:' INT | 'aff:' INT | 'remarkb:' INT
 *         | 'tower:' INT ':' INT | 'super:' INT
 *         | 'table:' PATH | 'catalog:' NAME
 *
 * Whitespace may separate tokens. PATH runs up to the next ',', ')' or blank.
 */
struct GroupExpr {
    enum class Kind { Cyclic, Heis, Aff, RemarkB, Tower, Super, Table, Catalog, DirProd, Wreath };

    Kind kind = Kind::Cyclic;
    std::vector<std::uint64_t> args;
    std::string text;
    std::vector<GroupExpr> children;

    friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

inline std::string print(const GroupExpr& e) {
    using K = GroupExpr::Kind;
    switch (e.kind) {
    case K::Cyclic: return "cyclic:" + std::to_string(e.args.at(0));
    case K::Heis: return "heis:" + std::to_string(e.args.at(0));
    case K::Aff: return "aff:" + std::to_string(e.args.at(0));
    case K::RemarkB: return "remarkb:" + std::to_string(e.args.at(0));
    case K::Tower: return "tower:" + std::to_string(e.args.at(0)) + ":" + std::to_string(e.args.at(1));
    case K::Super: return "super:" + std::to_string(e.args.at(0));
    case K::Table: return "table:" + e.text;
    case K::Catalog: return "catalog:" + e.text;
    case K::DirProd: {
        std::string s = "dirprod(";
        for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? "," : "") + print(e.children[i]);
        return s + ")";
    }
    case K::Wreath: return "wreath(" + print(e.children.at(0)) + "," + std::to_string(e.args.at(0)) + ")";
    }
    return {};
}

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    GroupExpr parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input '" + std::string(s_.substr(pos_)) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    std::string word() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a group constructor name");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::uint64_t integer() {
        skip_ws();
        const auto start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (UINT64_MAX - 9) / 10) fail_at("integer too large", start);
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        if (start == pos_) fail("expected an integer");
        return v;
    }

    std::uint64_t prime_arg(const char* what) {
        const auto at = (skip_ws(), pos_);
        const auto v = integer();
        if (!numeric::is_prime(v)) fail_at(std::string(what) + " " + std::to_string(v) + " is not prime", at);
        return v;
    }

    std::string until_delim(const char* what) {
        const auto start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')' && s_[pos_] != '(' &&
               !std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(s_.substr(start, pos_ - start));
    }

    GroupExpr expr() {
        using K = GroupExpr::Kind;
        skip_ws();
        const auto at = pos_;
        const auto name = word();
        GroupExpr e;
        if (name == "dirprod") {
            e.kind = K::DirProd;
            expect('(');
            e.children.push_back(expr());
            while (peek(',')) {
                ++pos_;
                e.children.push_back(expr());
            }
            expect(')');
            return e;
        }
        if (name == "wreath") {
            e.kind = K::Wreath;
            expect('(');
            e.children.push_back(expr());
            expect(',');
            e.args.push_back(prime_arg("wreath top order"));
            expect(')');
            return e;
        }
        if (pos_ >= s_.size() || s_[pos_] != ':') fail("expected ':' after '" + name + "'");
        ++pos_;
        if (name == "cyclic") {
            e.kind = K::Cyclic;
            const auto vat = pos_;
            e.args.push_back(integer());
            if (e.args[0] == 0) fail_at("cyclic order must be positive", vat);
        } else if (name == "heis") {
            e.kind = K::Heis;
            const auto vat = pos_;
            e.args.push_back(prime_arg("Heisenberg prime"));
            if (e.args[0] == 2) fail_at("Heisenberg group needs an odd prime", vat);
        } else if (name == "aff") {
            e.kind = K::Aff;
            e.args.push_back(prime_arg("affine field size"));
        } else if (name == "remarkb") {
            e.kind = K::RemarkB;
            e.args.push_back(prime_arg("prime"));
        } else if (name == "tower") {
            e.kind = K::Tower;
            e.args.push_back(prime_arg("tower prime"));
            if (pos_ >= s_.size() || s_[pos_] != ':') fail("tower needs two arguments, tower:p:n");
            ++pos_;
            e.args.push_back(integer());
        } else if (name == "super") {
            e.kind = K::Super;
            e.args.push_back(prime_arg("prime"));
        } else if (name == "table") {
            e.kind = K::Table;
            e.text = until_delim("a table path");
        } else if (name == "catalog") {
            e.kind = K::Catalog;
            const auto vat = pos_;
            e.text = until_delim("a catalog name");
            try {
                (void)catalog_table(e.text);
            } catch (const SpecError& err) {
                fail_at(err.what(), vat);
            }
        } else {
            fail_at("unknown group constructor '" + name + "'", at);
        }
        return e;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupExpr parse_group_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Named elements per level of the group structure (product factors, wreath base).
struct NameScope {
    std::map<std::string, Element> names;
    std::vector<NameScope> children;
};

struct EvaluatedGroup {
    FamilyInstance instance;
    NameScope scope;
};

inline EvaluatedGroup evaluate(const GroupExpr& e, const Limits& limits = {}) {
    using K = GroupExpr::Kind;
    EvaluatedGroup out{FamilyInstance{build_group(GroupSpec::cyclic(1)), Element::residue(0), "", {}, {}}, {}};
    switch (e.kind) {
    case K::Cyclic:
        out.instance = FamilyInstance{build_group(GroupSpec::cyclic(e.args[0])), Element::residue(1 % e.args[0]),
                                      "cyclic", {e.args[0]}, {}};
        break;
    case K::Heis: out.instance = heisenberg(e.args[0], limits); break;
    case K::Aff: {
        const auto p = e.args[0];
        out.instance = FamilyInstance{build_group(GroupSpec::affine(p)), Element::affine(1, 1 % p), "aff", {p}, {}};
        break;
    }
    case K::RemarkB: out.instance = remark_b_group(e.args[0]); break;
    case K::Tower: out.instance = tower(e.args[0], e.args[1], limits); break;
    case K::Super: out.instance = supersolvable_example(e.args[0]); break;
    case K::Table: {
        std::ifstream in(e.text);
        if (!in) throw SpecError("cannot open table file '" + e.text + "'");
        auto raw = read_table(in);
        auto g = validate_table(raw.n, std::move(raw.entries));
        out.instance = FamilyInstance{g, Element::table(raw.n > 1 ? 1 : 0), "table", {}, {}};
        break;
    }
    case K::Catalog: out.instance = catalog_instance(e.text); break;
    case K::DirProd: {
        std::vector<GroupSpec> specs;
        std::vector<Element> dist;
        for (const auto& c : e.children) {
            auto sub = evaluate(c, limits);
            specs.push_back(sub.instance.group.spec());
            dist.push_back(sub.instance.distinguished);
            out.scope.children.push_back(std::move(sub.scope));
        }
        out.instance = FamilyInstance{build_group(GroupSpec::direct_product(std::move(specs))),
                                      Element::tuple(std::move(dist)), "", {}, {}};
        break;
    }
    case K::Wreath: {
        auto sub = evaluate(e.children[0], limits);
        const auto p = e.args[0];
        std::vector<Element> f(p, sub.instance.group.identity());
        f[0] = sub.instance.distinguished;
        out.instance = FamilyInstance{build_group(GroupSpec::wreath(sub.instance.group.spec(), p)),
                                      Element::wreath(std::move(f), Element::residue(0)), "", {}, {}};
        out.scope.children.push_back(std::move(sub.scope));
        break;
    }
    }
    for (const auto& [k, v] : out.instance.names) out.scope.names[k] = v;
    // The label is always the canonical expression text.
    out.instance.family = print(e);
    out.instance.params.clear();
    return out;
}

}  // namespace conjprod::cli
