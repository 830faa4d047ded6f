#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "table.hpp"

namespace conjprod {

/// How the top group of a wreath product permutes the points of its action set.
enum class WreathAction {
    CyclicShift,    ///< Cyclic(k) on Z_k by t.x = x + t
    AffineNatural,  ///< Affine(p) on F_p by (m,b).x = m*x + b
};

inline const char* to_string(WreathAction a) {
    return a == WreathAction::CyclicShift ? "shift" : "affine";
}

/// Structural description of a group built from constructors.
class GroupSpec {
public:
    enum class Kind { Cyclic, DirectProduct, Wreath, WreathOverSet, Affine, Table, Heisenberg, Catalog };

    static GroupSpec cyclic(std::uint64_t m) {
        if (m < 1) throw SpecError("cyclic order must be positive");
        GroupSpec s(Kind::Cyclic);
        s.n_ = m;
        return s;
    }

    static GroupSpec direct_product(std::vector<GroupSpec> parts) {
        if (parts.empty()) throw SpecError("direct product needs at least one factor");
        GroupSpec s(Kind::DirectProduct);
        s.children_ = std::move(parts);
        return s;
    }

    /// base wr C_p with the top group shifting p coordinates cyclically.
    static GroupSpec wreath(GroupSpec base, std::uint64_t p) {
        require_prime(p, "wreath top order");
        GroupSpec s(Kind::Wreath);
        s.n_ = p;
        s.children_.push_back(std::move(base));
        return s;
    }

    static GroupSpec wreath_over_set(GroupSpec base, GroupSpec top, std::uint64_t set_size, WreathAction action) {
        if (set_size < 1) throw SpecError("action set must be nonempty");
        if (action == WreathAction::CyclicShift &&
            !(top.kind() == Kind::Cyclic && top.modulus() == set_size))
            throw SpecError("shift action needs top group Cyclic(" + std::to_string(set_size) + ")");
        if (action == WreathAction::AffineNatural &&
            !(top.kind() == Kind::Affine && top.modulus() == set_size))
            throw SpecError("affine action needs top group Affine(" + std::to_string(set_size) + ")");
        GroupSpec s(Kind::WreathOverSet);
        s.n_ = set_size;
        s.action_ = action;
        s.children_.push_back(std::move(base));
        s.children_.push_back(std::move(top));
        return s;
    }

    static GroupSpec affine(std::uint64_t p) {
        require_prime(p, "affine group field size");
        GroupSpec s(Kind::Affine);
        s.n_ = p;
        return s;
    }

    static GroupSpec table(std::shared_ptr<const CayleyTable> t) {
        if (!t) throw SpecError("null table");
        GroupSpec s(Kind::Table);
        s.n_ = t->size();
        s.table_ = std::move(t);
        return s;
    }

    static GroupSpec heisenberg(std::uint64_t p) {
        if (!numeric::is_prime(p) || p == 2)
            throw SpecError("Heisenberg group needs an odd prime, got " + std::to_string(p));
        GroupSpec s(Kind::Heisenberg);
        s.n_ = p;
        return s;
    }

    static GroupSpec catalog(std::string name) {
        GroupSpec s(Kind::Catalog);
        s.name_ = std::move(name);
        return s;
    }

    Kind kind() const noexcept { return kind_; }
    /// Cyclic order, prime of Wreath/Affine/Heisenberg, set size of WreathOverSet, table order.
    std::uint64_t modulus() const noexcept { return n_; }
    const std::vector<GroupSpec>& parts() const noexcept { return children_; }
    const GroupSpec& base() const { return children_.at(0); }
    const GroupSpec& top() const { return children_.at(1); }
    WreathAction action() const noexcept { return action_; }
    const std::shared_ptr<const CayleyTable>& table() const noexcept { return table_; }
    const std::string& name() const noexcept { return name_; }

    std::string describe() const {
        switch (kind_) {
        case Kind::Cyclic: return "Cyclic(" + std::to_string(n_) + ")";
        case Kind::DirectProduct: {
            std::string s = "DirectProduct(";
            for (std::size_t i = 0; i < children_.size(); ++i) s += (i ? ", " : "") + children_[i].describe();
            return s + ")";
        }
        case Kind::Wreath: return "Wreath(" + base().describe() + ", " + std::to_string(n_) + ")";
        case Kind::WreathOverSet:
            return "WreathOverSet(" + base().describe() + ", " + top().describe() + ", " + std::to_string(n_) + ", " +
                   conjprod::to_string(action_) + ")";
        case Kind::Affine: return "Affine(" + std::to_string(n_) + ")";
        case Kind::Table: return "Table(" + std::to_string(n_) + ")";
        case Kind::Heisenberg: return "Heisenberg(" + std::to_string(n_) + ")";
        case Kind::Catalog: return "Catalog(" + name_ + ")";
        }
        return {};
    }

private:
    explicit GroupSpec(Kind k) : kind_(k) {}

    static void require_prime(std::uint64_t p, const char* what) {
        if (!numeric::is_prime(p)) throw SpecError(std::string(what) + " " + std::to_string(p) + " is not prime");
    }

    Kind kind_;
    std::uint64_t n_ = 0;
    std::vector<GroupSpec> children_;
    WreathAction action_ = WreathAction::CyclicShift;
    std::shared_ptr<const CayleyTable> table_;
    std::string name_;
};

}  // namespace conjprod
