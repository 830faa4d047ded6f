#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace conjprod {

/**
 * A structured group element.
 *
 * One representation serves every group family: residues, tuples for direct
 * products, (base function, top) pairs for wreath products, affine maps and
 * indices into a Cayley table. Elements are plain values; canonical form is
 * enforced by the owning Group, so structural equality is group equality.
 *
 * Ordering: residues and table indices numerically, tuples lexicographically,
 * wreath pairs by (top, base function), affine maps by (slope, shift).
 */
class Element {
public:
    enum class Kind : std::uint8_t { Residue, Tuple, Wreath, Affine, TableIndex };

    Element() = default;

    static Element residue(std::uint64_t value) { return Element(Kind::Residue, value, 0, {}); }

    static Element tuple(std::vector<Element> parts) {
        return Element(Kind::Tuple, 0, 0, std::move(parts));
    }

    /// Wreath pair; `base` is indexed by the points of the action set.
    static Element wreath(std::vector<Element> base, Element top) {
        base.push_back(std::move(top));
        return Element(Kind::Wreath, 0, 0, std::move(base));
    }

    /// The map x -> slope*x + shift.
    static Element affine(std::uint64_t slope, std::uint64_t shift) {
        return Element(Kind::Affine, slope, shift, {});
    }

    static Element table(std::uint64_t index) { return Element(Kind::TableIndex, index, 0, {}); }

    Kind kind() const noexcept { return kind_; }

    /// Residue value or table index.
    std::uint64_t value() const noexcept { return a_; }
    std::uint64_t slope() const noexcept { return a_; }
    std::uint64_t shift() const noexcept { return b_; }

    std::span<const Element> parts() const noexcept { return items_; }

    std::span<const Element> base() const noexcept {
        return std::span<const Element>(items_).first(items_.empty() ? 0 : items_.size() - 1);
    }

    const Element& top() const { return items_.back(); }

    friend bool operator==(const Element& x, const Element& y) {
        return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_ && x.items_ == y.items_;
    }

    friend std::strong_ordering operator<=>(const Element& x, const Element& y) {
        if (x.kind_ != y.kind_) return x.kind_ <=> y.kind_;
        switch (x.kind_) {
        case Kind::Residue:
        case Kind::TableIndex:
            return x.a_ <=> y.a_;
        case Kind::Affine:
            if (auto c = x.a_ <=> y.a_; c != 0) return c;
            return x.b_ <=> y.b_;
        case Kind::Tuple:
            return lexicographic(x.items_.begin(), x.items_.end(), y.items_.begin(), y.items_.end());
        case Kind::Wreath: {
            if (x.items_.empty() || y.items_.empty()) return x.items_.size() <=> y.items_.size();
            if (auto c = x.top() <=> y.top(); c != 0) return c;
            auto xb = x.base();
            auto yb = y.base();
            return lexicographic(xb.begin(), xb.end(), yb.begin(), yb.end());
        }
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
        std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ull;
        h = mix(h, a_);
        h = mix(h, b_);
        for (const auto& item : items_) h = mix(h, item.hash());
        return h;
    }

private:
    Element(Kind kind, std::uint64_t a, std::uint64_t b, std::vector<Element> items)
        : kind_(kind), a_(a), b_(b), items_(std::move(items)) {}

    template <typename It>
    static std::strong_ordering lexicographic(It xb, It xe, It yb, It ye) {
        for (; xb != xe && yb != ye; ++xb, ++yb)
            if (auto c = *xb <=> *yb; c != 0) return c;
        if (xb == xe && yb == ye) return std::strong_ordering::equal;
        return xb == xe ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    static std::size_t mix(std::size_t h, std::size_t v) noexcept {
        return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }

    Kind kind_ = Kind::Residue;
    std::uint64_t a_ = 0;
    std::uint64_t b_ = 0;
    std::vector<Element> items_;
};

struct ElementHash {
    std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

/// Total order used for canonical representatives: -1, 0 or 1.
inline int compare(const Element& x, const Element& y) {
    auto c = x <=> y;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace conjprod

template <>
struct std::hash<conjprod::Element> {
    std::size_t operator()(const conjprod::Element& e) const noexcept { return e.hash(); }
};
