#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "numeric.hpp"

namespace conjprod {

/// Group order kept as a prime factorisation; iterated wreath products overflow any machine integer.
class GroupOrder {
public:
    GroupOrder() = default;

    static GroupOrder of(std::uint64_t n) {
        GroupOrder o;
        for (const auto& [p, e] : numeric::factorize(n)) o.factors_[p] = e;
        return o;
    }

    GroupOrder& operator*=(const GroupOrder& other) {
        for (const auto& [p, e] : other.factors_) factors_[p] += e;
        return *this;
    }

    friend GroupOrder operator*(GroupOrder a, const GroupOrder& b) { return a *= b; }

    GroupOrder pow(std::uint64_t k) const {
        GroupOrder o;
        if (k == 0) return o;
        for (const auto& [p, e] : factors_) o.factors_[p] = e * k;
        return o;
    }

    const std::map<std::uint64_t, std::uint64_t>& factors() const noexcept { return factors_; }

    /// The prime p when the order is p^k with k >= 1.
    std::optional<std::uint64_t> prime() const {
        if (factors_.size() != 1) return std::nullopt;
        return factors_.begin()->first;
    }

    std::uint64_t exponent(std::uint64_t p) const {
        auto it = factors_.find(p);
        return it == factors_.end() ? 0 : it->second;
    }

    boost::multiprecision::cpp_int value() const {
        boost::multiprecision::cpp_int v = 1;
        for (const auto& [p, e] : factors_)
            for (std::uint64_t i = 0; i < e; ++i) v *= p;
        return v;
    }

    std::optional<std::uint64_t> to_u64() const {
        auto v = value();
        if (v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        return static_cast<std::uint64_t>(v);
    }

    bool at_most(std::uint64_t limit) const { return value() <= limit; }

    std::string to_string() const { return value().str(); }

    friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

private:
    std::map<std::uint64_t, std::uint64_t> factors_;
};

}  // namespace conjprod
