#pragma once

#include <cstdint>

namespace conjprod {

/// Resource caps; exceeding any of them raises ResourceError.
struct Limits {
    /// Largest group order for which full enumeration (center, quotient, all classes) is allowed.
    std::uint64_t enumeration = std::uint64_t{1} << 15;
    /// Largest conjugacy orbit computed by closure.
    std::uint64_t orbit = 1'000'000;
    /// Largest |A|*|B| for a class product.
    std::uint64_t product_pairs = 10'000'000;
};

}  // namespace conjprod
