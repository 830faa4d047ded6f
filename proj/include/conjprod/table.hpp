#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace conjprod {

/// Validated multiplication table of a finite group; identity is index 0.
class CayleyTable {
public:
    std::size_t size() const noexcept { return n_; }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    std::uint32_t inverse(std::size_t i) const { return inverses_[i]; }

    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    CayleyTable(std::size_t n, std::vector<std::uint32_t> entries, std::vector<std::uint32_t> inverses)
        : n_(n), entries_(std::move(entries)), inverses_(std::move(inverses)) {}

    friend std::shared_ptr<const CayleyTable> check_cayley_table(std::size_t, std::vector<std::uint32_t>,
                                                                 bool);

    std::size_t n_;
    std::vector<std::uint32_t> entries_;
    std::vector<std::uint32_t> inverses_;
};

/// Tables larger than this are only accepted with `trusted` set.
inline constexpr std::size_t kFullAssociativityLimit = 256;

/**
 * Checks the group axioms on a row-major n*n table and returns the validated table.
 *
 * Verifies range, identity at index 0, the Latin-square property, inverses and,
 * for n <= 256, associativity on every triple. `trusted` skips associativity
 * and lifts the size restriction; use it only for tables derived from a group.
 */
inline std::shared_ptr<const CayleyTable> check_cayley_table(std::size_t n, std::vector<std::uint32_t> entries,
                                                             bool trusted = false) {
    auto cell = [](std::size_t i, std::size_t j) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    if (n == 0) throw NotAGroup("empty table");
    if (entries.size() != n * n)
        throw NotAGroup("table has " + std::to_string(entries.size()) + " entries, expected " +
                        std::to_string(n * n));
    if (n > kFullAssociativityLimit && !trusted)
        throw NotAGroup("table of order " + std::to_string(n) + " exceeds the associativity-check limit " +
                        std::to_string(kFullAssociativityLimit) + "; pass the trust flag to accept it");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (entries[i * n + j] >= n)
                throw NotAGroup("entry out of range at cell " + cell(i, j));

    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i] != i) throw NotAGroup("row 0 is not the identity row at cell " + cell(0, i));
        if (entries[i * n] != i) throw NotAGroup("column 0 is not the identity column at cell " + cell(i, 0));
    }

    std::vector<std::uint32_t> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < n; ++j)
            if (seen[entries[i * n + j]]++ != 0) throw NotAGroup("row " + std::to_string(i) + " repeats a value at cell " + cell(i, j));
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
            if (seen[entries[i * n + j]]++ != 0) throw NotAGroup("column " + std::to_string(j) + " repeats a value at cell " + cell(i, j));
    }

    std::vector<std::uint32_t> inverses(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        while (j < n && entries[i * n + j] != 0) ++j;
        if (j == n || entries[j * n + i] != 0)
            throw NotAGroup("element " + std::to_string(i) + " has no two-sided inverse");
        inverses[i] = static_cast<std::uint32_t>(j);
    }

    if (!trusted) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t xy = entries[x * n + y];
                for (std::size_t z = 0; z < n; ++z) {
                    if (entries[xy * n + z] != entries[x * n + entries[y * n + z]])
                        throw NotAGroup("associativity fails for triple (" + std::to_string(x) + "," +
                                        std::to_string(y) + "," + std::to_string(z) + ")");
                }
            }
    }

    return std::shared_ptr<const CayleyTable>(new CayleyTable(n, std::move(entries), std::move(inverses)));
}

/// Raw table as read from a file; not yet validated.
struct RawTable {
    std::size_t n = 0;
    std::vector<std::uint32_t> entries;
};

/**
 * Reads the Cayley-table file format: first line n, then n lines of n
 * space-separated 0-based indices. Lines starting with '#' are ignored.
 */
inline RawTable read_table(std::istream& in) {
    RawTable raw;
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw NotAGroup("table file is empty");
    {
        std::istringstream head(rows[0]);
        long long n = 0;
        if (!(head >> n) || n <= 0) throw NotAGroup("first line must be a positive order");
        raw.n = static_cast<std::size_t>(n);
    }
    if (rows.size() != raw.n + 1)
        throw NotAGroup("expected " + std::to_string(raw.n) + " table rows, found " + std::to_string(rows.size() - 1));
    raw.entries.reserve(raw.n * raw.n);
    for (std::size_t r = 1; r <= raw.n; ++r) {
        std::istringstream row(rows[r]);
        long long v = 0;
        std::size_t count = 0;
        while (row >> v) {
            if (v < 0) throw NotAGroup("negative entry on row " + std::to_string(r - 1));
            raw.entries.push_back(static_cast<std::uint32_t>(v));
            ++count;
        }
        if (!row.eof()) throw NotAGroup("non-numeric entry on row " + std::to_string(r - 1));
        if (count != raw.n)
            throw NotAGroup("row " + std::to_string(r - 1) + " has " + std::to_string(count) + " entries");
    }
    return raw;
}

inline void write_table(std::ostream& out, const CayleyTable& table) {
    const std::size_t n = table.size();
    out << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << table(i, j);
        }
        out << '\n';
    }
}

}  // namespace conjprod
