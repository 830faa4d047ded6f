#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../theorems.hpp"

namespace conjprod::cli {

inline constexpr int kSchemaVersion = 1;

/// One analysed conjugacy class and its class square.
struct ClassRow {
    std::string group;
    std::string rep;
    std::size_t size = 0;
    std::optional<std::uint64_t> n;
    std::size_t eta = 0;
    std::vector<std::size_t> square_class_sizes;
};

struct OutputRecord {
    std::string command;
    KeyValues params;
    /// Group-level facts printed ahead of the rows (order, center size, ...).
    KeyValues info;
    std::vector<TheoremReport> reports;
    std::vector<ClassRow> classes;
    std::vector<std::uint64_t> values;

    bool all_pass() const {
        for (const auto& r : reports)
            if (!r.pass) return false;
        return true;
    }
};

enum class Format { Human, Structured };

inline std::string report_line(const TheoremReport& r) {
    std::string s = r.claim_id;
    for (const auto* kv : {&r.params, &r.computed})
        for (const auto& [k, v] : *kv) s += " " + k + "=" + v;
    // Expected values sharing a key with a measured one are marked.
    for (const auto& [k, v] : r.expected) {
        const bool shadowed = std::any_of(r.computed.begin(), r.computed.end(),
                                          [&](const auto& kv) { return kv.first == k; });
        s += " " + (shadowed ? "expected_" + k : k) + "=" + v;
    }
    s += r.pass ? " PASS" : " FAIL";
    if (r.tight && *r.tight) s += " TIGHT";
    return s;
}

namespace detail {

inline nlohmann::ordered_json kv_object(const KeyValues& kv) {
    auto o = nlohmann::ordered_json::object();
    for (const auto& [k, v] : kv) o[k] = v;
    return o;
}

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

}  // namespace detail

/**
 * Human format: one line per report or class, witnesses indented under
 * failing reports. Structured format: JSON with a fixed key order,
 * documented in docs/report-schema.md.
 */
inline std::string serialize_report(const OutputRecord& rec, Format format) {
    if (format == Format::Structured) {
        nlohmann::ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = rec.command;
        j["params"] = detail::kv_object(rec.params);
        j["info"] = detail::kv_object(rec.info);
        auto reports = nlohmann::ordered_json::array();
        for (const auto& r : rec.reports) {
            nlohmann::ordered_json o;
            o["claim_id"] = r.claim_id;
            o["params"] = detail::kv_object(r.params);
            o["expected"] = detail::kv_object(r.expected);
            o["computed"] = detail::kv_object(r.computed);
            o["status"] = r.pass ? "pass" : "fail";
            if (r.tight) o["tight"] = *r.tight;
            o["witnesses"] = r.witnesses;
            reports.push_back(std::move(o));
        }
        j["reports"] = std::move(reports);
        auto classes = nlohmann::ordered_json::array();
        for (const auto& c : rec.classes) {
            nlohmann::ordered_json o;
            o["group"] = c.group;
            o["rep"] = c.rep;
            o["size"] = c.size;
            o["n"] = c.n ? nlohmann::ordered_json(*c.n) : nlohmann::ordered_json(nullptr);
            o["eta"] = c.eta;
            o["square_class_sizes"] = c.square_class_sizes;
            classes.push_back(std::move(o));
        }
        j["classes"] = std::move(classes);
        j["values"] = rec.values;
        j["status"] = rec.all_pass() ? "pass" : "fail";
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    if (!rec.info.empty()) {
        out << "Group";
        for (const auto& [k, v] : rec.info) out << ' ' << k << '=' << v;
        out << '\n';
    }
    for (const auto& c : rec.classes) {
        out << "Class group=" << c.group << " rep=" << c.rep << " size=" << c.size
            << " n=" << (c.n ? std::to_string(*c.n) : std::string("-")) << " eta=" << c.eta
            << " square=" << detail::join(c.square_class_sizes) << '\n';
    }
    for (const auto& r : rec.reports) {
        out << report_line(r) << '\n';
        if (!r.pass)
            for (const auto& w : r.witnesses) out << "  witness: " << w << '\n';
    }
    if (!rec.values.empty()) {
        for (std::size_t i = 0; i < rec.values.size(); ++i) out << (i ? " " : "") << rec.values[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace conjprod::cli
