#pragma once

#include "kmforge/json_io.hpp"
#include "kmforge/version.hpp"

#include <cstdint>
#include <cstdio>
#include <string>

namespace kmforge {

// FNV-1a, 64-bit. Used for input fingerprints and the report hash.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return std::string(buf);
}

// A run report. `body` holds command, inputs (with fingerprints), results,
// certificates, and version. Serialization is canonical: nlohmann::json keeps
// object keys sorted, and every exact value is carried as a decimal string.
// The wall-time field is attached only to the printed form and is excluded
// from the canonical text and its hash, so identical inputs yield
// byte-identical canonical reports.
struct RunReport {
    Json body;

    static RunReport make(const std::string& command) {
        RunReport r;
        r.body["command"] = command;
        r.body["version"] = version_string;
        r.body["inputs"] = Json::object();
        r.body["results"] = Json::object();
        r.body["certificates"] = Json::object();
        return r;
    }

    void add_input(const std::string& name, const std::string& source,
                   const std::string& bytes) {
        body["inputs"][name] = source;
        body["inputs"][name + "_hash"] = "fnv1a:" + fnv1a_hex(bytes);
    }

    void add_input(const std::string& name, const std::string& value) {
        add_input(name, value, value);
    }

    std::string canonical_text() const { return body.dump(2) + "\n"; }

    std::string hash() const { return "fnv1a:" + fnv1a_hex(canonical_text()); }

    // The printed form: canonical body plus the hash and the wall time.
    std::string printable(std::int64_t wall_ms) const {
        Json out = body;
        out["report_hash"] = hash();
        out["wall_ms"] = std::to_string(wall_ms);
        return out.dump(2) + "\n";
    }
};

}  // namespace kmforge
