#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace kmforge {

// Size caps that keep every operation's cost explicit. The environment
// variable KMFORGE_CAPS ("name=value,name=value") may raise individual caps;
// values below the built-in defaults are ignored, so the env var can never
// weaken a correctness check.
struct Caps {
    std::int64_t group_order = 4096;         // permutation-built groups
    std::int64_t cayley_order = 464;         // table input, O(n^3) validation stays < 1e8
    std::int64_t aut_group_order = 512;      // automorphism enumeration
    std::int64_t subgroup_enum_order = 64;   // full subgroup-lattice enumeration
    std::int64_t tuple_product = 10000000;   // verbal-subgroup tuple space
    std::int64_t node_product = 10000000;    // verbal-subgroup per-node value-set work
    std::int64_t word_weight = 6;            // outer-word weight
    std::int64_t census_weight = 4;          // chain-identity verification weight
    std::int64_t endo_space = 10000000;      // brute-force endo search, p^(d*d)
    std::int64_t bigint_digits = 100000;     // decimal digits for representable bounds
};

namespace detail {

inline Caps parse_caps_env() {
    Caps c;
    const char* env = std::getenv("KMFORGE_CAPS");
    if (env == nullptr) return c;
    std::string s(env);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string item = s.substr(pos, comma - pos);
        pos = comma + 1;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::int64_t val = 0;
        try {
            val = std::stoll(item.substr(eq + 1));
        } catch (...) {
            continue;
        }
        auto raise = [val](std::int64_t& slot) {
            if (val > slot) slot = val;
        };
        if (key == "group_order") raise(c.group_order);
        else if (key == "cayley_order") raise(c.cayley_order);
        else if (key == "aut_group_order") raise(c.aut_group_order);
        else if (key == "subgroup_enum_order") raise(c.subgroup_enum_order);
        else if (key == "tuple_product") raise(c.tuple_product);
        else if (key == "node_product") raise(c.node_product);
        else if (key == "word_weight") raise(c.word_weight);
        else if (key == "census_weight") raise(c.census_weight);
        else if (key == "endo_space") raise(c.endo_space);
        else if (key == "bigint_digits") raise(c.bigint_digits);
    }
    return c;
}

} // namespace detail

inline const Caps& caps() {
    static const Caps c = detail::parse_caps_env();
    return c;
}

} // namespace kmforge
