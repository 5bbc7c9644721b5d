#pragma once

// Built-in group catalog. Every entry is a permutation generator list;
// element indexing then follows from the BFS convention in FiniteGroup.
// Names are stable: changing a generator list is a breaking change.

#include "kmforge/errors.hpp"
#include "kmforge/group.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace kmforge {

namespace detail {

inline std::vector<int> cycle_perm(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + 1) % n;
    return p;
}

inline std::vector<std::vector<int>> dihedral_gens(int order) {
    int m = order / 2;
    std::vector<int> rot = cycle_perm(m);
    std::vector<int> ref(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ref[static_cast<std::size_t>(i)] = (m - i) % m;
    return {rot, ref};
}

// generalized quaternion of the given order, as left-regular permutations on
// pairs (i,j) with i in Z_{order/2}, j in {0,1}; b^2 = a^{order/4}, bab^-1 = a^-1
inline std::vector<std::vector<int>> quaternion_gens(int order) {
    int m = order / 2;
    int half = m / 2;
    auto mul = [m, half](std::pair<int, int> x, std::pair<int, int> y) {
        auto [i, j] = x;
        auto [k, l] = y;
        if (j == 0) return std::pair<int, int>{(i + k) % m, l};
        int mm = ((i - k) % m + m) % m;
        if (j + l == 2) return std::pair<int, int>{(mm + half) % m, 0};
        return std::pair<int, int>{mm, 1};
    };
    auto index = [m](std::pair<int, int> e) { return e.second * m + e.first; };
    auto leftmul = [&](std::pair<int, int> z) {
        std::vector<int> p(static_cast<std::size_t>(2 * m));
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < m; ++i)
                p[static_cast<std::size_t>(index({i, j}))] = index(mul(z, {i, j}));
        return p;
    };
    return {leftmul({1, 0}), leftmul({0, 1})};
}

// modular group of order 16: a^8 = b^2 = 1, b a b^-1 = a^5
inline std::vector<std::vector<int>> modular16_gens() {
    auto pow5 = [](int j) { return j == 0 ? 1 : 5; };
    auto mul = [pow5](std::pair<int, int> x, std::pair<int, int> y) {
        auto [i, j] = x;
        auto [k, l] = y;
        return std::pair<int, int>{(i + pow5(j) * k) % 8, (j + l) % 2};
    };
    auto index = [](std::pair<int, int> e) { return e.second * 8 + e.first; };
    auto leftmul = [&](std::pair<int, int> z) {
        std::vector<int> p(16);
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 8; ++i)
                p[static_cast<std::size_t>(index({i, j}))] = index(mul(z, {i, j}));
        return p;
    };
    return {leftmul({1, 0}), leftmul({0, 1})};
}

// SL(2,3) acting on the 8 nonzero vectors of F3^2
inline std::vector<std::vector<int>> sl23_gens() {
    std::vector<std::pair<int, int>> vecs;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != 0 || b != 0) vecs.push_back({a, b});
    auto vec_index = [&](std::pair<int, int> v) {
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (vecs[i] == v) return static_cast<int>(i);
        return -1;
    };
    auto mat_perm = [&](int m00, int m01, int m10, int m11) {
        std::vector<int> p(vecs.size());
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            auto [a, b] = vecs[i];
            p[i] = vec_index({(m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3});
        }
        return p;
    };
    return {mat_perm(1, 1, 0, 1), mat_perm(1, 0, 1, 1)};
}

// elementary abelian p^k as k commuting p-cycles on disjoint blocks
inline std::vector<std::vector<int>> elementary_gens(int p, int k) {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < k; ++i) {
        std::vector<int> base(static_cast<std::size_t>(p * k));
        for (int q = 0; q < p * k; ++q) base[static_cast<std::size_t>(q)] = q;
        for (int j = 0; j < p; ++j) base[static_cast<std::size_t>(i * p + j)] = i * p + (j + 1) % p;
        gens.push_back(base);
    }
    return gens;
}

} // namespace detail

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (int k = 2; k <= 16; ++k) v.push_back("C" + std::to_string(k));
        for (int o : {8, 10, 12, 14, 16}) v.push_back("D" + std::to_string(o));
        for (const char* n : {"Q8", "Q16", "S3", "S4", "A4", "A5", "SL(2,3)",
                              "E4", "E8", "E9", "E27", "C4xC2", "M16"})
            v.push_back(n);
        return v;
    }();
    return names;
}

inline std::vector<std::vector<int>> catalog_generators(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'C' && name.find('x') == std::string::npos &&
        std::isdigit(static_cast<unsigned char>(name[1]))) {
        int k = std::stoi(name.substr(1));
        if (k >= 2 && k <= 16) return {detail::cycle_perm(k)};
    }
    if (name.size() >= 2 && name[0] == 'D' &&
        std::isdigit(static_cast<unsigned char>(name[1]))) {
        int o = std::stoi(name.substr(1));
        if (o == 8 || o == 10 || o == 12 || o == 14 || o == 16) return detail::dihedral_gens(o);
    }
    if (name == "Q8") return detail::quaternion_gens(8);
    if (name == "Q16") return detail::quaternion_gens(16);
    if (name == "S3") return {{1, 2, 0}, {1, 0, 2}};
    if (name == "S4") return {{1, 2, 3, 0}, {1, 0, 2, 3}};
    if (name == "A4") return {{1, 2, 0, 3}, {1, 0, 3, 2}};
    if (name == "A5") return {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}};
    if (name == "SL(2,3)") return detail::sl23_gens();
    if (name == "E4") return detail::elementary_gens(2, 2);
    if (name == "E8") return detail::elementary_gens(2, 3);
    if (name == "E9") return detail::elementary_gens(3, 2);
    if (name == "E27") return detail::elementary_gens(3, 3);
    if (name == "C4xC2") return {{1, 2, 3, 0, 4, 5}, {0, 1, 2, 3, 5, 4}};
    if (name == "M16") return detail::modular16_gens();
    throw InputError("unknown catalog group: " + name);
}

inline FiniteGroup catalog_group(const std::string& name) {
    return FiniteGroup::from_permutations(catalog_generators(name));
}

// p-group catalog entries with their prime, for rank-based sweeps
inline std::vector<std::pair<std::string, int>> catalog_p_groups() {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& name : catalog_names()) {
        FiniteGroup g = catalog_group(name);
        int n = g.order();
        for (int p : {2, 3, 5, 7, 11, 13}) {
            int m = n;
            while (m % p == 0) m /= p;
            if (m == 1) {
                out.push_back({name, p});
                break;
            }
        }
    }
    return out;
}

} // namespace kmforge
