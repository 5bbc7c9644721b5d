#pragma once

// Subgroups of a FiniteGroup, stored canonically as sorted element-index
// lists plus a small deterministic generating set. All operations are pure;
// a Subgroup never outlives the group it points at.

#include "kmforge/errors.hpp"
#include "kmforge/group.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace kmforge {

struct Subgroup {
    const FiniteGroup* group = nullptr;
    std::vector<int> elements;    // sorted, contains 0, closed under the product
    std::vector<int> generators;  // closure of these equals elements

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
};

// canonical order: by size, then lexicographically on element lists
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
}

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
    if (a.group != b.group) throw InputError("parent mismatch");
}

inline void require_same_parent(const FiniteGroup& g, const Subgroup& a) {
    if (a.group != &g) throw InputError("parent mismatch");
}

namespace detail {

// closure of {0} u seeds under right multiplication by seeds; in a finite
// group this is exactly the generated subgroup
inline std::vector<int> closure_elements(const FiniteGroup& g, const std::vector<int>& seeds) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> out;
    in[0] = 1;
    out.push_back(0);
    for (std::size_t head = 0; head < out.size(); ++head)
        for (int s : seeds) {
            int y = g.mul(out[head], s);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// smallest generating list in the greedy sense: repeatedly adjoin the
// lowest-index element not yet generated
inline std::vector<int> greedy_generators(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<int> gens;
    std::vector<int> have = closure_elements(g, gens);
    while (have.size() < elems.size()) {
        int next = -1;
        for (int e : elems)
            if (!std::binary_search(have.begin(), have.end(), e)) {
                next = e;
                break;
            }
        gens.push_back(next);
        have = closure_elements(g, gens);
    }
    return gens;
}

} // namespace detail

inline Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup s;
    s.group = &g;
    s.generators = detail::greedy_generators(g, elems);
    s.elements = std::move(elems);
    return s;
}

inline Subgroup subgroup_generate(const FiniteGroup& g, const std::vector<int>& seeds) {
    for (int s : seeds)
        if (s < 0 || s >= g.order()) throw InputError("invalid generator: element index out of range");
    Subgroup s;
    s.group = &g;
    s.elements = detail::closure_elements(g, seeds);
    s.generators = detail::greedy_generators(g, s.elements);
    return s;
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return subgroup_generate(g, {}); }

inline Subgroup full_subgroup(const FiniteGroup& g) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    return subgroup_from_elements(g, std::move(all));
}

inline bool is_subset(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(),
                         a.elements.end());
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    std::vector<int> seeds = a.generators;
    seeds.insert(seeds.end(), b.generators.begin(), b.generators.end());
    return subgroup_generate(*a.group, seeds);
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    std::vector<int> common;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(common));
    return subgroup_from_elements(*a.group, std::move(common));
}

inline int index_in_parent(const Subgroup& a) { return a.group->order() / a.order(); }

inline bool is_normal(const Subgroup& a) {
    const FiniteGroup& g = *a.group;
    for (int x : a.elements)
        for (int c = 0; c < g.order(); ++c)
            if (!a.contains(g.conj(x, c))) return false;
    return true;
}

inline Subgroup normal_closure(const FiniteGroup& g, const std::vector<int>& seeds) {
    Subgroup cur = subgroup_generate(g, seeds);
    for (;;) {
        std::vector<int> extra;
        for (int x : cur.elements)
            for (int c = 0; c < g.order(); ++c) {
                int y = g.conj(x, c);
                if (!cur.contains(y)) extra.push_back(y);
            }
        if (extra.empty()) return cur;
        extra.insert(extra.end(), cur.generators.begin(), cur.generators.end());
        cur = subgroup_generate(g, extra);
    }
}

// largest normal subgroup of the parent contained in a: intersection of all
// conjugates of a
inline Subgroup normal_core(const Subgroup& a) {
    const FiniteGroup& g = *a.group;
    std::vector<char> core(static_cast<std::size_t>(g.order()), 0);
    for (int x : a.elements) core[static_cast<std::size_t>(x)] = 1;
    for (int c = 0; c < g.order(); ++c) {
        std::vector<char> conj_set(static_cast<std::size_t>(g.order()), 0);
        for (int x : a.elements) conj_set[static_cast<std::size_t>(g.conj(x, c))] = 1;
        for (int i = 0; i < g.order(); ++i)
            if (!conj_set[static_cast<std::size_t>(i)]) core[static_cast<std::size_t>(i)] = 0;
    }
    std::vector<int> elems;
    for (int i = 0; i < g.order(); ++i)
        if (core[static_cast<std::size_t>(i)]) elems.push_back(i);
    return subgroup_from_elements(g, std::move(elems));
}

// Quotient G/N for normal N. Cosets are indexed by first-seen representative
// scanning element indices upward, so the identity coset is index 0.
struct Quotient {
    FiniteGroup group;
    std::vector<int> projection;  // element index -> coset index
};

inline Quotient quotient(const Subgroup& n) {
    if (!is_normal(n)) throw InputError("subgroup not normal");
    const FiniteGroup& g = *n.group;
    std::vector<int> proj(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (proj[static_cast<std::size_t>(x)] != -1) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : n.elements) proj[static_cast<std::size_t>(g.mul(x, h))] = id;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::int32_t> table(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<std::size_t>(i) * static_cast<std::size_t>(q) +
                  static_cast<std::size_t>(j)] =
                proj[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(i)],
                                                    reps[static_cast<std::size_t>(j)]))];
    Quotient out;
    out.group = FiniteGroup::from_table_unchecked(std::move(table), q);
    out.projection = std::move(proj);
    return out;
}

inline Subgroup derived_subgroup(const Subgroup& a) {
    const FiniteGroup& g = *a.group;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> comms;
    for (int x : a.elements)
        for (int y : a.elements) {
            int c = g.comm(x, y);
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                comms.push_back(c);
            }
        }
    return subgroup_generate(g, comms);
}

struct DerivedSeries {
    std::vector<Subgroup> series;  // starts at the full group, strictly descends
    bool solvable = false;
    // number of strict steps to reach the trivial subgroup; meaningful only
    // when solvable
    int derived_length = 0;
};

inline DerivedSeries derived_series(const FiniteGroup& g) {
    DerivedSeries out;
    out.series.push_back(full_subgroup(g));
    for (;;) {
        Subgroup next = derived_subgroup(out.series.back());
        if (next.order() == out.series.back().order()) break;
        out.series.push_back(std::move(next));
    }
    out.solvable = out.series.back().order() == 1;
    out.derived_length = out.solvable ? static_cast<int>(out.series.size()) - 1 : -1;
    return out;
}

// Rank of a p-group: log_p of |G / Phi(G)|. For p-groups the Frattini
// subgroup is generated by commutators and p-th powers (Burnside basis
// theorem); the test suite cross-checks against the intersection of all
// maximal subgroups.
inline int p_rank(const FiniteGroup& g, int p) {
    if (p < 2) throw InputError("order not a power of p");
    long long n = g.order();
    while (n % p == 0) n /= p;
    if (n != 1) throw InputError("order not a power of p");
    std::vector<int> seeds;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) seeds.push_back(g.comm(a, b));
    for (int a = 0; a < g.order(); ++a) {
        int x = 0;
        for (int i = 0; i < p; ++i) x = g.mul(x, a);
        seeds.push_back(x);
    }
    Subgroup phi = subgroup_generate(g, seeds);
    long long idx = g.order() / phi.order();
    int r = 0;
    while (idx % p == 0) {
        idx /= p;
        ++r;
    }
    if (idx != 1) throw CertificateError("Frattini quotient order not a power of p");
    return r;
}

// Every subgroup, in canonical order. Seeds with all cyclic subgroups and
// closes under pairwise joins; every subgroup is a join of cyclic ones.
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    if (static_cast<std::int64_t>(g.order()) > caps().subgroup_enum_order)
        throw InputError("group too large for subgroup enumeration");
    std::vector<std::vector<int>> found;
    auto add = [&found](std::vector<int> elems) {
        for (const auto& f : found)
            if (f == elems) return false;
        found.push_back(std::move(elems));
        return true;
    };
    add(detail::closure_elements(g, {}));
    for (int a = 0; a < g.order(); ++a) add(detail::closure_elements(g, {a}));
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < found.size(); ++i)
            for (std::size_t j = i + 1; j < found.size(); ++j) {
                std::vector<int> seeds = found[i];
                seeds.insert(seeds.end(), found[j].begin(), found[j].end());
                if (add(detail::closure_elements(g, seeds))) grew = true;
            }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(subgroup_from_elements(g, std::move(f)));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
    std::vector<Subgroup> out;
    for (auto& s : all_subgroups(g))
        if (is_normal(s)) out.push_back(std::move(s));
    return out;
}

} // namespace kmforge
