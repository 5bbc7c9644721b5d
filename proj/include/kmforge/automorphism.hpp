#pragma once

// Automorphism enumeration by backtracking over generator images.
//
// For a finite group every surjective endomorphism is an automorphism, so
// the full automorphism list is the complete set of structure-preserving
// self-maps this library ever needs. Output is canonically ordered
// (lexicographic on the map array); the identity is always first.

#include "kmforge/caps.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/group.hpp"
#include "kmforge/subgroup.hpp"

#include <algorithm>
#include <vector>

namespace kmforge {

using Automorphism = std::vector<int>;  // map[a] = image of element a

inline Automorphism identity_automorphism(const FiniteGroup& g) {
    Automorphism m(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) m[static_cast<std::size_t>(i)] = i;
    return m;
}

// composition (a after b): (a*b)[x] = a[b[x]]
inline Automorphism compose_automorphisms(const Automorphism& a, const Automorphism& b) {
    Automorphism c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
}

inline Automorphism invert_automorphism(const Automorphism& a) {
    Automorphism r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
    return r;
}

// conjugation x -> c^-1 x c
inline Automorphism inner_automorphism(const FiniteGroup& g, int c) {
    Automorphism m(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) m[static_cast<std::size_t>(x)] = g.conj(x, c);
    return m;
}

inline bool is_full_homomorphism(const FiniteGroup& g, const Automorphism& m) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (m[static_cast<std::size_t>(g.mul(a, b))] !=
                g.mul(m[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

namespace detail {

struct AutSearch {
    const FiniteGroup& g;
    std::vector<int> gens;    // greedy generating elements
    std::vector<int> orders;  // element orders, for pruning
    std::vector<Automorphism> found;

    explicit AutSearch(const FiniteGroup& group) : g(group) {
        std::vector<int> all(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
        gens = greedy_generators(g, all);
        orders.reserve(all.size());
        for (int a = 0; a < g.order(); ++a) orders.push_back(g.element_order(a));
    }

    // Extend the partial map (defined exactly on the subgroup `dom`) with
    // src -> img, then close under products. Returns false on conflict.
    bool close(std::vector<int>& part, std::vector<char>& used, std::vector<int>& dom,
               int src, int img) const {
        if (used[static_cast<std::size_t>(img)]) return false;
        part[static_cast<std::size_t>(src)] = img;
        used[static_cast<std::size_t>(img)] = 1;
        dom.push_back(src);
        // process every ordered pair with at least one coordinate in the
        // newest slice; appended elements form the next slice
        for (std::size_t start = dom.size() - 1; start < dom.size();) {
            const std::size_t end = dom.size();
            for (std::size_t i = 0; i < end; ++i)
                for (std::size_t j = (i < start ? start : 0); j < end; ++j) {
                    int x = dom[i];
                    int y = dom[j];
                    int c = g.mul(x, y);
                    int fc = g.mul(part[static_cast<std::size_t>(x)],
                                   part[static_cast<std::size_t>(y)]);
                    int& slot = part[static_cast<std::size_t>(c)];
                    if (slot >= 0) {
                        if (slot != fc) return false;
                    } else {
                        if (used[static_cast<std::size_t>(fc)]) return false;
                        slot = fc;
                        used[static_cast<std::size_t>(fc)] = 1;
                        dom.push_back(c);
                    }
                }
            start = end;
        }
        return true;
    }

    void extend(const std::vector<int>& part, const std::vector<char>& used,
                const std::vector<int>& dom, std::size_t gi) {
        if (gi == gens.size()) {
            // dom is the closure of all generators, i.e. the whole group
            Automorphism m(part.begin(), part.end());
            if (is_full_homomorphism(g, m)) found.push_back(std::move(m));
            return;
        }
        int src = gens[gi];
        for (int img = 0; img < g.order(); ++img) {
            if (orders[static_cast<std::size_t>(img)] != orders[static_cast<std::size_t>(src)])
                continue;
            std::vector<int> p2 = part;
            std::vector<char> u2 = used;
            std::vector<int> d2 = dom;
            if (close(p2, u2, d2, src, img)) extend(p2, u2, d2, gi + 1);
        }
    }

    std::vector<Automorphism> run() {
        std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
        std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
        std::vector<int> dom{0};
        part[0] = 0;
        used[0] = 1;
        extend(part, used, dom, 0);
        std::sort(found.begin(), found.end());
        return std::move(found);
    }
};

} // namespace detail

// the complete automorphism list, lexicographically sorted on map arrays
inline std::vector<Automorphism> automorphism_group(const FiniteGroup& g) {
    if (static_cast<std::int64_t>(g.order()) > caps().aut_group_order)
        throw InputError("group too large for automorphism enumeration");
    return detail::AutSearch(g).run();
}

inline Subgroup apply_automorphism(const Automorphism& phi, const Subgroup& a) {
    std::vector<int> img;
    img.reserve(a.elements.size());
    for (int x : a.elements) img.push_back(phi[static_cast<std::size_t>(x)]);
    return subgroup_from_elements(*a.group, std::move(img));
}

inline bool is_characteristic(const Subgroup& a, const std::vector<Automorphism>& auts) {
    for (const auto& phi : auts) {
        std::vector<int> img;
        img.reserve(a.elements.size());
        for (int x : a.elements) img.push_back(phi[static_cast<std::size_t>(x)]);
        std::sort(img.begin(), img.end());
        if (img != a.elements) return false;
    }
    return true;
}

} // namespace kmforge
