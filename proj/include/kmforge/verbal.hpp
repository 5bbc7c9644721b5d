#pragma once

// Verbal subgroups of outer words evaluated on tuples of subgroups.
//
// The value set is computed by a per-node recursion: each bracket node
// combines the distinct values of its children. For an outer word (every
// variable occurs once) this equals the set of values over all argument
// tuples, at cost sum |L||R| per node instead of the product of all |Ai|.

#include "kmforge/caps.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/group.hpp"
#include "kmforge/subgroup.hpp"
#include "kmforge/word.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace kmforge {

namespace detail {

struct ValueSetEngine {
    const FiniteGroup& g;
    const OuterWord& w;
    const std::vector<const std::vector<int>*>& args;  // element lists, by slot
    std::int64_t budget;  // remaining node-product budget, < 0 once exhausted

    std::vector<int> run(int node) {
        const auto& n = w.nodes[static_cast<std::size_t>(node)];
        if (n.var >= 0) return *args[static_cast<std::size_t>(n.var)];
        std::vector<int> l = run(n.left);
        std::vector<int> r = run(n.right);
        std::int64_t cost = static_cast<std::int64_t>(l.size()) * static_cast<std::int64_t>(r.size());
        budget -= cost;
        if (budget < 0) throw CertificateError("tuple space too large");
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        std::vector<int> out;
        for (int u : l)
            for (int v : r) {
                int val = g.comm(u, v);
                if (!seen[static_cast<std::size_t>(val)]) {
                    seen[static_cast<std::size_t>(val)] = 1;
                    out.push_back(val);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Refuse only when both the tuple-space cap and the node-product cap are
// exceeded; either one alone keeps the evaluation within budget.
inline std::int64_t value_budget(const std::vector<const std::vector<int>*>& args) {
    std::int64_t prod = 1;
    bool tuple_ok = true;
    for (const auto* a : args) {
        prod *= static_cast<std::int64_t>(a->size());
        if (prod > caps().tuple_product) {
            tuple_ok = false;
            break;
        }
    }
    if (tuple_ok) return std::numeric_limits<std::int64_t>::max() / 2;
    return caps().node_product;
}

} // namespace detail

// distinct values of w(a1,..,at), ai ranging over args[i], sorted
inline std::vector<int> value_set(const FiniteGroup& g, const OuterWord& w,
                                  const std::vector<const std::vector<int>*>& args) {
    if (static_cast<int>(args.size()) != w.weight) throw InputError("arity mismatch");
    detail::ValueSetEngine eng{g, w, args, detail::value_budget(args)};
    return eng.run(w.root);
}

inline std::vector<const std::vector<int>*> arg_lists(const std::vector<Subgroup>& subs) {
    std::vector<const std::vector<int>*> out;
    out.reserve(subs.size());
    for (const auto& s : subs) out.push_back(&s.elements);
    return out;
}

// normal closure of the value set: the smallest normal subgroup containing
// all values of w on the given argument subgroups
inline Subgroup verbal_subgroup(const FiniteGroup& g, const OuterWord& w,
                                const std::vector<Subgroup>& args) {
    for (const auto& a : args) require_same_parent(g, a);
    std::vector<int> vals = value_set(g, w, arg_lists(args));
    return normal_closure(g, vals);
}

inline Subgroup verbal_subgroup(const FiniteGroup& g, const PermutedWord& pw,
                                const std::vector<Subgroup>& args) {
    std::vector<Subgroup> re;
    re.reserve(args.size());
    for (std::size_t i = 0; i < args.size(); ++i)
        re.push_back(args[static_cast<std::size_t>(pw.sigma[i])]);
    return verbal_subgroup(g, pw.word, re);
}

// w(n1,..,nt) = 1 for all tuples from n
inline bool satisfies_identity(const FiniteGroup& g, const OuterWord& w, const Subgroup& n) {
    require_same_parent(g, n);
    std::vector<const std::vector<int>*> args(static_cast<std::size_t>(w.weight), &n.elements);
    std::vector<int> vals = value_set(g, w, args);
    return vals.size() == 1 && vals[0] == 0;
}

// Multilinearity of w in one slot, on normal arguments:
// w(.., Ai join Ai2, ..) = w(.., Ai, ..) join w(.., Ai2, ..) as verbal subgroups.
inline bool check_multilinearity(const FiniteGroup& g, const OuterWord& w,
                                 const std::vector<Subgroup>& args, const Subgroup& alt,
                                 int slot) {
    if (static_cast<int>(args.size()) != w.weight || slot < 0 || slot >= w.weight)
        throw InputError("arity mismatch");
    for (const auto& a : args)
        if (!is_normal(a)) throw InputError("argument not normal");
    if (!is_normal(alt)) throw InputError("argument not normal");

    std::vector<Subgroup> joined = args;
    joined[static_cast<std::size_t>(slot)] = join(args[static_cast<std::size_t>(slot)], alt);
    Subgroup lhs = verbal_subgroup(g, w, joined);

    std::vector<Subgroup> swapped = args;
    swapped[static_cast<std::size_t>(slot)] = alt;
    Subgroup rhs = join(verbal_subgroup(g, w, args), verbal_subgroup(g, w, swapped));

    return lhs.elements == rhs.elements;
}

} // namespace kmforge
