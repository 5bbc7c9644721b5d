#pragma once

// Finite groups as explicit multiplication tables.
//
// A FiniteGroup is an immutable value: n elements indexed 0..n-1 with the
// identity at index 0, a full n x n multiplication table and a precomputed
// inverse table. Groups are built either from permutation generators (the
// elements are then indexed in breadth-first order from the identity, taking
// generators in input order) or from an explicit table that is validated
// eagerly: identity at index 0, entries in range, associativity with a
// witness on failure, and inverses for every element.
//
// Permutations act on points as maps p -> perm[p]; the product a*b is the
// composition "apply b first, then a".

#include "kmforge/caps.hpp"
#include "kmforge/errors.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kmforge {

namespace perm {

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t p = 0; p < a.size(); ++p) r[p] = a[static_cast<std::size_t>(b[p])];
    return r;
}

inline bool is_permutation(const std::vector<int>& a, int degree) {
    if (static_cast<int>(a.size()) != degree) return false;
    std::vector<char> seen(a.size(), 0);
    for (int v : a) {
        if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

} // namespace perm

class FiniteGroup {
public:
    static FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens) {
        if (degree <= 0) throw InputError("invalid generator: degree must be positive");
        for (const auto& g : gens)
            if (!perm::is_permutation(g, degree))
                throw InputError("invalid generator: not a permutation of the stated degree");

        std::vector<int> ident(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) ident[static_cast<std::size_t>(i)] = i;

        std::map<std::vector<int>, int> index;
        std::vector<std::vector<int>> elems;
        index.emplace(ident, 0);
        elems.push_back(ident);
        for (std::size_t head = 0; head < elems.size(); ++head) {
            std::vector<int> cur = elems[head];  // copy: elems may reallocate
            for (const auto& g : gens) {
                auto next = perm::compose(cur, g);
                if (index.emplace(next, static_cast<int>(elems.size())).second) {
                    elems.push_back(std::move(next));
                    if (static_cast<std::int64_t>(elems.size()) > caps().group_order)
                        throw InputError("group too large");
                }
            }
        }

        FiniteGroup g;
        g.n_ = static_cast<int>(elems.size());
        g.table_.resize(static_cast<std::size_t>(g.n_) * static_cast<std::size_t>(g.n_));
        for (int a = 0; a < g.n_; ++a)
            for (int b = 0; b < g.n_; ++b)
                g.table_[g.at(a, b)] =
                    index.at(perm::compose(elems[static_cast<std::size_t>(a)],
                                           elems[static_cast<std::size_t>(b)]));
        g.finish_tables();
        g.gens_.reserve(gens.size());
        for (const auto& gen : gens) g.gens_.push_back(index.at(gen));
        return g;
    }

    // degree inferred from the first generator
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens) {
        if (gens.empty()) throw InputError("invalid generator: empty generator list");
        return from_permutations(static_cast<int>(gens[0].size()), gens);
    }

    static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table) {
        const int n = static_cast<int>(table.size());
        if (n == 0) throw InputError("table entry out of range: empty table");
        if (static_cast<std::int64_t>(n) > caps().cayley_order)
            throw InputError("group too large");
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n)
                throw InputError("table entry out of range: ragged table");
            for (int v : row)
                if (v < 0 || v >= n) throw InputError("table entry out of range");
        }
        for (int b = 0; b < n; ++b)
            if (table[0][static_cast<std::size_t>(b)] != b)
                throw InputError("no identity at index 0: 0*" + std::to_string(b) +
                                 " = " + std::to_string(table[0][static_cast<std::size_t>(b)]));
        for (int a = 0; a < n; ++a)
            if (table[static_cast<std::size_t>(a)][0] != a)
                throw InputError("no identity at index 0: " + std::to_string(a) + "*0 = " +
                                 std::to_string(table[static_cast<std::size_t>(a)][0]));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    int ab_c = table[static_cast<std::size_t>(
                        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])]
                                    [static_cast<std::size_t>(c)];
                    int a_bc = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                        table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])];
                    if (ab_c != a_bc)
                        throw InputError("not associative: witness (a,b,c) = (" +
                                         std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(c) + ")");
                }
        for (int a = 0; a < n; ++a) {
            bool has = false;
            for (int b = 0; b < n && !has; ++b)
                has = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0;
            if (!has) throw InputError("missing inverse: element " + std::to_string(a));
        }

        FiniteGroup g;
        g.n_ = n;
        g.table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                g.table_[g.at(a, b)] = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        g.finish_tables();
        return g;
    }

    // Internal constructor for tables known to be groups (quotients); skips
    // validation and the table-input size cap.
    static FiniteGroup from_table_unchecked(std::vector<std::int32_t> flat, int n) {
        FiniteGroup g;
        g.n_ = n;
        g.table_ = std::move(flat);
        g.finish_tables();
        return g;
    }

    int order() const { return n_; }

    int mul(int a, int b) const { return table_[at(a, b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    // conjugate of a by g: g^-1 a g
    int conj(int a, int g) const { return mul(mul(inv(g), a), g); }
    // commutator convention fixed across the library: [a,b] = a^-1 b^-1 a b
    int comm(int a, int b) const { return mul(mul(mul(inv(a), inv(b)), a), b); }

    int element_order(int a) const {
        int k = 1;
        for (int x = a; x != 0; x = mul(x, a)) ++k;
        return k;
    }

    // element indices of the input generators (empty for table input)
    const std::vector<int>& generator_elements() const { return gens_; }

private:
    std::size_t at(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(b);
    }
    void finish_tables() {
        inv_.assign(static_cast<std::size_t>(n_), 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (table_[at(a, b)] == 0) {
                    inv_[static_cast<std::size_t>(a)] = b;
                    break;
                }
    }

    int n_ = 1;
    std::vector<std::int32_t> table_ = {0};
    std::vector<std::int32_t> inv_ = {0};
    std::vector<int> gens_;
};

} // namespace kmforge
