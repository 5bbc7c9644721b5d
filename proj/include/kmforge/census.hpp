#pragma once
// Census of subgroups maximal among normal subgroups satisfying an outer
// identity, plus the descending chain argument that certifies their count
// is finite (and bounded, when the bound is small enough to write down).

#include "kmforge/bigint.hpp"
#include "kmforge/caps.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/subgroup.hpp"
#include "kmforge/verbal.hpp"
#include "kmforge/word.hpp"

#include <gmp.h>

#include <algorithm>
#include <optional>
#include <vector>

namespace kmforge {

// One application of the index-growth function x -> x * n^(2^x).
// Refuses (rather than attempts) results beyond the configured digit cap.
inline BigInt index_growth_once(const BigInt& x, const BigInt& n) {
    if (x < 1 || n < 1) throw InputError("iteration arguments must be positive");
    if (n == 1) return x;  // n^(2^x) = 1
    if (!x.fits_ulong_p() || x.get_ui() >= 64)
        throw CertificateError("value exceeds representable cap");
    unsigned long e = 1ul << x.get_ui();
    // digits(n^e) <= e * (digits(n)); a cheap overestimate is good enough
    double digits_n = static_cast<double>(mpz_sizeinbase(n.get_mpz_t(), 10));
    if (static_cast<double>(e) * digits_n >
        static_cast<double>(caps().bigint_digits))
        throw CertificateError("value exceeds representable cap");
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), n.get_mpz_t(), e);
    return x * p;
}

// k-th iterate of the index-growth function, exactly.
inline BigInt index_growth_iter(int k, BigInt x, const BigInt& n) {
    if (k < 0) throw InputError("iteration arguments must be positive");
    for (int i = 0; i < k; ++i) x = index_growth_once(x, n);
    return x;
}

// All normal subgroups that satisfy the identity and are inclusion-maximal
// among such, in canonical order.
inline std::vector<Subgroup> maximal_identity_subgroups(const FiniteGroup& g,
                                                        const OuterWord& w) {
    std::vector<Subgroup> satisfying;
    for (auto& s : all_subgroups(g)) {
        if (is_normal(s) && satisfies_identity(g, w, s)) satisfying.push_back(s);
    }
    std::vector<Subgroup> out;
    for (size_t i = 0; i < satisfying.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < satisfying.size(); ++j) {
            if (i == j) continue;
            if (is_subset(satisfying[i], satisfying[j]) &&
                satisfying[i].elements != satisfying[j].elements)
                maximal = false;
        }
        if (maximal) out.push_back(satisfying[i]);
    }
    return out;
}

struct CensusResult {
    std::vector<Subgroup> maximal_subgroups;
    std::vector<Subgroup> chain;                // G_0 .. G_{t-1}
    std::vector<std::vector<int>> subfamilies;  // indices into maximal_subgroups, one list per step 1..t-1
    Subgroup intersection;                      // meet of all maximal subgroups
    std::vector<bool> identity_ok;              // levels 0..t
    bool tail_contained = false;                // chain.back() inside every maximal subgroup
    int bound_n = 0;                            // largest index among maximal subgroups
    std::optional<BigInt> bound_value;          // 2^(iterated growth of bound_n), when representable
    bool count_claim_ok = false;

    bool identities_verified() const {
        for (bool b : identity_ok)
            if (!b) return false;
        return !identity_ok.empty();
    }
};

namespace detail {

// Verbal subgroup triviality for every distinct arrangement of the argument
// multiset: (t-k) copies of `a` followed by k copies of `b`, permuted.
inline bool trivial_under_all_arrangements(const FiniteGroup& g, const OuterWord& w,
                                           const Subgroup& a, const Subgroup& b,
                                           int copies_of_b) {
    int t = static_cast<int>(w.weight);
    std::vector<int> pattern(static_cast<size_t>(t), 0);
    for (int i = 0; i < copies_of_b; ++i) pattern[static_cast<size_t>(t - 1 - i)] = 1;
    std::sort(pattern.begin(), pattern.end());
    do {
        std::vector<Subgroup> args;
        for (int bit : pattern) args.push_back(bit ? b : a);
        if (verbal_subgroup(g, w, args).order() != 1) return false;
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return true;
}

}  // namespace detail

// Builds the descending chain G_0 >= G_1 >= ... >= G_{t-1} from the maximal
// family, recording the subfamily picked at each step, and checks every level
// identity, the final containment, and the counting claim.
inline CensusResult census_chain(const FiniteGroup& g, const OuterWord& w) {
    CensusResult r;
    r.maximal_subgroups = maximal_identity_subgroups(g, w);
    if (r.maximal_subgroups.empty()) return r;

    const int t = static_cast<int>(w.weight);
    r.chain.push_back(r.maximal_subgroups[0]);
    for (int k = 1; k <= t - 1; ++k) {
        std::vector<std::vector<int>> products;
        std::vector<int> family;
        for (size_t i = 0; i < r.maximal_subgroups.size(); ++i) {
            std::vector<int> prod = join(r.maximal_subgroups[i], r.chain.back()).elements;
            if (std::find(products.begin(), products.end(), prod) == products.end()) {
                products.push_back(prod);
                family.push_back(static_cast<int>(i));
            }
        }
        Subgroup next = r.chain.back();
        for (int i : family) next = intersect(next, r.maximal_subgroups[static_cast<size_t>(i)]);
        r.subfamilies.push_back(family);
        r.chain.push_back(next);
    }

    r.intersection = r.maximal_subgroups[0];
    for (auto& n : r.maximal_subgroups) r.intersection = intersect(r.intersection, n);

    // level identities: (0) uses G_0 alone; level k mixes G_k with each N*G_{k-1};
    // level t uses N*G_{t-1} alone
    r.identity_ok.assign(static_cast<size_t>(t) + 1, true);
    r.identity_ok[0] = detail::trivial_under_all_arrangements(g, w, r.chain[0], r.chain[0], 0);
    for (int k = 1; k <= t; ++k) {
        bool ok = true;
        for (auto& n : r.maximal_subgroups) {
            Subgroup prod = join(n, r.chain[static_cast<size_t>(k - 1)]);
            const Subgroup& gk = (k < t) ? r.chain[static_cast<size_t>(k)] : prod;
            if (!detail::trivial_under_all_arrangements(g, w, gk, prod, k)) ok = false;
        }
        r.identity_ok[static_cast<size_t>(k)] = ok;
    }

    r.tail_contained = true;
    for (auto& n : r.maximal_subgroups)
        if (!is_subset(r.chain.back(), n)) r.tail_contained = false;

    for (auto& n : r.maximal_subgroups)
        r.bound_n = std::max(r.bound_n, static_cast<int>(index_in_parent(n)));
    try {
        BigInt f = index_growth_iter(t - 1, BigInt(r.bound_n), BigInt(r.bound_n));
        if (!f.fits_ulong_p() ||
            f.get_ui() / 3 > caps().bigint_digits)
            throw CertificateError("value exceeds representable cap");
        BigInt two_f;
        mpz_ui_pow_ui(two_f.get_mpz_t(), 2, f.get_ui());
        r.bound_value = two_f;
        r.count_claim_ok = BigInt(r.maximal_subgroups.size()) <= *r.bound_value;
    } catch (const CertificateError&) {
        // bound too large to write down: the claim degrades to plain finiteness
        r.bound_value.reset();
        r.count_claim_ok = true;
    }
    return r;
}

}  // namespace kmforge
