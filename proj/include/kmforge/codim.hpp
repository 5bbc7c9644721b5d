#pragma once

// Generalized codimension of a normal subgroup, with the greedy spanning
// selector and the codimension axiom checks.
//
// Two concrete codimensions are implemented: the binary logarithm of the
// index (any finite group) and the rank of the quotient (p-groups). A third
// kind, None, runs the construction machinery without certificates.

#include "kmforge/automorphism.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/exactlog.hpp"
#include "kmforge/subgroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace kmforge {

enum class CodimKind { Log2Index, PRank, None };

struct CodimSpec {
    CodimKind kind = CodimKind::Log2Index;
    int p = 0;  // prime, PRank only

    static CodimSpec log2_index() { return {CodimKind::Log2Index, 0}; }
    static CodimSpec prank(int p) { return {CodimKind::PRank, p}; }
    static CodimSpec none() { return {CodimKind::None, 0}; }
};

inline CodimValue codim(const Subgroup& n, const CodimSpec& spec) {
    switch (spec.kind) {
        case CodimKind::Log2Index:
            return CodimValue::log2_of(BigInt(index_in_parent(n)));
        case CodimKind::PRank: {
            long long m = n.group->order();
            while (spec.p >= 2 && m % spec.p == 0) m /= spec.p;
            if (m != 1) throw InputError("order not a power of p");
            Quotient q = quotient(n);
            return CodimValue::integer(BigInt(p_rank(q.group, spec.p)));
        }
        case CodimKind::None:
            break;
    }
    throw InputError("codimension requested for kind None");
}

struct SpanningSelection {
    Subgroup sum;               // join over all automorphic images
    std::vector<int> selected;  // indices into the canonical Aut list
};

// Greedy pass over the canonical Aut list: keep an image iff it strictly
// enlarges the running join, stop once the join over all images is reached.
// For kind != None the selection size is certified against codim(N) + 1;
// exceeding it would contradict codimension axiom 3.
inline SpanningSelection select_spanning_images(const Subgroup& n,
                                                const std::vector<Automorphism>& auts,
                                                const CodimSpec& spec) {
    std::vector<Subgroup> images;
    images.reserve(auts.size());
    for (const auto& phi : auts) images.push_back(apply_automorphism(phi, n));
    Subgroup full = images[0];
    for (std::size_t i = 1; i < images.size(); ++i) full = join(full, images[i]);

    SpanningSelection out;
    out.selected.push_back(0);  // auts[0] is the identity (lex-first)
    Subgroup running = images[0];
    for (std::size_t i = 1; i < images.size(); ++i) {
        if (running.elements == full.elements) break;
        if (!is_subset(images[i], running)) {
            running = join(running, images[i]);
            out.selected.push_back(static_cast<int>(i));
        }
    }
    out.sum = std::move(full);

    if (spec.kind != CodimKind::None) {
        BigInt count(static_cast<long>(out.selected.size()));
        if (!int_leq_codim(count - 1, codim(n, spec)))
            throw CertificateError("codimension axiom 3 violated");
    }
    return out;
}

// all automorphisms whose image of n is distinct from every earlier one,
// scanning the canonical list; used when no codimension theory is active,
// so the construction takes complete sums/intersections over all images
inline std::vector<int> distinct_image_representatives(const Subgroup& n,
                                                       const std::vector<Automorphism>& auts) {
    std::vector<int> reps;
    std::vector<std::vector<int>> seen;
    for (std::size_t i = 0; i < auts.size(); ++i) {
        std::vector<int> img;
        img.reserve(n.elements.size());
        for (int x : n.elements) img.push_back(auts[i][static_cast<std::size_t>(x)]);
        std::sort(img.begin(), img.end());
        bool fresh = true;
        for (const auto& s : seen)
            if (s == img) {
                fresh = false;
                break;
            }
        if (fresh) {
            seen.push_back(std::move(img));
            reps.push_back(static_cast<int>(i));
        }
    }
    return reps;
}

struct AxiomViolation {
    int axiom = 0;
    std::string witness;
};

struct AxiomReport {
    int pairs_checked = 0;
    int samples_checked = 0;
    std::vector<AxiomViolation> violations;
    bool all_passed() const { return violations.empty(); }
};

// Axioms, for normal samples N1, N2 and automorphism phi:
//   0: N1 <= N2  implies  codim N2 <= codim N1
//   1: codim phi(N1) = codim N1
//   2: codim(N1 n N2) <= codim N1 + codim N2
//   3: the greedy spanning selection uses at most codim N + 1 images
inline AxiomReport check_codim_axioms(const FiniteGroup& g, const CodimSpec& spec,
                                      const std::vector<Subgroup>& samples,
                                      const std::vector<Automorphism>& auts) {
    AxiomReport report;
    if (spec.kind == CodimKind::None) return report;
    for (const auto& s : samples) {
        require_same_parent(g, s);
        if (!is_normal(s)) throw InputError("argument not normal");
    }

    // memoize by element set: axiom 1 re-evaluates images many times
    std::map<std::vector<int>, CodimValue> memo;
    auto codim_of = [&](const Subgroup& s) {
        auto it = memo.find(s.elements);
        if (it != memo.end()) return it->second;
        CodimValue v = codim(s, spec);
        memo.emplace(s.elements, v);
        return v;
    };

    for (const auto& a : samples) {
        CodimValue ca = codim_of(a);
        ++report.samples_checked;

        for (const auto& phi : auts) {
            Subgroup img = apply_automorphism(phi, a);
            if (!(codim_of(img) == ca)) {
                report.violations.push_back(
                    {1, "codim changed under an automorphic image of {" +
                            std::to_string(a.elements.size()) + " elements}"});
                break;
            }
        }

        try {
            select_spanning_images(a, auts, spec);
        } catch (const CertificateError&) {
            report.violations.push_back({3, "greedy selection exceeded codim + 1 images"});
        }

        for (const auto& b : samples) {
            ++report.pairs_checked;
            CodimValue cb = codim_of(b);
            if (is_subset(a, b) && !codim_leq(cb, ca))
                report.violations.push_back(
                    {0, "monotonicity failed: codim " + cb.str() + " > " + ca.str()});
            Subgroup meet = intersect(a, b);
            if (!codim_leq(codim_of(meet), codim_add(ca, cb)))
                report.violations.push_back(
                    {2, "subadditivity failed: codim " + codim_of(meet).str() + " > " +
                            ca.str() + " + " + cb.str()});
        }
    }
    return report;
}

} // namespace kmforge
