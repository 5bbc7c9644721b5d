#pragma once

// The main construction: from a normal subgroup N satisfying an outer
// commutator identity w = 1, build a characteristic subgroup H satisfying
// the same identity, with codim(H) <= f^(t-1)(codim(N)) certified exactly.
//
// Loop, with N_0 = N and t the weight of w, for k = 1..t:
//   G_k = join of all automorphic images of N_{k-1}   (a spanning subfamily
//         of p_k + 1 <= codim(N_{k-1}) + 1 images suffices and is recorded)
//   N_k = intersection of the selected images
// H = G_t. Each step certifies p_k <= l_{k-1} and l_k <= f(l_{k-1}) where
// l_k = codim(N_k), and checks the interleaving identity
// w(N_k, .., N_k, G_k, .., G_k) = 1 (t-k leading N_k slots).

#include "kmforge/automorphism.hpp"
#include "kmforge/codim.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/exactlog.hpp"
#include "kmforge/subgroup.hpp"
#include "kmforge/verbal.hpp"
#include "kmforge/word.hpp"

#include <optional>
#include <vector>

namespace kmforge {

struct ConstructStep {
    int k = 0;
    Subgroup G_k;
    Subgroup N_k;
    std::vector<int> selected_autos;  // indices into the canonical Aut list
    int p_k = 0;                      // selected image count minus one
    std::optional<CodimValue> l_k;    // codim(N_k); absent for kind None
};

struct ConstructionTrace {
    OuterWord word;
    std::optional<CodimValue> l0;  // codim(N); absent for kind None
    std::vector<ConstructStep> steps;
    // first step index at which (G_k, N_k) stopped changing, if any
    std::optional<int> fixed_point_at;
};

struct ConstructResult {
    Subgroup H;
    ConstructionTrace trace;
};

inline ConstructResult construct_characteristic(const FiniteGroup& g, const Subgroup& n,
                                                const OuterWord& w, const CodimSpec& spec,
                                                const std::vector<Automorphism>& auts) {
    require_same_parent(g, n);
    if (!is_normal(n)) throw InputError("not normal");
    if (!satisfies_identity(g, w, n)) throw InputError("identity fails on N");

    const int t = w.weight;
    const bool certified = spec.kind != CodimKind::None;

    ConstructionTrace trace;
    trace.word = w;
    if (certified) trace.l0 = codim(n, spec);

    Subgroup cur = n;                      // N_{k-1}
    std::optional<CodimValue> cur_codim = trace.l0;  // l_{k-1}
    ConstructResult out;

    for (int k = 1; k <= t; ++k) {
        ConstructStep step;
        step.k = k;

        if (certified) {
            SpanningSelection sel = select_spanning_images(cur, auts, spec);
            step.G_k = std::move(sel.sum);
            step.selected_autos = std::move(sel.selected);
        } else {
            step.selected_autos = distinct_image_representatives(cur, auts);
            Subgroup sum = apply_automorphism(auts[static_cast<std::size_t>(step.selected_autos[0])], cur);
            for (std::size_t i = 1; i < step.selected_autos.size(); ++i)
                sum = join(sum, apply_automorphism(auts[static_cast<std::size_t>(step.selected_autos[i])], cur));
            step.G_k = std::move(sum);
        }
        step.p_k = static_cast<int>(step.selected_autos.size()) - 1;

        Subgroup meet = apply_automorphism(auts[static_cast<std::size_t>(step.selected_autos[0])], cur);
        for (std::size_t i = 1; i < step.selected_autos.size(); ++i)
            meet = intersect(meet, apply_automorphism(auts[static_cast<std::size_t>(step.selected_autos[i])], cur));
        step.N_k = std::move(meet);

        if (certified) {
            // p_k <= l_{k-1} (axiom 3, already certified in the selector)
            if (!int_leq_codim(BigInt(step.p_k), *cur_codim))
                throw CertificateError("codimension axiom 3 violated");
            step.l_k = codim(step.N_k, spec);
            // l_k <= f(l_{k-1})
            if (!codim_leq_bound(*step.l_k, 1, *cur_codim))
                throw CertificateError("certificate failed: codim(N_k) exceeds f(codim(N_{k-1}))");
        }

        // interleaving identity w(N_k x(t-k), G_k xk) = 1
        std::vector<Subgroup> args;
        args.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t - k; ++i) args.push_back(step.N_k);
        for (int i = 0; i < k; ++i) args.push_back(step.G_k);
        if (verbal_subgroup(g, w, args).order() != 1)
            throw CertificateError("certificate failed: interleaving identity does not hold");

        if (!trace.fixed_point_at && step.G_k.elements == cur.elements &&
            step.N_k.elements == cur.elements)
            trace.fixed_point_at = k;

        cur = step.N_k;
        if (certified) cur_codim = step.l_k;
        trace.steps.push_back(std::move(step));
    }

    out.H = trace.steps.back().G_k;

    // final guarantees
    if (!is_characteristic(out.H, auts))
        throw CertificateError("certificate failed: H is not characteristic");
    if (!satisfies_identity(g, w, out.H))
        throw CertificateError("certificate failed: H does not satisfy the identity");
    if (certified) {
        CodimValue ch = codim(out.H, spec);
        if (!codim_leq_bound(ch, t - 1, *trace.l0))
            throw CertificateError("certificate failed: codim(H) exceeds the bound");
    }

    out.trace = std::move(trace);
    return out;
}

inline ConstructResult construct_characteristic(const FiniteGroup& g, const Subgroup& n,
                                                const OuterWord& w, const CodimSpec& spec) {
    return construct_characteristic(g, n, w, spec, automorphism_group(g));
}

struct Lemma1Result {
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
};

// Hypothesis: w(N x m, G x(t-m)) = 1 for every N in the family (G the whole
// parent group). Conclusion: w(meet x(m-1), join x(t-m+1)) = 1 where meet and
// join are over the family. The implication is a theorem; a true hypothesis
// with a false conclusion is an implementation bug witness.
inline Lemma1Result check_lemma1(const FiniteGroup& g, const OuterWord& w, int m,
                                 const std::vector<Subgroup>& family) {
    if (m < 1 || m > w.weight) throw InputError("arity mismatch");
    if (family.empty()) throw InputError("invalid generator: empty family");
    for (const auto& s : family) {
        require_same_parent(g, s);
        if (!is_normal(s)) throw InputError("argument not normal");
    }
    const int t = w.weight;
    Subgroup full = full_subgroup(g);

    Lemma1Result out;
    out.hypothesis_holds = true;
    for (const auto& s : family) {
        std::vector<Subgroup> args;
        for (int i = 0; i < m; ++i) args.push_back(s);
        for (int i = m; i < t; ++i) args.push_back(full);
        if (verbal_subgroup(g, w, args).order() != 1) {
            out.hypothesis_holds = false;
            break;
        }
    }
    if (!out.hypothesis_holds) return out;

    Subgroup meet = family[0];
    Subgroup sum = family[0];
    for (std::size_t i = 1; i < family.size(); ++i) {
        meet = intersect(meet, family[i]);
        sum = join(sum, family[i]);
    }
    std::vector<Subgroup> args;
    for (int i = 0; i < m - 1; ++i) args.push_back(meet);
    for (int i = m - 1; i < t; ++i) args.push_back(sum);
    out.conclusion_holds = verbal_subgroup(g, w, args).order() == 1;
    return out;
}

} // namespace kmforge
