#pragma once

// The construction on the algebra side: from a subspace N of a
// finite-dimensional algebra, closed under its ideal mode and spanning no
// nonzero value of a multilinear word w, build an endomorphism-invariant
// subspace H satisfying the same identity, with
// codim(H) <= f^(t-1)(codim(N)) certified, f(x) = x*(x+1).
//
// The loop mirrors the group construction, with joins replaced by subspace
// sums, intersections by subspace intersections, and codimension by the
// plain integer dim(A) - dim(U). Invariance is relative to the supplied
// endomorphism family (every invertible multiplicative map when the family
// is the full brute-force enumeration).

#include "kmforge/algebra.hpp"
#include "kmforge/caps.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/exactlog.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kmforge {

namespace detail {

template <typename F>
std::string matrix_key(const F& f, const Matrix<F>& m) {
    std::string key;
    for (const auto& e : m.a) {
        key += f.str(e);
        key += ',';
    }
    return key;
}

}  // namespace detail

template <typename F>
struct EndoSelection {
    AlgSubspace<F> sum;                // smallest invariant subspace containing U
    std::vector<Matrix<F>> selected;   // greedy spanning products of the family
};

// Sum of all images of U under the monoid generated by the endomorphism
// family. The closure is computed by iterating U <- U + sum of phi(U) until
// the dimension stabilizes (at most dim(A) rounds); a spanning subfamily of
// products is then selected greedily in breadth-first order over the monoid
// (identity first, then the family in input order, then products). Each
// selected image strictly enlarges the running sum, so at most
// codim(U) + 1 products are selected; exceeding that bound would contradict
// codimension axiom 3 and is reported as a certificate failure.
template <typename F>
EndoSelection<F> endo_sum_closure(const Algebra<F>& a, const AlgSubspace<F>& u,
                                  const std::vector<Matrix<F>>& endos) {
    if (u.parent != &a) throw InputError("parent mismatch");
    const F& f = a.field;

    // full closure
    Matrix<F> closure = u.basis;
    while (true) {
        int before = closure.rows;
        for (const auto& m : endos) {
            std::vector<std::vector<typename F::Element>> rows;
            for (int r = 0; r < closure.rows; ++r)
                rows.push_back(mat_vec(f, m, closure.row(r)));
            closure = row_space_sum(f, closure,
                                    matrix_from_rows(f, rows, a.dim));
        }
        if (closure.rows == before) break;
    }

    // greedy spanning selection in breadth-first monoid order
    EndoSelection<F> out;
    std::vector<Matrix<F>> discovered{identity_matrix(f, a.dim)};
    std::set<std::string> seen{detail::matrix_key(f, discovered[0])};

    out.selected.push_back(discovered[0]);
    Matrix<F> running = u.basis;

    std::size_t scan = 1;    // next discovered element to test
    std::size_t expand = 0;  // next discovered element to multiply by the family
    while (running.rows < closure.rows) {
        if (scan == discovered.size()) {
            if (expand == discovered.size())
                throw CertificateError(
                    "certificate failed: spanning selection did not reach the closure");
            if (static_cast<std::int64_t>(discovered.size()) > caps().endo_space)
                throw InputError("search space exceeds cap");
            const Matrix<F> base = discovered[expand++];
            for (const auto& m : endos) {
                Matrix<F> prod = mat_mul(f, m, base);
                std::string key = detail::matrix_key(f, prod);
                if (seen.insert(key).second) discovered.push_back(std::move(prod));
            }
            continue;
        }
        const Matrix<F>& cand = discovered[scan++];
        std::vector<std::vector<typename F::Element>> rows;
        for (int r = 0; r < u.basis.rows; ++r)
            rows.push_back(mat_vec(f, cand, u.basis.row(r)));
        Matrix<F> img = rref(f, matrix_from_rows(f, rows, a.dim));
        bool inside = true;
        for (int r = 0; r < img.rows && inside; ++r)
            inside = in_row_space(f, running, img.row(r));
        if (!inside) {
            running = row_space_sum(f, running, img);
            out.selected.push_back(cand);
        }
    }

    if (static_cast<int>(out.selected.size()) > u.codim() + 1)
        throw CertificateError("codimension axiom 3 violated");

    out.sum.parent = &a;
    out.sum.basis = std::move(closure);
    out.sum.mode = u.mode;
    return out;
}

// All invertible multiplicative linear maps of a small algebra over a prime
// field, by exhausting every d x d matrix. Canonical order: the identity
// first, then ascending lexicographic order on the flattened row-major
// entries.
template <typename F>
std::vector<Matrix<F>> algebra_automorphisms_bruteforce(const Algebra<F>& a) {
    if constexpr (!std::is_same_v<F, PrimeField>) {
        (void)a;
        throw InputError("search space exceeds cap");
    } else {
        const long long p = a.field.characteristic();
        const int cells = a.dim * a.dim;
        double space = 1.0;
        for (int i = 0; i < cells; ++i) {
            space *= static_cast<double>(p);
            if (space > static_cast<double>(caps().endo_space))
                throw InputError("search space exceeds cap");
        }

        std::vector<Matrix<F>> found;
        std::vector<long long> digits(static_cast<std::size_t>(cells), 0);
        while (true) {
            Matrix<F> m(a.dim, a.dim, a.field);
            for (int i = 0; i < cells; ++i)
                m.a[static_cast<std::size_t>(i)] =
                    a.field.from_int(digits[static_cast<std::size_t>(i)]);
            if (is_algebra_endomorphism(a, m)) found.push_back(std::move(m));
            int pos = cells - 1;
            while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == p - 1)
                digits[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++digits[static_cast<std::size_t>(pos)];
        }

        Matrix<F> id = identity_matrix(a.field, a.dim);
        auto it = std::find(found.begin(), found.end(), id);
        if (it != found.end()) std::rotate(found.begin(), it, it + 1);
        return found;
    }
}

template <typename F>
struct AlgebraConstructStep {
    int k = 0;
    AlgSubspace<F> G_k;
    AlgSubspace<F> N_k;
    std::vector<Matrix<F>> selected_endos;
    int p_k = 0;  // selected image count minus one
    int l_k = 0;  // codim(N_k)
};

template <typename F>
struct AlgebraConstructionTrace {
    MultiWord<F> word;
    int l0 = 0;  // codim(N)
    std::vector<AlgebraConstructStep<F>> steps;
    std::optional<int> fixed_point_at;
    // true when the endomorphism family was supplied by the caller rather
    // than enumerated exhaustively: invariance is certified relative to it
    bool relative = false;
};

template <typename F>
struct AlgebraConstructResult {
    AlgSubspace<F> H;
    AlgebraConstructionTrace<F> trace;
};

template <typename F>
AlgebraConstructResult<F> construct_invariant_subspace(
    const Algebra<F>& a, const AlgSubspace<F>& n, const MultiWord<F>& w,
    const std::vector<Matrix<F>>& endos, bool relative) {
    if (n.parent != &a) throw InputError("parent mismatch");
    if (!detail::closed_under_mode(a, n.basis, n.mode))
        throw InputError("subspace not closed under its ideal mode");
    if (!satisfies_multiword(a, w, n)) throw InputError("identity fails on N");
    for (const auto& m : endos)
        if (!is_algebra_endomorphism(a, m))
            throw InputError("map not an algebra endomorphism");

    const int t = w.weight;
    AlgebraConstructionTrace<F> trace;
    trace.word = w;
    trace.l0 = n.codim();
    trace.relative = relative;

    AlgSubspace<F> cur = n;  // N_{k-1}
    int cur_codim = trace.l0;

    for (int k = 1; k <= t; ++k) {
        AlgebraConstructStep<F> step;
        step.k = k;

        EndoSelection<F> sel = endo_sum_closure(a, cur, endos);
        step.G_k = std::move(sel.sum);
        step.selected_endos = std::move(sel.selected);
        step.p_k = static_cast<int>(step.selected_endos.size()) - 1;
        if (step.p_k > cur_codim)
            throw CertificateError("codimension axiom 3 violated");

        AlgSubspace<F> meet;
        meet.parent = &a;
        meet.mode = cur.mode;
        {
            LinearEndo<F> e{&a, step.selected_endos[0]};
            meet.basis = apply_endo(e, cur).basis;
        }
        for (std::size_t i = 1; i < step.selected_endos.size(); ++i) {
            LinearEndo<F> e{&a, step.selected_endos[i]};
            meet.basis = row_space_intersect(a.field, meet.basis,
                                             apply_endo(e, cur).basis);
        }
        step.N_k = std::move(meet);

        step.l_k = step.N_k.codim();
        if (BigInt(step.l_k) > f_iter(1, BigInt(cur_codim)))
            throw CertificateError(
                "certificate failed: codim(N_k) exceeds f(codim(N_{k-1}))");

        // interleaving identity: w spans zero on (N_k, .., N_k, G_k, .., G_k)
        std::vector<AlgSubspace<F>> args;
        args.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t - k; ++i) args.push_back(step.N_k);
        for (int i = 0; i < k; ++i) args.push_back(step.G_k);
        if (word_span(a, w, args, IdealMode::Subspace).dim() != 0)
            throw CertificateError(
                "certificate failed: interleaving identity does not hold");

        if (!detail::closed_under_mode(a, step.G_k.basis, n.mode) ||
            !detail::closed_under_mode(a, step.N_k.basis, n.mode))
            throw CertificateError("certificate failed: ideal mode not preserved");

        if (!trace.fixed_point_at && step.G_k.basis == cur.basis &&
            step.N_k.basis == cur.basis)
            trace.fixed_point_at = k;

        cur = step.N_k;
        cur_codim = step.l_k;
        trace.steps.push_back(std::move(step));
    }

    AlgebraConstructResult<F> out;
    out.H = trace.steps.back().G_k;

    // final guarantees
    for (const auto& m : endos) {
        LinearEndo<F> e{&a, m};
        if (!(apply_endo(e, out.H).basis == out.H.basis))
            throw CertificateError("certificate failed: H is not invariant");
    }
    if (!satisfies_multiword(a, w, out.H))
        throw CertificateError("certificate failed: H does not satisfy the identity");
    if (BigInt(out.H.codim()) > f_iter(t - 1, BigInt(trace.l0)))
        throw CertificateError("certificate failed: codim(H) exceeds the bound");
    if (!detail::closed_under_mode(a, out.H.basis, n.mode))
        throw CertificateError("certificate failed: ideal mode not preserved");

    out.trace = std::move(trace);
    return out;
}

template <typename F>
AlgebraConstructResult<F> construct_invariant_subspace(const Algebra<F>& a,
                                                       const AlgSubspace<F>& n,
                                                       const MultiWord<F>& w) {
    return construct_invariant_subspace(a, n, w,
                                        algebra_automorphisms_bruteforce(a),
                                        /*relative=*/false);
}

// ---------------------------------------------------------------------------
// Census of identity-satisfying mode-closed subspaces (small prime fields
// only). The codimension of the intersection of the maximal members is
// reported as observed data; no bound on it is asserted.

template <typename F>
std::vector<Matrix<F>> all_subspaces(const Algebra<F>& a) {
    if constexpr (!std::is_same_v<F, PrimeField>) {
        (void)a;
        throw InputError("search space exceeds cap");
    } else {
        const long long p = a.field.characteristic();
        double pow = 1.0;
        for (int i = 0; i < a.dim; ++i) pow *= static_cast<double>(p);
        if (pow > 64.0) throw InputError("search space exceeds cap");
        const long long total = static_cast<long long>(pow);

        // every vector of the space, in odometer order
        std::vector<std::vector<typename F::Element>> vectors;
        std::vector<long long> digits(static_cast<std::size_t>(a.dim), 0);
        for (long long c = 0; c < total; ++c) {
            std::vector<typename F::Element> v(static_cast<std::size_t>(a.dim));
            for (int i = 0; i < a.dim; ++i)
                v[static_cast<std::size_t>(i)] =
                    a.field.from_int(digits[static_cast<std::size_t>(i)]);
            vectors.push_back(std::move(v));
            int pos = a.dim - 1;
            while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == p - 1)
                digits[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++digits[static_cast<std::size_t>(pos)];
        }

        // breadth-first closure from the zero space: extend by one vector
        std::vector<Matrix<F>> found{Matrix<F>(0, a.dim, a.field)};
        std::set<std::string> seen{detail::matrix_key(a.field, found[0])};
        for (std::size_t at = 0; at < found.size(); ++at) {
            for (const auto& v : vectors) {
                if (in_row_space(a.field, found[at], v)) continue;
                Matrix<F> ext = rref(
                    a.field, row_space_sum(a.field, found[at],
                                           matrix_from_rows(a.field, {v}, a.dim)));
                std::string key = detail::matrix_key(a.field, ext);
                if (seen.insert(key).second) found.push_back(std::move(ext));
            }
        }
        return found;
    }
}

template <typename F>
struct SubspaceCensus {
    std::vector<AlgSubspace<F>> maximal_subspaces;
    AlgSubspace<F> intersection;
    int intersection_codim = 0;
};

template <typename F>
SubspaceCensus<F> subspace_census(const Algebra<F>& a, const MultiWord<F>& w,
                                  IdealMode mode) {
    std::vector<AlgSubspace<F>> keep;
    for (auto& basis : all_subspaces(a)) {
        if (!detail::closed_under_mode(a, basis, mode)) continue;
        AlgSubspace<F> s;
        s.parent = &a;
        s.basis = basis;
        s.mode = mode;
        if (!satisfies_multiword(a, w, s)) continue;
        keep.push_back(std::move(s));
    }

    auto contains = [&](const AlgSubspace<F>& big, const AlgSubspace<F>& small) {
        for (int r = 0; r < small.basis.rows; ++r)
            if (!in_row_space(a.field, big.basis, small.basis.row(r))) return false;
        return true;
    };

    SubspaceCensus<F> out;
    for (const auto& s : keep) {
        bool maximal = true;
        for (const auto& other : keep)
            if (!(other.basis == s.basis) && contains(other, s)) {
                maximal = false;
                break;
            }
        if (maximal) out.maximal_subspaces.push_back(s);
    }
    std::sort(out.maximal_subspaces.begin(), out.maximal_subspaces.end(),
              [](const AlgSubspace<F>& x, const AlgSubspace<F>& y) {
                  if (x.basis.rows != y.basis.rows) return x.basis.rows < y.basis.rows;
                  for (std::size_t i = 0; i < x.basis.a.size(); ++i) {
                      if (x.basis.a[i] != y.basis.a[i]) return x.basis.a[i] < y.basis.a[i];
                  }
                  return false;
              });

    out.intersection = out.maximal_subspaces[0];
    for (std::size_t i = 1; i < out.maximal_subspaces.size(); ++i)
        out.intersection = intersect(out.intersection, out.maximal_subspaces[i]);
    out.intersection_codim = out.intersection.codim();
    return out;
}

}  // namespace kmforge
