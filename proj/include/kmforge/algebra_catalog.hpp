#pragma once

// A small corpus of finite-dimensional algebras over prime fields, each
// paired with a distinguished mode-closed subspace satisfying a multilinear
// identity. Used for cross-checking the subspace construction end to end.

#include "kmforge/algebra.hpp"
#include "kmforge/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kmforge {

struct AlgebraCatalogEntry {
    std::string name;
    Algebra<PrimeField> algebra;
    std::vector<std::vector<std::int64_t>> n_basis;  // rows, reduced into the field
    IdealMode mode = IdealMode::Twosided;
    std::string word;
};

namespace detail {

struct ScTriple {
    int i, j, k;
    std::int64_t c;
};

inline AlgebraCatalogEntry make_algebra_entry(
    std::string name, std::int64_t p, int dim, const std::vector<ScTriple>& sc,
    std::vector<std::vector<std::int64_t>> n_basis, IdealMode mode, std::string word) {
    AlgebraCatalogEntry e{std::move(name), Algebra<PrimeField>(PrimeField(p), dim),
                          std::move(n_basis), mode, std::move(word)};
    for (const auto& t : sc)
        e.algebra.set_product(t.i, t.j, t.k, e.algebra.field.from_int(t.c));
    return e;
}

}  // namespace detail

inline const std::vector<AlgebraCatalogEntry>& algebra_catalog() {
    using detail::make_algebra_entry;
    static const std::vector<AlgebraCatalogEntry> entries = [] {
        std::vector<AlgebraCatalogEntry> v;
        // zero multiplication: every invertible map is an automorphism
        v.push_back(make_algebra_entry("zero2_f2", 2, 2, {}, {{1, 0}},
                                       IdealMode::Twosided, "(x1*x2)"));
        v.push_back(make_algebra_entry("zero3_f3", 3, 3, {}, {{1, 0, 0}, {0, 1, 0}},
                                       IdealMode::Twosided, "(x1*x2)"));
        // one idempotent: e0*e0 = e0
        v.push_back(make_algebra_entry("idem2_f2", 2, 2, {{0, 0, 0, 1}}, {{0, 1}},
                                       IdealMode::Subspace, "(x1*x2)"));
        // e0*e1 = e2, all else zero
        v.push_back(make_algebra_entry("abc3_f2", 2, 3, {{0, 1, 2, 1}},
                                       {{0, 1, 0}, {0, 0, 1}}, IdealMode::Twosided,
                                       "(x1*x2)"));
        v.push_back(make_algebra_entry("abc3_f3", 3, 3, {{0, 1, 2, 1}},
                                       {{0, 1, 0}, {0, 0, 1}}, IdealMode::Twosided,
                                       "(x1*x2)"));
        // anti-symmetric-ish pair: e0*e1 = e2, e1*e0 = 2*e2, over F3
        v.push_back(make_algebra_entry("bracket3_f3", 3, 3,
                                       {{0, 1, 2, 1}, {1, 0, 2, 2}}, {{0, 0, 1}},
                                       IdealMode::Twosided, "(x1*x2) + 2*(x2*x1)"));
        // group algebra of the two-element group over F2
        v.push_back(make_algebra_entry(
            "unit2_f2", 2, 2,
            {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}, {{1, 1}},
            IdealMode::Twosided, "(x1*x2)"));
        // two orthogonal idempotents; the associator vanishes identically
        v.push_back(make_algebra_entry("split2_f2", 2, 2,
                                       {{0, 0, 0, 1}, {1, 1, 1, 1}},
                                       {{1, 0}, {0, 1}}, IdealMode::Twosided,
                                       "((x1*x2)*x3) - (x1*(x2*x3))"));
        // e1*e0 = e0: span{e1} is a left ideal but not a right ideal
        v.push_back(make_algebra_entry("lshift2_f2", 2, 2, {{1, 0, 0, 1}}, {{0, 1}},
                                       IdealMode::Left, "(x1*x2)"));
        // e0*e1 = e0: span{e1} is a right ideal but not a left ideal
        v.push_back(make_algebra_entry("rshift2_f2", 2, 2, {{0, 1, 0, 1}}, {{0, 1}},
                                       IdealMode::Right, "(x1*x2)"));
        // nilpotent chain: e0*e0 = e1, e0*e1 = e2
        v.push_back(make_algebra_entry("nil3_f2", 2, 3, {{0, 0, 1, 1}, {0, 1, 2, 1}},
                                       {{0, 1, 0}, {0, 0, 1}}, IdealMode::Twosided,
                                       "(x1*x2)"));
        // upper-triangular flavor over F3
        v.push_back(make_algebra_entry(
            "tri3_f3", 3, 3,
            {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, {{0, 1, 0}},
            IdealMode::Twosided, "(x1*x2)"));
        return v;
    }();
    return entries;
}

inline const AlgebraCatalogEntry& algebra_catalog_entry(const std::string& name) {
    for (const auto& e : algebra_catalog())
        if (e.name == name) return e;
    throw InputError("unknown catalog algebra: " + name);
}

inline AlgSubspace<PrimeField> catalog_subspace(const AlgebraCatalogEntry& e) {
    std::vector<std::vector<PrimeField::Element>> rows;
    for (const auto& r : e.n_basis) {
        std::vector<PrimeField::Element> row;
        for (std::int64_t x : r) row.push_back(e.algebra.field.from_int(x));
        rows.push_back(std::move(row));
    }
    return subspace_from_rows(e.algebra, rows, e.mode);
}

}  // namespace kmforge
