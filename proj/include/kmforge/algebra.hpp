#pragma once
// Finite-dimensional (possibly non-associative, non-commutative) algebras via
// structure constants over an exact field, subspaces with ideal modes,
// validated linear endomorphisms, and multilinear word spans.

#include "kmforge/caps.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/field.hpp"
#include "kmforge/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kmforge {

template <typename F>
struct Algebra {
    using Element = typename F::Element;
    F field;
    int dim = 0;
    // e_i * e_j = sum over (k, c) entries
    std::map<std::pair<int, int>, std::vector<std::pair<int, Element>>> products;

    Algebra(F f, int d) : field(std::move(f)), dim(d) {
        if (d < 1) throw InputError("algebra dimension must be positive");
    }

    void set_product(int i, int j, int k, Element c) {
        if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
            throw InputError("structure constant index out of range");
        if (!field.is_zero(c)) products[{i, j}].push_back({k, c});
    }

    std::vector<Element> basis_product(int i, int j) const {
        std::vector<Element> out(static_cast<size_t>(dim), field.zero());
        auto it = products.find({i, j});
        if (it != products.end())
            for (auto& [k, c] : it->second)
                out[static_cast<size_t>(k)] = field.add(out[static_cast<size_t>(k)], c);
        return out;
    }

    std::vector<Element> mul(const std::vector<Element>& x,
                             const std::vector<Element>& y) const {
        std::vector<Element> out(static_cast<size_t>(dim), field.zero());
        for (int i = 0; i < dim; ++i) {
            if (field.is_zero(x[static_cast<size_t>(i)])) continue;
            for (int j = 0; j < dim; ++j) {
                if (field.is_zero(y[static_cast<size_t>(j)])) continue;
                Element c = field.mul(x[static_cast<size_t>(i)], y[static_cast<size_t>(j)]);
                auto it = products.find({i, j});
                if (it == products.end()) continue;
                for (auto& [k, v] : it->second)
                    out[static_cast<size_t>(k)] =
                        field.add(out[static_cast<size_t>(k)], field.mul(c, v));
            }
        }
        return out;
    }
};

enum class IdealMode { Subspace, Left, Right, Twosided };

inline std::string ideal_mode_name(IdealMode m) {
    switch (m) {
        case IdealMode::Subspace: return "subspace";
        case IdealMode::Left: return "left";
        case IdealMode::Right: return "right";
        default: return "twosided";
    }
}

inline IdealMode parse_ideal_mode(const std::string& s) {
    if (s == "subspace") return IdealMode::Subspace;
    if (s == "left") return IdealMode::Left;
    if (s == "right") return IdealMode::Right;
    if (s == "twosided") return IdealMode::Twosided;
    throw InputError("unknown ideal mode: " + s);
}

template <typename F>
struct AlgSubspace {
    const Algebra<F>* parent = nullptr;
    Matrix<F> basis;  // canonical RREF, zero rows dropped
    IdealMode mode = IdealMode::Subspace;

    int dim() const { return basis.rows; }
    int codim() const { return parent->dim - basis.rows; }
};

namespace detail {

template <typename F>
bool closed_under_mode(const Algebra<F>& a, const Matrix<F>& basis, IdealMode mode) {
    if (mode == IdealMode::Subspace) return true;
    for (int i = 0; i < a.dim; ++i) {
        std::vector<typename F::Element> e(static_cast<size_t>(a.dim), a.field.zero());
        e[static_cast<size_t>(i)] = a.field.one();
        for (int r = 0; r < basis.rows; ++r) {
            auto v = basis.row(r);
            if (mode != IdealMode::Right && !in_row_space(a.field, basis, a.mul(e, v)))
                return false;
            if (mode != IdealMode::Left && !in_row_space(a.field, basis, a.mul(v, e)))
                return false;
        }
    }
    return true;
}

// smallest mode-closed superspace of the given row space
template <typename F>
Matrix<F> mode_closure(const Algebra<F>& a, Matrix<F> m, IdealMode mode) {
    m = rref(a.field, m);
    if (mode == IdealMode::Subspace) return m;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<typename F::Element>> extra;
        for (int i = 0; i < a.dim; ++i) {
            std::vector<typename F::Element> e(static_cast<size_t>(a.dim), a.field.zero());
            e[static_cast<size_t>(i)] = a.field.one();
            for (int r = 0; r < m.rows; ++r) {
                auto v = m.row(r);
                if (mode != IdealMode::Right) {
                    auto w = a.mul(e, v);
                    if (!in_row_space(a.field, m, w)) extra.push_back(w);
                }
                if (mode != IdealMode::Left) {
                    auto w = a.mul(v, e);
                    if (!in_row_space(a.field, m, w)) extra.push_back(w);
                }
            }
        }
        if (!extra.empty()) {
            m = row_space_sum(a.field, m,
                              matrix_from_rows(a.field, extra, a.dim));
            grew = true;
        }
    }
    return m;
}

}  // namespace detail

template <typename F>
AlgSubspace<F> subspace_from_rows(const Algebra<F>& a,
                                  const std::vector<std::vector<typename F::Element>>& rows,
                                  IdealMode mode) {
    AlgSubspace<F> s;
    s.parent = &a;
    s.basis = rref(a.field, matrix_from_rows(a.field, rows, a.dim));
    s.mode = mode;
    if (!detail::closed_under_mode(a, s.basis, mode))
        throw InputError("subspace not closed under its ideal mode");
    return s;
}

template <typename F>
AlgSubspace<F> zero_subspace(const Algebra<F>& a, IdealMode mode) {
    AlgSubspace<F> s;
    s.parent = &a;
    s.basis = Matrix<F>(0, a.dim, a.field);
    s.mode = mode;
    return s;
}

template <typename F>
AlgSubspace<F> whole_space(const Algebra<F>& a, IdealMode mode) {
    AlgSubspace<F> s;
    s.parent = &a;
    s.basis = identity_matrix(a.field, a.dim);
    s.mode = mode;
    return s;
}

template <typename F>
void require_same_parent(const AlgSubspace<F>& u, const AlgSubspace<F>& v) {
    if (u.parent != v.parent) throw InputError("parent mismatch");
}

template <typename F>
AlgSubspace<F> sum(const AlgSubspace<F>& u, const AlgSubspace<F>& v) {
    require_same_parent(u, v);
    if (u.mode != v.mode) throw InputError("mode mismatch");
    AlgSubspace<F> s;
    s.parent = u.parent;
    s.basis = row_space_sum(u.parent->field, u.basis, v.basis);
    s.mode = u.mode;
    return s;
}

template <typename F>
AlgSubspace<F> intersect(const AlgSubspace<F>& u, const AlgSubspace<F>& v) {
    require_same_parent(u, v);
    if (u.mode != v.mode) throw InputError("mode mismatch");
    AlgSubspace<F> s;
    s.parent = u.parent;
    s.basis = row_space_intersect(u.parent->field, u.basis, v.basis);
    s.mode = u.mode;
    return s;
}

template <typename F>
bool member(const AlgSubspace<F>& u, const std::vector<typename F::Element>& v) {
    return in_row_space(u.parent->field, u.basis, v);
}

template <typename F>
bool same_space(const AlgSubspace<F>& u, const AlgSubspace<F>& v) {
    return u.parent == v.parent && u.basis == v.basis;
}

// ---------------------------------------------------------------------------
// Linear endomorphisms: invertible multiplicative matrices (columns are the
// images of the basis vectors; the matrix acts on column vectors).

template <typename F>
struct LinearEndo {
    const Algebra<F>* parent = nullptr;
    Matrix<F> m;
};

template <typename F>
bool is_algebra_endomorphism(const Algebra<F>& a, const Matrix<F>& m) {
    if (m.rows != a.dim || m.cols != a.dim) return false;
    if (rank(a.field, m) != a.dim) return false;
    for (int i = 0; i < a.dim; ++i) {
        std::vector<typename F::Element> mi(static_cast<size_t>(a.dim));
        for (int r = 0; r < a.dim; ++r) mi[static_cast<size_t>(r)] = m.at(r, i);
        for (int j = 0; j < a.dim; ++j) {
            std::vector<typename F::Element> mj(static_cast<size_t>(a.dim));
            for (int r = 0; r < a.dim; ++r) mj[static_cast<size_t>(r)] = m.at(r, j);
            if (mat_vec(a.field, m, a.basis_product(i, j)) != a.mul(mi, mj)) return false;
        }
    }
    return true;
}

template <typename F>
LinearEndo<F> make_endo(const Algebra<F>& a, const Matrix<F>& m) {
    if (!is_algebra_endomorphism(a, m))
        throw InputError("map not an algebra endomorphism");
    return LinearEndo<F>{&a, m};
}

template <typename F>
AlgSubspace<F> apply_endo(const LinearEndo<F>& e, const AlgSubspace<F>& u) {
    if (e.parent != u.parent) throw InputError("parent mismatch");
    const F& f = u.parent->field;
    std::vector<std::vector<typename F::Element>> rows;
    for (int r = 0; r < u.basis.rows; ++r)
        rows.push_back(mat_vec(f, e.m, u.basis.row(r)));
    AlgSubspace<F> s;
    s.parent = u.parent;
    s.basis = rref(f, matrix_from_rows(f, rows, u.parent->dim));
    s.mode = u.mode;
    return s;
}

// ---------------------------------------------------------------------------
// Multilinear words: sums of coefficient-weighted binary product trees where
// every monomial uses each of x1..xt exactly once.

struct MonoNode {
    int var = 0;  // 1-based when leaf, 0 when internal
    int left = -1;
    int right = -1;
};

struct Monomial {
    std::vector<MonoNode> nodes;
    int root = 0;
};

template <typename F>
struct MultiWord {
    std::vector<std::pair<typename F::Element, Monomial>> terms;
    int weight = 0;
    std::string text;
};

namespace detail {

class MultiWordParser {
public:
    explicit MultiWordParser(const std::string& s) : s_(s) {}

    // mono ::= "x"<digits> | "(" mono "*" mono ")"
    int parse_mono(Monomial& m) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            int l = parse_mono(m);
            skip_space();
            expect('*');
            int r = parse_mono(m);
            skip_space();
            expect(')');
            m.nodes.push_back({0, l, r});
            return static_cast<int>(m.nodes.size()) - 1;
        }
        if (pos_ < s_.size() && s_[pos_] == 'x') {
            ++pos_;
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail();
            int v = 0;
            for (size_t i = start; i < pos_; ++i) v = v * 10 + (s_[i] - '0');
            if (v < 1) fail();
            m.nodes.push_back({v, -1, -1});
            return static_cast<int>(m.nodes.size()) - 1;
        }
        fail();
        return -1;
    }

    // returns (sign, coefficient digits or empty, monomial)
    bool at_end() {
        skip_space();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void advance() { ++pos_; }

    long long parse_coeff() {
        skip_space();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail();
        long long v = 0;
        for (size_t i = start; i < pos_; ++i) v = v * 10 + (s_[i] - '0');
        skip_space();
        expect('*');
        return v;
    }

    [[noreturn]] void fail() {
        throw InputError("syntax error at position " + std::to_string(pos_));
    }

private:
    void skip_space() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) fail();
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

inline void collect_vars(const Monomial& m, int node, std::vector<int>& out) {
    const MonoNode& n = m.nodes[static_cast<size_t>(node)];
    if (n.var > 0) {
        out.push_back(n.var);
        return;
    }
    collect_vars(m, n.left, out);
    collect_vars(m, n.right, out);
}

inline std::string render_mono(const Monomial& m, int node) {
    const MonoNode& n = m.nodes[static_cast<size_t>(node)];
    if (n.var > 0) return "x" + std::to_string(n.var);
    return "(" + render_mono(m, n.left) + "*" + render_mono(m, n.right) + ")";
}

}  // namespace detail

template <typename F>
MultiWord<F> parse_multiword(const std::string& text, const F& field) {
    detail::MultiWordParser p(text);
    MultiWord<F> w;
    bool first = true;
    std::set<int> var_set;
    while (true) {
        if (p.at_end()) {
            if (first) p.fail();
            break;
        }
        typename F::Element sign = field.one();
        char c = p.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = field.neg(sign);
            p.advance();
        } else if (!first) {
            p.fail();
        }
        typename F::Element coeff = sign;
        if (std::isdigit(static_cast<unsigned char>(p.peek())))
            coeff = field.mul(sign, field.from_int(p.parse_coeff()));
        Monomial m;
        m.root = p.parse_mono(m);
        std::vector<int> vars;
        detail::collect_vars(m, m.root, vars);
        std::set<int> vs(vars.begin(), vars.end());
        if (vs.size() != vars.size())
            throw InputError("repeated variable in monomial");
        if (first) {
            var_set = vs;
            int t = static_cast<int>(var_set.size());
            for (int v = 1; v <= t; ++v)
                if (!var_set.count(v)) throw InputError("variables must be x1..xt");
            if (static_cast<std::int64_t>(t) > caps().word_weight)
                throw InputError("weight exceeds cap");
            w.weight = t;
        } else if (vs != var_set) {
            throw InputError("variable-set mismatch across terms");
        }
        w.terms.push_back({coeff, std::move(m)});
        first = false;
    }
    // render canonical text
    std::string out;
    for (size_t i = 0; i < w.terms.size(); ++i) {
        const F& f = field;
        typename F::Element c = w.terms[i].first;
        std::string cs = f.str(c);
        if (i > 0) out += " + ";
        if (cs != "1") out += cs + "*";
        out += detail::render_mono(w.terms[i].second, w.terms[i].second.root);
    }
    w.text = out;
    return w;
}

namespace detail {

template <typename F>
std::vector<typename F::Element> eval_mono(const Algebra<F>& a, const Monomial& m, int node,
                                           const std::vector<std::vector<typename F::Element>>& args) {
    const MonoNode& n = m.nodes[static_cast<size_t>(node)];
    if (n.var > 0) return args[static_cast<size_t>(n.var - 1)];
    return a.mul(eval_mono(a, m, n.left, args), eval_mono(a, m, n.right, args));
}

}  // namespace detail

// value of the word at a concrete argument tuple
template <typename F>
std::vector<typename F::Element> evaluate_multiword(
    const Algebra<F>& a, const MultiWord<F>& w,
    const std::vector<std::vector<typename F::Element>>& args) {
    if (static_cast<int>(args.size()) != w.weight) throw InputError("arity mismatch");
    std::vector<typename F::Element> out(static_cast<size_t>(a.dim), a.field.zero());
    for (auto& [coeff, mono] : w.terms) {
        auto v = detail::eval_mono(a, mono, mono.root, args);
        for (int i = 0; i < a.dim; ++i)
            out[static_cast<size_t>(i)] = a.field.add(
                out[static_cast<size_t>(i)], a.field.mul(coeff, v[static_cast<size_t>(i)]));
    }
    return out;
}

// span of word values over basis tuples (multilinearity makes those
// sufficient), closed to the requested ideal mode
template <typename F>
AlgSubspace<F> word_span(const Algebra<F>& a, const MultiWord<F>& w,
                         const std::vector<AlgSubspace<F>>& args, IdealMode out_mode) {
    if (static_cast<int>(args.size()) != w.weight) throw InputError("arity mismatch");
    for (auto& u : args)
        if (u.parent != &a) throw InputError("parent mismatch");
    std::vector<std::vector<typename F::Element>> values;
    std::vector<int> idx(static_cast<size_t>(w.weight), 0);
    bool any_empty = false;
    for (auto& u : args)
        if (u.basis.rows == 0) any_empty = true;
    if (!any_empty) {
        while (true) {
            std::vector<std::vector<typename F::Element>> tuple;
            for (int i = 0; i < w.weight; ++i)
                tuple.push_back(args[static_cast<size_t>(i)].basis.row(idx[static_cast<size_t>(i)]));
            values.push_back(evaluate_multiword(a, w, tuple));
            int i = w.weight - 1;
            while (i >= 0) {
                if (++idx[static_cast<size_t>(i)] <
                    args[static_cast<size_t>(i)].basis.rows)
                    break;
                idx[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    AlgSubspace<F> s;
    s.parent = &a;
    s.basis = detail::mode_closure(
        a, matrix_from_rows(a.field, values, a.dim), out_mode);
    s.mode = out_mode;
    return s;
}

template <typename F>
bool satisfies_multiword(const Algebra<F>& a, const MultiWord<F>& w, const AlgSubspace<F>& n) {
    std::vector<AlgSubspace<F>> args(static_cast<size_t>(w.weight), n);
    return word_span(a, w, args, IdealMode::Subspace).dim() == 0;
}

}  // namespace kmforge
