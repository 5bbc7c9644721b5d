#pragma once
// Exact dense linear algebra over a field descriptor: canonical reduced row
// echelon form, row-space membership, sums and intersections of row spaces.

#include "kmforge/errors.hpp"

#include <vector>

namespace kmforge {

template <typename F>
struct Matrix {
    using Element = typename F::Element;
    int rows = 0;
    int cols = 0;
    std::vector<Element> a;

    Matrix() = default;
    Matrix(int r, int c, const F& f)
        : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), f.zero()) {}

    Element& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Element& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    std::vector<Element> row(int i) const {
        return std::vector<Element>(a.begin() + static_cast<long>(i) * cols,
                                    a.begin() + static_cast<long>(i + 1) * cols);
    }
    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

template <typename F>
Matrix<F> identity_matrix(const F& f, int d) {
    Matrix<F> m(d, d, f);
    for (int i = 0; i < d; ++i) m.at(i, i) = f.one();
    return m;
}

template <typename F>
Matrix<F> matrix_from_rows(const F& f, const std::vector<std::vector<typename F::Element>>& rows,
                           int cols) {
    Matrix<F> m(static_cast<int>(rows.size()), cols, f);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw InputError("matrix row length mismatch");
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    }
    return m;
}

// Canonical reduced row echelon form: unit pivots, zeros above and below,
// zero rows dropped. Equal row spaces yield identical matrices.
template <typename F>
Matrix<F> rref(const F& f, Matrix<F> m) {
    int pr = 0;
    for (int pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        int piv = -1;
        for (int i = pr; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, pc))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != pr)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(pr, j));
        typename F::Element s = f.inv(m.at(pr, pc));
        for (int j = 0; j < m.cols; ++j) m.at(pr, j) = f.mul(m.at(pr, j), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == pr || f.is_zero(m.at(i, pc))) continue;
            typename F::Element c = m.at(i, pc);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(pr, j)));
        }
        ++pr;
    }
    Matrix<F> out(pr, m.cols, f);
    for (int i = 0; i < pr; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

template <typename F>
int rank(const F& f, const Matrix<F>& m) {
    return rref(f, m).rows;
}

template <typename F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> c(a.rows, b.cols, f);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

// m acting on a column vector
template <typename F>
std::vector<typename F::Element> mat_vec(const F& f, const Matrix<F>& m,
                                         const std::vector<typename F::Element>& v) {
    std::vector<typename F::Element> out(static_cast<size_t>(m.rows), f.zero());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out[static_cast<size_t>(i)] =
                f.add(out[static_cast<size_t>(i)], f.mul(m.at(i, j), v[static_cast<size_t>(j)]));
    return out;
}

// membership of v in the row space of an RREF matrix, by pivot elimination
template <typename F>
bool in_row_space(const F& f, const Matrix<F>& r, std::vector<typename F::Element> v) {
    for (int i = 0; i < r.rows; ++i) {
        int pc = -1;
        for (int j = 0; j < r.cols; ++j)
            if (!f.is_zero(r.at(i, j))) { pc = j; break; }
        if (pc < 0) continue;
        if (f.is_zero(v[static_cast<size_t>(pc)])) continue;
        typename F::Element c = v[static_cast<size_t>(pc)];
        for (int j = 0; j < r.cols; ++j)
            v[static_cast<size_t>(j)] = f.sub(v[static_cast<size_t>(j)], f.mul(c, r.at(i, j)));
    }
    for (auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

template <typename F>
Matrix<F> stack_rows(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows + b.rows, a.cols, f);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) m.at(a.rows + i, j) = b.at(i, j);
    return m;
}

template <typename F>
Matrix<F> row_space_sum(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    return rref(f, stack_rows(f, a, b));
}

// Row-space intersection via the block trick: reduce [A|A; B|0]; rows whose
// left block vanished carry an intersection basis in the right block.
template <typename F>
Matrix<F> row_space_intersect(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    const int d = a.cols;
    Matrix<F> big(a.rows + b.rows, 2 * d, f);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < d; ++j) {
            big.at(i, j) = a.at(i, j);
            big.at(i, d + j) = a.at(i, j);
        }
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < d; ++j) big.at(a.rows + i, j) = b.at(i, j);
    Matrix<F> red = rref(f, big);
    Matrix<F> collect(0, d, f);
    std::vector<std::vector<typename F::Element>> rows;
    for (int i = 0; i < red.rows; ++i) {
        bool left_zero = true;
        for (int j = 0; j < d; ++j)
            if (!f.is_zero(red.at(i, j))) left_zero = false;
        if (!left_zero) continue;
        std::vector<typename F::Element> r(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) r[static_cast<size_t>(j)] = red.at(i, d + j);
        rows.push_back(r);
    }
    return rref(f, matrix_from_rows(f, rows, d));
}

}  // namespace kmforge
