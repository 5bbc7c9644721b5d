#include "kmforge/errors.hpp"
#include "kmforge/field.hpp"
#include "kmforge/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace kmforge;

namespace {

template <typename F>
Matrix<F> rows_of(const F& f, const std::vector<std::vector<std::int64_t>>& rows, int cols) {
    std::vector<std::vector<typename F::Element>> conv;
    for (const auto& r : rows) {
        std::vector<typename F::Element> row;
        for (std::int64_t x : r) row.push_back(f.from_int(x));
        conv.push_back(std::move(row));
    }
    return matrix_from_rows(f, conv, cols);
}

// all vectors of F_p^dim in odometer order
std::vector<std::vector<PrimeField::Element>> all_vectors(const PrimeField& f, int dim) {
    const auto p = f.characteristic();
    std::vector<std::vector<PrimeField::Element>> out;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(dim), 0);
    while (true) {
        std::vector<PrimeField::Element> v;
        for (std::int64_t d : digits) v.push_back(f.from_int(d));
        out.push_back(std::move(v));
        int pos = dim - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == p - 1)
            digits[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];
    }
    return out;
}

// every subspace of F_p^dim as a canonical rref basis
std::vector<Matrix<PrimeField>> enumerate_subspaces(const PrimeField& f, int dim) {
    auto vectors = all_vectors(f, dim);
    std::vector<Matrix<PrimeField>> found{Matrix<PrimeField>(0, dim, f)};
    std::vector<std::string> keys;
    auto key_of = [&](const Matrix<PrimeField>& m) {
        std::string k;
        for (const auto& e : m.a) k += f.str(e) + ",";
        return k;
    };
    keys.push_back(key_of(found[0]));
    for (std::size_t at = 0; at < found.size(); ++at) {
        for (const auto& v : vectors) {
            if (in_row_space(f, found[at], v)) continue;
            Matrix<PrimeField> ext =
                row_space_sum(f, found[at], matrix_from_rows(f, {v}, dim));
            std::string k = key_of(ext);
            bool fresh = true;
            for (const auto& seen : keys)
                if (seen == k) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                keys.push_back(std::move(k));
                found.push_back(std::move(ext));
            }
        }
    }
    return found;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField f5(5);
    CHECK(f5.name() == "F5");
    CHECK(f5.characteristic() == 5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.neg(2) == 3);
    CHECK(f5.neg(0) == 0);
    CHECK(f5.from_int(12) == 2);
    CHECK(f5.from_int(-1) == 4);
    CHECK(f5.from_int(-7) == 3);
    for (std::int64_t a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);

    PrimeField f2(2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.inv(1) == 1);

    // a larger prime exercises the 128-bit product path
    PrimeField big(1000003);
    CHECK(big.mul(999999, 999998) == big.from_int(999999LL * 999998 % 1000003));
    CHECK(big.mul(big.inv(123456), 123456) == 1);
}

TEST_CASE("invalid field characteristics are rejected") {
    CHECK_THROWS_MATCHES(PrimeField(1), InputError,
                         Catch::Matchers::Message("invalid field: characteristic must be prime"));
    CHECK_THROWS_MATCHES(PrimeField(4), InputError,
                         Catch::Matchers::Message("invalid field: characteristic must be prime"));
    CHECK_THROWS_MATCHES(PrimeField(0), InputError,
                         Catch::Matchers::Message("invalid field: characteristic must be prime"));
    CHECK_THROWS_MATCHES(PrimeField(9), InputError,
                         Catch::Matchers::Message("invalid field: characteristic must be prime"));
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(97));
}

TEST_CASE("rational field arithmetic is exact") {
    RationalField q;
    CHECK(q.name() == "Q");
    auto third = q.inv(q.from_int(3));
    auto sum = q.add(third, third);
    CHECK(q.str(sum) == "2/3");
    CHECK(q.str(q.mul(sum, q.from_int(3))) == "2");
    CHECK(q.is_zero(q.sub(sum, sum)));
    CHECK(q.str(q.neg(third)) == "-1/3");
}

TEST_CASE("rref produces one canonical basis per row space") {
    PrimeField f2(2);
    // the same plane generated three different ways
    auto a = rref(f2, rows_of(f2, {{1, 1, 0}, {0, 1, 1}}, 3));
    auto b = rref(f2, rows_of(f2, {{1, 0, 1}, {0, 1, 1}}, 3));
    auto c = rref(f2, rows_of(f2, {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}, 3));
    CHECK(a == b);
    CHECK(b == c);
    CHECK(a.rows == 2);  // dependent generator dropped

    // unit pivots with zeros above and below, over F5
    PrimeField f5(5);
    auto m = rref(f5, rows_of(f5, {{2, 4, 1}, {3, 2, 2}}, 3));
    REQUIRE(m.rows == 2);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(0, 1) == 0);

    // zero matrix reduces to no rows at all
    auto z = rref(f2, rows_of(f2, {{0, 0, 0}, {0, 0, 0}}, 3));
    CHECK(z.rows == 0);
    CHECK(z.cols == 3);

    // over the rationals: fractions clear to unit pivots
    RationalField q;
    Matrix<RationalField> qm(2, 2, q);
    qm.at(0, 0) = BigRat(1, 2);
    qm.at(0, 1) = BigRat(1, 3);
    qm.at(1, 0) = BigRat(1);
    qm.at(1, 1) = BigRat(1);
    auto qr = rref(q, qm);
    REQUIRE(qr.rows == 2);
    CHECK(qr == identity_matrix(q, 2));
}

TEST_CASE("matrix row length mismatch is reported") {
    PrimeField f2(2);
    std::vector<std::vector<PrimeField::Element>> bad = {{1, 0, 1}, {1, 0}};
    CHECK_THROWS_MATCHES(matrix_from_rows(f2, bad, 3), InputError,
                         Catch::Matchers::Message("matrix row length mismatch"));
}

TEST_CASE("rank and membership") {
    PrimeField f3(3);
    auto m = rows_of(f3, {{1, 2, 0}, {0, 1, 1}, {0, 0, 1}}, 3);
    CHECK(rank(f3, m) == 3);
    auto sing = rows_of(f3, {{1, 2, 0}, {2, 4, 0}}, 3);  // row 1 == 2 * row 0 mod 3
    CHECK(rank(f3, sing) == 1);
    auto dep = rows_of(f3, {{1, 2, 0}, {0, 1, 1}}, 3);
    // (1,0,1) == row 0 - 2 * row 1 over F3
    CHECK(in_row_space(f3, dep, rows_of(f3, {{1, 0, 1}}, 3).row(0)));
    CHECK_FALSE(in_row_space(f3, dep, rows_of(f3, {{0, 0, 1}}, 3).row(0)));
}

TEST_CASE("matrix product and column action") {
    PrimeField f5(5);
    auto a = rows_of(f5, {{1, 2}, {3, 4}}, 2);
    auto b = rows_of(f5, {{0, 1}, {1, 0}}, 2);
    auto ab = mat_mul(f5, a, b);
    CHECK(ab == rows_of(f5, {{2, 1}, {4, 3}}, 2));

    // the i-th column is the image of the i-th basis vector
    auto e0 = rows_of(f5, {{1, 0}}, 2).row(0);
    auto img = mat_vec(f5, a, e0);
    CHECK(img == rows_of(f5, {{1, 3}}, 2).row(0));

    CHECK(mat_mul(f5, a, identity_matrix(f5, 2)) == a);
    CHECK(mat_mul(f5, identity_matrix(f5, 2), a) == a);
}

TEST_CASE("row space sum and intersection") {
    PrimeField f2(2);
    auto u = rows_of(f2, {{0, 1, 0}, {0, 0, 1}}, 3);  // span{e1, e2}
    auto v = rows_of(f2, {{1, 0, 0}, {0, 0, 1}}, 3);  // span{e0, e2}
    auto s = row_space_sum(f2, u, v);
    CHECK(s.rows == 3);
    auto i = row_space_intersect(f2, u, v);
    REQUIRE(i.rows == 1);
    CHECK(i == rref(f2, rows_of(f2, {{0, 0, 1}}, 3)));

    // intersection with a skew line
    auto diag = rows_of(f2, {{1, 1, 1}}, 3);
    CHECK(row_space_intersect(f2, u, diag).rows == 0);
    CHECK(row_space_sum(f2, u, diag).rows == 3);

    // trivial cases
    auto zero = Matrix<PrimeField>(0, 3, f2);
    CHECK(row_space_sum(f2, u, zero) == rref(f2, u));
    CHECK(row_space_intersect(f2, u, zero).rows == 0);
}

TEST_CASE("modular law over every subspace pair") {
    // dim(U + V) + dim(U meet V) == dim U + dim V, exhaustively
    for (std::int64_t p : {2, 3}) {
        PrimeField f(p);
        const int dim = p == 2 ? 3 : 2;
        auto subs = enumerate_subspaces(f, dim);
        for (const auto& u : subs)
            for (const auto& v : subs) {
                auto s = row_space_sum(f, u, v);
                auto i = row_space_intersect(f, u, v);
                CHECK(s.rows + i.rows == u.rows + v.rows);
                // both bounds contain / are contained appropriately
                for (int r = 0; r < i.rows; ++r) {
                    CHECK(in_row_space(f, u, i.row(r)));
                    CHECK(in_row_space(f, v, i.row(r)));
                }
                for (int r = 0; r < u.rows; ++r) CHECK(in_row_space(f, s, u.row(r)));
                for (int r = 0; r < v.rows; ++r) CHECK(in_row_space(f, s, v.row(r)));
            }
    }
}

TEST_CASE("subspace counts over tiny fields") {
    PrimeField f2(2);
    CHECK(enumerate_subspaces(f2, 2).size() == 5);   // 0, three lines, plane
    CHECK(enumerate_subspaces(f2, 3).size() == 16);  // 1 + 7 + 7 + 1
    PrimeField f3(3);
    CHECK(enumerate_subspaces(f3, 2).size() == 6);   // 0, four lines, plane
    CHECK(enumerate_subspaces(f3, 3).size() == 28);  // 1 + 13 + 13 + 1
}
