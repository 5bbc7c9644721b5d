#include "kmforge/catalog.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/group.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>

using namespace kmforge;

TEST_CASE("permutation composition applies the right factor first") {
    // (a*b)(p) = a[b[p]]
    std::vector<int> a{1, 2, 0};
    std::vector<int> b{1, 0, 2};
    CHECK(perm::compose(a, b) == std::vector<int>{2, 1, 0});
    CHECK(perm::compose(b, a) == std::vector<int>{0, 2, 1});
}

TEST_CASE("catalog orders") {
    const std::map<std::string, int> expected{
        {"C2", 2},   {"C3", 3},   {"C4", 4},   {"C5", 5},   {"C6", 6},   {"C7", 7},
        {"C8", 8},   {"C9", 9},   {"C10", 10}, {"C11", 11}, {"C12", 12}, {"C13", 13},
        {"C14", 14}, {"C15", 15}, {"C16", 16}, {"D8", 8},   {"D10", 10}, {"D12", 12},
        {"D14", 14}, {"D16", 16}, {"Q8", 8},   {"Q16", 16}, {"S3", 6},   {"S4", 24},
        {"A4", 12},  {"A5", 60},  {"SL(2,3)", 24},          {"E4", 4},   {"E8", 8},
        {"E9", 9},   {"E27", 27}, {"C4xC2", 8},             {"M16", 16}};
    REQUIRE(catalog_names().size() == 33);
    for (const auto& name : catalog_names()) {
        INFO(name);
        REQUIRE(expected.count(name) == 1);
        CHECK(catalog_group(name).order() == expected.at(name));
    }
    CHECK_THROWS_AS(catalog_group("F20"), InputError);
}

TEST_CASE("BFS element indexing of S3 is reproducible") {
    FiniteGroup s3 = catalog_group("S3");
    REQUIRE(s3.order() == 6);
    // elements: 0 id, 1 three-cycle g0, 2 swap g1, 3 = g0*g0, 4 = g0*g1, 5 = g1*g0
    CHECK(s3.mul(1, 1) == 3);
    CHECK(s3.mul(1, 2) == 4);
    CHECK(s3.mul(2, 1) == 5);
    CHECK(s3.inv(1) == 3);
    CHECK(s3.inv(2) == 2);
    CHECK(s3.generator_elements() == std::vector<int>{1, 2});
}

TEST_CASE("commutator and conjugation conventions") {
    FiniteGroup s3 = catalog_group("S3");
    // [a,b] = a^-1 b^-1 a b
    CHECK(s3.comm(1, 2) == 1);
    CHECK(s3.comm(2, 1) == 3);  // [b,a] = [a,b]^-1
    CHECK(s3.comm(0, 4) == 0);
    CHECK(s3.comm(4, 0) == 0);
    // g^-1 a g
    CHECK(s3.conj(1, 2) == s3.mul(s3.mul(s3.inv(2), 1), 2));
}

TEST_CASE("element orders in Q8") {
    FiniteGroup q8 = catalog_group("Q8");
    std::vector<int> orders;
    for (int a = 0; a < q8.order(); ++a) orders.push_back(q8.element_order(a));
    CHECK(orders == std::vector<int>{1, 4, 4, 2, 4, 4, 4, 4});
}

TEST_CASE("from_permutations validates input") {
    CHECK_THROWS_WITH(FiniteGroup::from_permutations(3, {{0, 1}}),
                      "invalid generator: not a permutation of the stated degree");
    CHECK_THROWS_WITH(FiniteGroup::from_permutations(2, {{1, 1}}),
                      "invalid generator: not a permutation of the stated degree");
    CHECK_THROWS_WITH(FiniteGroup::from_permutations({}),
                      "invalid generator: empty generator list");
}

TEST_CASE("group order cap") {
    std::vector<int> big(5000);
    for (int i = 0; i < 5000; ++i) big[static_cast<std::size_t>(i)] = (i + 1) % 5000;
    CHECK_THROWS_WITH(FiniteGroup::from_permutations(5000, {big}), "group too large");
}

TEST_CASE("from_cayley accepts a valid table") {
    FiniteGroup c2 = FiniteGroup::from_cayley({{0, 1}, {1, 0}});
    CHECK(c2.order() == 2);
    CHECK(c2.mul(1, 1) == 0);
    CHECK(c2.inv(1) == 1);
}

TEST_CASE("from_cayley rejects bad tables") {
    CHECK_THROWS_WITH(FiniteGroup::from_cayley({{0, 1}, {1, 2}}), "table entry out of range");
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{1, 0}, {0, 1}}), InputError);
    CHECK_THROWS_WITH(FiniteGroup::from_cayley({{1, 0}, {0, 1}}),
                      Catch::Matchers::StartsWith("no identity at index 0"));
    // smallest non-associative loop (order 5), identity at 0, all inverses present
    CHECK_THROWS_WITH(FiniteGroup::from_cayley({{0, 1, 2, 3, 4},
                                                {1, 0, 3, 4, 2},
                                                {2, 3, 4, 0, 1},
                                                {3, 4, 1, 2, 0},
                                                {4, 2, 0, 1, 3}}),
                      "not associative: witness (a,b,c) = (1,1,2)");
    // associative, identity, but row 1 has no inverse
    CHECK_THROWS_WITH(FiniteGroup::from_cayley({{0, 1}, {1, 1}}), "missing inverse: element 1");
}

TEST_CASE("cayley order cap") {
    const int n = 465;  // one past the table-input cap
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    CHECK_THROWS_WITH(FiniteGroup::from_cayley(t), "group too large");
}

TEST_CASE("regular representation round trip") {
    // building D8 from its own multiplication table reproduces the table
    FiniteGroup d8 = catalog_group("D8");
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = d8.mul(a, b);
    FiniteGroup d8b = FiniteGroup::from_cayley(t);
    REQUIRE(d8b.order() == 8);
    for (int a = 0; a < 8; ++a) {
        CHECK(d8b.inv(a) == d8.inv(a));
        for (int b = 0; b < 8; ++b) CHECK(d8b.mul(a, b) == d8.mul(a, b));
    }
}
