#include "kmforge/commands.hpp"
#include "kmforge/selftest.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace kmforge;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

CommandOutcome run(std::initializer_list<std::string> args) {
    return run_command(std::vector<std::string>(args));
}

}  // namespace

// ---- JSON input layer ----

TEST_CASE("json arguments accept inline text and reject garbage") {
    JsonArgument a = json_argument(R"({"x": 1})");
    CHECK(a.value["x"] == 1);
    CHECK(a.bytes == R"({"x": 1})");
    JsonArgument b = json_argument("  [1, 2]");
    CHECK(b.value.is_array());
    CHECK_THROWS_WITH(json_argument("{"), "malformed JSON");
    CHECK_THROWS_WITH(json_argument("/nonexistent/x.json"),
                      "cannot read file: /nonexistent/x.json");
}

TEST_CASE("json arguments read files") {
    std::filesystem::path p = std::filesystem::temp_directory_path() / "kmforge_arg_test.json";
    {
        std::ofstream f(p);
        f << R"({"kind":"cayley","table":[[0,1],[1,0]]})";
    }
    JsonArgument a = json_argument(p.string());
    CHECK(a.value["kind"] == "cayley");
    CHECK(a.source == p.string());
    std::filesystem::remove(p);
}

TEST_CASE("group JSON round trips and rejects malformed shapes") {
    FiniteGroup s3 = group_from_json(parse_json_text(
        R"({"kind":"permutation","degree":3,"generators":[[1,2,0],[1,0,2]]})"));
    CHECK(s3.order() == 6);
    FiniteGroup c2 = group_from_json(parse_json_text(R"({"kind":"cayley","table":[[0,1],[1,0]]})"));
    CHECK(c2.order() == 2);

    CHECK_THROWS_WITH(group_from_json(parse_json_text("{}")),
                      "group JSON needs \"kind\": \"permutation\" or \"cayley\"");
    CHECK_THROWS_WITH(group_from_json(parse_json_text(R"({"kind":"frobnitz"})")),
                      "unknown group kind: frobnitz");
    CHECK_THROWS_WITH(group_from_json(parse_json_text(R"({"kind":"permutation"})")),
                      "permutation group JSON needs \"degree\"");
    CHECK_THROWS_WITH(
        group_from_json(parse_json_text(R"({"kind":"permutation","degree":3})")),
        "permutation group JSON needs \"generators\"");
    CHECK_THROWS_WITH(group_from_json(parse_json_text(R"({"kind":"cayley"})")),
                      "cayley group JSON needs \"table\"");
}

TEST_CASE("group resolution handles catalog names") {
    GroupInput gi = resolve_group("catalog:Q8");
    CHECK(gi.group.order() == 8);
    CHECK(gi.bytes == "Q8");
    CHECK_THROWS_WITH(resolve_group("catalog:NOPE"), "unknown catalog group: NOPE");
}

TEST_CASE("subgroup JSON supports element indices and generator words") {
    FiniteGroup g = catalog_group("Q8");
    Subgroup a = subgroup_from_json(g, parse_json_text(R"({"generator_words":["g0"]})"));
    CHECK(a.order() == 4);
    Subgroup b = subgroup_from_json(g, parse_json_text(R"({"generator_words":["g0*g1*g0^-1"]})"));
    CHECK(b.order() == 4);
    Subgroup c = subgroup_from_json(g, parse_json_text(R"({"generator_words":["g0^2"]})"));
    CHECK(c.order() == 2);  // i^2 = -1, the central involution
    Subgroup d = subgroup_from_json(g, parse_json_text(R"({"generators":[0]})"));
    CHECK(d.order() == 1);

    CHECK_THROWS_WITH(subgroup_from_json(g, parse_json_text(R"({"generators":[99]})")),
                      "element index out of range: 99");
    CHECK_THROWS_WITH(subgroup_from_json(g, parse_json_text(R"({"generator_words":["g7"]})")),
                      "generator index out of range: g7");
    CHECK_THROWS_WITH(subgroup_from_json(g, parse_json_text(R"({"generator_words":["q0"]})")),
                      "invalid generator word: q0");
    CHECK_THROWS_WITH(subgroup_from_json(g, parse_json_text(R"({"generator_words":["g0*"]})")),
                      "invalid generator word: g0*");
    CHECK_THROWS_WITH(subgroup_from_json(g, parse_json_text("{}")),
                      "subgroup JSON needs \"generators\" or \"generator_words\"");
}

TEST_CASE("field specs parse and reject unknown names") {
    CHECK(parse_field_spec("Q").rational);
    CHECK(parse_field_spec("F2").p == 2);
    CHECK(parse_field_spec("F101").p == 101);
    CHECK_THROWS_WITH(parse_field_spec("X2"), "unknown field: X2");
    CHECK_THROWS_WITH(parse_field_spec("F"), "unknown field: F");
    CHECK_THROWS_WITH(parse_field_spec("F2x"), "unknown field: F2x");
}

TEST_CASE("field elements parse from strings") {
    PrimeField f3(3);
    CHECK(field_element_from_string(f3, "5") == f3.from_int(2));
    CHECK(field_element_from_string(f3, "-1") == f3.from_int(2));
    RationalField q;
    CHECK(field_element_from_string(q, "3/6") == BigRat(BigInt(1), BigInt(2)));
    CHECK(field_element_from_string(q, "-4") == BigRat(BigInt(-4)));
    CHECK_THROWS_WITH(field_element_from_string(q, "1/0"), "invalid field element: 1/0");
    CHECK_THROWS_WITH(field_element_from_string(f3, "x"), "invalid field element: x");
    CHECK_THROWS_WITH(field_element_from_string(f3, ""), "invalid field element: empty string");
}

TEST_CASE("algebra JSON round trips and rejects malformed shapes") {
    PrimeField f2(2);
    Json aj = parse_json_text(R"({"field":"F2","dim":2,"products":[[0,0,1,"1"]]})");
    Algebra<PrimeField> a = algebra_from_json(f2, aj);
    CHECK(a.dim == 2);
    CHECK(a.basis_product(0, 0)[1] == f2.from_int(1));

    CHECK_THROWS_WITH(algebra_from_json(f2, parse_json_text(R"({"field":"F2"})")),
                      "algebra JSON needs \"dim\"");
    CHECK_THROWS_WITH(
        algebra_from_json(f2, parse_json_text(R"({"dim":2,"products":[[0,0,0]]})")),
        "each product entry must be [i, j, k, \"value\"]");

    AlgSubspace<PrimeField> n =
        subspace_from_json(a, parse_json_text(R"({"mode":"twosided","basis":[["0","1"]]})"));
    CHECK(n.dim() == 1);
    CHECK_THROWS_WITH(subspace_from_json(a, parse_json_text(R"({"basis":[]})")),
                      "subspace JSON needs \"mode\"");
    CHECK_THROWS_WITH(
        subspace_from_json(a, parse_json_text(R"({"mode":"sideways","basis":[]})")),
        "unknown ideal mode: sideways");
    CHECK_THROWS_WITH(
        subspace_from_json(a, parse_json_text(R"({"mode":"left","basis":[["1"]]})")),
        "each basis row must list exactly dim entries");
    CHECK_THROWS_WITH(
        subspace_from_json(a, parse_json_text(R"({"mode":"left","basis":[["1",0]]})")),
        "basis entries must be strings");

    std::vector<Matrix<PrimeField>> endos =
        endos_from_json(a, parse_json_text(R"([[["1","0"],["0","1"]]])"));
    CHECK(endos.size() == 1);
    std::vector<Matrix<PrimeField>> wrapped =
        endos_from_json(a, parse_json_text(R"({"endos":[[["1","0"],["0","1"]]]})"));
    CHECK(wrapped.size() == 1);
    CHECK_THROWS_WITH(endos_from_json(a, parse_json_text(R"({"x":1})")),
                      "endomorphism JSON must be an array of matrices");
    CHECK_THROWS_WITH(endos_from_json(a, parse_json_text(R"([[["1","0"]]])")),
                      "each endomorphism must be a dim x dim matrix");
    CHECK_THROWS_WITH(endos_from_json(a, parse_json_text(R"([[["1","0"],["0",1]]])")),
                      "matrix entries must be strings");
}

// ---- canonical reports ----

TEST_CASE("fnv1a matches the published test vectors") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("run reports are canonical and exclude wall time from the hash") {
    RunReport r = RunReport::make("aut");
    r.add_input("group", "catalog:C2", "C2");
    r.body["results"]["count"] = 1;
    RunReport s = RunReport::make("aut");
    s.body["results"]["count"] = 1;  // inserted in a different order
    s.add_input("group", "catalog:C2", "C2");
    CHECK(r.canonical_text() == s.canonical_text());
    CHECK(r.hash() == s.hash());

    std::string p1 = r.printable(17);
    std::string p2 = r.printable(99);
    CHECK(p1 != p2);  // wall time is shown...
    CHECK(contains(p1, r.hash()));
    CHECK(contains(p2, r.hash()));  // ...but the canonical hash ignores it
    CHECK(contains(p1, "\"wall_ms\": \"17\""));
    CHECK_FALSE(contains(r.canonical_text(), "wall_ms"));
}

// ---- commands: success paths with frozen output ----

TEST_CASE("construct command emits the exact flagship certificate") {
    CommandOutcome out = run({"construct", "--group", "catalog:Q8", "--subgroup",
                              R"({"generator_words":["g0"]})", "--word", "[x1,x2]", "--codim",
                              "log2"});
    REQUIRE(out.exit_code == 0);
    CHECK(contains(out.text, "group: catalog:Q8, order 8\n"));
    CHECK(contains(out.text, "word: [x1,x2] (weight 2)\n"));
    CHECK(contains(out.text, "N: order 4, index 2"));
    CHECK(contains(out.text, "fixed point reached at step 2\n"));
    CHECK(contains(out.text, "H: order 2, index 4"));
    CHECK(contains(out.text, "certified: characteristic, identity holds\n"));
    CHECK(contains(out.text, "certificate: log2 4 = 2 ≤ f(1) = 2\n"));
    CHECK(contains(out.text, "bound: 2 ≤ 2\n"));
    REQUIRE(out.has_report);
    CHECK(out.report.body["certificates"]["bound"] == "2");
    CHECK(out.report.body["certificates"]["bound_exact"] == true);
    CHECK(out.report.body["certificates"]["l0"] == "1");
    CHECK(out.report.body["results"]["h"]["order"] == 2);
}

TEST_CASE("construct command certifies p-rank on p-groups") {
    CommandOutcome out = run({"construct", "--group", "catalog:Q8", "--subgroup",
                              R"({"generator_words":["g0"]})", "--word", "[x1,x2]", "--codim",
                              "prank:2"});
    REQUIRE(out.exit_code == 0);
    CHECK(contains(out.text, "codim: prank:2\n"));
    CHECK(contains(out.text, "certificate: rank = "));
    CHECK(out.report.body["certificates"]["bound_exact"] == true);
}

TEST_CASE("construct command runs without a codimension theory") {
    CommandOutcome out = run({"construct", "--group", "catalog:S3", "--subgroup",
                              R"({"generator_words":["g0"]})", "--word", "[x1,x2]", "--codim",
                              "none"});
    REQUIRE(out.exit_code == 0);
    CHECK(contains(out.text, "certificate: none (codim kind none)\n"));
    CHECK(out.report.body["certificates"]["kind"] == "none");
}

TEST_CASE("construct command accepts inline group JSON and writes traces") {
    std::filesystem::path p = std::filesystem::temp_directory_path() / "kmforge_trace_test.json";
    CommandOutcome out = run({"construct", "--group",
                              R"({"kind":"permutation","degree":3,"generators":[[1,2,0],[1,0,2]]})",
                              "--subgroup", R"({"generator_words":["g0"]})", "--word", "[x1,x2]",
                              "--trace", p.string()});
    REQUIRE(out.exit_code == 0);
    Json tr = parse_json_text(read_text_file(p.string()));
    CHECK(tr["word"] == "[x1,x2]");
    CHECK(tr["steps"].size() == 2);
    CHECK(tr["l0"] == "1");
    CHECK(tr["steps"][0]["G_k"]["order"] == 3);
    std::filesystem::remove(p);
}

TEST_CASE("census command emits the exact Q8 summary") {
    CommandOutcome out = run({"census", "--group", "catalog:Q8", "--word", "[x1,x2]"});
    REQUIRE(out.exit_code == 0);
    CHECK(contains(out.text, "3 maximal subgroups; chain verified\n"));
    CHECK(contains(out.text, "maximal 0: order 4, index 2"));
    CHECK(contains(out.text, "intersection: order 2, index 4\n"));
    CHECK(contains(out.text, "count claim: 3 ≤ 4294967296\n"));
    CHECK(out.report.body["results"]["maximal_count"] == 3);
    CHECK(out.report.body["certificates"]["count_claim_ok"] == true);
}

TEST_CASE("census command prints the chain when asked") {
    CommandOutcome out = run({"census", "--group", "catalog:S3", "--word", "[x1,x2]", "--chain"});
    REQUIRE(out.exit_code == 0);
    CHECK(contains(out.text, "1 maximal subgroup; chain verified\n"));
    CHECK(contains(out.text, "chain G_0: order 3\n"));
    CHECK(contains(out.text, "chain G_1: order 3 (subfamily {0})\n"));
    CHECK(contains(out.text, "identity level 0: pass\n"));
    CHECK(contains(out.text, "identity level 2: pass\n"));
    CHECK(contains(out.text, "tail contained in every maximal subgroup: yes\n"));
}

TEST_CASE("aut command counts with exact pluralization") {
    CommandOutcome one = run({"aut", "--group", "catalog:C2"});
    REQUIRE(one.exit_code == 0);
    CHECK(one.text == "group: catalog:C2, order 2\n1 automorphism\n");

    CommandOutcome many = run({"aut", "--group", "catalog:D8", "--verbose"});
    REQUIRE(many.exit_code == 0);
    CHECK(contains(many.text, "8 automorphisms\n"));
    CHECK(contains(many.text, "aut 0: 0 1 2 3 4 5 6 7\n"));
    CHECK(many.report.body["results"]["maps"].size() == 8);

    CommandOutcome cayley =
        run({"aut", "--group", R"({"kind":"cayley","table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]})"});
    REQUIRE(cayley.exit_code == 0);
    CHECK(contains(cayley.text, "2 automorphisms\n"));
}

TEST_CASE("lemma1 command certifies the implication on a concrete family") {
    CommandOutcome out = run(
        {"lemma1", "--group", "catalog:Q8", "--word", "[x1,x2]", "--m", "2", "--family",
         R"([{"generator_words":["g0"]},{"generator_words":["g1"]},{"generator_words":["g0*g1"]}])"});
    REQUIRE(out.exit_code == 0);
    CHECK(contains(out.text, "family: 3 subgroups, orders {4, 4, 4}\n"));
    CHECK(contains(out.text, "hypothesis: holds\n"));
    CHECK(contains(out.text, "conclusion: holds\n"));
    CHECK(out.report.body["results"]["conclusion_holds"] == true);
}

TEST_CASE("lemma1 command reports an unfulfilled hypothesis without certifying") {
    CommandOutcome out = run({"lemma1", "--group", "catalog:S4", "--word", "[x1,x2]", "--m", "1",
                              "--family", R"([{"generator_words":["g0","g1"]}])"});
    REQUIRE(out.exit_code == 0);  // a failed hypothesis is an answer, not an error
    CHECK(contains(out.text, "hypothesis: fails (conclusion not certified)\n"));
    CHECK(out.report.body["results"]["conclusion_holds"].is_null());
}

TEST_CASE("axioms command passes on the stock theories") {
    CommandOutcome log2 = run({"axioms", "--group", "catalog:Q8", "--codim", "log2"});
    REQUIRE(log2.exit_code == 0);
    CHECK(contains(log2.text, "samples: 6 normal subgroups\n"));
    CHECK(contains(log2.text, "axioms 0-3: pass\n"));

    CommandOutcome prank = run({"axioms", "--group", "catalog:E8", "--codim", "prank:2"});
    REQUIRE(prank.exit_code == 0);
    CHECK(contains(prank.text, "axioms 0-3: pass\n"));
}

TEST_CASE("algebra-construct command runs with exhaustive automorphisms") {
    CommandOutcome out = run({"algebra-construct", "--algebra",
                              R"({"field":"F2","dim":2,"products":[]})", "--subspace",
                              R"({"mode":"twosided","basis":[["1","0"]]})", "--word", "(x1*x2)",
                              "--bruteforce-endos"});
    REQUIRE(out.exit_code == 0);
    CHECK(contains(out.text, "algebra: field F2, dim 2\n"));
    CHECK(contains(out.text, "endomorphisms: 6 (exhaustive)\n"));
    CHECK(contains(out.text, "N: dim 1, codim 1\n"));
    CHECK(contains(out.text, "H: dim 0, codim 2\n"));
    CHECK(contains(out.text, "H basis: (empty)\n"));
    CHECK(contains(out.text, "certified: invariant, identity holds, mode preserved\n"));
    CHECK(contains(out.text, "bound: 2 ≤ 2\n"));
    CHECK(out.report.body["certificates"]["bound"] == "2");
    CHECK(out.report.body["results"]["relative"] == false);
}

TEST_CASE("algebra-construct command certifies relative to a supplied family") {
    CommandOutcome out = run({"algebra-construct", "--algebra",
                              R"({"field":"Q","dim":2,"products":[]})", "--subspace",
                              R"({"mode":"subspace","basis":[["1","0"]]})", "--word", "(x1*x2)",
                              "--endos", R"([[["0","1"],["1","0"]]])"});
    REQUIRE(out.exit_code == 0);
    CHECK(contains(out.text, "algebra: field Q, dim 2\n"));
    CHECK(contains(out.text, "endomorphisms: 1 (supplied; certificates relative to this family)\n"));
    CHECK(contains(out.text, "H: dim 0, codim 2\n"));
    CHECK(out.report.body["results"]["relative"] == true);
}

// ---- commands: input errors (exit 1, one-line actionable message) ----

TEST_CASE("command errors map to exit 1 with one-line messages") {
    CommandOutcome unknown_flag = run({"aut", "--group", "catalog:C2", "--bogus"});
    CHECK(unknown_flag.exit_code == 1);
    CHECK(contains(unknown_flag.text, "input error: "));

    CommandOutcome unknown_sub = run({"frobnicate"});
    CHECK(unknown_sub.exit_code == 1);
    CHECK(contains(unknown_sub.text, "input error: "));

    CommandOutcome missing = run({"construct", "--group", "catalog:Q8"});
    CHECK(missing.exit_code == 1);
    CHECK(contains(missing.text, "input error: "));

    CommandOutcome malformed = run({"aut", "--group", "{"});
    CHECK(malformed.exit_code == 1);
    CHECK(malformed.text == "input error: malformed JSON\n");

    CommandOutcome bad_catalog = run({"aut", "--group", "catalog:NOPE"});
    CHECK(bad_catalog.exit_code == 1);
    CHECK(bad_catalog.text == "input error: unknown catalog group: NOPE\n");

    CommandOutcome bad_codim = run({"construct", "--group", "catalog:Q8", "--subgroup",
                                    R"({"generator_words":["g0"]})", "--word", "[x1,x2]",
                                    "--codim", "sideways"});
    CHECK(bad_codim.exit_code == 1);
    CHECK(bad_codim.text == "input error: unknown codim kind: sideways\n");

    CommandOutcome bad_prime = run({"construct", "--group", "catalog:Q8", "--subgroup",
                                    R"({"generator_words":["g0"]})", "--word", "[x1,x2]",
                                    "--codim", "prank:4"});
    CHECK(bad_prime.exit_code == 1);
    CHECK(bad_prime.text == "input error: prank needs a prime: prank:4\n");

    CommandOutcome wrong_p = run({"construct", "--group", "catalog:Q8", "--subgroup",
                                  R"({"generator_words":["g0"]})", "--word", "[x1,x2]",
                                  "--codim", "prank:3"});
    CHECK(wrong_p.exit_code == 1);
    CHECK(wrong_p.text == "input error: order not a power of p\n");

    CommandOutcome not_satisfying = run({"construct", "--group", "catalog:S4", "--subgroup",
                                         R"({"generator_words":["g0","g1"]})", "--word",
                                         "[x1,x2]", "--codim", "log2"});
    CHECK(not_satisfying.exit_code == 1);
    CHECK(not_satisfying.text == "input error: identity fails on N\n");

    CommandOutcome no_endo_flag = run({"algebra-construct", "--algebra",
                                       R"({"field":"F2","dim":2,"products":[]})", "--subspace",
                                       R"({"mode":"twosided","basis":[["1","0"]]})", "--word",
                                       "(x1*x2)"});
    CHECK(no_endo_flag.exit_code == 1);
    CHECK(no_endo_flag.text == "input error: provide --endos or --bruteforce-endos\n");

    CommandOutcome no_field = run({"algebra-construct", "--algebra", R"({"dim":2})",
                                   "--subspace", R"({"mode":"twosided","basis":[]})", "--word",
                                   "(x1*x2)", "--bruteforce-endos"});
    CHECK(no_field.exit_code == 1);
    CHECK(no_field.text == "input error: algebra JSON needs \"field\"\n");

    CommandOutcome bad_family = run({"lemma1", "--group", "catalog:Q8", "--word", "[x1,x2]",
                                     "--m", "1", "--family", R"({"generator_words":["g0"]})"});
    CHECK(bad_family.exit_code == 1);
    CHECK(bad_family.text == "input error: family JSON must be a non-empty array of subgroup objects\n");

    CommandOutcome bad_m = run({"lemma1", "--group", "catalog:Q8", "--word", "[x1,x2]", "--m",
                                "5", "--family", R"([{"generator_words":["g0"]}])"});
    CHECK(bad_m.exit_code == 1);
    CHECK(bad_m.text == "input error: arity mismatch\n");

    CommandOutcome none_axioms = run({"axioms", "--group", "catalog:Q8", "--codim", "none"});
    CHECK(none_axioms.exit_code == 1);
    CHECK(none_axioms.text == "input error: axioms need --codim log2 or prank:<p>\n");
}

TEST_CASE("help requests succeed with usage text") {
    CommandOutcome help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(contains(help.text, "kmforge"));
    CHECK(contains(help.text, "construct"));
}

// ---- output modes and determinism ----

TEST_CASE("output mode falls through from subcommands") {
    CommandOutcome out = run({"aut", "--group", "catalog:C2", "--output", "json"});
    REQUIRE(out.exit_code == 0);
    CHECK(out.output_mode == "json");
    REQUIRE(out.has_report);
    CHECK(out.report.body["command"] == "aut");
    CHECK(contains(out.report.printable(out.wall_ms), "\"report_hash\""));

    CommandOutcome bad = run({"aut", "--group", "catalog:C2", "--output", "xml"});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("identical invocations produce byte-identical reports") {
    std::vector<std::string> args = {"construct", "--group",    "catalog:Q8",
                                     "--subgroup", R"({"generator_words":["g0"]})",
                                     "--word",     "[x1,x2]"};
    CommandOutcome a = run_command(args);
    CommandOutcome b = run_command(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.report.canonical_text() == b.report.canonical_text());
    CHECK(a.report.hash() == b.report.hash());
    CHECK(a.text == b.text);
}

// ---- selftest plumbing ----

TEST_CASE("selftest dispatch honors the filter and the entry-point guard") {
    CommandOutcome guarded = run({"selftest"});
    CHECK(guarded.exit_code == 1);
    CHECK(guarded.text == "input error: selftest is not available through this entry point\n");

    std::vector<std::string> args = {"selftest", "--filter", "scope-note"};
    CommandOutcome scoped = run_command(args, &run_selftest, nullptr);
    CHECK(scoped.exit_code == 0);
    CHECK(contains(scoped.text, "[10] PASS"));
    CHECK(contains(scoped.text, "scope note: "));
    CHECK(contains(scoped.text, "derived series of S4 has length 3"));
    CHECK(contains(scoped.text, "selftest: 1/1 criteria passed"));

    std::vector<std::string> none = {"selftest", "--filter", "zzz-no-such"};
    CommandOutcome empty = run_command(none, &run_selftest, nullptr);
    CHECK(empty.exit_code == 1);
    CHECK(contains(empty.text, "no criteria match filter: zzz-no-such"));
}
