#pragma once

#include "kmforge/algebra_construct.hpp"
#include "kmforge/automorphism.hpp"
#include "kmforge/census.hpp"
#include "kmforge/codim.hpp"
#include "kmforge/construct.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/json_io.hpp"
#include "kmforge/report.hpp"
#include "kmforge/subgroup.hpp"
#include "kmforge/verbal.hpp"
#include "kmforge/word.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kmforge {

// Outcome of one command invocation. `report` is the canonical run report
// (present on success); `text` is the human-readable rendering. Exit codes:
// 0 success, 1 input error, 2 certificate/assertion failure.
struct CommandOutcome {
    int exit_code = 0;
    std::string text;
    bool has_report = false;
    RunReport report;
    std::int64_t wall_ms = 0;
    std::string output_mode = "text";
    bool printed_live = false;  // selftest streams its table as it runs
};

namespace detail {

inline std::string brace_list(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[static_cast<std::size_t>(i)]);
    }
    return s + "}";
}

inline std::string f_power_name(int k) {
    if (k == 1) return "f";
    return "f^" + std::to_string(k);
}

inline Json subgroup_to_json(const Subgroup& s) {
    Json j;
    j["order"] = s.order();
    j["index"] = index_in_parent(s);
    j["generators"] = s.generators;
    j["elements"] = s.elements;
    return j;
}

inline Json trace_to_json(const ConstructionTrace& tr) {
    Json j;
    j["word"] = tr.word.text;
    j["l0"] = tr.l0 ? Json(tr.l0->str()) : Json(nullptr);
    j["fixed_point_at"] = tr.fixed_point_at ? Json(*tr.fixed_point_at) : Json(nullptr);
    j["steps"] = Json::array();
    for (const auto& st : tr.steps) {
        Json s;
        s["k"] = st.k;
        s["G_k"] = subgroup_to_json(st.G_k);
        s["N_k"] = subgroup_to_json(st.N_k);
        s["selected_automorphisms"] = st.selected_autos;
        s["p_k"] = st.p_k;
        s["l_k"] = st.l_k ? Json(st.l_k->str()) : Json(nullptr);
        j["steps"].push_back(std::move(s));
    }
    return j;
}

inline CodimSpec parse_codim_flag(const std::string& s) {
    if (s == "log2") return CodimSpec::log2_index();
    if (s == "none") return CodimSpec::none();
    if (s.rfind("prank:", 0) == 0) {
        std::string ps = s.substr(6);
        if (ps.empty()) throw InputError("unknown codim kind: " + s);
        for (char c : ps)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InputError("unknown codim kind: " + s);
        long long p = 0;
        try {
            p = std::stoll(ps);
        } catch (const std::exception&) {
            throw InputError("unknown codim kind: " + s);
        }
        if (p < 2) throw InputError("prank needs a prime: " + s);
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw InputError("prank needs a prime: " + s);
        return CodimSpec::prank(static_cast<int>(p));
    }
    throw InputError("unknown codim kind: " + s);
}

inline std::string codim_kind_label(const CodimSpec& spec) {
    switch (spec.kind) {
        case CodimKind::Log2Index: return "log2";
        case CodimKind::PRank: return "prank:" + std::to_string(spec.p);
        case CodimKind::None: return "none";
    }
    return "none";
}

}  // namespace detail

// ---- construct ----

struct ConstructOptions {
    std::string group;
    std::string subgroup;
    std::string word;
    std::string codim = "log2";
    std::string trace_path;
};

inline CommandOutcome cmd_construct(const ConstructOptions& o) {
    CommandOutcome out;
    GroupInput gi = resolve_group(o.group);
    const FiniteGroup& g = gi.group;
    JsonArgument sj = json_argument(o.subgroup);
    Subgroup n = subgroup_from_json(g, sj.value);
    OuterWord w = parse_outer_word(o.word);
    CodimSpec spec = detail::parse_codim_flag(o.codim);
    std::vector<Automorphism> auts = automorphism_group(g);

    ConstructResult res = construct_characteristic(g, n, w, spec, auts);
    const int t = w.weight;

    out.report = RunReport::make("construct");
    out.report.add_input("group", gi.source, gi.bytes);
    out.report.add_input("subgroup", sj.source, sj.bytes);
    out.report.add_input("word", w.text);
    out.report.add_input("codim", detail::codim_kind_label(spec));

    Json& results = out.report.body["results"];
    results["group_order"] = g.order();
    results["automorphism_count"] = static_cast<int>(auts.size());
    results["word"] = w.text;
    results["weight"] = t;
    results["n"] = detail::subgroup_to_json(n);
    results["h"] = detail::subgroup_to_json(res.H);
    results["trace"] = detail::trace_to_json(res.trace);
    // both were certified by the construction before it returned
    results["certified_characteristic"] = true;
    results["certified_identity"] = true;

    std::ostringstream ts;
    ts << "group: " << gi.source << ", order " << g.order() << "\n";
    ts << "word: " << w.text << " (weight " << t << ")\n";
    ts << "codim: " << detail::codim_kind_label(spec) << "\n";
    ts << "N: order " << n.order() << ", index " << index_in_parent(n) << ", generators "
       << detail::brace_list(n.generators) << "\n";
    for (const auto& st : res.trace.steps) {
        ts << "k=" << st.k << ": |G_" << st.k << "| = " << st.G_k.order() << ", |N_" << st.k
           << "| = " << st.N_k.order() << ", selected " << st.selected_autos.size() << ", p_"
           << st.k << " = " << st.p_k;
        if (st.l_k) ts << ", l_" << st.k << " = " << st.l_k->str();
        ts << "\n";
    }
    if (res.trace.fixed_point_at)
        ts << "fixed point reached at step " << *res.trace.fixed_point_at << "\n";
    ts << "H: order " << res.H.order() << ", index " << index_in_parent(res.H) << ", elements "
       << detail::brace_list(res.H.elements) << "\n";
    ts << "certified: characteristic, identity holds\n";

    Json& certs = out.report.body["certificates"];
    certs["kind"] = detail::codim_kind_label(spec);
    if (spec.kind != CodimKind::None) {
        CodimValue l0 = *res.trace.l0;
        CodimValue ch = codim(res.H, spec);
        certs["l0"] = l0.str();
        certs["codim_h"] = ch.str();
        certs["index_h"] = std::to_string(index_in_parent(res.H));
        const std::string fname = detail::f_power_name(t - 1);
        if (l0.integral) {
            BigInt bound = f_iter(t - 1, l0.int_value);
            certs["bound"] = bound.get_str();
            certs["bound_exact"] = true;
            if (spec.kind == CodimKind::Log2Index)
                ts << "certificate: log2 " << index_in_parent(res.H) << " = " << ch.str()
                   << " ≤ " << fname << "(" << l0.str() << ") = " << bound.get_str() << "\n";
            else
                ts << "certificate: rank = " << ch.str() << " ≤ " << fname << "("
                   << l0.str() << ") = " << bound.get_str() << "\n";
            ts << "bound: " << ch.str() << " ≤ " << bound.get_str() << "\n";
        } else {
            std::string approx = bound_approx(t - 1, l0);
            certs["bound_ceiling"] = bound_ceil(t - 1, l0).get_str();
            certs["bound_approx"] = approx;
            certs["bound_exact"] = false;
            ts << "certificate: log2 " << index_in_parent(res.H) << " = " << ch.str()
               << " ≤ " << fname << "(" << l0.str() << ") ≈ " << approx
               << " (verified exactly)\n";
            ts << "bound: " << ch.str() << " ≤ " << fname << "(" << l0.str() << ") ≈ "
               << approx << "\n";
        }
    } else {
        ts << "certificate: none (codim kind none)\n";
    }
    out.text = ts.str();

    if (!o.trace_path.empty()) {
        std::ofstream f(o.trace_path, std::ios::binary);
        if (!f) throw InputError("cannot write file: " + o.trace_path);
        f << detail::trace_to_json(res.trace).dump(2) << "\n";
    }
    return out;
}

// ---- census ----

struct CensusOptions {
    std::string group;
    std::string word;
    bool chain = false;
};

inline CommandOutcome cmd_census(const CensusOptions& o) {
    CommandOutcome out;
    GroupInput gi = resolve_group(o.group);
    const FiniteGroup& g = gi.group;
    OuterWord w = parse_outer_word(o.word);
    CensusResult r = census_chain(g, w);
    const int t = w.weight;
    const bool verified = r.identities_verified() && r.tail_contained && r.count_claim_ok;

    out.report = RunReport::make("census");
    out.report.add_input("group", gi.source, gi.bytes);
    out.report.add_input("word", w.text);
    out.report.add_input("chain", o.chain ? "true" : "false");

    Json& results = out.report.body["results"];
    results["group_order"] = g.order();
    results["word"] = w.text;
    results["weight"] = t;
    results["maximal_count"] = static_cast<int>(r.maximal_subgroups.size());
    results["maximal"] = Json::array();
    for (const auto& m : r.maximal_subgroups)
        results["maximal"].push_back(detail::subgroup_to_json(m));
    results["chain"] = Json::array();
    for (const auto& c : r.chain) results["chain"].push_back(detail::subgroup_to_json(c));
    results["subfamilies"] = r.subfamilies;
    results["identity_ok"] = r.identity_ok;
    results["tail_contained"] = r.tail_contained;
    results["intersection"] = detail::subgroup_to_json(r.intersection);
    results["verified"] = verified;

    Json& certs = out.report.body["certificates"];
    certs["bound_n"] = std::to_string(r.bound_n);
    certs["bound_value"] = r.bound_value ? Json(r.bound_value->get_str()) : Json(nullptr);
    certs["count_claim_ok"] = r.count_claim_ok;

    std::ostringstream ts;
    ts << "group: " << gi.source << ", order " << g.order() << "\n";
    ts << "word: " << w.text << " (weight " << t << ")\n";
    ts << r.maximal_subgroups.size() << " maximal subgroup"
       << (r.maximal_subgroups.size() == 1 ? "" : "s") << "; chain "
       << (verified ? "verified" : "check FAILED") << "\n";
    for (std::size_t i = 0; i < r.maximal_subgroups.size(); ++i) {
        const Subgroup& m = r.maximal_subgroups[i];
        ts << "maximal " << i << ": order " << m.order() << ", index " << index_in_parent(m)
           << ", generators " << detail::brace_list(m.generators) << "\n";
    }
    ts << "intersection: order " << r.intersection.order() << ", index "
       << index_in_parent(r.intersection) << "\n";
    if (r.bound_value)
        ts << "count claim: " << r.maximal_subgroups.size() << " ≤ "
           << r.bound_value->get_str() << "\n";
    else
        ts << "count claim: finite (bound beyond representable range)\n";
    if (o.chain) {
        for (std::size_t k = 0; k < r.chain.size(); ++k) {
            ts << "chain G_" << k << ": order " << r.chain[k].order();
            if (k >= 1)
                ts << " (subfamily " << detail::brace_list(r.subfamilies[k - 1]) << ")";
            ts << "\n";
        }
        for (std::size_t k = 0; k < r.identity_ok.size(); ++k)
            ts << "identity level " << k << ": " << (r.identity_ok[k] ? "pass" : "FAIL") << "\n";
        ts << "tail contained in every maximal subgroup: " << (r.tail_contained ? "yes" : "NO")
           << "\n";
    }
    out.text = ts.str();
    if (!verified) out.exit_code = 2;
    return out;
}

// ---- aut ----

struct AutOptions {
    std::string group;
    bool verbose = false;
};

inline CommandOutcome cmd_aut(const AutOptions& o) {
    CommandOutcome out;
    GroupInput gi = resolve_group(o.group);
    const FiniteGroup& g = gi.group;
    std::vector<Automorphism> auts = automorphism_group(g);

    out.report = RunReport::make("aut");
    out.report.add_input("group", gi.source, gi.bytes);
    Json& results = out.report.body["results"];
    results["group_order"] = g.order();
    results["count"] = static_cast<int>(auts.size());
    if (o.verbose) results["maps"] = auts;

    std::ostringstream ts;
    ts << "group: " << gi.source << ", order " << g.order() << "\n";
    ts << auts.size() << " automorphism" << (auts.size() == 1 ? "" : "s") << "\n";
    if (o.verbose) {
        for (std::size_t i = 0; i < auts.size(); ++i) {
            ts << "aut " << i << ":";
            for (int v : auts[i]) ts << " " << v;
            ts << "\n";
        }
    }
    out.text = ts.str();
    return out;
}

// ---- lemma1 ----

struct Lemma1Options {
    std::string group;
    std::string word;
    std::string family;
    int m = 1;
};

inline CommandOutcome cmd_lemma1(const Lemma1Options& o) {
    CommandOutcome out;
    GroupInput gi = resolve_group(o.group);
    const FiniteGroup& g = gi.group;
    OuterWord w = parse_outer_word(o.word);
    JsonArgument fj = json_argument(o.family);
    if (!fj.value.is_array() || fj.value.empty())
        throw InputError("family JSON must be a non-empty array of subgroup objects");
    std::vector<Subgroup> family;
    for (const auto& e : fj.value) family.push_back(subgroup_from_json(g, e));

    Lemma1Result r = check_lemma1(g, w, o.m, family);

    out.report = RunReport::make("lemma1");
    out.report.add_input("group", gi.source, gi.bytes);
    out.report.add_input("word", w.text);
    out.report.add_input("m", std::to_string(o.m));
    out.report.add_input("family", fj.source, fj.bytes);
    Json& results = out.report.body["results"];
    results["group_order"] = g.order();
    results["word"] = w.text;
    results["m"] = o.m;
    results["family"] = Json::array();
    for (const auto& s : family) results["family"].push_back(detail::subgroup_to_json(s));
    results["hypothesis_holds"] = r.hypothesis_holds;
    results["conclusion_holds"] = r.hypothesis_holds ? Json(r.conclusion_holds) : Json(nullptr);

    std::ostringstream ts;
    ts << "group: " << gi.source << ", order " << g.order() << "\n";
    ts << "word: " << w.text << " (weight " << w.weight << "), m = " << o.m << "\n";
    std::vector<int> orders;
    for (const auto& s : family) orders.push_back(s.order());
    ts << "family: " << family.size() << " subgroup" << (family.size() == 1 ? "" : "s")
       << ", orders " << detail::brace_list(orders) << "\n";
    if (!r.hypothesis_holds) {
        ts << "hypothesis: fails (conclusion not certified)\n";
    } else {
        ts << "hypothesis: holds\n";
        ts << "conclusion: " << (r.conclusion_holds ? "holds" : "FAILS") << "\n";
    }
    out.text = ts.str();
    if (r.hypothesis_holds && !r.conclusion_holds) {
        out.exit_code = 2;
        out.text += "certificate failure: hypothesis holds but conclusion fails for " + w.text +
                    " with m = " + std::to_string(o.m) + "\n";
    }
    return out;
}

// ---- axioms ----

struct AxiomsOptions {
    std::string group;
    std::string codim = "log2";
};

inline CommandOutcome cmd_axioms(const AxiomsOptions& o) {
    CommandOutcome out;
    GroupInput gi = resolve_group(o.group);
    const FiniteGroup& g = gi.group;
    CodimSpec spec = detail::parse_codim_flag(o.codim);
    if (spec.kind == CodimKind::None)
        throw InputError("axioms need --codim log2 or prank:<p>");
    std::vector<Subgroup> samples = normal_subgroups(g);
    std::vector<Automorphism> auts = automorphism_group(g);
    AxiomReport rep = check_codim_axioms(g, spec, samples, auts);

    out.report = RunReport::make("axioms");
    out.report.add_input("group", gi.source, gi.bytes);
    out.report.add_input("codim", detail::codim_kind_label(spec));
    Json& results = out.report.body["results"];
    results["group_order"] = g.order();
    results["samples_checked"] = rep.samples_checked;
    results["pairs_checked"] = rep.pairs_checked;
    results["violations"] = Json::array();
    for (const auto& v : rep.violations)
        results["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
    results["all_passed"] = rep.all_passed();

    std::ostringstream ts;
    ts << "group: " << gi.source << ", order " << g.order() << "\n";
    ts << "codim: " << detail::codim_kind_label(spec) << "\n";
    ts << "samples: " << rep.samples_checked << " normal subgroups\n";
    ts << "pairs checked: " << rep.pairs_checked << "\n";
    if (rep.all_passed()) {
        ts << "axioms 0-3: pass\n";
    } else {
        for (const auto& v : rep.violations)
            ts << "axiom " << v.axiom << " violated: " << v.witness << "\n";
        out.exit_code = 2;
    }
    out.text = ts.str();
    return out;
}

// ---- algebra-construct ----

struct AlgebraConstructOptions {
    std::string algebra;
    std::string subspace;
    std::string word;
    std::string endos;
    bool bruteforce = false;
};

namespace detail {

template <typename F>
CommandOutcome algebra_construct_run(const F& field, const JsonArgument& aj,
                                     const AlgebraConstructOptions& o) {
    CommandOutcome out;
    Algebra<F> a = algebra_from_json(field, aj.value);
    JsonArgument sj = json_argument(o.subspace);
    AlgSubspace<F> n = subspace_from_json(a, sj.value);
    MultiWord<F> w = parse_multiword(o.word, field);

    std::vector<Matrix<F>> endos;
    bool relative = false;
    out.report = RunReport::make("algebra-construct");
    out.report.add_input("algebra", aj.source, aj.bytes);
    out.report.add_input("subspace", sj.source, sj.bytes);
    out.report.add_input("word", w.text);
    if (o.bruteforce) {
        endos = algebra_automorphisms_bruteforce(a);
        out.report.add_input("endos", "bruteforce");
    } else {
        JsonArgument ej = json_argument(o.endos);
        endos = endos_from_json(a, ej.value);
        relative = true;
        out.report.add_input("endos", ej.source, ej.bytes);
    }

    AlgebraConstructResult<F> res = construct_invariant_subspace(a, n, w, endos, relative);
    const int t = w.weight;

    auto basis_to_json = [&](const Matrix<F>& m) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows; ++i) {
            Json row = Json::array();
            for (int j = 0; j < m.cols; ++j) row.push_back(a.field.str(m.at(i, j)));
            rows.push_back(std::move(row));
        }
        return rows;
    };

    Json& results = out.report.body["results"];
    results["field"] = a.field.name();
    results["dim"] = a.dim;
    results["mode"] = ideal_mode_name(n.mode);
    results["word"] = w.text;
    results["weight"] = t;
    results["endo_count"] = static_cast<int>(endos.size());
    results["relative"] = relative;
    results["n_dim"] = n.dim();
    results["n_codim"] = n.codim();
    results["n_basis"] = basis_to_json(n.basis);
    results["h_dim"] = res.H.dim();
    results["h_codim"] = res.H.codim();
    results["h_basis"] = basis_to_json(res.H.basis);
    results["fixed_point_at"] =
        res.trace.fixed_point_at ? Json(*res.trace.fixed_point_at) : Json(nullptr);
    results["steps"] = Json::array();
    for (const auto& st : res.trace.steps) {
        Json s;
        s["k"] = st.k;
        s["g_dim"] = st.G_k.dim();
        s["n_dim"] = st.N_k.dim();
        s["selected"] = static_cast<int>(st.selected_endos.size());
        s["p_k"] = st.p_k;
        s["l_k"] = st.l_k;
        results["steps"].push_back(std::move(s));
    }
    results["certified_invariant"] = true;
    results["certified_identity"] = true;
    results["certified_mode"] = true;

    BigInt bound = f_iter(t - 1, BigInt(res.trace.l0));
    Json& certs = out.report.body["certificates"];
    certs["l0"] = std::to_string(res.trace.l0);
    certs["codim_h"] = std::to_string(res.H.codim());
    certs["bound"] = bound.get_str();
    certs["bound_exact"] = true;

    std::ostringstream ts;
    ts << "algebra: field " << a.field.name() << ", dim " << a.dim << "\n";
    ts << "word: " << w.text << " (weight " << t << ")\n";
    ts << "mode: " << ideal_mode_name(n.mode) << "\n";
    ts << "endomorphisms: " << endos.size()
       << (relative ? " (supplied; certificates relative to this family)" : " (exhaustive)")
       << "\n";
    ts << "N: dim " << n.dim() << ", codim " << n.codim() << "\n";
    for (const auto& st : res.trace.steps) {
        ts << "k=" << st.k << ": dim G_" << st.k << " = " << st.G_k.dim() << ", dim N_" << st.k
           << " = " << st.N_k.dim() << ", selected " << st.selected_endos.size() << ", p_"
           << st.k << " = " << st.p_k << ", l_" << st.k << " = " << st.l_k << "\n";
    }
    if (res.trace.fixed_point_at)
        ts << "fixed point reached at step " << *res.trace.fixed_point_at << "\n";
    ts << "H: dim " << res.H.dim() << ", codim " << res.H.codim() << "\n";
    if (res.H.basis.rows == 0) {
        ts << "H basis: (empty)\n";
    } else {
        ts << "H basis:";
        for (int i = 0; i < res.H.basis.rows; ++i) {
            ts << (i ? ", [" : " [");
            for (int j = 0; j < res.H.basis.cols; ++j)
                ts << (j ? " " : "") << a.field.str(res.H.basis.at(i, j));
            ts << "]";
        }
        ts << "\n";
    }
    ts << "certified: invariant, identity holds, mode preserved\n";
    ts << "bound: " << res.H.codim() << " ≤ " << bound.get_str() << "\n";
    out.text = ts.str();
    return out;
}

}  // namespace detail

inline CommandOutcome cmd_algebra_construct(const AlgebraConstructOptions& o) {
    JsonArgument aj = json_argument(o.algebra);
    if (!aj.value.is_object() || !aj.value.contains("field") || !aj.value["field"].is_string())
        throw InputError("algebra JSON needs \"field\"");
    FieldSpec fs = parse_field_spec(aj.value["field"].get<std::string>());
    if (fs.rational) return detail::algebra_construct_run(RationalField{}, aj, o);
    return detail::algebra_construct_run(PrimeField(fs.p), aj, o);
}

// ---- dispatch ----

using SelftestFn = int (*)(const std::string& filter, std::ostream& os);

// Parses and runs one command line (without the program name). The selftest
// subcommand is delegated to `selftest_fn`, streaming to `selftest_out` when
// given (used by the terminal entry point so progress appears live).
inline CommandOutcome run_command(const std::vector<std::string>& args,
                                  SelftestFn selftest_fn = nullptr,
                                  std::ostream* selftest_out = nullptr) {
    CommandOutcome out;

    CLI::App app{"exact constructions of automorphism-invariant subgroups and ideals"};
    app.name("kmforge");
    std::string output_mode = "text";
    app.add_option("--output", output_mode, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.require_subcommand(1);

    ConstructOptions co;
    CLI::App* c_construct =
        app.add_subcommand("construct", "invariant subgroup with a certified codimension bound");
    c_construct->fallthrough();
    c_construct->add_option("--group", co.group, "catalog:NAME, JSON file, or inline JSON")
        ->required();
    c_construct->add_option("--subgroup", co.subgroup, "subgroup JSON (file or inline)")
        ->required();
    c_construct->add_option("--word", co.word, "outer word, e.g. [x1,x2]")->required();
    c_construct->add_option("--codim", co.codim, "log2, prank:<p>, or none");
    c_construct->add_option("--trace", co.trace_path, "write the step trace to this file");

    CensusOptions ceo;
    CLI::App* c_census =
        app.add_subcommand("census", "maximal identity subgroups and the certified chain");
    c_census->fallthrough();
    c_census->add_option("--group", ceo.group, "catalog:NAME, JSON file, or inline JSON")
        ->required();
    c_census->add_option("--word", ceo.word, "outer word, e.g. [x1,x2]")->required();
    c_census->add_flag("--chain", ceo.chain, "print the chain and per-level identity checks");

    AutOptions ao;
    CLI::App* c_aut = app.add_subcommand("aut", "automorphism group of a finite group");
    c_aut->fallthrough();
    c_aut->add_option("--group", ao.group, "catalog:NAME, JSON file, or inline JSON")
        ->required();
    c_aut->add_flag("--verbose", ao.verbose, "print each map as a permutation of element indices");

    Lemma1Options lo;
    CLI::App* c_lemma1 = app.add_subcommand(
        "lemma1", "interleaving implication: identity on each member forces it on meet/join");
    c_lemma1->fallthrough();
    c_lemma1->add_option("--group", lo.group, "catalog:NAME, JSON file, or inline JSON")
        ->required();
    c_lemma1->add_option("--word", lo.word, "outer word, e.g. [x1,x2]")->required();
    c_lemma1->add_option("--m", lo.m, "number of leading slots bound to each member")
        ->required();
    c_lemma1->add_option("--family", lo.family, "JSON array of subgroup objects")->required();

    AxiomsOptions xo;
    CLI::App* c_axioms =
        app.add_subcommand("axioms", "codimension axioms 0-3 on all normal subgroups");
    c_axioms->fallthrough();
    c_axioms->add_option("--group", xo.group, "catalog:NAME, JSON file, or inline JSON")
        ->required();
    c_axioms->add_option("--codim", xo.codim, "log2 or prank:<p>");

    AlgebraConstructOptions ago;
    CLI::App* c_algebra = app.add_subcommand(
        "algebra-construct", "invariant ideal of a structure-constant algebra");
    c_algebra->fallthrough();
    c_algebra->add_option("--algebra", ago.algebra, "algebra JSON (file or inline)")->required();
    c_algebra->add_option("--subspace", ago.subspace, "subspace JSON (file or inline)")
        ->required();
    c_algebra->add_option("--word", ago.word, "multilinear word, e.g. (x1*x2)")->required();
    CLI::Option* opt_endos =
        c_algebra->add_option("--endos", ago.endos, "endomorphism family JSON (file or inline)");
    CLI::Option* opt_brute = c_algebra->add_flag("--bruteforce-endos", ago.bruteforce,
                                                 "enumerate all algebra automorphisms");
    opt_endos->excludes(opt_brute);

    std::string filter;
    CLI::App* c_selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    c_selftest->fallthrough();
    c_selftest->add_option("--filter", filter, "run only criteria whose name contains this");

    std::vector<const char*> argv;
    argv.push_back("kmforge");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            std::ostringstream h;
            h << app.help();
            out.text = h.str();
            out.exit_code = 0;
        } else {
            out.text = std::string("input error: ") + e.what() + "\n";
            out.exit_code = 1;
        }
        return out;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        if (c_construct->parsed()) {
            out = cmd_construct(co);
        } else if (c_census->parsed()) {
            out = cmd_census(ceo);
        } else if (c_aut->parsed()) {
            out = cmd_aut(ao);
        } else if (c_lemma1->parsed()) {
            out = cmd_lemma1(lo);
        } else if (c_axioms->parsed()) {
            out = cmd_axioms(xo);
        } else if (c_algebra->parsed()) {
            if (!ago.bruteforce && ago.endos.empty())
                throw InputError("provide --endos or --bruteforce-endos");
            out = cmd_algebra_construct(ago);
        } else if (c_selftest->parsed()) {
            if (selftest_fn == nullptr)
                throw InputError("selftest is not available through this entry point");
            if (selftest_out != nullptr) {
                out.exit_code = selftest_fn(filter, *selftest_out);
                out.printed_live = true;
            } else {
                std::ostringstream os;
                out.exit_code = selftest_fn(filter, os);
                out.text = os.str();
            }
            out.output_mode = output_mode;
            return out;  // the table is the report
        }
        out.has_report = !out.report.body.is_null() && out.report.body.contains("command");
    } catch (const CertificateError& e) {
        out.exit_code = 2;
        out.text = std::string("certificate failure: ") + e.what() + "\n";
        out.has_report = false;
    } catch (const InputError& e) {
        out.exit_code = 1;
        out.text = std::string("input error: ") + e.what() + "\n";
        out.has_report = false;
    } catch (const std::exception& e) {
        out.exit_code = 1;
        out.text = std::string("input error: ") + e.what() + "\n";
        out.has_report = false;
    }
    auto finished = std::chrono::steady_clock::now();
    out.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count();
    out.output_mode = output_mode;
    return out;
}

}  // namespace kmforge
