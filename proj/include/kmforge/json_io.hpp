#pragma once

#include "kmforge/algebra.hpp"
#include "kmforge/catalog.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/field.hpp"
#include "kmforge/group.hpp"
#include "kmforge/linalg.hpp"
#include "kmforge/subgroup.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace kmforge {

using Json = nlohmann::json;

inline Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw InputError("malformed JSON");
    return j;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A flag value that may be inline JSON (starts with '{' or '[') or a path to
// a JSON file. Returns the raw bytes the JSON was parsed from alongside the
// parse, so callers can hash exactly what was consumed.
struct JsonArgument {
    std::string source;  // the flag value as given
    std::string bytes;   // inline text or file content
    Json value;
};

inline JsonArgument json_argument(const std::string& arg) {
    JsonArgument out;
    out.source = arg;
    std::size_t i = arg.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (arg[i] == '{' || arg[i] == '['))
        out.bytes = arg;
    else
        out.bytes = read_text_file(arg);
    out.value = parse_json_text(out.bytes);
    return out;
}

namespace detail {

inline int json_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError("expected an integer for " + what);
    return j.get<int>();
}

inline std::vector<std::vector<int>> json_int_rows(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InputError("expected an array for " + what);
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError("expected an array of arrays for " + what);
        std::vector<int> r;
        for (const auto& v : row) r.push_back(json_int(v, what));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace detail

// Group JSON: {"kind":"permutation","degree":N,"generators":[[...],...]} or
// {"kind":"cayley","table":[[...],...]}.
inline FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("group JSON needs \"kind\": \"permutation\" or \"cayley\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "permutation") {
        if (!j.contains("degree")) throw InputError("permutation group JSON needs \"degree\"");
        int degree = detail::json_int(j["degree"], "degree");
        if (!j.contains("generators"))
            throw InputError("permutation group JSON needs \"generators\"");
        auto gens = detail::json_int_rows(j["generators"], "generators");
        return FiniteGroup::from_permutations(degree, gens);
    }
    if (kind == "cayley") {
        if (!j.contains("table")) throw InputError("cayley group JSON needs \"table\"");
        return FiniteGroup::from_cayley(detail::json_int_rows(j["table"], "table"));
    }
    throw InputError("unknown group kind: " + kind);
}

// Resolved group input: "catalog:NAME", inline JSON, or a JSON file path.
struct GroupInput {
    FiniteGroup group;
    std::string source;  // flag value as given
    std::string bytes;   // what determined the group (name or JSON bytes)
};

inline GroupInput resolve_group(const std::string& arg) {
    GroupInput out;
    out.source = arg;
    if (arg.rfind("catalog:", 0) == 0) {
        std::string name = arg.substr(8);
        out.group = catalog_group(name);
        out.bytes = name;
        return out;
    }
    JsonArgument ja = json_argument(arg);
    out.bytes = ja.bytes;
    out.group = group_from_json(ja.value);
    return out;
}

namespace detail {

// Generator words: factors "g<k>" with optional "^<exp>" joined by "*",
// e.g. "g0*g1*g0^-1". Resolved against the group's input generators.
inline int evaluate_generator_word(const FiniteGroup& g, const std::string& word) {
    const std::vector<int>& gens = g.generator_elements();
    int acc = 0;  // identity
    std::size_t pos = 0;
    auto fail = [&word]() -> int {
        throw InputError("invalid generator word: " + word);
    };
    while (pos < word.size()) {
        while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) ++pos;
        if (pos >= word.size() || word[pos] != 'g') return fail();
        ++pos;
        std::size_t start = pos;
        while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
        if (pos == start) return fail();
        std::size_t idx = std::stoul(word.substr(start, pos - start));
        if (idx >= gens.size())
            throw InputError("generator index out of range: g" + std::to_string(idx));
        long long exp = 1;
        if (pos < word.size() && word[pos] == '^') {
            ++pos;
            bool neg = false;
            if (pos < word.size() && word[pos] == '-') {
                neg = true;
                ++pos;
            }
            std::size_t estart = pos;
            while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
            if (pos == estart) return fail();
            exp = std::stoll(word.substr(estart, pos - estart));
            if (neg) exp = -exp;
        }
        int base = gens[idx];
        if (exp < 0) {
            base = g.inv(base);
            exp = -exp;
        }
        for (long long i = 0; i < exp; ++i) acc = g.mul(acc, base);
        while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) ++pos;
        if (pos < word.size()) {
            if (word[pos] != '*') return fail();
            ++pos;
            if (pos >= word.size()) return fail();  // trailing '*'
        }
    }
    return acc;
}

}  // namespace detail

// Subgroup JSON: {"generators":[elementIndex,...]} or
// {"generator_words":["g0*g1^-1",...]} resolved against the input generators.
inline Subgroup subgroup_from_json(const FiniteGroup& g, const Json& j) {
    if (!j.is_object())
        throw InputError("subgroup JSON needs \"generators\" or \"generator_words\"");
    std::vector<int> seeds;
    if (j.contains("generators")) {
        if (!j["generators"].is_array()) throw InputError("expected an array for generators");
        for (const auto& v : j["generators"]) {
            int x = detail::json_int(v, "generators");
            if (x < 0 || x >= g.order())
                throw InputError("element index out of range: " + std::to_string(x));
            seeds.push_back(x);
        }
    } else if (j.contains("generator_words")) {
        if (!j["generator_words"].is_array())
            throw InputError("expected an array for generator_words");
        for (const auto& v : j["generator_words"]) {
            if (!v.is_string()) throw InputError("generator words must be strings");
            seeds.push_back(detail::evaluate_generator_word(g, v.get<std::string>()));
        }
    } else {
        throw InputError("subgroup JSON needs \"generators\" or \"generator_words\"");
    }
    return subgroup_generate(g, seeds);
}

// ---- algebra-side JSON ----

// Field name from algebra JSON: "Q" or "F<p>" with p prime.
struct FieldSpec {
    bool rational = false;
    std::int64_t p = 0;
};

inline FieldSpec parse_field_spec(const std::string& name) {
    if (name == "Q") return {true, 0};
    if (name.size() >= 2 && name[0] == 'F') {
        std::int64_t p = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw InputError("unknown field: " + name);
            p = p * 10 + (name[i] - '0');
            if (p > 1000000007) throw InputError("unknown field: " + name);
        }
        return {false, p};  // PrimeField's constructor validates primality
    }
    throw InputError("unknown field: " + name);
}

namespace detail {

inline std::int64_t parse_decimal_int(const std::string& s) {
    if (s.empty()) throw InputError("invalid field element: empty string");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InputError("invalid field element: " + s);
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw InputError("invalid field element: " + s);
    try {
        return std::stoll(s);
    } catch (const std::exception&) {
        throw InputError("invalid field element: " + s);
    }
}

}  // namespace detail

inline PrimeField::Element field_element_from_string(const PrimeField& f, const std::string& s) {
    return f.from_int(detail::parse_decimal_int(s));
}

inline RationalField::Element field_element_from_string(const RationalField&,
                                                        const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(detail::parse_decimal_int(s)));
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    std::int64_t d = detail::parse_decimal_int(den);
    if (d == 0) throw InputError("invalid field element: " + s);
    BigRat r(BigInt(detail::parse_decimal_int(num)), BigInt(d));
    r.canonicalize();
    return r;
}

// Algebra JSON: {"field":"F2"|"F3"|...|"Q","dim":d,"products":[[i,j,k,"value"],...]}.
template <typename F>
Algebra<F> algebra_from_json(const F& field, const Json& j) {
    if (!j.is_object() || !j.contains("dim")) throw InputError("algebra JSON needs \"dim\"");
    int dim = detail::json_int(j["dim"], "dim");
    Algebra<F> a(field, dim);
    if (j.contains("products")) {
        if (!j["products"].is_array()) throw InputError("expected an array for products");
        for (const auto& p : j["products"]) {
            if (!p.is_array() || p.size() != 4 || !p[3].is_string())
                throw InputError("each product entry must be [i, j, k, \"value\"]");
            int i = detail::json_int(p[0], "products");
            int jj = detail::json_int(p[1], "products");
            int k = detail::json_int(p[2], "products");
            a.set_product(i, jj, k, field_element_from_string(field, p[3].get<std::string>()));
        }
    }
    return a;
}

// Subspace JSON: {"mode":"subspace|left|right|twosided","basis":[["0","1",...],...]}.
template <typename F>
AlgSubspace<F> subspace_from_json(const Algebra<F>& a, const Json& j) {
    if (!j.is_object() || !j.contains("mode") || !j["mode"].is_string())
        throw InputError("subspace JSON needs \"mode\"");
    IdealMode mode = parse_ideal_mode(j["mode"].get<std::string>());
    std::vector<std::vector<typename F::Element>> rows;
    if (j.contains("basis")) {
        if (!j["basis"].is_array()) throw InputError("expected an array for basis");
        for (const auto& row : j["basis"]) {
            if (!row.is_array() || static_cast<int>(row.size()) != a.dim)
                throw InputError("each basis row must list exactly dim entries");
            std::vector<typename F::Element> r;
            for (const auto& v : row) {
                if (!v.is_string()) throw InputError("basis entries must be strings");
                r.push_back(field_element_from_string(a.field, v.get<std::string>()));
            }
            rows.push_back(std::move(r));
        }
    }
    return subspace_from_rows(a, rows, mode);
}

// Endomorphism family JSON: an array of square matrices, each a dim x dim
// array of field-element strings (or {"endos":[...]} wrapping the same).
template <typename F>
std::vector<Matrix<F>> endos_from_json(const Algebra<F>& a, const Json& j) {
    const Json* list = &j;
    if (j.is_object() && j.contains("endos")) list = &j["endos"];
    if (!list->is_array()) throw InputError("endomorphism JSON must be an array of matrices");
    std::vector<Matrix<F>> out;
    for (const auto& m : *list) {
        if (!m.is_array() || static_cast<int>(m.size()) != a.dim)
            throw InputError("each endomorphism must be a dim x dim matrix");
        std::vector<std::vector<typename F::Element>> rows;
        for (const auto& row : m) {
            if (!row.is_array() || static_cast<int>(row.size()) != a.dim)
                throw InputError("each endomorphism must be a dim x dim matrix");
            std::vector<typename F::Element> r;
            for (const auto& v : row) {
                if (!v.is_string()) throw InputError("matrix entries must be strings");
                r.push_back(field_element_from_string(a.field, v.get<std::string>()));
            }
            rows.push_back(std::move(r));
        }
        out.push_back(matrix_from_rows(a.field, rows, a.dim));
    }
    return out;
}

}  // namespace kmforge
