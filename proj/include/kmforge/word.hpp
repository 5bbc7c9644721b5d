#pragma once

// Outer (multilinear) commutator words.
//
// Grammar:   W ::= "x"<digits> | "[" W "," W "]"
// Each variable must occur exactly once. Parsing normalizes variable names
// to x1..xt in leaf order (left to right) and keeps the original indices.
// The commutator convention is the group's: [u,v] = u^-1 v^-1 u v.

#include "kmforge/caps.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

namespace kmforge {

struct OuterWord {
    struct Node {
        int var = -1;  // 0-based slot for leaves, -1 for brackets
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;
    int weight = 0;                  // number of variables
    std::vector<int> original_vars;  // original 1-based indices, by slot
    std::string text;                // canonical rendering with x1..xt

    bool is_leaf(int n) const { return nodes[static_cast<std::size_t>(n)].var >= 0; }
};

namespace detail {

struct WordParser {
    const std::string& s;
    std::size_t pos = 0;
    OuterWord w;
    std::vector<int> leaf_original;

    explicit WordParser(const std::string& src) : s(src) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail() const {
        throw InputError("syntax error at position " + std::to_string(pos));
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) fail();
        ++pos;
    }
    int parse_node() {
        skip_ws();
        if (pos >= s.size()) fail();
        if (s[pos] == '[') {
            ++pos;
            int l = parse_node();
            expect(',');
            int r = parse_node();
            expect(']');
            OuterWord::Node n;
            n.left = l;
            n.right = r;
            w.nodes.push_back(n);
            return static_cast<int>(w.nodes.size()) - 1;
        }
        if (s[pos] != 'x') fail();
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail();
        int orig = std::stoi(s.substr(start, pos - start));
        if (orig <= 0) fail();
        OuterWord::Node n;
        n.var = static_cast<int>(leaf_original.size());  // slot in leaf order
        leaf_original.push_back(orig);
        w.nodes.push_back(n);
        return static_cast<int>(w.nodes.size()) - 1;
    }
};

inline std::string render(const OuterWord& w, int node) {
    const auto& n = w.nodes[static_cast<std::size_t>(node)];
    if (n.var >= 0) return "x" + std::to_string(n.var + 1);
    return "[" + render(w, n.left) + "," + render(w, n.right) + "]";
}

} // namespace detail

inline OuterWord parse_outer_word(const std::string& src) {
    detail::WordParser p(src);
    int root = p.parse_node();
    p.skip_ws();
    if (p.pos != src.size()) p.fail();

    std::set<int> seen;
    for (int orig : p.leaf_original)
        if (!seen.insert(orig).second) throw InputError("repeated variable");

    OuterWord w = std::move(p.w);
    w.root = root;
    w.weight = static_cast<int>(p.leaf_original.size());
    w.original_vars = std::move(p.leaf_original);
    if (static_cast<std::int64_t>(w.weight) > caps().word_weight)
        throw InputError("weight exceeds cap");
    w.text = detail::render(w, w.root);
    return w;
}

// w_sigma(x1,..,xt) = w(x_sigma(1),..,x_sigma(t)); sigma is 0-based here
struct PermutedWord {
    OuterWord word;
    std::vector<int> sigma;
};

inline PermutedWord permuted_word(const OuterWord& w, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != w.weight || !perm::is_permutation(sigma, w.weight))
        throw InputError("invalid generator: sigma is not a permutation of the slots");
    return {w, sigma};
}

inline int evaluate(const FiniteGroup& g, const OuterWord& w, const std::vector<int>& args) {
    if (static_cast<int>(args.size()) != w.weight) throw InputError("arity mismatch");
    struct Rec {
        const FiniteGroup& g;
        const OuterWord& w;
        const std::vector<int>& args;
        int run(int node) const {
            const auto& n = w.nodes[static_cast<std::size_t>(node)];
            if (n.var >= 0) return args[static_cast<std::size_t>(n.var)];
            return g.comm(run(n.left), run(n.right));
        }
    };
    return Rec{g, w, args}.run(w.root);
}

inline int evaluate(const FiniteGroup& g, const PermutedWord& pw, const std::vector<int>& args) {
    std::vector<int> re(args.size());
    for (std::size_t i = 0; i < args.size(); ++i)
        re[i] = args[static_cast<std::size_t>(pw.sigma[i])];
    return evaluate(g, pw.word, re);
}

// all normalized outer words of the given weight (Catalan(t-1) many)
inline std::vector<OuterWord> enumerate_outer_words(int weight) {
    if (weight < 1 || static_cast<std::int64_t>(weight) > caps().word_weight)
        throw InputError("weight exceeds cap");
    struct Builder {
        std::vector<std::string> build(int t) const {
            if (t == 1) return {"x"};
            std::vector<std::string> out;
            for (int l = 1; l < t; ++l)
                for (const auto& a : build(l))
                    for (const auto& b : build(t - l)) out.push_back("[" + a + "," + b + "]");
            return out;
        }
    };
    std::vector<OuterWord> out;
    for (auto shape : Builder{}.build(weight)) {
        // number the leaves left to right
        std::string txt;
        int v = 0;
        for (char c : shape) {
            if (c == 'x')
                txt += "x" + std::to_string(++v);
            else
                txt += c;
        }
        out.push_back(parse_outer_word(txt));
    }
    return out;
}

} // namespace kmforge
