#pragma once

#include <random>
#include <string>
#include <vector>

#include "dtl/grammar.hpp"
#include "dtl/linearise.hpp"
#include "dtl/locality.hpp"
#include "dtl/tree.hpp"

namespace dtl::testgen {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Arbitrary partial map over the alphabet: addresses up to max_depth
// sampled without replacement, letters uniform. Domains need not be
// prefix-closed, so reversal gaps show up too.
inline Tree random_tree(Rng& rng, const AlphabetRef& alphabet, int max_depth, int max_entries) {
    std::vector<Address> universe;
    std::vector<Address> frontier{Address{}};
    universe.push_back(Address{});
    for (int d = 0; d < max_depth; ++d) {
        std::vector<Address> next;
        for (const Address& a : frontier)
            for (const auto& f : alphabet->functions) {
                Address child = a;
                child.path.push_back(f);
                universe.push_back(child);
                next.push_back(child);
            }
        frontier = std::move(next);
    }
    std::shuffle(universe.begin(), universe.end(), rng);
    int k = pick(rng, 0, max_entries);
    std::vector<std::pair<Address, Letter>> pairs;
    for (int i = 0; i < k && i < static_cast<int>(universe.size()); ++i) {
        const auto& vocab = alphabet->vocabulary;
        pairs.push_back({universe[i], vocab[pick(rng, 0, static_cast<int>(vocab.size()) - 1)]});
    }
    return Tree::make(pairs, alphabet);
}

inline AlphabetRef random_alphabet(Rng& rng, int max_functions = 3, int max_letters = 4) {
    static const std::vector<std::string> fn_names{"alpha", "beta", "gamma"};
    static const std::vector<std::string> letter_names{"a", "b", "c", "d"};
    int nf = pick(rng, 1, max_functions);
    int nl = pick(rng, 1, max_letters);
    return make_alphabet({fn_names.begin(), fn_names.begin() + nf},
                         {letter_names.begin(), letter_names.begin() + nl});
}

// Random slot order, projective or anti-projective as a whole. Mixed lists
// are not orderings on every tree (material can fall outside every slot's
// reach), so property tests stick to the pure kinds.
inline Linearisation random_linearisation(Rng& rng, const AlphabetRef& alphabet,
                                          bool allow_anti = true) {
    Slot::Kind kind = allow_anti && pick(rng, 0, 1) ? Slot::Kind::AntiSub : Slot::Kind::Sub;
    std::vector<Slot> slots{Slot{Slot::Kind::Root, {}}};
    for (const auto& f : alphabet->functions) slots.push_back(Slot{kind, f});
    std::shuffle(slots.begin(), slots.end(), rng);
    return Linearisation::make(std::move(slots), alphabet);
}

// Window sets harvested from a few sample trees, so the language is
// guaranteed to contain them and membership tests bite on both sides.
inline LocalSpec random_local_spec(Rng& rng, const AlphabetRef& alphabet, Mode mode) {
    int p = pick(rng, 1, 2);
    std::vector<Tree> u1, u2, u3;
    int samples = pick(rng, 1, 3);
    for (int i = 0; i < samples; ++i) {
        Tree s = random_tree(rng, alphabet, pick(rng, 1, 3), pick(rng, 1, 5));
        u1.push_back(s.top(p));
        if (mode == Mode::Local) {
            for (const Tree& w : p_subtrees(s, p)) u2.push_back(w);
            for (const Tree& w : terminal_p_subtrees(s, p)) u3.push_back(w);
        } else {
            for (const Tree& w : anti_p_subtrees(s, p)) u2.push_back(w);
            for (const Tree& w : anti_terminal_p_subtrees(s, p)) u3.push_back(w);
        }
    }
    return make_local_spec(p, mode, u1, u2, u3, alphabet);
}

// Small terminal-prefixed grammar over {a,b}: up to max_vars variables and
// max_rules rules with at most two body variables.
inline Grammar random_gnf_grammar(Rng& rng, int max_vars = 4, int max_rules = 6) {
    static const std::vector<std::string> names{"S", "A", "B", "D"};
    int nv = pick(rng, 1, max_vars);
    Grammar g;
    g.terminals = {Letter{"a"}, Letter{"b"}};
    g.variables.assign(names.begin(), names.begin() + nv);
    g.start = "S";
    int nr = pick(rng, 1, max_rules);
    for (int i = 0; i < nr; ++i) {
        Rule r;
        r.head = g.variables[pick(rng, 0, nv - 1)];
        r.body.push_back(GSym{true, pick(rng, 0, 1) ? "a" : "b"});
        int body_vars = pick(rng, 0, 2);
        for (int j = 0; j < body_vars; ++j)
            r.body.push_back(GSym{false, g.variables[pick(rng, 0, nv - 1)]});
        g.rules.push_back(std::move(r));
    }
    // keep the start productive more often than not
    if (std::none_of(g.rules.begin(), g.rules.end(),
                     [&](const Rule& r) { return r.head == g.start; }))
        g.rules.push_back(Rule{g.start, {GSym{true, "a"}}});
    return g;
}

inline Word word_of(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(Letter{std::string(1, c)});
    return w;
}

}  // namespace dtl::testgen
