#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dtl/linearise.hpp"
#include "dtl/locality.hpp"
#include "dtl/tree.hpp"

namespace dtl {

// Body symbol of a rewriting rule.
struct GSym {
    bool terminal = false;
    std::string name;

    friend bool operator==(const GSym&, const GSym&) = default;
    friend auto operator<=>(const GSym&, const GSym&) = default;
};

struct Rule {
    std::string head;
    std::vector<GSym> body;  // empty body derives the empty string

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

struct Grammar {
    std::vector<Letter> terminals;
    std::vector<std::string> variables;
    std::string start;
    std::vector<Rule> rules;
};

// Throws on undeclared symbols or a missing start variable.
void validate_grammar(const Grammar& g);

// A grammar whose every rule body is one terminal followed by variables.
struct GnfGrammar {
    Grammar grammar;
};

// The single-occurrence refinement: fresh variables wrap every body
// occurrence, so each wrapper has exactly one unit rule and appears in
// exactly one body position.
struct TransformedGnf {
    Grammar grammar;
    std::vector<std::string> unit_heads;  // wrapper variables in body order
    std::vector<std::string> original_variables;
};

// Accepts exactly the terminal-prefixed shape; reports the offending rule.
GnfGrammar validate_gnf(const Grammar& g);

// Wraps every body variable occurrence in a fresh single-use variable and
// appends the corresponding unit rules. Preserves the language.
TransformedGnf distinct_vars_transform(const GnfGrammar& g);

// Structural check that a grammar already has the transformed shape.
TransformedGnf validate_transformed(const Grammar& g);

// Window-language construction for a projective linearisation: variables per
// internal window, start rules per top window, body rules per child-window
// combination and terminal rules per bottom window.
Grammar cfg_from_local(const LocalSpec& spec, const Linearisation& lin);

// Converse construction: depth-two windows read off the rule combinations of
// a transformed grammar. Derivation trees carry one labelled vertex per
// applied rule, children hanging directly under the rule's single-use
// wrapper functions. Returns the window spec and the root-first slot order
// that replays rule order.
std::pair<LocalSpec, Linearisation> local_from_gnf(const TransformedGnf& g);

// Chart-parser membership; handles empty bodies and unit rules. Used as the
// verification oracle against bounded generation.
bool cyk_member(const Grammar& g, const Word& x);

// Exactly the derivable strings up to the length bound.
std::set<Word> cfg_enumerate(const Grammar& g, int max_len);

}  // namespace dtl
