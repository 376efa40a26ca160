#pragma once

#include <set>
#include <vector>

#include "dtl/tree.hpp"

namespace dtl {

enum class Mode { Local, AntiLocal };

// A window-defined tree language: a tree belongs when its top p-subtree is
// in u1, the window at every vertex is in u2 and the complete subtree at
// every vertex that bottoms out within p more levels is in u3. Windows are
// plain p-subtrees in Local mode and p-anti-subtrees in AntiLocal mode; the
// top window is the plain top p-subtree in both modes.
struct LocalSpec {
    int p = 1;
    Mode mode = Mode::Local;
    std::vector<Tree> u1, u2, u3;  // sorted, deduplicated
    AlphabetRef alphabet;

    bool contains_u1(const Tree& t) const;
    bool contains_u2(const Tree& t) const;
    bool contains_u3(const Tree& t) const;
};

// Validates depth bounds (hard) and the containment expectations
// u1, u3 within u2 (soft; reported through the optional warning sink).
LocalSpec make_local_spec(int p, Mode mode, std::vector<Tree> u1, std::vector<Tree> u2,
                          std::vector<Tree> u3, AlphabetRef alphabet,
                          std::string* warning = nullptr);

// Windows at every vertex of the tree (prefixes of labelled addresses).
std::vector<Tree> p_subtrees(const Tree& s, int p);
// Complete subtrees at vertices with no labelled address deeper than p below.
std::vector<Tree> terminal_p_subtrees(const Tree& s, int p);
// Duals, taken at suffixes of labelled addresses.
std::vector<Tree> anti_p_subtrees(const Tree& s, int p);
std::vector<Tree> anti_terminal_p_subtrees(const Tree& s, int p);

bool member(const LocalSpec& spec, const Tree& s);

// Flips the mode and reverses every window tree; accepts exactly the
// reversals of the trees the input accepts.
LocalSpec reverse_spec(const LocalSpec& spec);

// All member trees with domain inside the declared functions up to
// max_depth and at most max_nodes entries, ordered by node count and then
// by serialised entry order. Deterministic and duplicate-free.
std::vector<Tree> enumerate_members(const LocalSpec& spec, int max_depth, int max_nodes);

// p-locally testable string language: prefix of length p in prefixes, every
// length-p substring in internals, suffix of length p in suffixes. Strings
// shorter than p must appear verbatim in all three sets.
struct LocalStringSpec {
    int p = 1;
    std::set<Word> prefixes, internals, suffixes;
    std::vector<Letter> sigma;
};

bool string_member(const LocalStringSpec& spec, const Word& x);

// Chain encoding over a single function. The encoded local tree language,
// linearised root-first along the chain, is the given string language.
LocalSpec encode_string_spec(const LocalStringSpec& spec,
                             const std::string& chain_function = "alpha");

}  // namespace dtl
