#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dtl/errors.hpp"

namespace dtl {

// Edge label drawn from a declared finite set of syntactic functions.
struct FunctionSymbol {
    std::string name;

    friend auto operator<=>(const FunctionSymbol&, const FunctionSymbol&) = default;
};

// Vocabulary letter; equality is by name.
struct Letter {
    std::string name;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A string over the vocabulary. Multi-character letter names are kept
// separate; rendering joins the names.
using Word = std::vector<Letter>;

std::string to_display(const Word& w, const std::string& sep = "");

// Path of syntactic functions addressing a vertex. The empty path is the
// root. Ordering is shortlex so enumeration output is stable.
struct Address {
    std::vector<FunctionSymbol> path;

    Address() = default;
    explicit Address(std::vector<FunctionSymbol> p) : path(std::move(p)) {}

    bool empty() const { return path.empty(); }
    size_t length() const { return path.size(); }

    Address reversed() const;
    Address concat(const Address& suffix) const;
    // Longest proper prefix; undefined on the root address.
    Address parent() const;
    bool is_prefix_of(const Address& other) const;
    bool is_suffix_of(const Address& other) const;
    // Remainder x such that *this ++ x == other; requires is_prefix_of.
    Address strip_prefix_from(const Address& other) const;
    // Remainder x such that x ++ *this == other; requires is_suffix_of.
    Address strip_suffix_from(const Address& other) const;

    friend bool operator==(const Address& a, const Address& b) { return a.path == b.path; }
    friend bool operator!=(const Address& a, const Address& b) { return !(a == b); }
    // shortlex
    friend bool operator<(const Address& a, const Address& b) {
        if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
        return a.path < b.path;
    }
};

// Declared function set and vocabulary a family of trees ranges over.
// Order of declaration is kept: it fixes slot order in constructions and
// the tie-breaking order used by enumeration.
struct Alphabet {
    std::vector<FunctionSymbol> functions;
    std::vector<Letter> vocabulary;

    bool has_function(const FunctionSymbol& f) const;
    bool has_letter(const Letter& l) const;

    // Set equality; declaration order does not matter for compatibility.
    bool compatible_with(const Alphabet& other) const;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(std::vector<std::string> functions, std::vector<std::string> letters);

// A simple dependency tree: a finite partial map from addresses to letters.
// Values are immutable after construction; all operations below are pure.
class Tree {
public:
    Tree() = default;
    explicit Tree(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

    // Validating constructor. Rejects duplicate addresses and symbols or
    // letters outside the declared alphabet.
    static Tree make(const std::vector<std::pair<Address, Letter>>& pairs, AlphabetRef alphabet);

    const std::map<Address, Letter>& entries() const { return entries_; }
    const AlphabetRef& alphabet() const { return alphabet_; }

    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }
    // depth(empty) == 0 by convention.
    size_t depth() const;

    std::optional<Letter> label_at(const Address& a) const;
    // Label at the root address, or nothing when the root is unlabelled.
    std::optional<Letter> root() const { return label_at(Address{}); }

    // Entries at addresses of length <= p; the rest of the tree is trimmed.
    Tree top(size_t p) const;
    // Entry at x moves to the reversed address.
    Tree reversed() const;
    // Entries below the given prefix, with the prefix stripped. Addresses
    // outside the domain give the empty tree.
    Tree subtree(const Address& prefix) const;
    // Entries whose address ends with the given suffix, suffix stripped.
    Tree anti_subtree(const Address& suffix) const;

    // All prefixes of labelled addresses: the vertex set of the tree in its
    // drawn form, where prefixes not in the domain are unlabelled vertices.
    // Empty tree has no vertices.
    std::vector<Address> vertices() const;
    // Dual vertex set: all suffixes of labelled addresses.
    std::vector<Address> anti_vertices() const;

    // Multiset of letters as occurrence counts.
    std::map<Letter, size_t> letter_counts() const;

    // Content comparison; alphabets are checked separately where it matters.
    friend bool operator==(const Tree& a, const Tree& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }
    friend bool operator<(const Tree& a, const Tree& b);

private:
    std::map<Address, Letter> entries_;
    AlphabetRef alphabet_;
};

// Free-function spellings for the four operators and the root accessor.
inline Tree top(const Tree& s, size_t p) { return s.top(p); }
inline Tree reverse(const Tree& s) { return s.reversed(); }
inline Tree subtree(const Tree& s, const Address& a) { return s.subtree(a); }
inline Tree anti_subtree(const Address& a, const Tree& s) { return s.anti_subtree(a); }
inline std::optional<Letter> root(const Tree& s) { return s.root(); }

}  // namespace dtl
