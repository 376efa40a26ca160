#pragma once

#include <string>
#include <vector>

#include "dtl/grammar.hpp"
#include "dtl/linearise.hpp"
#include "dtl/locality.hpp"
#include "dtl/tree.hpp"

namespace dtl::fixtures {

// Alphabets shared by the catalog.
AlphabetRef squa_alphabet();   // functions alpha,beta over letters a,b
AlphabetRef mult_alphabet();   // functions alpha,beta,gamma over a,b,c
AlphabetRef dyck_alphabet();   // functions alpha..delta over four bracket pairs
AlphabetRef subord_alphabet(); // functions Sb,Ob over a six-word vocabulary

// Doubling trees: root x1 with an atomic alpha-child x1 and the rest of the
// word below beta. The empty word gives the empty tree. The default
// alphabet covers words over {a,b}; pass a wider one for other letters.
Tree q_tree(const std::string& word);
Tree q_tree(const std::string& word, AlphabetRef alphabet);
// Triple chains: root c with atomic alpha/beta children a and b and the next
// block below gamma; m_tree(0) is empty.
Tree m_tree(int n);
// Plain chain of the word under one function.
Tree t_chain(const std::string& word, const FunctionSymbol& fn, AlphabetRef alphabet);
// Bracket-pair tree of the nesting-plus-concatenation example.
Tree dyck_example_tree();
// Three-verb subordination chain.
Tree subord_tree();

LocalSpec w_squa_spec();
LocalSpec w_mult_spec();
LocalSpec w_anbn_spec();
LocalSpec w_dyck_spec();
LocalStringSpec mult_string_spec();

Linearisation pi_squa();
Linearisation pi_mult();
Linearisation pi_anbn();
Linearisation pi_dyck();
Linearisation pi_eng();
Linearisation pi_dut();

Grammar gnf_anbn();

// Balanced-bracket check for the dyck catalog entries.
bool balanced_brackets(const Word& w);

struct CatalogEntry {
    std::string name;
    std::string kind;  // tree | spec | string-spec | linearisation | grammar
    std::string summary;
};

// Fixed catalog plus the parameterised tree families q-<word>, m-<n> and
// t-<word>.
std::vector<CatalogEntry> catalog();

}  // namespace dtl::fixtures
