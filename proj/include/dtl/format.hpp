#pragma once

#include <iosfwd>
#include <string>

#include "dtl/grammar.hpp"
#include "dtl/linearise.hpp"
#include "dtl/locality.hpp"
#include "dtl/tree.hpp"

namespace dtl {

// Address syntax: "/" for the root, "/f1/f2" below it.
std::string address_to_string(const Address& a);
Address address_from_string(const std::string& s);

// Tree files: "functions:" and "vocabulary:" headers, one "<address> : <letter>"
// line per entry, comment lines starting with '#'.
std::string tree_to_text(const Tree& t);
Tree tree_from_text(const std::string& text);

// Spec files: p/mode/functions/vocabulary header, then U1:/U2:/U3: sections of
// tree blocks separated by blank lines; the line "empty" is the empty tree.
// Containment expectations (U1, U3 inside U2) are reported through the
// optional warning sink.
std::string spec_to_text(const LocalSpec& spec);
LocalSpec spec_from_text(const std::string& text, std::string* warning = nullptr);

// One comma-separated line, e.g. "sub(Sb), root, sub(Ob)".
std::string linearisation_to_text(const Linearisation& lin);
Linearisation linearisation_from_text(const std::string& text);

// Grammar files: terminals/variables/start header and "A -> a B | b" rule
// lines with "epsilon" for the empty body.
std::string grammar_to_text(const Grammar& g);
Grammar grammar_from_text(const std::string& text);

// Space-separated letters; a token without spaces splits into characters.
Word word_from_string(const std::string& s);

}  // namespace dtl
