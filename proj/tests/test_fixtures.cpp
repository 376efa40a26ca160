#include <doctest.h>

#include <algorithm>

#include "dtl/fixtures.hpp"
#include "dtl/grammar.hpp"
#include "support/generators.hpp"

using namespace dtl;

namespace {

bool holds(const std::vector<Tree>& set, const Tree& t) {
    return std::find(set.begin(), set.end(), t) != set.end();
}

}  // namespace

TEST_CASE("q_tree shapes") {
    CHECK(fixtures::q_tree("").empty());
    Tree q1 = fixtures::q_tree("a");
    CHECK(q1.size() == 2);
    CHECK(q1.depth() == 1);
    CHECK(to_display(linearize(fixtures::pi_squa(), fixtures::q_tree("aba"))) == "aabbaa");
    for (std::string w : {"a", "ab", "bba", "abab", "babab"})
        CHECK(member(fixtures::w_squa_spec(), fixtures::q_tree(w)));
}

TEST_CASE("m_tree shapes") {
    CHECK(fixtures::m_tree(0).empty());
    Tree m1 = fixtures::m_tree(1);
    CHECK(m1.size() == 3);
    CHECK(m1.root()->name == "c");
    CHECK(m1.subtree(Address{{FunctionSymbol{"alpha"}}}).root()->name == "a");
    CHECK(m1.subtree(Address{{FunctionSymbol{"beta"}}}).root()->name == "b");
    for (int n = 0; n <= 5; ++n) {
        CHECK(fixtures::m_tree(n).size() == static_cast<size_t>(3 * n));
        CHECK(member(fixtures::w_mult_spec(), fixtures::m_tree(n)));
    }
    CHECK(to_display(linearize(fixtures::pi_mult(), fixtures::m_tree(3))) == "abcabcabc");
}

TEST_CASE("t_chain shapes") {
    auto al = fixtures::squa_alphabet();
    CHECK(fixtures::t_chain("", FunctionSymbol{"beta"}, al).empty());
    Tree chain = fixtures::t_chain("aba", FunctionSymbol{"alpha"}, al);
    CHECK(chain.reversed() == chain);  // single-function chains are palindromic

    // the side spine of a reversed doubling tree is the plain chain, and the
    // suffix extraction of the plain tree gives the same chain directly
    Tree rev = fixtures::q_tree("aba").reversed();
    CHECK(rev.subtree(Address{{FunctionSymbol{"alpha"}}}) ==
          fixtures::t_chain("aba", FunctionSymbol{"beta"}, al));
    CHECK(fixtures::q_tree("aba").anti_subtree(Address{{FunctionSymbol{"alpha"}}}) ==
          fixtures::t_chain("aba", FunctionSymbol{"beta"}, al));
}

TEST_CASE("bracket fixture self-validates") {
    Tree s = fixtures::dyck_example_tree();
    LocalSpec dyck = fixtures::w_dyck_spec();
    CHECK(member(dyck, s));
    CHECK(to_display(linearize(fixtures::pi_dyck(), s)) == "[()]{[[]]}");
    CHECK(to_display(linearize(fixtures::pi_dyck(), s.reversed())) == "[([[{])]]}");
    // mismatched pairs fall outside the language at any depth
    auto al = fixtures::dyck_alphabet();
    Tree bad = Tree::make({{Address{{FunctionSymbol{"alpha"}}}, Letter{"["}},
                           {Address{{FunctionSymbol{"gamma"}}}, Letter{")"}}},
                          al);
    CHECK(!member(dyck, bad));
    Tree deep_bad = Tree::make(
        {{Address{{FunctionSymbol{"alpha"}}}, Letter{"["}},
         {Address{{FunctionSymbol{"gamma"}}}, Letter{"]"}},
         {Address{{FunctionSymbol{"beta"}, FunctionSymbol{"alpha"}}}, Letter{"("}},
         {Address{{FunctionSymbol{"beta"}, FunctionSymbol{"gamma"}}}, Letter{"}"}}},
        al);
    CHECK(!member(dyck, deep_bad));
}

TEST_CASE("catalog specs accept their constructors") {
    // spec members and constructor images coincide within bounds
    auto members = enumerate_members(fixtures::w_squa_spec(), 4, 8);
    std::vector<Tree> expect{Tree(fixtures::squa_alphabet())};
    for (std::string w : {"a", "b", "aa", "ab", "ba", "bb"}) {
        expect.push_back(fixtures::q_tree(w));
    }
    for (std::string w :
         {"aaa", "aab", "aba", "abb", "baa", "bab", "bba", "bbb"}) {
        expect.push_back(fixtures::q_tree(w));
    }
    for (std::string w : {"aaaa", "aaab"}) (void)w;  // depth 4 keeps words to length 4
    std::vector<std::string> len4;
    for (char a : {'a', 'b'})
        for (char b : {'a', 'b'})
            for (char c : {'a', 'b'})
                for (char d : {'a', 'b'}) len4.push_back(std::string{a, b, c, d});
    for (const auto& w : len4) expect.push_back(fixtures::q_tree(w));
    std::sort(expect.begin(), expect.end(), [](const Tree& a, const Tree& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    CHECK(members == expect);

    auto mult_members = enumerate_members(fixtures::w_mult_spec(), 4, 15);
    for (int n = 0; n <= 4; ++n) CHECK(holds(mult_members, fixtures::m_tree(n)));
    CHECK(mult_members.size() == 5);
}

TEST_CASE("anbn fixture") {
    Grammar g = fixtures::gnf_anbn();
    CHECK_NOTHROW(validate_gnf(g));
    std::set<std::string> expect;
    for (int n = 1; n <= 6; ++n) expect.insert(std::string(n, 'a') + std::string(n, 'b'));
    std::set<std::string> got;
    for (const Word& w : cfg_enumerate(g, 12)) got.insert(to_display(w));
    CHECK(got == expect);

    // the window fixture reads back the same language, plus the empty string
    std::set<std::string> via_trees;
    for (const Tree& t : enumerate_members(fixtures::w_anbn_spec(), 6, 12))
        via_trees.insert(to_display(linearize(fixtures::pi_anbn(), t)));
    expect.insert("");
    CHECK(via_trees == expect);
}

TEST_CASE("subordination fixture") {
    Tree s = fixtures::subord_tree();
    CHECK(s.size() == 6);
    CHECK(reverse_linearisation(fixtures::pi_eng()) == fixtures::pi_dut());
    CHECK(to_display(linearize(fixtures::pi_dut(), s)) ==
          to_display(linearize(fixtures::pi_eng(), s.reversed())));
}

TEST_CASE("catalog listing is stable") {
    auto entries = fixtures::catalog();
    CHECK(entries.size() >= 15);
    for (const auto& e : entries) {
        CHECK(!e.name.empty());
        CHECK(!e.kind.empty());
    }
}
