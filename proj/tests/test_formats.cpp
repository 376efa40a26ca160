#include <doctest.h>

#include "dtl/format.hpp"
#include "dtl/fixtures.hpp"
#include "support/generators.hpp"

using namespace dtl;
using dtl::testgen::Rng;

TEST_CASE("address syntax") {
    CHECK(address_to_string(Address{}) == "/");
    Address a{{FunctionSymbol{"Ob"}, FunctionSymbol{"Dt"}}};
    CHECK(address_to_string(a) == "/Ob/Dt");
    CHECK(address_from_string("/Ob/Dt") == a);
    CHECK(address_from_string("/") == Address{});
    CHECK_THROWS_AS(address_from_string("Ob/Dt"), ParseError);
    CHECK_THROWS_AS(address_from_string("//"), ParseError);
}

TEST_CASE("tree files round trip") {
    Rng rng(301);
    for (int i = 0; i < 100; ++i) {
        auto al = testgen::random_alphabet(rng);
        Tree t = testgen::random_tree(rng, al, 4, 8);
        Tree back = tree_from_text(tree_to_text(t));
        CHECK(back == t);
        CHECK(back.alphabet()->compatible_with(*t.alphabet()));
    }

    Tree parsed = tree_from_text(
        "# a comment\n"
        "functions: alpha beta\n"
        "vocabulary: a b\n"
        "/ : a\n"
        "/alpha : a\n");
    CHECK(parsed.size() == 2);
    CHECK(parsed == fixtures::q_tree("a"));

    CHECK_THROWS_AS(tree_from_text("functions: f\nvocabulary: a\nbroken line\n"), ParseError);
    CHECK_THROWS_AS(tree_from_text("functions: f\nvocabulary: a\n/ : z\n"), UnknownLetter);
}

TEST_CASE("bracket letters survive the tree format") {
    Tree s = fixtures::dyck_example_tree();
    CHECK(tree_from_text(tree_to_text(s)) == s);
}

TEST_CASE("spec files round trip") {
    for (const LocalSpec& spec :
         {fixtures::w_squa_spec(), fixtures::w_mult_spec(), fixtures::w_anbn_spec(),
          reverse_spec(fixtures::w_squa_spec())}) {
        LocalSpec back = spec_from_text(spec_to_text(spec));
        CHECK(back.p == spec.p);
        CHECK(back.mode == spec.mode);
        CHECK(back.u1 == spec.u1);
        CHECK(back.u2 == spec.u2);
        CHECK(back.u3 == spec.u3);
    }
    CHECK_THROWS_AS(spec_from_text("mode: local\nU1:\n"), ParseError);
}

TEST_CASE("linearisation files round trip") {
    for (const Linearisation& lin : {fixtures::pi_squa(), fixtures::pi_mult(),
                                     fixtures::pi_dut(), fixtures::pi_dyck()}) {
        Linearisation back = linearisation_from_text(linearisation_to_text(lin));
        CHECK(back.slots() == lin.slots());
    }
    Linearisation parsed = linearisation_from_text("sub(Sb), root, sub(Ob)\n");
    CHECK(parsed.slots().size() == 3);
    CHECK(parsed.kind() == LinKind::Projective);
    Linearisation anti = linearisation_from_text("anti(Sb), root, anti(Ob)");
    CHECK(anti.kind() == LinKind::AntiProjective);
    CHECK_THROWS_AS(linearisation_from_text("sub(Sb), sub(Ob)"), InvalidLocalSpec);
    CHECK_THROWS_AS(linearisation_from_text("hmm"), ParseError);
}

TEST_CASE("grammar files round trip") {
    Grammar g = fixtures::gnf_anbn();
    Grammar back = grammar_from_text(grammar_to_text(g));
    CHECK(back.start == g.start);
    CHECK(back.terminals == g.terminals);
    CHECK(back.variables == g.variables);
    CHECK(std::set<Rule>(back.rules.begin(), back.rules.end()) ==
          std::set<Rule>(g.rules.begin(), g.rules.end()));

    Grammar eps = grammar_from_text(
        "terminals: a\n"
        "variables: S\n"
        "start: S\n"
        "S -> epsilon | a S\n");
    CHECK(eps.rules.size() == 2);
    CHECK(eps.rules[0].body.empty());
    CHECK(cyk_member(eps, {}));

    CHECK_THROWS_AS(grammar_from_text("terminals: a\nvariables: S\nstart: S\nS -> a Q\n"),
                    ParseError);

    // the transformed shape survives a round trip and revalidates
    TransformedGnf t = distinct_vars_transform(validate_gnf(g));
    Grammar t_back = grammar_from_text(grammar_to_text(t.grammar));
    CHECK_NOTHROW(validate_transformed(t_back));
}

TEST_CASE("word parsing") {
    CHECK(word_from_string("abc") == testgen::word_of("abc"));
    Word spaced = word_from_string("[[ ]]");
    REQUIRE(spaced.size() == 2);
    CHECK(spaced[0].name == "[[");
    CHECK(spaced[1].name == "]]");
}
