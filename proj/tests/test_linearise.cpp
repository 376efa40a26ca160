#include <doctest.h>

#include "dtl/fixtures.hpp"
#include "dtl/linearise.hpp"
#include "support/generators.hpp"

using namespace dtl;
using dtl::testgen::Rng;

namespace {

std::string apply(const Linearisation& lin, const Tree& t) { return to_display(linearize(lin, t)); }

}  // namespace

TEST_CASE("golden derivations") {
    CHECK(apply(fixtures::pi_squa(), fixtures::q_tree("aba")) == "aabbaa");
    CHECK(apply(fixtures::pi_mult(), fixtures::m_tree(3)) == "abcabcabc");
    CHECK(apply(fixtures::pi_squa(), fixtures::q_tree("aba").reversed()) == "abaaba");
    CHECK(apply(fixtures::pi_squa(), Tree(fixtures::squa_alphabet())).empty());
}

TEST_CASE("atomic trees map to their letter under any slot list") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        auto al = testgen::random_alphabet(rng);
        Linearisation lin = testgen::random_linearisation(rng, al);
        Tree atomic = Tree::make({{Address{}, al->vocabulary[0]}}, al);
        CHECK(apply(lin, atomic) == al->vocabulary[0].name);
    }
}

TEST_CASE("positions") {
    // a single node sits at position one
    auto al = fixtures::squa_alphabet();
    Tree atomic = Tree::make({{Address{}, Letter{"a"}}}, al);
    PositionedString ps = linearize_positions(fixtures::pi_squa(), atomic);
    CHECK(ps.placement.at(Address{}) == 1);

    // the doubling tree puts its side child first and its root second
    PositionedString q = linearize_positions(fixtures::pi_squa(), fixtures::q_tree("aba"));
    Address alpha(std::vector<FunctionSymbol>{{"alpha"}});
    CHECK(q.placement.at(alpha) == 1);
    CHECK(q.placement.at(Address{}) == 2);

    // placement is a bijection onto 1..n
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        auto al2 = testgen::random_alphabet(rng);
        Linearisation lin = testgen::random_linearisation(rng, al2);
        Tree t = testgen::random_tree(rng, al2, 4, 8);
        PositionedString p = linearize_positions(lin, t);
        CHECK(p.placement.size() == t.size());
        CHECK(p.letters.size() == t.size());
        std::set<size_t> positions;
        for (const auto& [addr, pos] : p.placement) {
            CHECK(t.label_at(addr).has_value());
            CHECK(p.letters[pos - 1] == *t.label_at(addr));
            positions.insert(pos);
        }
        if (!t.empty()) {
            CHECK(*positions.begin() == 1);
            CHECK(*positions.rbegin() == t.size());
        }
    }
}

TEST_CASE("reverse_linearisation") {
    CHECK(reverse_linearisation(fixtures::pi_eng()) == fixtures::pi_dut());
    CHECK(reverse_linearisation(fixtures::pi_dut()) == fixtures::pi_eng());

    Rng rng(19);
    for (int i = 0; i < 100; ++i) {
        auto al = testgen::random_alphabet(rng);
        Linearisation lin = testgen::random_linearisation(rng, al);
        CHECK(reverse_linearisation(reverse_linearisation(lin)) == lin);
    }
    for (int i = 0; i < 200; ++i) {
        auto al = testgen::random_alphabet(rng);
        Linearisation lin = testgen::random_linearisation(rng, al);
        Tree t = testgen::random_tree(rng, al, 4, 8);
        CHECK(linearize(reverse_linearisation(lin), t) == linearize(lin, t.reversed()));
    }
}

TEST_CASE("every output is an ordering of the tree") {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        auto al = testgen::random_alphabet(rng);
        Linearisation lin = testgen::random_linearisation(rng, al);
        Tree t = testgen::random_tree(rng, al, 4, 8);
        Word w = linearize(lin, t);
        std::map<Letter, size_t> counts;
        for (const Letter& l : w) ++counts[l];
        CHECK(counts == t.letter_counts());
    }
}

TEST_CASE("projective slot lists keep subtrees contiguous") {
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        auto al = testgen::random_alphabet(rng);
        Linearisation lin = testgen::random_linearisation(rng, al, /*allow_anti=*/false);
        REQUIRE(lin.kind() == LinKind::Projective);
        Tree t = testgen::random_tree(rng, al, 4, 8);
        PositionedString ps = linearize_positions(lin, t);
        for (const Address& v : t.vertices()) {
            Tree sub = t.subtree(v);
            std::vector<size_t> where;
            for (const auto& [addr, pos] : ps.placement)
                if (v.is_prefix_of(addr)) where.push_back(pos);
            if (where.empty()) continue;
            auto [lo, hi] = std::minmax_element(where.begin(), where.end());
            CHECK(*hi - *lo + 1 == where.size());  // an interval
            CHECK(where.size() == sub.size());
        }
    }
}

TEST_CASE("classification and slot validation") {
    auto al = fixtures::squa_alphabet();
    CHECK(fixtures::pi_squa().kind() == LinKind::Projective);
    CHECK(fixtures::pi_dut().kind() == LinKind::AntiProjective);

    Linearisation mixed = Linearisation::make(
        {Slot{Slot::Kind::Sub, FunctionSymbol{"alpha"}}, Slot{Slot::Kind::Root, {}},
         Slot{Slot::Kind::AntiSub, FunctionSymbol{"beta"}}},
        al);
    CHECK(mixed.kind() == LinKind::Mixed);
    // mixed reaches overlap and can also miss material, so mixed readings
    // are not orderings in general; depth-one trees are read exactly once
    Tree unreachable = Tree::make(
        {{Address{{FunctionSymbol{"beta"}, FunctionSymbol{"alpha"}}}, Letter{"a"}}}, al);
    CHECK(linearize(mixed, unreachable).empty());
    Tree reachable = Tree::make({{Address{}, Letter{"a"}},
                                 {Address{{FunctionSymbol{"alpha"}}}, Letter{"b"}},
                                 {Address{{FunctionSymbol{"beta"}}}, Letter{"b"}}},
                                al);
    CHECK(to_display(linearize(mixed, reachable)) == "bab");

    CHECK_THROWS_AS(Linearisation::make({Slot{Slot::Kind::Sub, FunctionSymbol{"alpha"}}}, al),
                    InvalidLocalSpec);  // no root slot
    CHECK_THROWS_AS(Linearisation::make({Slot{Slot::Kind::Root, {}},
                                         Slot{Slot::Kind::Sub, FunctionSymbol{"alpha"}}},
                                        al),
                    InvalidLocalSpec);  // beta has no slot
    CHECK_THROWS_AS(linearize(fixtures::pi_mult(), fixtures::q_tree("ab")),
                    IncompatibleAlphabets);
}

TEST_CASE("subordination orders") {
    CHECK(to_display(linearize(fixtures::pi_eng(), fixtures::subord_tree()), " ") ==
          "John saw Peter help Mary read");
    CHECK(to_display(linearize(fixtures::pi_dut(), fixtures::subord_tree()), " ") ==
          "John Peter Mary saw help read");
}
