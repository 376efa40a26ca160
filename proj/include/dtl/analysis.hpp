#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dtl/linearise.hpp"
#include "dtl/locality.hpp"
#include "dtl/tree.hpp"

namespace dtl {

struct ParikhVector {
    std::map<Letter, size_t> counts;

    size_t total() const;

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

ParikhVector parikh_string(const Word& x);
ParikhVector parikh_tree(const Tree& s);

// Bounded view of the two string languages a window language produces under
// a slot list and its dual. Each sampled tree pairs its two readings.
struct DualPairReport {
    int max_depth = 0;
    int max_nodes = 0;
    struct Sample {
        Tree tree;
        Word primal;  // linearize(lin, tree)
        Word dual;    // linearize(reverse_linearisation(lin), tree)
    };
    std::vector<Sample> samples;
    std::set<Word> primal_language;
    std::set<Word> dual_language;
};

DualPairReport dual_pair(const LocalSpec& spec, const Linearisation& lin, int max_depth,
                         int max_nodes);

struct SelfDualResult {
    bool self_dual = false;
    std::optional<Word> counterexample;  // in one bounded language, not the other
    int max_depth = 0;
    int max_nodes = 0;
};

// Bounded evidence only: compares the two bounded languages as sets.
SelfDualResult self_dual_check(const LocalSpec& spec, const Linearisation& lin, int max_depth,
                               int max_nodes);

struct DependencyReport {
    struct Edge {
        Address governor;   // nearest labelled proper ancestor
        Address dependent;
        size_t length = 0;  // distance of the two positions in the output
    };
    std::vector<Edge> edges;
    size_t total = 0;
};

DependencyReport total_dependency_length(const Linearisation& lin, const Tree& s);

struct GrowthRow {
    size_t length = 0;  // |linearize(lin, tree)|
    size_t total = 0;   // total dependency length
};

// One row per enumerated member, in enumeration order.
std::vector<GrowthRow> length_growth(const Linearisation& lin, const LocalSpec& spec,
                                     int max_depth, int max_nodes);

}  // namespace dtl
