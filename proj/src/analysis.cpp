#include "dtl/analysis.hpp"

#include <algorithm>
#include <cstdlib>

namespace dtl {

size_t ParikhVector::total() const {
    size_t n = 0;
    for (const auto& [l, c] : counts) n += c;
    return n;
}

ParikhVector parikh_string(const Word& x) {
    ParikhVector v;
    for (const Letter& l : x) ++v.counts[l];
    return v;
}

ParikhVector parikh_tree(const Tree& s) {
    ParikhVector v;
    v.counts = s.letter_counts();
    return v;
}

DualPairReport dual_pair(const LocalSpec& spec, const Linearisation& lin, int max_depth,
                         int max_nodes) {
    if (spec.alphabet && lin.alphabet() && !spec.alphabet->compatible_with(*lin.alphabet()))
        throw IncompatibleAlphabets("spec and linearisation declare different alphabets");
    Linearisation dual = reverse_linearisation(lin);
    DualPairReport report;
    report.max_depth = max_depth;
    report.max_nodes = max_nodes;
    for (const Tree& t : enumerate_members(spec, max_depth, max_nodes)) {
        DualPairReport::Sample s;
        s.tree = t;
        s.primal = linearize(lin, t);
        s.dual = linearize(dual, t);
        // the dual reading coincides with the plain reading of the reversed tree
        if (s.dual != linearize(lin, t.reversed()))
            throw Error("InternalCheck", "dual reading disagrees with the reversed tree");
        report.primal_language.insert(s.primal);
        report.dual_language.insert(s.dual);
        report.samples.push_back(std::move(s));
    }
    return report;
}

SelfDualResult self_dual_check(const LocalSpec& spec, const Linearisation& lin, int max_depth,
                               int max_nodes) {
    DualPairReport report = dual_pair(spec, lin, max_depth, max_nodes);
    SelfDualResult res;
    res.max_depth = max_depth;
    res.max_nodes = max_nodes;
    std::vector<Word> diff;
    std::set_symmetric_difference(report.primal_language.begin(), report.primal_language.end(),
                                  report.dual_language.begin(), report.dual_language.end(),
                                  std::back_inserter(diff));
    if (diff.empty()) {
        res.self_dual = true;
    } else {
        auto it = std::min_element(diff.begin(), diff.end(), [](const Word& a, const Word& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        res.counterexample = *it;
    }
    return res;
}

DependencyReport total_dependency_length(const Linearisation& lin, const Tree& s) {
    PositionedString ps = linearize_positions(lin, s);
    DependencyReport report;
    for (const auto& [addr, letter] : s.entries()) {
        if (addr.empty()) continue;
        // governor: nearest labelled proper ancestor, skipping unlabelled
        // gap vertices; gap-separated component roots have no edge
        Address gov = addr;
        bool found = false;
        while (!gov.empty()) {
            gov = gov.parent();
            if (s.label_at(gov)) {
                found = true;
                break;
            }
        }
        if (!found) continue;
        size_t a = ps.placement.at(gov);
        size_t b = ps.placement.at(addr);
        DependencyReport::Edge e;
        e.governor = gov;
        e.dependent = addr;
        e.length = a > b ? a - b : b - a;
        report.edges.push_back(std::move(e));
        report.total += report.edges.back().length;
    }
    return report;
}

std::vector<GrowthRow> length_growth(const Linearisation& lin, const LocalSpec& spec,
                                     int max_depth, int max_nodes) {
    std::vector<GrowthRow> rows;
    for (const Tree& t : enumerate_members(spec, max_depth, max_nodes)) {
        GrowthRow row;
        row.length = linearize(lin, t).size();
        row.total = total_dependency_length(lin, t).total;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dtl
