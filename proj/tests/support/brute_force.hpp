#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "dtl/locality.hpp"
#include "dtl/tree.hpp"

namespace dtl::testgen {

// Reference enumeration for local-mode specs: every partial map over the
// bounded address universe, filtered by member(). A label-independent
// domain prefilter (window-domain projections) keeps the walk tractable;
// member() remains the only acceptance decision.
inline std::vector<Tree> brute_force_members(const LocalSpec& spec, int max_depth,
                                             int max_nodes) {
    constexpr size_t MaxUniverse = 128;
    const int p = spec.p;
    const auto& fns = spec.alphabet->functions;

    // universe of addresses up to max_depth, shortlex
    std::vector<Address> universe{Address{}};
    {
        std::vector<Address> frontier{Address{}};
        for (int d = 0; d < max_depth; ++d) {
            std::vector<Address> next;
            for (const Address& a : frontier)
                for (const auto& f : fns) {
                    Address c = a;
                    c.path.push_back(f);
                    universe.push_back(c);
                    next.push_back(c);
                }
            frontier = std::move(next);
        }
    }
    std::sort(universe.begin(), universe.end());
    const size_t m = universe.size();
    if (m > MaxUniverse) throw std::runtime_error("brute force universe too large");
    std::map<Address, int> uidx;
    for (size_t i = 0; i < m; ++i) uidx[universe[i]] = static_cast<int>(i);
    std::vector<int> parent(m, -1);
    for (size_t i = 0; i < m; ++i)
        if (!universe[i].empty()) parent[i] = uidx.at(universe[i].parent());

    // relative pattern space: addresses of length <= p
    std::vector<Address> patterns{Address{}};
    {
        std::vector<Address> frontier{Address{}};
        for (int d = 0; d < p; ++d) {
            std::vector<Address> next;
            for (const Address& a : frontier)
                for (const auto& f : fns) {
                    Address c = a;
                    c.path.push_back(f);
                    patterns.push_back(c);
                    next.push_back(c);
                }
            frontier = std::move(next);
        }
    }
    std::map<Address, int> pidx;
    for (size_t i = 0; i < patterns.size(); ++i) pidx[patterns[i]] = static_cast<int>(i);
    if (patterns.size() > 64) throw std::runtime_error("pattern space too large");

    auto domain_mask = [&](const Tree& t) {
        uint64_t mask = 0;
        for (const auto& [a, l] : t.entries()) mask |= uint64_t{1} << pidx.at(a);
        return mask;
    };
    std::set<uint64_t> u1_masks, u2_masks, u3_masks;
    for (const Tree& t : spec.u1) u1_masks.insert(domain_mask(t));
    for (const Tree& t : spec.u2) u2_masks.insert(domain_mask(t));
    for (const Tree& t : spec.u3) u3_masks.insert(domain_mask(t));

    // per potential vertex: descendants within p (with pattern bit) and the
    // deeper cone
    std::vector<std::vector<std::pair<int, int>>> near(m);  // (universe idx, pattern bit)
    std::vector<std::bitset<MaxUniverse>> deep(m);
    for (size_t v = 0; v < m; ++v)
        for (size_t u = 0; u < m; ++u) {
            if (!universe[v].is_prefix_of(universe[u])) continue;
            Address rel = universe[v].strip_prefix_from(universe[u]);
            if (static_cast<int>(rel.length()) <= p)
                near[v].push_back({static_cast<int>(u), pidx.at(rel)});
            else
                deep[v].set(u);
        }

    std::vector<Tree> found;
    std::vector<int> chosen;
    std::bitset<MaxUniverse> dom;

    auto domain_ok = [&]() {
        // vertex set: prefix closure of the domain
        std::bitset<MaxUniverse> verts;
        for (int i : chosen)
            for (int v = i; v >= 0 && !verts.test(v); v = parent[v]) verts.set(v);
        // top window domain
        uint64_t top = 0;
        for (int i : chosen)
            if (static_cast<int>(universe[i].length()) <= p)
                top |= uint64_t{1} << pidx.at(universe[i]);
        if (!u1_masks.count(top)) return false;
        for (size_t v = 0; v < m; ++v) {
            if (!verts.test(v)) continue;
            uint64_t w = 0;
            for (const auto& [u, bit] : near[v])
                if (dom.test(u)) w |= uint64_t{1} << bit;
            if (!u2_masks.count(w)) return false;
            if ((dom & deep[v]).none() && !u3_masks.count(w)) return false;
        }
        return true;
    };

    std::function<void(size_t, std::vector<std::pair<Address, Letter>>&)> labelings =
        [&](size_t at, std::vector<std::pair<Address, Letter>>& pairs) {
            if (at == chosen.size()) {
                Tree t = Tree::make(pairs, spec.alphabet);
                if (member(spec, t)) found.push_back(std::move(t));
                return;
            }
            for (const Letter& l : spec.alphabet->vocabulary) {
                pairs.push_back({universe[chosen[at]], l});
                labelings(at + 1, pairs);
                pairs.pop_back();
            }
        };

    std::function<void(size_t)> walk = [&](size_t next) {
        if (domain_ok()) {
            std::vector<std::pair<Address, Letter>> pairs;
            labelings(0, pairs);
        }
        if (static_cast<int>(chosen.size()) == max_nodes) return;
        for (size_t i = next; i < m; ++i) {
            chosen.push_back(static_cast<int>(i));
            dom.set(i);
            walk(i + 1);
            dom.reset(i);
            chosen.pop_back();
        }
    };
    walk(0);

    std::sort(found.begin(), found.end(), [](const Tree& a, const Tree& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace dtl::testgen
