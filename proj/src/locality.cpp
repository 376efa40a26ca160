#include "dtl/locality.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

namespace dtl {

namespace {

bool sorted_contains(const std::vector<Tree>& v, const Tree& t) {
    return std::binary_search(v.begin(), v.end(), t);
}

std::vector<Tree> sorted_unique(std::vector<Tree> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_spec_tree_compat(const LocalSpec& spec, const Tree& s) {
    if (spec.alphabet && s.alphabet() && !spec.alphabet->compatible_with(*s.alphabet()))
        throw IncompatibleAlphabets("tree and spec declare different alphabets");
}

void sort_by_size_then_lex(std::vector<Tree>& v) {
    std::sort(v.begin(), v.end(), [](const Tree& a, const Tree& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

}  // namespace

bool LocalSpec::contains_u1(const Tree& t) const { return sorted_contains(u1, t); }
bool LocalSpec::contains_u2(const Tree& t) const { return sorted_contains(u2, t); }
bool LocalSpec::contains_u3(const Tree& t) const { return sorted_contains(u3, t); }

LocalSpec make_local_spec(int p, Mode mode, std::vector<Tree> u1, std::vector<Tree> u2,
                          std::vector<Tree> u3, AlphabetRef alphabet, std::string* warning) {
    if (p <= 0) throw InvalidLocalSpec("locality window p must be positive");
    LocalSpec spec;
    spec.p = p;
    spec.mode = mode;
    spec.u1 = sorted_unique(std::move(u1));
    spec.u2 = sorted_unique(std::move(u2));
    spec.u3 = sorted_unique(std::move(u3));
    spec.alphabet = std::move(alphabet);
    for (const auto* bucket : {&spec.u1, &spec.u2, &spec.u3})
        for (const Tree& t : *bucket)
            if (t.depth() > static_cast<size_t>(p))
                throw InvalidLocalSpec("window tree deeper than p");
    if (warning) {
        auto subset = [&](const std::vector<Tree>& a) {
            return std::all_of(a.begin(), a.end(),
                               [&](const Tree& t) { return sorted_contains(spec.u2, t); });
        };
        if (!subset(spec.u1)) *warning += "U1 is not contained in U2; ";
        if (!subset(spec.u3)) *warning += "U3 is not contained in U2; ";
    }
    return spec;
}

std::vector<Tree> p_subtrees(const Tree& s, int p) {
    std::set<Tree> out;
    for (const Address& v : s.vertices()) out.insert(s.subtree(v).top(p));
    return {out.begin(), out.end()};
}

std::vector<Tree> terminal_p_subtrees(const Tree& s, int p) {
    std::set<Tree> out;
    for (const Address& v : s.vertices()) {
        Tree sub = s.subtree(v);
        if (sub.depth() <= static_cast<size_t>(p)) out.insert(sub);
    }
    return {out.begin(), out.end()};
}

std::vector<Tree> anti_p_subtrees(const Tree& s, int p) {
    std::set<Tree> out;
    for (const Address& v : s.anti_vertices()) out.insert(s.anti_subtree(v).top(p));
    return {out.begin(), out.end()};
}

std::vector<Tree> anti_terminal_p_subtrees(const Tree& s, int p) {
    std::set<Tree> out;
    for (const Address& v : s.anti_vertices()) {
        Tree sub = s.anti_subtree(v);
        if (sub.depth() <= static_cast<size_t>(p)) out.insert(sub);
    }
    return {out.begin(), out.end()};
}

bool member(const LocalSpec& spec, const Tree& s) {
    check_spec_tree_compat(spec, s);
    if (!spec.contains_u1(s.top(spec.p))) return false;
    const bool local = spec.mode == Mode::Local;
    for (const Tree& w : local ? p_subtrees(s, spec.p) : anti_p_subtrees(s, spec.p))
        if (!spec.contains_u2(w)) return false;
    for (const Tree& w :
         local ? terminal_p_subtrees(s, spec.p) : anti_terminal_p_subtrees(s, spec.p))
        if (!spec.contains_u3(w)) return false;
    return true;
}

LocalSpec reverse_spec(const LocalSpec& spec) {
    auto rev_all = [](const std::vector<Tree>& in) {
        std::vector<Tree> out;
        out.reserve(in.size());
        for (const Tree& t : in) out.push_back(t.reversed());
        return sorted_unique(std::move(out));
    };
    LocalSpec r;
    r.p = spec.p;
    r.mode = spec.mode == Mode::Local ? Mode::AntiLocal : Mode::Local;
    r.u1 = rev_all(spec.u1);
    r.u2 = rev_all(spec.u2);
    r.u3 = rev_all(spec.u3);
    r.alphabet = spec.alphabet;
    return r;
}

// --------------------------------------------------------------------------
// Bounded enumeration.
//
// Members are grown depth level by depth level. A level only proposes
// addresses that some still-viable window expects; every choice immediately
// filters the windows that can see the position, and a branch dies as soon
// as the top window or a vertex window has no matching candidate left.
// member() on each finished tree is the authoritative filter, so the
// search layer has to be complete but not exact.

namespace {

using AddrV = std::vector<int>;  // function indices; all same length within a level

struct UTree {
    std::map<AddrV, int> entries;                              // path -> letter index
    std::vector<std::vector<std::pair<AddrV, int>>> by_depth;  // one slice per depth
    int min_depth = 0;
    bool empty = true;
};

struct Engine {
    const LocalSpec& spec;
    const int p;
    const int max_depth;
    const int max_nodes;
    std::map<FunctionSymbol, int> fidx;
    std::vector<FunctionSymbol> funs;
    std::map<Letter, int> lidx;
    std::vector<Letter> lets;

    std::vector<UTree> u1, u2;
    std::vector<std::vector<int>> hang;  // hang[d]: u2 indices with min_depth >= d
    std::vector<int> empties;            // u2 indices of the empty window
    bool u2_has_empty = false;
    std::vector<bool> rooted_letter_ok;  // letter admissible as some u2 root

    std::vector<Tree> found;

    struct State {
        std::map<AddrV, int> labels;
        std::map<AddrV, std::vector<int>> vcands;
        std::vector<int> ctop;
        int nodes = 0;
    };

    Engine(const LocalSpec& s, int d, int n) : spec(s), p(s.p), max_depth(d), max_nodes(n) {
        for (const auto& f : spec.alphabet->functions) {
            fidx[f] = static_cast<int>(funs.size());
            funs.push_back(f);
        }
        for (const auto& l : spec.alphabet->vocabulary) {
            lidx[l] = static_cast<int>(lets.size());
            lets.push_back(l);
        }
        u1 = intern_all(spec.u1);
        u2 = intern_all(spec.u2);
        hang.assign(p + 1, {});
        for (int dd = 0; dd <= p; ++dd)
            for (size_t i = 0; i < u2.size(); ++i)
                if (u2[i].min_depth >= dd && !u2[i].empty) hang[dd].push_back(static_cast<int>(i));
        for (size_t i = 0; i < u2.size(); ++i)
            if (u2[i].empty) {
                u2_has_empty = true;
                empties.push_back(static_cast<int>(i));
            }
        rooted_letter_ok.assign(lets.size(), false);
        for (const auto& u : u2) {
            auto it = u.entries.find(AddrV{});
            if (it != u.entries.end()) rooted_letter_ok[it->second] = true;
        }
    }

    std::vector<UTree> intern_all(const std::vector<Tree>& trees) {
        std::vector<UTree> out;
        for (const Tree& t : trees) {
            UTree u;
            u.by_depth.assign(p + 1, {});
            u.min_depth = p + 1;
            for (const auto& [addr, letter] : t.entries()) {
                AddrV path;
                for (const auto& f : addr.path) path.push_back(fidx.at(f));
                int li = lidx.at(letter);
                int depth = static_cast<int>(path.size());
                u.entries[path] = li;
                u.by_depth[depth].push_back({path, li});
                u.min_depth = std::min(u.min_depth, depth);
                u.empty = false;
            }
            out.push_back(std::move(u));
        }
        return out;
    }

    void run() {
        State st;
        for (size_t i = 0; i < u1.size(); ++i) st.ctop.push_back(static_cast<int>(i));
        level(st, 0);
        sort_by_size_then_lex(found);
        found.erase(std::unique(found.begin(), found.end()), found.end());
    }

    void finalize(const State& st) {
        std::vector<std::pair<Address, Letter>> pairs;
        for (const auto& [path, li] : st.labels) {
            Address a;
            for (int f : path) a.path.push_back(funs[f]);
            pairs.push_back({a, lets[li]});
        }
        Tree t = Tree::make(pairs, spec.alphabet);
        if (member(spec, t)) found.push_back(std::move(t));
    }

    void level(const State& st, int k) {
        if (k > max_depth) {
            finalize(st);
            return;
        }
        // Positions some live window expects at this depth.
        std::set<AddrV> cands;
        if (k <= p)
            for (int ui : st.ctop)
                for (const auto& [x, li] : u1[ui].by_depth[k]) cands.insert(x);
        for (const auto& [v, us] : st.vcands) {
            int dist = k - static_cast<int>(v.size());
            if (dist < 1 || dist > p) continue;
            for (int ui : us)
                for (const auto& [x, li] : u2[ui].by_depth[dist]) {
                    AddrV full = v;
                    full.insert(full.end(), x.begin(), x.end());
                    cands.insert(full);
                }
        }
        std::vector<AddrV> order(cands.begin(), cands.end());
        State work = st;
        std::map<AddrV, int> assignment;
        assign(work, k, order, 0, assignment);
    }

    struct Viewer {
        enum Kind { Top, Vert, HangView, SelfView } kind;
        AddrV v;   // viewer vertex (empty for Top/SelfView)
        int dist;  // |a| - |v|
    };

    void assign(State& st, int k, const std::vector<AddrV>& order, size_t idx,
                std::map<AddrV, int>& assignment) {
        if (idx == order.size()) {
            commit(st, k, assignment);
            return;
        }
        const AddrV& a = order[idx];

        std::vector<Viewer> viewers;
        if (static_cast<int>(a.size()) <= p) viewers.push_back({Viewer::Top, {}, 0});
        viewers.push_back({Viewer::SelfView, a, 0});
        for (int back = 1; back <= p && back <= static_cast<int>(a.size()); ++back) {
            AddrV v(a.begin(), a.end() - back);
            if (st.vcands.count(v))
                viewers.push_back({Viewer::Vert, std::move(v), back});
            else
                viewers.push_back({Viewer::HangView, std::move(v), back});
        }
        // Prefixes farther than p never see this position; labelling it
        // turns them into vertices whose window is empty for good.
        bool needs_empty = false;
        if (static_cast<int>(a.size()) > p) {
            AddrV v(a.begin(), a.end() - p - 1);
            if (!st.vcands.count(v)) needs_empty = true;  // vertices are prefix-closed
        }

        std::vector<bool> letter_ok(lets.size(), true);
        bool blank_ok = true;
        for (const auto& w : viewers) {
            std::vector<bool> here(lets.size(), false);
            bool here_blank = false;
            switch (w.kind) {
                case Viewer::Top:
                    for (int ui : st.ctop) {
                        auto it = u1[ui].entries.find(a);
                        if (it == u1[ui].entries.end())
                            here_blank = true;
                        else
                            here[it->second] = true;
                    }
                    break;
                case Viewer::Vert: {
                    AddrV x(a.begin() + w.v.size(), a.end());
                    for (int ui : st.vcands.at(w.v)) {
                        auto it = u2[ui].entries.find(x);
                        if (it == u2[ui].entries.end())
                            here_blank = true;
                        else
                            here[it->second] = true;
                    }
                    break;
                }
                case Viewer::HangView: {
                    AddrV x(a.begin() + w.v.size(), a.end());
                    for (int ui : hang[w.dist]) {
                        auto it = u2[ui].entries.find(x);
                        if (it != u2[ui].entries.end()) here[it->second] = true;
                    }
                    here_blank = true;  // not labelling keeps the prefix silent
                    break;
                }
                case Viewer::SelfView:
                    here = rooted_letter_ok;
                    here_blank = true;
                    break;
            }
            for (size_t i = 0; i < lets.size(); ++i)
                letter_ok[i] = letter_ok[i] && here[i];
            blank_ok = blank_ok && here_blank;
        }
        if (needs_empty && !u2_has_empty) std::fill(letter_ok.begin(), letter_ok.end(), false);

        if (blank_ok) {
            auto undo = filter_mutable(st, viewers, a, -1);
            if (!undo.dead) assign(st, k, order, idx + 1, assignment);
            undo.restore(st);
        }
        if (st.nodes + static_cast<int>(assignment.size()) < max_nodes) {
            for (size_t li = 0; li < lets.size(); ++li) {
                if (!letter_ok[li]) continue;
                auto undo = filter_mutable(st, viewers, a, static_cast<int>(li));
                if (!undo.dead) {
                    assignment[a] = static_cast<int>(li);
                    assign(st, k, order, idx + 1, assignment);
                    assignment.erase(a);
                }
                undo.restore(st);
            }
        }
    }

    struct Undo {
        bool dead = false;
        bool top_saved = false;
        std::vector<int> top;
        std::vector<std::pair<AddrV, std::vector<int>>> verts;

        void restore(State& st) {
            if (top_saved) st.ctop = std::move(top);
            for (auto it = verts.rbegin(); it != verts.rend(); ++it)
                st.vcands.at(it->first) = std::move(it->second);
        }
    };

    // letter < 0 encodes blank. Narrows the mutable viewer sets to the
    // candidates consistent with the choice.
    Undo filter_mutable(State& st, const std::vector<Viewer>& viewers, const AddrV& a,
                        int letter) {
        Undo undo;
        for (const auto& w : viewers) {
            if (w.kind == Viewer::Top) {
                undo.top_saved = true;
                undo.top = st.ctop;
                std::vector<int> next;
                for (int ui : st.ctop) {
                    auto it = u1[ui].entries.find(a);
                    bool has = it != u1[ui].entries.end();
                    if (letter < 0 ? !has : (has && it->second == letter)) next.push_back(ui);
                }
                st.ctop = std::move(next);
                if (st.ctop.empty()) undo.dead = true;
            } else if (w.kind == Viewer::Vert) {
                auto& set = st.vcands.at(w.v);
                undo.verts.push_back({w.v, set});
                AddrV x(a.begin() + w.v.size(), a.end());
                std::vector<int> next;
                for (int ui : set) {
                    auto it = u2[ui].entries.find(x);
                    bool has = it != u2[ui].entries.end();
                    if (letter < 0 ? !has : (has && it->second == letter)) next.push_back(ui);
                }
                set = std::move(next);
                if (set.empty()) undo.dead = true;
            }
        }
        return undo;
    }

    static std::map<AddrV, int> restrict_under(const std::map<AddrV, int>& assignment,
                                               const AddrV& v) {
        std::map<AddrV, int> out;
        for (const auto& [a, li] : assignment) {
            if (a.size() < v.size()) continue;
            if (!std::equal(v.begin(), v.end(), a.begin())) continue;
            out.emplace(a, li);
        }
        return out;
    }

    // Window slice u.by_depth[depth] must coincide with the level assignment
    // below v, in both directions.
    bool slice_matches(const UTree& u, int depth, const AddrV& v,
                       const std::map<AddrV, int>& under) const {
        size_t expected = 0;
        if (depth < static_cast<int>(u.by_depth.size())) {
            for (const auto& [x, li] : u.by_depth[depth]) {
                AddrV full = v;
                full.insert(full.end(), x.begin(), x.end());
                auto it = under.find(full);
                if (it == under.end() || it->second != li) return false;
                ++expected;
            }
        }
        return under.size() == expected;
    }

    void commit(State& st, int k, const std::map<AddrV, int>& assignment) {
        State next = st;
        next.nodes += static_cast<int>(assignment.size());
        if (next.nodes > max_nodes) return;
        for (const auto& [a, li] : assignment) next.labels[a] = li;

        for (const auto& [a, li] : assignment) {
            // The labelled address itself becomes a vertex.
            if (!next.vcands.count(a)) {
                std::vector<int> base;
                for (size_t ui = 0; ui < u2.size(); ++ui) {
                    auto it = u2[ui].entries.find(AddrV{});
                    if (it != u2[ui].entries.end() && it->second == li)
                        base.push_back(static_cast<int>(ui));
                }
                if (base.empty()) return;
                next.vcands[a] = std::move(base);
            }
            // So does every prefix; stop at the first existing vertex since
            // vertices are closed under prefix.
            AddrV v = a;
            while (!v.empty()) {
                v.pop_back();
                if (next.vcands.count(v)) break;
                int dist = k - static_cast<int>(v.size());
                std::vector<int> base;
                if (dist <= p) {
                    auto under = restrict_under(assignment, v);
                    for (int ui : hang[dist])
                        if (slice_matches(u2[ui], dist, v, under)) base.push_back(ui);
                } else {
                    base = empties;
                }
                if (base.empty()) return;
                next.vcands[v] = std::move(base);
            }
        }
        level(next, k + 1);
    }
};

// Exhaustive fallback for window families the frontier search cannot cover
// (an admissible empty window combined with windows hanging at full depth p).
// Never triggered by the built-in catalogs.
std::vector<Tree> enumerate_exhaustive(const LocalSpec& spec, int max_depth, int max_nodes) {
    std::vector<Address> universe;
    std::function<void(Address, int)> gen = [&](Address cur, int depth) {
        universe.push_back(cur);
        if (depth == max_depth) return;
        for (const auto& f : spec.alphabet->functions) {
            Address nxt = cur;
            nxt.path.push_back(f);
            gen(nxt, depth + 1);
        }
    };
    gen(Address{}, 0);
    std::sort(universe.begin(), universe.end());

    std::vector<Tree> found;
    std::vector<std::pair<Address, Letter>> pairs;
    std::function<void(size_t)> walk = [&](size_t i) {
        Tree t = Tree::make(pairs, spec.alphabet);
        if (member(spec, t)) found.push_back(std::move(t));
        if (static_cast<int>(pairs.size()) == max_nodes) return;
        for (size_t j = i; j < universe.size(); ++j)
            for (const auto& l : spec.alphabet->vocabulary) {
                pairs.push_back({universe[j], l});
                walk(j + 1);
                pairs.pop_back();
            }
    };
    walk(0);
    sort_by_size_then_lex(found);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace

std::vector<Tree> enumerate_members(const LocalSpec& spec, int max_depth, int max_nodes) {
    if (max_depth < 0 || max_nodes < 0) throw InvalidLocalSpec("enumeration bounds must be >= 0");
    if (spec.mode == Mode::AntiLocal) {
        // Address reversal preserves both bounds, so the reversed language
        // can be enumerated and mapped back.
        std::vector<Tree> rev = enumerate_members(reverse_spec(spec), max_depth, max_nodes);
        std::vector<Tree> out;
        out.reserve(rev.size());
        for (const Tree& t : rev) out.push_back(t.reversed());
        sort_by_size_then_lex(out);
        return out;
    }

    Engine eng(spec, max_depth, max_nodes);
    // Windows hanging at full depth p can license labels more than p below
    // every existing vertex, which the frontier search never proposes.
    if (!eng.hang[spec.p].empty()) return enumerate_exhaustive(spec, max_depth, max_nodes);
    eng.run();
    return eng.found;
}

bool string_member(const LocalStringSpec& spec, const Word& x) {
    const size_t p = static_cast<size_t>(spec.p);
    if (x.size() < p)
        return spec.prefixes.count(x) && spec.internals.count(x) && spec.suffixes.count(x);
    Word prefix(x.begin(), x.begin() + p);
    if (!spec.prefixes.count(prefix)) return false;
    for (size_t i = 0; i + p <= x.size(); ++i) {
        Word window(x.begin() + i, x.begin() + i + p);
        if (!spec.internals.count(window)) return false;
    }
    Word suffix(x.end() - p, x.end());
    return spec.suffixes.count(suffix) > 0;
}

namespace {

Tree chain_tree(const Word& w, const FunctionSymbol& fn, const AlphabetRef& alphabet) {
    std::vector<std::pair<Address, Letter>> pairs;
    Address cur;
    for (const Letter& l : w) {
        pairs.push_back({cur, l});
        cur.path.push_back(fn);
    }
    return Tree::make(pairs, alphabet);
}

// Rewrites a 1-testable spec as an equivalent 2-testable one so the chain
// encoding always has a window depth of at least one.
LocalStringSpec widen_to_p2(const LocalStringSpec& spec) {
    LocalStringSpec out;
    out.p = 2;
    out.sigma = spec.sigma;
    auto short_ok = [&](const Word& w) {
        return spec.prefixes.count(w) && spec.internals.count(w) && spec.suffixes.count(w);
    };
    if (short_ok({})) {
        out.prefixes.insert({});
        out.internals.insert({});
        out.suffixes.insert({});
    }
    for (const Letter& l : spec.sigma) {
        Word w{l};
        if (short_ok(w)) {
            out.prefixes.insert(w);
            out.internals.insert(w);
            out.suffixes.insert(w);
        }
    }
    auto singles = [](const std::set<Word>& s) {
        std::vector<Letter> out;
        for (const Word& w : s)
            if (w.size() == 1) out.push_back(w[0]);
        return out;
    };
    for (const Letter& u : singles(spec.prefixes))
        for (const Letter& v : singles(spec.internals)) out.prefixes.insert({u, v});
    for (const Letter& u : singles(spec.internals)) {
        for (const Letter& v : singles(spec.internals)) out.internals.insert({u, v});
        for (const Letter& v : singles(spec.suffixes)) out.suffixes.insert({u, v});
    }
    return out;
}

}  // namespace

LocalSpec encode_string_spec(const LocalStringSpec& spec, const std::string& chain_function) {
    if (spec.p < 1) throw InvalidLocalSpec("string locality window must be positive");
    if (spec.p == 1) return encode_string_spec(widen_to_p2(spec), chain_function);

    std::vector<std::string> letter_names;
    for (const auto& l : spec.sigma) letter_names.push_back(l.name);
    AlphabetRef alphabet = make_alphabet({chain_function}, letter_names);
    FunctionSymbol fn{chain_function};

    // Complete chain subtrees near the end of a string are exactly the
    // suffixes of admissible endings, so the suffix set is closed downwards.
    std::set<Word> suffix_closed;
    for (const Word& s : spec.suffixes)
        for (size_t i = 0; i <= s.size(); ++i) suffix_closed.insert(Word(s.begin() + i, s.end()));

    std::vector<Tree> u1, u2, u3;
    for (const Word& w : spec.prefixes) u1.push_back(chain_tree(w, fn, alphabet));
    for (const Word& w : spec.internals) u2.push_back(chain_tree(w, fn, alphabet));
    for (const Word& w : suffix_closed) {
        u2.push_back(chain_tree(w, fn, alphabet));
        u3.push_back(chain_tree(w, fn, alphabet));
    }
    return make_local_spec(spec.p - 1, Mode::Local, std::move(u1), std::move(u2), std::move(u3),
                           alphabet);
}

}  // namespace dtl
