#include "dtl/grammar.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dtl {

namespace {

std::string rule_display(const Rule& r) {
    std::string s = r.head + " ->";
    if (r.body.empty()) s += " epsilon";
    for (const auto& sym : r.body) s += " " + sym.name;
    return s;
}

}  // namespace

void validate_grammar(const Grammar& g) {
    std::set<std::string> vars(g.variables.begin(), g.variables.end());
    std::set<std::string> terms;
    for (const auto& t : g.terminals) terms.insert(t.name);
    if (!vars.count(g.start)) throw ParseError("start variable '" + g.start + "' is not declared");
    for (const auto& r : g.rules) {
        if (!vars.count(r.head)) throw ParseError("rule head '" + r.head + "' is not declared");
        for (const auto& s : r.body) {
            if (s.terminal && !terms.count(s.name))
                throw UnknownLetter("terminal '" + s.name + "' is not declared");
            if (!s.terminal && !vars.count(s.name))
                throw UnknownSymbol("variable '" + s.name + "' is not declared");
        }
    }
}

GnfGrammar validate_gnf(const Grammar& g) {
    validate_grammar(g);
    for (const auto& r : g.rules) {
        if (r.body.empty() || !r.body.front().terminal)
            throw NotGreibach("rule is not terminal-prefixed: " + rule_display(r));
        for (size_t i = 1; i < r.body.size(); ++i)
            if (r.body[i].terminal)
                throw NotGreibach("terminal after the first position: " + rule_display(r));
    }
    return GnfGrammar{g};
}

TransformedGnf distinct_vars_transform(const GnfGrammar& gnf) {
    const Grammar& g = gnf.grammar;
    std::set<std::string> taken(g.variables.begin(), g.variables.end());
    auto fresh = [&taken](int i) {
        std::string name = "C" + std::to_string(i);
        while (taken.count(name)) name += "_";
        taken.insert(name);
        return name;
    };

    TransformedGnf out;
    out.grammar.terminals = g.terminals;
    out.grammar.start = g.start;
    out.original_variables = g.variables;

    std::vector<Rule> units;
    int counter = 1;
    for (const auto& r : g.rules) {
        Rule nr;
        nr.head = r.head;
        nr.body.push_back(r.body.front());
        for (size_t i = 1; i < r.body.size(); ++i) {
            std::string c = fresh(counter++);
            out.unit_heads.push_back(c);
            nr.body.push_back(GSym{false, c});
            units.push_back(Rule{c, {GSym{false, r.body[i].name}}});
        }
        out.grammar.rules.push_back(std::move(nr));
    }
    out.grammar.rules.insert(out.grammar.rules.end(), units.begin(), units.end());
    out.grammar.variables = g.variables;
    for (const auto& c : out.unit_heads) out.grammar.variables.push_back(c);
    validate_grammar(out.grammar);
    return out;
}

TransformedGnf validate_transformed(const Grammar& g) {
    validate_grammar(g);
    std::set<std::string> unit_set;
    std::map<std::string, int> rule_count;
    for (const auto& r : g.rules) {
        ++rule_count[r.head];
        bool is_unit = r.body.size() == 1 && !r.body.front().terminal;
        bool is_gnf = !r.body.empty() && r.body.front().terminal &&
                      std::none_of(r.body.begin() + 1, r.body.end(),
                                   [](const GSym& s) { return s.terminal; });
        if (is_unit)
            unit_set.insert(r.head);
        else if (!is_gnf)
            throw NotTransformed("rule is neither terminal-prefixed nor a unit rule: " +
                                 rule_display(r));
    }
    TransformedGnf out;
    out.grammar = g;
    std::map<std::string, int> occurrences;
    for (const auto& r : g.rules) {
        bool is_unit = r.body.size() == 1 && !r.body.front().terminal;
        if (is_unit) {
            if (rule_count[r.head] != 1)
                throw NotTransformed("wrapper variable '" + r.head + "' has several rules");
            if (unit_set.count(r.body.front().name))
                throw NotTransformed("unit rule feeds another wrapper: " + rule_display(r));
            continue;
        }
        for (size_t i = 1; i < r.body.size(); ++i) {
            const std::string& v = r.body[i].name;
            if (!unit_set.count(v))
                throw NotTransformed("body variable '" + v + "' is not a single-use wrapper");
            ++occurrences[v];
            out.unit_heads.push_back(v);
        }
    }
    for (const auto& c : unit_set) {
        if (occurrences[c] != 1)
            throw NotTransformed("wrapper variable '" + c + "' occurs " +
                                 std::to_string(occurrences[c]) + " times in rule bodies");
    }
    if (unit_set.count(g.start)) throw NotTransformed("start variable cannot be a wrapper");
    for (const auto& v : g.variables)
        if (!unit_set.count(v)) out.original_variables.push_back(v);
    return out;
}

// --------------------------------------------------------------------------
// Window spec from a transformed grammar.
//
// Derivation trees put one labelled vertex per applied rule: the vertex
// carries the rule's terminal and its children hang directly under the
// rule's single-use wrapper functions. Keeping every level labelled is what
// lets depth-two windows pin each vertex to a rule of the right variable:
// a window sees a child's letter together with the wrapper functions of the
// child's own rule, and wrappers are never shared between rules. Hanging
// the continuation below an unlabelled wrapper vertex instead would let a
// vertex reached through one variable borrow the rules of another variable
// with the same head letter unnoticed.

namespace {

struct GnfRule {
    std::string letter;
    std::vector<std::pair<std::string, std::string>> kids;  // (wrapper fn, wrapped variable)
};

using RulesOf = std::map<std::string, std::vector<GnfRule>>;

RulesOf index_rules(const TransformedGnf& g) {
    std::map<std::string, std::string> wrapped_var;  // wrapper -> its variable
    for (const auto& r : g.grammar.rules)
        if (r.body.size() == 1 && !r.body.front().terminal) wrapped_var[r.head] = r.body[0].name;
    RulesOf out;
    for (const auto& v : g.original_variables) out[v];
    for (const auto& r : g.grammar.rules) {
        if (r.body.empty() || !r.body.front().terminal) continue;  // skip the unit rules
        GnfRule gr;
        gr.letter = r.body.front().name;
        for (size_t i = 1; i < r.body.size(); ++i)
            gr.kids.push_back({r.body[i].name, wrapped_var.at(r.body[i].name)});
        out[r.head].push_back(std::move(gr));
    }
    return out;
}

// Depth-two windows of one rule choice: the rule's letter at the root, one
// rule choice per wrapper giving the child letters, and one per child
// wrapper giving the grandchild letters. With terminal_only set, only
// var-free grandchild rules qualify, so the window is a complete subtree.
void collect_templates(const RulesOf& rules, const std::vector<GnfRule>& root_rules,
                       const AlphabetRef& alphabet, bool terminal_only, std::set<Tree>* sink) {
    for (const GnfRule& root : root_rules) {
        struct Choice {
            std::string fn;
            const std::vector<GnfRule>* options;
        };
        std::vector<Choice> children;
        bool blocked = false;
        for (const auto& [fn, var] : root.kids) {
            auto it = rules.find(var);
            if (it == rules.end() || it->second.empty()) {
                blocked = true;
                break;
            }
            children.push_back({fn, &it->second});
        }
        if (blocked) continue;

        std::vector<size_t> child_pick(children.size(), 0);
        std::function<void(size_t)> pick_children = [&](size_t ci) {
            if (ci == children.size()) {
                std::vector<Choice> grands;
                std::vector<size_t> grand_child;
                for (size_t j = 0; j < children.size(); ++j) {
                    const GnfRule& cr = (*children[j].options)[child_pick[j]];
                    for (const auto& [fn, var] : cr.kids) {
                        auto it = rules.find(var);
                        if (it == rules.end() || it->second.empty()) return;  // blocked
                        grands.push_back({fn, &it->second});
                        grand_child.push_back(j);
                    }
                }
                std::vector<size_t> grand_pick(grands.size(), 0);
                std::function<void(size_t)> pick_grands = [&](size_t gi) {
                    if (gi == grands.size()) {
                        std::vector<std::pair<Address, Letter>> pairs;
                        pairs.push_back({Address{}, Letter{root.letter}});
                        for (size_t j = 0; j < children.size(); ++j) {
                            const GnfRule& cr = (*children[j].options)[child_pick[j]];
                            pairs.push_back({Address{{FunctionSymbol{children[j].fn}}},
                                             Letter{cr.letter}});
                        }
                        for (size_t t = 0; t < grands.size(); ++t) {
                            const GnfRule& gr = (*grands[t].options)[grand_pick[t]];
                            pairs.push_back(
                                {Address{{FunctionSymbol{children[grand_child[t]].fn},
                                          FunctionSymbol{grands[t].fn}}},
                                 Letter{gr.letter}});
                        }
                        sink->insert(Tree::make(pairs, alphabet));
                        return;
                    }
                    for (size_t o = 0; o < grands[gi].options->size(); ++o) {
                        if (terminal_only && !(*grands[gi].options)[o].kids.empty()) continue;
                        grand_pick[gi] = o;
                        pick_grands(gi + 1);
                    }
                };
                pick_grands(0);
                return;
            }
            for (size_t o = 0; o < children[ci].options->size(); ++o) {
                child_pick[ci] = o;
                pick_children(ci + 1);
            }
        };
        pick_children(0);
    }
}

}  // namespace

std::pair<LocalSpec, Linearisation> local_from_gnf(const TransformedGnf& g) {
    std::vector<std::string> functions = g.grammar.variables;
    std::vector<std::string> letters;
    for (const auto& t : g.grammar.terminals) letters.push_back(t.name);
    AlphabetRef alphabet = make_alphabet(functions, letters);

    RulesOf rules = index_rules(g);

    std::set<Tree> u1_set, u2_set, u3_set;
    auto start_it = rules.find(g.grammar.start);
    if (start_it != rules.end())
        collect_templates(rules, start_it->second, alphabet, false, &u1_set);
    for (const auto& [var, rv] : rules) {
        collect_templates(rules, rv, alphabet, false, &u2_set);
        collect_templates(rules, rv, alphabet, true, &u3_set);
    }
    // The empty window stands in for absent children in the converse
    // construction; the grammar itself never derives the empty string.
    u2_set.insert(Tree(alphabet));
    u3_set.insert(Tree(alphabet));

    LocalSpec spec = make_local_spec(2, Mode::Local,
                                     std::vector<Tree>(u1_set.begin(), u1_set.end()),
                                     std::vector<Tree>(u2_set.begin(), u2_set.end()),
                                     std::vector<Tree>(u3_set.begin(), u3_set.end()), alphabet);

    // Root first, then the wrappers in rule order, then the original
    // variables. Children only ever hang under wrappers, and the wrappers of
    // one rule are consecutive here, so the slot order replays each rule's
    // body order; the trailing original-variable slots stay silent.
    std::vector<Slot> slots{Slot{Slot::Kind::Root, {}}};
    for (const auto& c : g.unit_heads) slots.push_back(Slot{Slot::Kind::Sub, FunctionSymbol{c}});
    for (const auto& v : g.original_variables)
        slots.push_back(Slot{Slot::Kind::Sub, FunctionSymbol{v}});
    Linearisation lin = Linearisation::make(std::move(slots), alphabet);
    return {std::move(spec), std::move(lin)};
}

Grammar cfg_from_local(const LocalSpec& spec, const Linearisation& lin) {
    if (lin.kind() != LinKind::Projective)
        throw NotProjective("window-to-grammar construction needs a fully projective slot list");
    if (spec.alphabet && lin.alphabet() && !spec.alphabet->compatible_with(*lin.alphabet()))
        throw IncompatibleAlphabets("spec and linearisation declare different alphabets");
    if (spec.mode != Mode::Local)
        throw InvalidLocalSpec("window-to-grammar construction needs a local-mode spec");

    const Tree empty_tree(spec.alphabet);
    auto in_u2 = [&](const Tree& t) { return spec.contains_u2(t); };
    for (const Tree& t : spec.u1)
        if (!t.empty() && !in_u2(t))
            throw InvalidLocalSpec("top window missing from the internal window set");
    for (const Tree& t : spec.u3)
        if (!t.empty() && !in_u2(t))
            throw InvalidLocalSpec("bottom window missing from the internal window set");

    Grammar g;
    g.terminals = spec.alphabet->vocabulary;
    g.start = "S";

    // One variable per internal window; the empty window's variable also
    // covers absent children.
    std::map<Tree, std::string> var_of;
    for (size_t i = 0; i < spec.u2.size(); ++i)
        var_of[spec.u2[i]] = "X" + std::to_string(i);
    if (!var_of.count(empty_tree)) var_of[empty_tree] = "XE";
    g.variables.push_back(g.start);
    for (size_t i = 0; i < spec.u2.size(); ++i) g.variables.push_back(var_of[spec.u2[i]]);
    if (!spec.contains_u2(empty_tree)) g.variables.push_back(var_of[empty_tree]);

    std::set<Rule> rule_set;
    for (const Tree& t : spec.u1) rule_set.insert(Rule{g.start, {GSym{false, var_of.at(t)}}});

    // Child candidates per window and function: internal windows whose
    // truncation one level up equals the window's child there.
    std::vector<Tree> u2_and_empty = spec.u2;
    if (!spec.contains_u2(empty_tree)) u2_and_empty.push_back(empty_tree);
    for (const Tree& t : u2_and_empty) {
        std::map<FunctionSymbol, std::vector<const Tree*>> cands;
        bool dead = false;
        for (const auto& f : spec.alphabet->functions) {
            Tree want = t.subtree(Address(std::vector<FunctionSymbol>{f}));
            auto& list = cands[f];
            for (const Tree& cand : u2_and_empty)
                if (cand.top(spec.p - 1) == want) list.push_back(&cand);
            if (list.empty()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;

        std::vector<FunctionSymbol> order;
        for (const auto& slot : lin.slots())
            if (slot.kind == Slot::Kind::Sub) order.push_back(slot.fn);

        std::map<FunctionSymbol, const Tree*> chosen;
        std::function<void(size_t)> build = [&](size_t i) {
            if (i == order.size()) {
                Rule r;
                r.head = var_of.at(t);
                for (const auto& slot : lin.slots()) {
                    if (slot.kind == Slot::Kind::Root) {
                        if (auto l = t.root()) r.body.push_back(GSym{true, l->name});
                    } else {
                        r.body.push_back(GSym{false, var_of.at(*chosen.at(slot.fn))});
                    }
                }
                rule_set.insert(std::move(r));
                return;
            }
            for (const Tree* cand : cands.at(order[i])) {
                chosen[order[i]] = cand;
                build(i + 1);
            }
        };
        build(0);
    }

    for (const Tree& t : spec.u3) {
        Rule r;
        r.head = var_of.at(t);
        for (const Letter& l : linearize(lin, t)) r.body.push_back(GSym{true, l.name});
        rule_set.insert(std::move(r));
    }
    // Absent children always contribute the empty string.
    rule_set.insert(Rule{var_of.at(empty_tree), {}});

    g.rules.assign(rule_set.begin(), rule_set.end());
    validate_grammar(g);
    return g;
}

// --------------------------------------------------------------------------
// Chart parsing and bounded generation.

namespace {

struct CnfGrammar {
    // variables are indices; terminals are letter names
    int start = -1;
    bool start_nullable = false;
    int nvars = 0;
    std::vector<std::pair<int, std::string>> term_rules;        // A -> t
    std::vector<std::pair<int, std::pair<int, int>>> bin_rules;  // A -> B C
};

CnfGrammar to_cnf(const Grammar& g) {
    CnfGrammar out;
    std::map<std::string, int> vid;
    auto var = [&](const std::string& name) {
        auto it = vid.find(name);
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(vid.size());
        vid[name] = id;
        return id;
    };
    for (const auto& v : g.variables) var(v);

    // terminal proxies and binarisation
    struct SimpleRule {
        int head;
        std::vector<GSym> body;  // body symbols: terminal or variable (by name)
    };
    std::vector<SimpleRule> simple;
    std::map<std::string, int> term_proxy;
    int fresh = 0;
    auto proxy_for = [&](const std::string& t) {
        auto it = term_proxy.find(t);
        if (it != term_proxy.end()) return it->second;
        int id = var("#t" + std::to_string(fresh++));
        term_proxy[t] = id;
        return id;
    };

    std::vector<std::pair<int, std::vector<int>>> flat;  // head -> var ids (after proxies)
    std::vector<std::pair<int, std::string>> direct_terms;
    for (const auto& r : g.rules) {
        int head = var(r.head);
        if (r.body.empty()) {
            flat.push_back({head, {}});
            continue;
        }
        if (r.body.size() == 1 && r.body.front().terminal) {
            direct_terms.push_back({head, r.body.front().name});
            continue;
        }
        std::vector<int> ids;
        for (const auto& s : r.body)
            ids.push_back(s.terminal ? proxy_for(s.name) : var(s.name));
        flat.push_back({head, std::move(ids)});
    }
    for (const auto& [t, id] : term_proxy) direct_terms.push_back({id, t});

    // binarise long bodies
    std::vector<std::pair<int, std::vector<int>>> short_rules;
    for (auto& [head, ids] : flat) {
        while (ids.size() > 2) {
            int aux = var("#b" + std::to_string(fresh++));
            std::vector<int> tail(ids.end() - 2, ids.end());
            short_rules.push_back({aux, tail});
            ids.pop_back();
            ids.back() = aux;
        }
        short_rules.push_back({head, ids});
    }

    out.nvars = static_cast<int>(vid.size());
    auto sit = vid.find(g.start);
    if (sit == vid.end()) return out;
    out.start = sit->second;

    // nullable fixpoint over short_rules (bodies of size 0..2, vars only)
    std::vector<bool> nullable(out.nvars, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [head, ids] : short_rules) {
            if (nullable[head]) continue;
            bool all = true;
            for (int s : ids) all = all && nullable[s];
            if (all) {
                nullable[head] = true;
                changed = true;
            }
        }
    }
    out.start_nullable = nullable[out.start];

    // unit reachability incl. nullable-dropped binary rules
    std::vector<std::pair<int, std::pair<int, int>>> bins;
    std::vector<std::pair<int, int>> units;
    for (const auto& [head, ids] : short_rules) {
        if (ids.size() == 2) {
            bins.push_back({head, {ids[0], ids[1]}});
            if (nullable[ids[1]]) units.push_back({head, ids[0]});
            if (nullable[ids[0]]) units.push_back({head, ids[1]});
        } else if (ids.size() == 1) {
            units.push_back({head, ids[0]});
        }
    }
    std::vector<std::vector<bool>> reach(out.nvars, std::vector<bool>(out.nvars, false));
    for (int i = 0; i < out.nvars; ++i) reach[i][i] = true;
    changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : units)
            for (int i = 0; i < out.nvars; ++i)
                if (reach[i][a] && !reach[i][b]) {
                    reach[i][b] = true;
                    changed = true;
                }
    }

    std::set<std::pair<int, std::string>> term_set;
    std::set<std::pair<int, std::pair<int, int>>> bin_set;
    for (int a = 0; a < out.nvars; ++a) {
        for (const auto& [b, t] : direct_terms)
            if (reach[a][b]) term_set.insert({a, t});
        for (const auto& [b, pair] : bins)
            if (reach[a][b]) bin_set.insert({a, pair});
    }
    out.term_rules.assign(term_set.begin(), term_set.end());
    out.bin_rules.assign(bin_set.begin(), bin_set.end());
    return out;
}

}  // namespace

bool cyk_member(const Grammar& g, const Word& x) {
    CnfGrammar cnf = to_cnf(g);
    if (cnf.start < 0) return false;
    const size_t n = x.size();
    if (n == 0) return cnf.start_nullable;

    // chart[i][len-1] = set of variables deriving x[i, i+len)
    std::vector<std::vector<std::vector<bool>>> chart(
        n, std::vector<std::vector<bool>>(n, std::vector<bool>(cnf.nvars, false)));
    for (size_t i = 0; i < n; ++i)
        for (const auto& [a, t] : cnf.term_rules)
            if (t == x[i].name) chart[i][0][a] = true;
    for (size_t len = 2; len <= n; ++len)
        for (size_t i = 0; i + len <= n; ++i)
            for (size_t split = 1; split < len; ++split)
                for (const auto& [a, bc] : cnf.bin_rules) {
                    if (chart[i][len - 1][a]) continue;
                    if (chart[i][split - 1][bc.first] &&
                        chart[i + split][len - split - 1][bc.second])
                        chart[i][len - 1][a] = true;
                }
    return chart[0][n - 1][cnf.start];
}

std::set<Word> cfg_enumerate(const Grammar& g, int max_len) {
    if (max_len < 0) return {};
    std::map<std::string, std::set<Word>> derivable;
    for (const auto& v : g.variables) derivable[v];

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            std::set<Word> partial{Word{}};
            for (const auto& s : r.body) {
                std::set<Word> next;
                if (s.terminal) {
                    for (const auto& w : partial) {
                        if (static_cast<int>(w.size()) + 1 > max_len) continue;
                        Word n2 = w;
                        n2.push_back(Letter{s.name});
                        next.insert(std::move(n2));
                    }
                } else {
                    for (const auto& w : partial)
                        for (const auto& v : derivable[s.name]) {
                            if (static_cast<int>(w.size() + v.size()) > max_len) continue;
                            Word n2 = w;
                            n2.insert(n2.end(), v.begin(), v.end());
                            next.insert(std::move(n2));
                        }
                }
                partial = std::move(next);
                if (partial.empty()) break;
            }
            auto& sink = derivable[r.head];
            for (auto& w : partial)
                if (sink.insert(w).second) changed = true;
        }
    }
    auto it = derivable.find(g.start);
    return it == derivable.end() ? std::set<Word>{} : it->second;
}

}  // namespace dtl
