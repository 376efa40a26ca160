#include "dtl/fixtures.hpp"

#include <stack>

namespace dtl::fixtures {

namespace {

Address addr(std::vector<std::string> names) {
    Address a;
    for (auto& n : names) a.path.push_back(FunctionSymbol{std::move(n)});
    return a;
}

Tree tree_of(const std::vector<std::pair<Address, std::string>>& pairs, const AlphabetRef& al) {
    std::vector<std::pair<Address, Letter>> entries;
    for (const auto& [a, l] : pairs) entries.push_back({a, Letter{l}});
    return Tree::make(entries, al);
}

}  // namespace

AlphabetRef squa_alphabet() {
    static AlphabetRef a = make_alphabet({"alpha", "beta"}, {"a", "b"});
    return a;
}

AlphabetRef mult_alphabet() {
    static AlphabetRef a = make_alphabet({"alpha", "beta", "gamma"}, {"a", "b", "c"});
    return a;
}

AlphabetRef dyck_alphabet() {
    static AlphabetRef a = make_alphabet({"alpha", "beta", "gamma", "delta"},
                                         {"[", "(", "{", "[[", "]", ")", "}", "]]"});
    return a;
}

AlphabetRef subord_alphabet() {
    static AlphabetRef a =
        make_alphabet({"Sb", "Ob"}, {"John", "saw", "Peter", "help", "Mary", "read"});
    return a;
}

Tree q_tree(const std::string& word) { return q_tree(word, squa_alphabet()); }

Tree q_tree(const std::string& word, AlphabetRef alphabet) {
    std::vector<std::pair<Address, std::string>> pairs;
    Address spine;
    for (char c : word) {
        std::string letter(1, c);
        pairs.push_back({spine, letter});
        Address side = spine;
        side.path.push_back(FunctionSymbol{"alpha"});
        pairs.push_back({side, letter});
        spine.path.push_back(FunctionSymbol{"beta"});
    }
    return tree_of(pairs, std::move(alphabet));
}

Tree m_tree(int n) {
    std::vector<std::pair<Address, std::string>> pairs;
    Address spine;
    for (int i = 0; i < n; ++i) {
        pairs.push_back({spine, "c"});
        Address a = spine, b = spine;
        a.path.push_back(FunctionSymbol{"alpha"});
        b.path.push_back(FunctionSymbol{"beta"});
        pairs.push_back({a, "a"});
        pairs.push_back({b, "b"});
        spine.path.push_back(FunctionSymbol{"gamma"});
    }
    return tree_of(pairs, mult_alphabet());
}

Tree t_chain(const std::string& word, const FunctionSymbol& fn, AlphabetRef alphabet) {
    std::vector<std::pair<Address, std::string>> pairs;
    Address cur;
    for (char c : word) {
        pairs.push_back({cur, std::string(1, c)});
        cur.path.push_back(fn);
    }
    return tree_of(pairs, std::move(alphabet));
}

Tree dyck_example_tree() {
    // [ ( ) ] { [[ ]] } : an outer square pair holding a round pair, followed
    // by a brace pair holding a double-square pair.
    return tree_of(
        {
            {addr({"alpha"}), "["},
            {addr({"gamma"}), "]"},
            {addr({"beta", "alpha"}), "("},
            {addr({"beta", "gamma"}), ")"},
            {addr({"delta", "alpha"}), "{"},
            {addr({"delta", "gamma"}), "}"},
            {addr({"delta", "beta", "alpha"}), "[["},
            {addr({"delta", "beta", "gamma"}), "]]"},
        },
        dyck_alphabet());
}

Tree subord_tree() {
    return tree_of(
        {
            {addr({}), "saw"},
            {addr({"Sb"}), "John"},
            {addr({"Ob"}), "help"},
            {addr({"Ob", "Sb"}), "Peter"},
            {addr({"Ob", "Ob"}), "read"},
            {addr({"Ob", "Ob", "Sb"}), "Mary"},
        },
        subord_alphabet());
}

LocalSpec w_squa_spec() {
    const AlphabetRef al = squa_alphabet();
    std::vector<Tree> u1{Tree(al)}, u2{Tree(al)}, u3{Tree(al)};
    const std::vector<std::string> sigma{"a", "b"};
    for (const auto& x : sigma) {
        u2.push_back(tree_of({{addr({}), x}}, al));  // atomic side child
        u3.push_back(tree_of({{addr({}), x}}, al));
        Tree q1 = tree_of({{addr({}), x}, {addr({"alpha"}), x}}, al);
        u1.push_back(q1);
        u2.push_back(q1);
        u3.push_back(q1);
        for (const auto& y : sigma) {
            Tree q2 = tree_of({{addr({}), x},
                               {addr({"alpha"}), x},
                               {addr({"beta"}), y},
                               {addr({"beta", "alpha"}), y}},
                              al);
            u1.push_back(q2);
            u2.push_back(q2);
            u3.push_back(q2);
            for (const auto& z : sigma) {
                Tree w5 = tree_of({{addr({}), x},
                                   {addr({"alpha"}), x},
                                   {addr({"beta"}), y},
                                   {addr({"beta", "alpha"}), y},
                                   {addr({"beta", "beta"}), z}},
                                  al);
                u1.push_back(w5);
                u2.push_back(w5);
            }
        }
    }
    return make_local_spec(2, Mode::Local, u1, u2, u3, al);
}

LocalSpec w_mult_spec() {
    const AlphabetRef al = mult_alphabet();
    Tree m1 = tree_of({{addr({}), "c"}, {addr({"alpha"}), "a"}, {addr({"beta"}), "b"}}, al);
    Tree c4 = tree_of({{addr({}), "c"},
                       {addr({"alpha"}), "a"},
                       {addr({"beta"}), "b"},
                       {addr({"gamma"}), "c"}},
                      al);
    Tree atom_a = tree_of({{addr({}), "a"}}, al);
    Tree atom_b = tree_of({{addr({}), "b"}}, al);
    Tree empty(al);
    return make_local_spec(1, Mode::Local, {empty, m1, c4}, {empty, m1, c4, atom_a, atom_b},
                           {empty, m1, atom_a, atom_b}, al);
}

LocalSpec w_anbn_spec() {
    const AlphabetRef al = squa_alphabet();
    Tree a2 = tree_of({{addr({}), "b"}, {addr({"alpha"}), "a"}}, al);
    Tree a3 = tree_of({{addr({}), "b"}, {addr({"alpha"}), "a"}, {addr({"beta"}), "b"}}, al);
    Tree atom_a = tree_of({{addr({}), "a"}}, al);
    Tree empty(al);
    return make_local_spec(1, Mode::Local, {empty, a2, a3}, {empty, a2, a3, atom_a},
                           {empty, a2, atom_a}, al);
}

LocalSpec w_dyck_spec() {
    const AlphabetRef al = dyck_alphabet();
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"[", "]"}, {"(", ")"}, {"{", "}"}, {"[[", "]]"}};

    std::vector<Tree> u1{Tree(al)}, u2, u3;
    for (const auto& [o, c] : pairs) {
        u2.push_back(tree_of({{addr({}), o}}, al));
        u2.push_back(tree_of({{addr({}), c}}, al));
        u3.push_back(tree_of({{addr({}), o}}, al));
        u3.push_back(tree_of({{addr({}), c}}, al));
    }
    // a pair vertex: open at alpha, close at gamma, optional pair below beta
    // (inside) and delta (to the right), visible only by their leaf letters
    for (const auto& [o, c] : pairs) {
        std::vector<std::vector<std::pair<Address, std::string>>> inner{{}};
        for (const auto& [io, ic] : pairs)
            inner.push_back({{addr({"beta", "alpha"}), io}, {addr({"beta", "gamma"}), ic}});
        std::vector<std::vector<std::pair<Address, std::string>>> right{{}};
        for (const auto& [ro, rc] : pairs)
            right.push_back({{addr({"delta", "alpha"}), ro}, {addr({"delta", "gamma"}), rc}});
        for (const auto& in : inner)
            for (const auto& rt : right) {
                std::vector<std::pair<Address, std::string>> entries{{addr({"alpha"}), o},
                                                                     {addr({"gamma"}), c}};
                entries.insert(entries.end(), in.begin(), in.end());
                entries.insert(entries.end(), rt.begin(), rt.end());
                Tree t = tree_of(entries, al);
                u1.push_back(t);
                u2.push_back(t);
                u3.push_back(t);
            }
    }
    return make_local_spec(2, Mode::Local, u1, u2, u3, al);
}

LocalStringSpec mult_string_spec() {
    LocalStringSpec spec;
    spec.p = 3;
    spec.sigma = {Letter{"a"}, Letter{"b"}, Letter{"c"}};
    auto word = [](const std::string& s) {
        Word w;
        for (char c : s) w.push_back(Letter{std::string(1, c)});
        return w;
    };
    // prefixes a and ab admit nothing on their own (no short string passes
    // the other two sets) and are kept for the record
    for (const auto& s : {"", "a", "ab", "abc"}) spec.prefixes.insert(word(s));
    for (const auto& s : {"", "abc", "bca", "cab"}) spec.internals.insert(word(s));
    for (const auto& s : {"", "abc", "bc", "c"}) spec.suffixes.insert(word(s));
    return spec;
}

namespace {

Linearisation lin_of(std::vector<Slot> slots, AlphabetRef al) {
    return Linearisation::make(std::move(slots), std::move(al));
}

Slot sub(const std::string& f) { return Slot{Slot::Kind::Sub, FunctionSymbol{f}}; }
Slot root_slot() { return Slot{Slot::Kind::Root, {}}; }

}  // namespace

Linearisation pi_squa() {
    return lin_of({sub("alpha"), root_slot(), sub("beta")}, squa_alphabet());
}

Linearisation pi_mult() {
    return lin_of({sub("alpha"), sub("beta"), root_slot(), sub("gamma")}, mult_alphabet());
}

Linearisation pi_anbn() {
    return lin_of({sub("alpha"), sub("beta"), root_slot()}, squa_alphabet());
}

Linearisation pi_dyck() {
    return lin_of({root_slot(), sub("alpha"), sub("beta"), sub("gamma"), sub("delta")},
                  dyck_alphabet());
}

Linearisation pi_eng() {
    return lin_of({sub("Sb"), root_slot(), sub("Ob")}, subord_alphabet());
}

Linearisation pi_dut() { return reverse_linearisation(pi_eng()); }

Grammar gnf_anbn() {
    Grammar g;
    g.terminals = {Letter{"a"}, Letter{"b"}};
    g.variables = {"S", "B"};
    g.start = "S";
    g.rules = {
        Rule{"S", {GSym{true, "a"}, GSym{false, "S"}, GSym{false, "B"}}},
        Rule{"S", {GSym{true, "a"}, GSym{false, "B"}}},
        Rule{"B", {GSym{true, "b"}}},
    };
    return g;
}

bool balanced_brackets(const Word& w) {
    static const std::map<std::string, std::string> close_of{
        {"[", "]"}, {"(", ")"}, {"{", "}"}, {"[[", "]]"}};
    std::stack<std::string> stack;
    for (const Letter& l : w) {
        auto it = close_of.find(l.name);
        if (it != close_of.end()) {
            stack.push(it->second);
        } else {
            if (stack.empty() || stack.top() != l.name) return false;
            stack.pop();
        }
    }
    return stack.empty();
}

std::vector<CatalogEntry> catalog() {
    return {
        {"q-<word>", "tree", "doubling tree of a word over {a,b}, e.g. q-aba"},
        {"m-<n>", "tree", "triple chain of n abc blocks, e.g. m-3"},
        {"t-<word>", "tree", "beta-chain of a word over {a,b}, e.g. t-aba"},
        {"dyck-tree", "tree", "bracket-pair example tree"},
        {"subord-tree", "tree", "three-verb subordination chain"},
        {"w-squa", "spec", "doubling trees; pairs with pi-squa"},
        {"w-mult", "spec", "triple chains; pairs with pi-mult"},
        {"w-anbn", "spec", "trees whose readings give a^n b^n"},
        {"w-dyck", "spec", "bracket-pair trees; pairs with pi-dyck"},
        {"w-mult-ls", "spec", "chain encoding of the abc-block string language"},
        {"pi-squa", "linearisation", "alpha, root, beta"},
        {"pi-mult", "linearisation", "alpha, beta, root, gamma"},
        {"pi-anbn", "linearisation", "alpha, beta, root"},
        {"pi-dyck", "linearisation", "root, alpha, beta, gamma, delta"},
        {"pi-eng", "linearisation", "nested subordination order"},
        {"pi-dut", "linearisation", "cross-serial subordination order"},
        {"gnf-anbn", "grammar", "terminal-prefixed grammar of a^n b^n, n >= 1"},
    };
}

}  // namespace dtl::fixtures
