// Command-line front end: file-based access to the tree operators, window
// languages, linearisations, grammar constructions and the analyses, plus
// the built-in example catalog. Reads "-" as standard input everywhere.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dtl/analysis.hpp"
#include "dtl/dot.hpp"
#include "dtl/fixtures.hpp"
#include "dtl/format.hpp"
#include "dtl/grammar.hpp"
#include "dtl/linearise.hpp"
#include "dtl/locality.hpp"
#include "dtl/tree.hpp"

using namespace dtl;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Fixture trees are addressed by name: q-<word>, m-<n>, t-<word>,
// dyck-tree, subord-tree.
std::optional<Tree> fixture_tree(const std::string& name) {
    if (name.rfind("q-", 0) == 0) return fixtures::q_tree(name.substr(2));
    if (name.rfind("m-", 0) == 0) return fixtures::m_tree(std::stoi(name.substr(2)));
    if (name.rfind("t-", 0) == 0)
        return fixtures::t_chain(name.substr(2), FunctionSymbol{"beta"},
                                 fixtures::squa_alphabet());
    if (name == "dyck-tree") return fixtures::dyck_example_tree();
    if (name == "subord-tree") return fixtures::subord_tree();
    return std::nullopt;
}

std::optional<LocalSpec> fixture_spec(const std::string& name) {
    if (name == "w-squa") return fixtures::w_squa_spec();
    if (name == "w-mult") return fixtures::w_mult_spec();
    if (name == "w-anbn") return fixtures::w_anbn_spec();
    if (name == "w-dyck") return fixtures::w_dyck_spec();
    if (name == "w-mult-ls") return encode_string_spec(fixtures::mult_string_spec());
    return std::nullopt;
}

std::optional<Linearisation> fixture_lin(const std::string& name) {
    if (name == "pi-squa") return fixtures::pi_squa();
    if (name == "pi-mult") return fixtures::pi_mult();
    if (name == "pi-anbn") return fixtures::pi_anbn();
    if (name == "pi-dyck") return fixtures::pi_dyck();
    if (name == "pi-eng") return fixtures::pi_eng();
    if (name == "pi-dut") return fixtures::pi_dut();
    return std::nullopt;
}

std::optional<Grammar> fixture_grammar(const std::string& name) {
    if (name == "gnf-anbn") return fixtures::gnf_anbn();
    if (name == "gnf-anbn-dv")
        return distinct_vars_transform(validate_gnf(fixtures::gnf_anbn())).grammar;
    return std::nullopt;
}

// Named fixture or file path, fixture names winning.
Tree load_tree(const std::string& ref) {
    if (auto t = fixture_tree(ref)) return *t;
    return tree_from_text(slurp(ref));
}
LocalSpec load_spec(const std::string& ref) {
    if (auto s = fixture_spec(ref)) return *s;
    std::string warning;
    LocalSpec spec = spec_from_text(slurp(ref), &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
    return spec;
}
Linearisation load_lin(const std::string& ref) {
    if (auto l = fixture_lin(ref)) return *l;
    return linearisation_from_text(slurp(ref));
}
Grammar load_grammar(const std::string& ref) {
    if (auto g = fixture_grammar(ref)) return *g;
    return grammar_from_text(slurp(ref));
}

void print_trees(const std::vector<Tree>& trees) {
    bool first = true;
    for (const Tree& t : trees) {
        if (!first) std::cout << "\n";
        first = false;
        if (t.empty()) {
            std::cout << "empty\n";
            continue;
        }
        for (const auto& [addr, letter] : t.entries())
            std::cout << address_to_string(addr) << " : " << letter.name << "\n";
    }
}

nlohmann::json word_json(const Word& w) { return to_display(w); }

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"dependency-tree languages: operators, window languages, "
                 "linearisations and grammar constructions"};
    app.require_subcommand(1);

    // ---- tree op ----------------------------------------------------------
    auto* tree_cmd = app.add_subcommand("tree", "tree operators");
    tree_cmd->require_subcommand(1);
    auto* tree_op = tree_cmd->add_subcommand("op", "apply one operator to a tree");
    std::string op_name, tree_in = "-", at_address = "/", tree_format = "text";
    int op_p = 1;
    tree_op->add_option("operator", op_name, "top|reverse|subtree|anti-subtree")->required();
    tree_op->add_option("-i,--input", tree_in, "tree file or fixture name");
    tree_op->add_option("--p", op_p, "window depth for top");
    tree_op->add_option("--at", at_address, "address for subtree/anti-subtree");
    tree_op->add_option("--format", tree_format, "text|dot");
    tree_op->callback([&]() {
        Tree t = load_tree(tree_in);
        Tree out;
        if (op_name == "top")
            out = t.top(op_p);
        else if (op_name == "reverse")
            out = t.reversed();
        else if (op_name == "subtree")
            out = t.subtree(address_from_string(at_address));
        else if (op_name == "anti-subtree")
            out = t.anti_subtree(address_from_string(at_address));
        else
            throw CLI::ValidationError("unknown operator: " + op_name);
        if (tree_format == "dot")
            std::cout << tree_to_dot(out);
        else if (tree_format == "text")
            std::cout << tree_to_text(out);
        else
            throw CLI::ValidationError("unknown format: " + tree_format);
    });

    // ---- spec -------------------------------------------------------------
    auto* spec_cmd = app.add_subcommand("spec", "window-language operations");
    spec_cmd->require_subcommand(1);
    std::string spec_ref, spec_tree = "-";
    int max_depth = 0, max_nodes = 0;

    auto* spec_member = spec_cmd->add_subcommand("member", "test membership of a tree");
    spec_member->add_option("spec", spec_ref, "spec file or fixture name")->required();
    spec_member->add_option("-i,--input", spec_tree, "tree file or fixture name");
    spec_member->callback([&]() {
        std::cout << (member(load_spec(spec_ref), load_tree(spec_tree)) ? "true" : "false")
                  << "\n";
    });

    auto* spec_enum = spec_cmd->add_subcommand("enumerate", "list members within bounds");
    spec_enum->add_option("spec", spec_ref)->required();
    spec_enum->add_option("--max-depth", max_depth, "domain depth bound")->required();
    spec_enum->add_option("--max-nodes", max_nodes, "entry count bound")->required();
    spec_enum->callback(
        [&]() { print_trees(enumerate_members(load_spec(spec_ref), max_depth, max_nodes)); });

    auto* spec_rev = spec_cmd->add_subcommand("reverse", "reverse a spec");
    spec_rev->add_option("spec", spec_ref)->required();
    spec_rev->callback([&]() { std::cout << spec_to_text(reverse_spec(load_spec(spec_ref))); });

    // ---- lin --------------------------------------------------------------
    auto* lin_cmd = app.add_subcommand("lin", "linearisation operations");
    lin_cmd->require_subcommand(1);
    std::string lin_ref, lin_tree = "-", separator;

    auto* lin_apply = lin_cmd->add_subcommand("apply", "read a tree into a string");
    lin_apply->add_option("lin", lin_ref, "linearisation file or fixture name")->required();
    lin_apply->add_option("-i,--input", lin_tree, "tree file or fixture name");
    lin_apply->add_option("--sep", separator, "separator between letters");
    lin_apply->callback([&]() {
        std::cout << to_display(linearize(load_lin(lin_ref), load_tree(lin_tree)), separator)
                  << "\n";
    });

    auto* lin_pos = lin_cmd->add_subcommand("positions", "string with address placements");
    lin_pos->add_option("lin", lin_ref)->required();
    lin_pos->add_option("-i,--input", lin_tree);
    lin_pos->callback([&]() {
        PositionedString ps = linearize_positions(load_lin(lin_ref), load_tree(lin_tree));
        std::cout << to_display(ps.letters) << "\n";
        std::vector<std::pair<size_t, Address>> by_pos;
        for (const auto& [addr, pos] : ps.placement) by_pos.push_back({pos, addr});
        std::sort(by_pos.begin(), by_pos.end());
        for (const auto& [pos, addr] : by_pos)
            std::cout << pos << "\t" << ps.letters[pos - 1].name << "\t"
                      << address_to_string(addr) << "\n";
    });

    auto* lin_rev = lin_cmd->add_subcommand("reverse", "swap sub and anti slots");
    lin_rev->add_option("lin", lin_ref)->required();
    lin_rev->callback(
        [&]() { std::cout << linearisation_to_text(reverse_linearisation(load_lin(lin_ref))); });

    // ---- cfg --------------------------------------------------------------
    auto* cfg_cmd = app.add_subcommand("cfg", "grammar constructions and parsing");
    cfg_cmd->require_subcommand(1);
    std::string cfg_ref, cfg_spec_ref, cfg_lin_ref, cfg_word;
    int cfg_maxlen = 0;

    auto* cfg_from = cfg_cmd->add_subcommand("from-local", "grammar of a window language");
    cfg_from->add_option("spec", cfg_spec_ref)->required();
    cfg_from->add_option("lin", cfg_lin_ref)->required();
    cfg_from->callback([&]() {
        std::cout << grammar_to_text(cfg_from_local(load_spec(cfg_spec_ref), load_lin(cfg_lin_ref)));
    });

    auto* cfg_to = cfg_cmd->add_subcommand("from-gnf", "window spec of a terminal-prefixed grammar");
    bool emit_lin = false;
    cfg_to->add_option("grammar", cfg_ref)->required();
    cfg_to->add_flag("--lin", emit_lin, "emit the slot list instead of the spec");
    cfg_to->callback([&]() {
        Grammar g = load_grammar(cfg_ref);
        TransformedGnf t;
        try {
            t = validate_transformed(g);
        } catch (const NotTransformed&) {
            t = distinct_vars_transform(validate_gnf(g));
        }
        auto [spec, lin] = local_from_gnf(t);
        if (emit_lin)
            std::cout << linearisation_to_text(lin);
        else
            std::cout << spec_to_text(spec);
    });

    auto* cfg_member = cfg_cmd->add_subcommand("member", "chart-parse one word");
    cfg_member->add_option("grammar", cfg_ref)->required();
    cfg_member->add_option("--word", cfg_word, "letters, spaced or single characters")
        ->required();
    cfg_member->callback([&]() {
        std::cout << (cyk_member(load_grammar(cfg_ref), word_from_string(cfg_word)) ? "true"
                                                                                    : "false")
                  << "\n";
    });

    auto* cfg_enum = cfg_cmd->add_subcommand("enumerate", "derivable words up to a length");
    cfg_enum->add_option("grammar", cfg_ref)->required();
    cfg_enum->add_option("--max-len", cfg_maxlen)->required();
    cfg_enum->callback([&]() {
        std::set<Word> words = cfg_enumerate(load_grammar(cfg_ref), cfg_maxlen);
        std::vector<Word> ordered(words.begin(), words.end());
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const Word& a, const Word& b) { return a.size() < b.size(); });
        for (const Word& w : ordered) std::cout << to_display(w) << "\n";
    });

    auto* cfg_validate = cfg_cmd->add_subcommand("validate-gnf", "check terminal-prefixed shape");
    cfg_validate->add_option("grammar", cfg_ref)->required();
    cfg_validate->callback([&]() {
        validate_gnf(load_grammar(cfg_ref));
        std::cout << "ok\n";
    });

    auto* cfg_transform = cfg_cmd->add_subcommand("transform", "single-use wrapper refinement");
    cfg_transform->add_option("grammar", cfg_ref)->required();
    cfg_transform->callback([&]() {
        std::cout << grammar_to_text(
            distinct_vars_transform(validate_gnf(load_grammar(cfg_ref))).grammar);
    });

    // ---- dual -------------------------------------------------------------
    auto* dual_cmd = app.add_subcommand("dual", "paired readings of a window language");
    dual_cmd->require_subcommand(1);
    std::string dual_spec_ref, dual_lin_ref;

    auto* dual_pair_cmd = dual_cmd->add_subcommand("pair", "bounded dual-language report");
    dual_pair_cmd->add_option("spec", dual_spec_ref)->required();
    dual_pair_cmd->add_option("lin", dual_lin_ref)->required();
    dual_pair_cmd->add_option("--max-depth", max_depth)->required();
    dual_pair_cmd->add_option("--max-nodes", max_nodes)->required();
    dual_pair_cmd->callback([&]() {
        DualPairReport r =
            dual_pair(load_spec(dual_spec_ref), load_lin(dual_lin_ref), max_depth, max_nodes);
        nlohmann::json j;
        j["max_depth"] = r.max_depth;
        j["max_nodes"] = r.max_nodes;
        j["primal"] = nlohmann::json::array();
        for (const Word& w : r.primal_language) j["primal"].push_back(word_json(w));
        j["dual"] = nlohmann::json::array();
        for (const Word& w : r.dual_language) j["dual"].push_back(word_json(w));
        j["samples"] = nlohmann::json::array();
        for (const auto& s : r.samples) {
            nlohmann::json e;
            e["nodes"] = s.tree.size();
            e["primal"] = word_json(s.primal);
            e["dual"] = word_json(s.dual);
            j["samples"].push_back(e);
        }
        std::cout << j.dump(2) << "\n";
    });

    auto* dual_self = dual_cmd->add_subcommand("self-check", "bounded self-duality evidence");
    dual_self->add_option("spec", dual_spec_ref)->required();
    dual_self->add_option("lin", dual_lin_ref)->required();
    dual_self->add_option("--max-depth", max_depth)->required();
    dual_self->add_option("--max-nodes", max_nodes)->required();
    dual_self->callback([&]() {
        SelfDualResult r =
            self_dual_check(load_spec(dual_spec_ref), load_lin(dual_lin_ref), max_depth, max_nodes);
        nlohmann::json j;
        j["self_dual"] = r.self_dual;
        j["max_depth"] = r.max_depth;
        j["max_nodes"] = r.max_nodes;
        if (r.counterexample) j["counterexample"] = word_json(*r.counterexample);
        std::cout << j.dump(2) << "\n";
    });

    // ---- analyze ----------------------------------------------------------
    auto* an_cmd = app.add_subcommand("analyze", "counts and dependency lengths");
    an_cmd->require_subcommand(1);
    std::string an_tree = "-", an_word, an_lin_ref, an_fixture;
    int an_max = 0;

    auto* an_parikh = an_cmd->add_subcommand("parikh", "letter occurrence counts");
    an_parikh->add_option("-i,--input", an_tree, "tree file or fixture name");
    an_parikh->add_option("--word", an_word, "count a word instead of a tree");
    an_parikh->callback([&]() {
        ParikhVector v = an_word.empty() ? parikh_tree(load_tree(an_tree))
                                         : parikh_string(word_from_string(an_word));
        std::cout << "letter,count\n";
        for (const auto& [l, c] : v.counts) std::cout << l.name << "," << c << "\n";
    });

    auto* an_deplen = an_cmd->add_subcommand("deplen", "dependency lengths of one reading");
    an_deplen->add_option("lin", an_lin_ref)->required();
    an_deplen->add_option("-i,--input", an_tree);
    an_deplen->callback([&]() {
        DependencyReport r = total_dependency_length(load_lin(an_lin_ref), load_tree(an_tree));
        std::cout << "governor,dependent,length\n";
        for (const auto& e : r.edges)
            std::cout << address_to_string(e.governor) << "," << address_to_string(e.dependent)
                      << "," << e.length << "\n";
        std::cout << "total," << r.total << "\n";
    });

    auto* an_growth = an_cmd->add_subcommand("growth", "length growth of a reading family");
    an_growth->add_option("--fixture", an_fixture, "squa|copy|mult|resp")->required();
    an_growth->add_option("--max", an_max, "largest string length to report")->required();
    an_growth->callback([&]() {
        LocalSpec spec = an_fixture == "mult" || an_fixture == "resp" ? fixtures::w_mult_spec()
                                                                      : fixtures::w_squa_spec();
        Linearisation lin = an_fixture == "mult" || an_fixture == "resp"
                                ? fixtures::pi_mult()
                                : fixtures::pi_squa();
        if (an_fixture == "copy" || an_fixture == "resp") lin = reverse_linearisation(lin);
        if (an_fixture != "squa" && an_fixture != "copy" && an_fixture != "mult" &&
            an_fixture != "resp")
            throw CLI::ValidationError("unknown growth fixture: " + an_fixture);
        int depth = an_fixture == "mult" || an_fixture == "resp" ? an_max / 3 + 1 : an_max / 2 + 1;
        std::cout << "len,total\n";
        for (const GrowthRow& row : length_growth(lin, spec, depth, an_max))
            if (row.length <= static_cast<size_t>(an_max))
                std::cout << row.length << "," << row.total << "\n";
    });

    // ---- fixture ----------------------------------------------------------
    auto* fx_cmd = app.add_subcommand("fixture", "built-in example catalog");
    fx_cmd->require_subcommand(1);
    auto* fx_list = fx_cmd->add_subcommand("list", "list catalog entries");
    fx_list->callback([&]() {
        for (const auto& e : fixtures::catalog())
            std::cout << e.name << "\t" << e.kind << "\t" << e.summary << "\n";
    });
    std::string fx_name;
    auto* fx_export = fx_cmd->add_subcommand("export", "write one fixture to stdout");
    fx_export->add_option("name", fx_name)->required();
    fx_export->callback([&]() {
        if (auto t = fixture_tree(fx_name)) {
            std::cout << tree_to_text(*t);
            return;
        }
        if (auto s = fixture_spec(fx_name)) {
            std::cout << spec_to_text(*s);
            return;
        }
        if (auto l = fixture_lin(fx_name)) {
            std::cout << linearisation_to_text(*l);
            return;
        }
        if (auto g = fixture_grammar(fx_name)) {
            std::cout << grammar_to_text(*g);
            return;
        }
        throw ParseError("no fixture named '" + fx_name + "'");
    });

    // ---- dot ---------------------------------------------------------------
    auto* dot_cmd = app.add_subcommand("dot", "graphviz output");
    dot_cmd->require_subcommand(1);
    std::string dot_in = "-";
    auto* dot_tree = dot_cmd->add_subcommand("tree", "digraph of a tree file");
    dot_tree->add_option("-i,--input", dot_in, "tree file");
    dot_tree->callback([&]() { std::cout << tree_to_dot(tree_from_text(slurp(dot_in))); });
    std::string dot_fixture;
    auto* dot_render = dot_cmd->add_subcommand("render", "digraph of a fixture tree");
    dot_render->add_option("name", dot_fixture)->required();
    dot_render->callback([&]() {
        auto t = fixture_tree(dot_fixture);
        if (!t) throw ParseError("no fixture tree named '" + dot_fixture + "'");
        std::cout << tree_to_dot(*t, dot_fixture);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
    }
    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
