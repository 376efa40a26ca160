#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtl/analysis.hpp"
#include "dtl/dot.hpp"
#include "dtl/fixtures.hpp"
#include "dtl/format.hpp"
#include "dtl/grammar.hpp"
#include "dtl/linearise.hpp"
#include "dtl/locality.hpp"
#include "dtl/tree.hpp"

namespace py = pybind11;
using namespace dtl;

namespace {

Word to_word(const std::string& s) { return word_from_string(s); }

std::string word_str(const Word& w) { return to_display(w); }

std::vector<std::string> words_as_strings(const std::set<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(word_str(w));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dependency-tree languages: window-defined tree sets, recursive "
              "linearisations and their grammar constructions.";

    py::register_exception<Error>(m, "DtlError");

    py::class_<Tree>(m, "Tree")
        .def_static("parse", [](const std::string& text) { return tree_from_text(text); })
        .def("__str__", [](const Tree& t) { return tree_to_text(t); })
        .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
        .def("__len__", [](const Tree& t) { return t.size(); })
        .def("depth", &Tree::depth)
        .def("top", [](const Tree& t, int p) { return t.top(p); })
        .def("reverse", &Tree::reversed)
        .def("subtree",
             [](const Tree& t, const std::string& a) { return t.subtree(address_from_string(a)); })
        .def("anti_subtree",
             [](const Tree& t, const std::string& a) {
                 return t.anti_subtree(address_from_string(a));
             })
        .def("root",
             [](const Tree& t) -> py::object {
                 auto r = t.root();
                 if (!r) return py::none();
                 return py::cast(r->name);
             })
        .def("entries",
             [](const Tree& t) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& [a, l] : t.entries())
                     out.push_back({address_to_string(a), l.name});
                 return out;
             })
        .def("to_dot", [](const Tree& t) { return tree_to_dot(t); });

    py::class_<Linearisation>(m, "Linearisation")
        .def_static("parse",
                    [](const std::string& text) { return linearisation_from_text(text); })
        .def("__str__", [](const Linearisation& l) { return linearisation_to_text(l); })
        .def("kind",
             [](const Linearisation& l) {
                 switch (l.kind()) {
                     case LinKind::Projective: return "projective";
                     case LinKind::AntiProjective: return "anti-projective";
                     default: return "mixed";
                 }
             })
        .def("reverse", [](const Linearisation& l) { return reverse_linearisation(l); })
        .def("apply", [](const Linearisation& l, const Tree& t) { return word_str(linearize(l, t)); })
        .def("positions", [](const Linearisation& l, const Tree& t) {
            PositionedString ps = linearize_positions(l, t);
            std::vector<std::pair<std::string, size_t>> out;
            for (const auto& [a, pos] : ps.placement) out.push_back({address_to_string(a), pos});
            return py::make_tuple(word_str(ps.letters), out);
        });

    py::class_<LocalSpec>(m, "LocalSpec")
        .def_static("parse", [](const std::string& text) { return spec_from_text(text); })
        .def("__str__", [](const LocalSpec& s) { return spec_to_text(s); })
        .def("member", [](const LocalSpec& s, const Tree& t) { return member(s, t); })
        .def("reverse", [](const LocalSpec& s) { return reverse_spec(s); })
        .def("enumerate", [](const LocalSpec& s, int max_depth, int max_nodes) {
            return enumerate_members(s, max_depth, max_nodes);
        });

    py::class_<Grammar>(m, "Grammar")
        .def_static("parse", [](const std::string& text) { return grammar_from_text(text); })
        .def("__str__", [](const Grammar& g) { return grammar_to_text(g); })
        .def("member", [](const Grammar& g, const std::string& w) {
            return cyk_member(g, to_word(w));
        })
        .def("enumerate", [](const Grammar& g, int max_len) {
            return words_as_strings(cfg_enumerate(g, max_len));
        });

    m.def("validate_gnf", [](const Grammar& g) { return validate_gnf(g).grammar; });
    m.def("distinct_vars_transform",
          [](const Grammar& g) { return distinct_vars_transform(validate_gnf(g)).grammar; });
    m.def("cfg_from_local", &cfg_from_local);
    m.def("local_from_gnf", [](const Grammar& g) {
        auto [spec, lin] = local_from_gnf(validate_transformed(g));
        return py::make_tuple(spec, lin);
    });

    m.def("parikh",
          [](const std::string& w) {
              std::map<std::string, size_t> out;
              for (const auto& [l, c] : parikh_string(to_word(w)).counts) out[l.name] = c;
              return out;
          });
    m.def("parikh_tree", [](const Tree& t) {
        std::map<std::string, size_t> out;
        for (const auto& [l, c] : parikh_tree(t).counts) out[l.name] = c;
        return out;
    });
    m.def("total_dependency_length", [](const Linearisation& l, const Tree& t) {
        return total_dependency_length(l, t).total;
    });
    m.def("dual_pair", [](const LocalSpec& s, const Linearisation& l, int d, int n) {
        DualPairReport r = dual_pair(s, l, d, n);
        return py::make_tuple(words_as_strings(r.primal_language),
                              words_as_strings(r.dual_language));
    });
    m.def("self_dual_check", [](const LocalSpec& s, const Linearisation& l, int d, int n) {
        SelfDualResult r = self_dual_check(s, l, d, n);
        return py::make_tuple(r.self_dual,
                              r.counterexample ? py::cast(word_str(*r.counterexample))
                                               : py::object(py::none()));
    });

    auto fx = m.def_submodule("fixtures");
    fx.def("q_tree", [](const std::string& word) { return fixtures::q_tree(word); });
    fx.def("m_tree", &fixtures::m_tree);
    fx.def("dyck_tree", &fixtures::dyck_example_tree);
    fx.def("subord_tree", &fixtures::subord_tree);
    fx.def("w_squa", &fixtures::w_squa_spec);
    fx.def("w_mult", &fixtures::w_mult_spec);
    fx.def("w_anbn", &fixtures::w_anbn_spec);
    fx.def("w_dyck", &fixtures::w_dyck_spec);
    fx.def("pi_squa", &fixtures::pi_squa);
    fx.def("pi_mult", &fixtures::pi_mult);
    fx.def("pi_anbn", &fixtures::pi_anbn);
    fx.def("pi_dyck", &fixtures::pi_dyck);
    fx.def("pi_eng", &fixtures::pi_eng);
    fx.def("pi_dut", &fixtures::pi_dut);
    fx.def("gnf_anbn", &fixtures::gnf_anbn);
}
