#include "dtl/dot.hpp"

#include <sstream>

#include "dtl/format.hpp"

namespace dtl {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string tree_to_dot(const Tree& t, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(graph_name) << "\" {\n";
    out << "  node [fontname=\"Helvetica\"];\n";
    for (const Address& v : t.vertices()) {
        std::string id = address_to_string(v);
        if (auto l = t.label_at(v))
            out << "  \"" << dot_escape(id) << "\" [label=\"" << dot_escape(l->name) << "\"];\n";
        else
            out << "  \"" << dot_escape(id) << "\" [label=\"\", shape=point];\n";
    }
    for (const Address& v : t.vertices()) {
        if (v.empty()) continue;
        out << "  \"" << dot_escape(address_to_string(v.parent())) << "\" -> \""
            << dot_escape(address_to_string(v)) << "\" [label=\""
            << dot_escape(v.path.back().name) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace dtl
